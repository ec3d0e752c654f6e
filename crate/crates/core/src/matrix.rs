//! Small dense matrices over GF(q^6): rank and determinant by Gaussian elimination.
//!
//! Pivots are taken column by column, first nonzero entry from the top.

use crate::field::{Felt, FieldCtx};

/// Rank of an `R x C` matrix.
pub fn rank<const R: usize, const C: usize>(ctx: &FieldCtx, m: [[Felt; C]; R]) -> usize {
    eliminate(ctx, m, 0)
}

/// Whether the rank is at least `k`; gives up once too many columns lack a pivot.
pub fn rank_at_least<const R: usize, const C: usize>(ctx: &FieldCtx, m: [[Felt; C]; R], k: usize) -> bool {
    eliminate(ctx, m, k) >= k
}

// Division-free elimination: row_r <- pivot * row_r + lead * row_p (characteristic 2).
fn eliminate<const R: usize, const C: usize>(ctx: &FieldCtx, mut m: [[Felt; C]; R], target: usize) -> usize {
    let mut row = 0;
    let mut skipped = 0;
    for col in 0..C {
        if row == R {
            break;
        }
        let Some(p) = (row..R).find(|&r| !m[r][col].is_zero()) else {
            skipped += 1;
            if target > 0 && C - skipped < target {
                return row;
            }
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col];
        for r in row + 1..R {
            let lead = m[r][col];
            if lead.is_zero() {
                continue;
            }
            m[r][col] = Felt::ZERO;
            for c in col + 1..C {
                m[r][c] = ctx.mul(pivot, m[r][c]) + ctx.mul(lead, m[row][c]);
            }
        }
        row += 1;
    }
    row
}

/// Determinant of a square matrix. Characteristic 2, so row swaps carry no sign.
pub fn det<const N: usize>(ctx: &FieldCtx, mut m: [[Felt; N]; N]) -> Felt {
    let mut acc = Felt::ONE;
    for col in 0..N {
        let Some(p) = (col..N).find(|&r| !m[r][col].is_zero()) else {
            return Felt::ZERO;
        };
        m.swap(col, p);
        let pivot = m[col][col];
        acc = ctx.mul(acc, pivot);
        let inv = ctx.inv(pivot).expect("pivot is nonzero");
        for r in col + 1..N {
            let lead = m[r][col];
            if lead.is_zero() {
                continue;
            }
            let factor = ctx.mul(lead, inv);
            for c in col..N {
                let t = ctx.mul(factor, m[col][c]);
                m[r][c] += t;
            }
        }
    }
    acc
}

/// Determinant by the Leibniz expansion; over GF(2^k) the sign is irrelevant.
/// Exponential cost, kept as an independent reference for small sizes.
pub fn det_leibniz(ctx: &FieldCtx, m: &[Vec<Felt>]) -> Felt {
    fn go(ctx: &FieldCtx, m: &[Vec<Felt>], row: usize, used: &mut Vec<bool>, acc: Felt) -> Felt {
        if row == m.len() {
            return acc;
        }
        let mut total = Felt::ZERO;
        for c in 0..m.len() {
            if used[c] || m[row][c].is_zero() {
                continue;
            }
            used[c] = true;
            total += go(ctx, m, row + 1, used, ctx.mul(acc, m[row][c]));
            used[c] = false;
        }
        total
    }
    go(ctx, m, 0, &mut vec![false; m.len()], Felt::ONE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn det_agrees_with_leibniz() {
        let f = FieldCtx::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..200 {
            let mut m: [[Felt; 5]; 5] = std::array::from_fn(|_| std::array::from_fn(|_| f.random(&mut rng)));
            if trial % 3 == 0 {
                m[4] =std::array::from_fn(|c| m[1][c] + m[2][c]);
            }
            let rows: Vec<Vec<Felt>> = m.iter().map(|r| r.to_vec()).collect();
            let d = det(&f, m);
            assert_eq!(d, det_leibniz(&f, &rows));
            assert_eq!(d.is_zero(), rank(&f, m) < 5);
            for k in 0..=5 {
                assert_eq!(rank_at_least(&f, m, k), rank(&f, m) >= k);
            }
        }
    }

    #[test]
    fn rank_of_structured_matrices() {
        let f = FieldCtx::new(1).unwrap();
        let one = Felt::ONE;
        let z = Felt::ZERO;
        assert_eq!(rank(&f, [[one, z], [z, one]]), 2);
        assert_eq!(rank(&f, [[one, one], [one, one]]), 1);
        assert_eq!(rank(&f, [[z, z, z], [z, z, z]]), 0);
        assert_eq!(rank(&f, [[z, one, z], [z, z, one]]), 2);
    }
}
