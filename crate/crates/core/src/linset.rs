//! F_q-linear sets of PG(1, q^6) defined by graph subspaces U_f.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{param, Result};
use crate::field::{Felt, FieldCtx};
use crate::scatter::{self, family_subspace, FamilyKind, Subspace};

/// A point of PG(1, q^6), scaled so its first nonzero coordinate is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: (Felt, Felt),
}

impl ProjPoint {
    pub fn new(ctx: &FieldCtx, x: Felt, y: Felt) -> Result<ProjPoint> {
        let coords = if !x.is_zero() {
            (Felt::ONE, ctx.div(y, x).expect("x is nonzero"))
        } else if !y.is_zero() {
            (Felt::ZERO, Felt::ONE)
        } else {
            return Err(param("the zero vector is not a projective point"));
        };
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> (Felt, Felt) {
        self.coords
    }

    fn key(&self) -> (u32, u32) {
        (self.coords.0.bits(), self.coords.1.bits())
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

/// Points of L_U with their weights, sorted by point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSet {
    q: u64,
    points: Vec<(ProjPoint, u32)>,
}

/// w with q^w - 1 = fiber.
fn weight_of(q: u64, fiber: u64) -> u32 {
    let mut w = 0;
    let mut size = 1u64;
    while size - 1 < fiber {
        size *= q;
        w += 1;
    }
    debug_assert_eq!(size - 1, fiber, "fiber sizes are q^w - 1");
    w
}

/// L_U for U = U_f: the point (1 : f(x)/x) for each nonzero x, weighted by the
/// GF(q)-dimension of U ∩ <(1, f(x)/x)>.
pub fn linear_set(u: &Subspace<'_>) -> LinearSet {
    let ctx = u.ctx();
    let q = ctx.q();
    let histogram = scatter::fiber_histogram(u.poly());
    let points = histogram
        .iter()
        .enumerate()
        .filter(|(_, &count)| count > 0)
        .map(|(ratio, &count)| {
            let point = ProjPoint { coords: (Felt::ONE, Felt::from_bits(ratio as u32)) };
            (point, weight_of(q, count as u64))
        })
        .collect();
    LinearSet { q, points }
}

impl LinearSet {
    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> impl Iterator<Item = ProjPoint> + '_ {
        self.points.iter().map(|(p, _)| *p)
    }

    pub fn weighted_points(&self) -> &[(ProjPoint, u32)] {
        &self.points
    }

    pub fn weight_histogram(&self) -> BTreeMap<u32, u64> {
        let mut h = BTreeMap::new();
        for (_, w) in &self.points {
            *h.entry(*w).or_insert(0) += 1;
        }
        h
    }

    /// Σ (q^w - 1) over the points.
    pub fn covered_vectors(&self) -> u64 {
        self.points.iter().map(|(_, w)| self.q.pow(*w) - 1).sum()
    }

    /// (q^6 - 1)/(q - 1) points, all of weight 1.
    pub fn is_maximum_scattered(&self) -> bool {
        let max = (self.q.pow(6) - 1) / (self.q - 1);
        self.points.len() as u64 == max && self.points.iter().all(|(_, w)| *w == 1)
    }

    /// Image of the set under x ↦ M x^ρ for M in GL(2, q^6). Equality of images is a
    /// refutation aid only; it never decides PΓL-inequivalence.
    pub fn image_under(&self, ctx: &FieldCtx, m: [[Felt; 2]; 2], rho: u32) -> Result<LinearSet> {
        let det = ctx.mul(m[0][0], m[1][1]) + ctx.mul(m[0][1], m[1][0]);
        if det.is_zero() {
            return Err(param("singular matrix"));
        }
        let mut points = self
            .points
            .iter()
            .map(|&(p, w)| {
                let (x, y) = p.coords();
                let (x, y) = (ctx.automorphism(x, rho), ctx.automorphism(y, rho));
                let image = ProjPoint::new(
                    ctx,
                    ctx.mul(m[0][0], x) + ctx.mul(m[0][1], y),
                    ctx.mul(m[1][0], x) + ctx.mul(m[1][1], y),
                )?;
                Ok((image, w))
            })
            .collect::<Result<Vec<_>>>()?;
        points.sort_unstable();
        Ok(LinearSet { q: self.q, points })
    }

    pub fn report(&self) -> LinsetReport {
        LinsetReport {
            size: self.size(),
            weight_histogram: self.weight_histogram(),
            max_scattered: self.is_maximum_scattered(),
        }
    }
}

/// Serializable summary of a linear set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinsetReport {
    pub size: usize,
    pub weight_histogram: BTreeMap<u32, u64>,
    pub max_scattered: bool,
}

/// Set-level comparison of one linear set against the pseudoregulus and every
/// LP-type set of the same step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyComparison {
    pub equals_pseudoregulus: bool,
    pub pseudoregulus_difference: usize,
    pub lp_deltas_checked: u64,
    pub lp_matches: u64,
}

impl FamilyComparison {
    pub fn distinct(&self) -> bool {
        !self.equals_pseudoregulus && self.lp_matches == 0
    }
}

/// Compares `l` with L^{1,6}_s and with L^{2,6}_{s,δ} for every admissible δ.
pub fn compare_with_families(ctx: &FieldCtx, l: &LinearSet, s: i64) -> Result<FamilyComparison> {
    let pseudo = linear_set(&family_subspace(ctx, FamilyKind::Pseudoregulus, s, Felt::ZERO)?);
    let mut lp_deltas_checked = 0;
    let mut lp_matches = 0;
    for delta in ctx.nonzero_elements() {
        let n = ctx.norm(delta, 1)?;
        if n == Felt::ONE {
            continue;
        }
        let lp = linear_set(&family_subspace(ctx, FamilyKind::LunardonPolverino, s, delta)?);
        lp_deltas_checked += 1;
        if sets_equal(l, &lp) {
            lp_matches += 1;
        }
    }
    Ok(FamilyComparison {
        equals_pseudoregulus: sets_equal(l, &pseudo),
        pseudoregulus_difference: set_difference_size(l, &pseudo),
        lp_deltas_checked,
        lp_matches,
    })
}

pub fn is_maximum_scattered_linset(l: &LinearSet) -> bool {
    l.is_maximum_scattered()
}

/// Same point set; weights are not compared.
pub fn sets_equal(a: &LinearSet, b: &LinearSet) -> bool {
    a.points.len() == b.points.len() && a.points().eq(b.points())
}

/// |a \ b|.
pub fn set_difference_size(a: &LinearSet, b: &LinearSet) -> usize {
    let (mut i, mut j, mut missing) = (0, 0, 0);
    while i < a.points.len() {
        if j == b.points.len() || a.points[i].0 < b.points[j].0 {
            missing += 1;
            i += 1;
        } else if a.points[i].0 == b.points[j].0 {
            i += 1;
            j += 1;
        } else {
            j += 1;
        }
    }
    missing
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linpoly::LinPoly;
    use crate::scatter::{family_subspace, FamilyKind};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn projective_normalization() {
        let f = FieldCtx::new(1).unwrap();
        let p = ProjPoint::new(&f, Felt::from_bits(3), Felt::from_bits(6)).unwrap();
        let lambda = Felt::from_bits(9);
        let scaled = ProjPoint::new(&f, f.mul(lambda, Felt::from_bits(3)), f.mul(lambda, Felt::from_bits(6))).unwrap();
        assert_eq!(p, scaled);
        assert_eq!(p.coords().0, Felt::ONE);
        assert_eq!(ProjPoint::new(&f, Felt::ZERO, Felt::from_bits(5)).unwrap().coords(), (Felt::ZERO, Felt::ONE));
        assert!(ProjPoint::new(&f, Felt::ZERO, Felt::ZERO).is_err());
    }

    #[test]
    fn identity_gives_one_heavy_point() {
        let f = FieldCtx::new(2).unwrap();
        let l = linear_set(&Subspace::graph(LinPoly::identity(&f, 1).unwrap()));
        assert_eq!(l.size(), 1);
        assert_eq!(l.weighted_points()[0], (ProjPoint::new(&f, Felt::ONE, Felt::ONE).unwrap(), 6));
        assert!(!l.is_maximum_scattered());
    }

    #[test]
    fn weights_partition_the_subspace() {
        let f = FieldCtx::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..10 {
            let p = LinPoly::new(&f, 1, std::array::from_fn(|_| f.random(&mut rng))).unwrap();
            let l = linear_set(&Subspace::graph(p));
            assert_eq!(l.covered_vectors(), f.order() - 1);
            assert!(l.size() as u64 <= (f.order() - 1) / (f.q() - 1));
        }
    }

    #[test]
    fn pseudoregulus_sets_coincide() {
        let f = FieldCtx::new(2).unwrap();
        let a1 = linear_set(&family_subspace(&f, FamilyKind::Pseudoregulus, 1, Felt::ZERO).unwrap());
        let a5 = linear_set(&family_subspace(&f, FamilyKind::Pseudoregulus, 5, Felt::ZERO).unwrap());
        assert!(a1.is_maximum_scattered());
        assert_eq!(a1.size(), 1365);
        assert!(sets_equal(&a1, &a5));
        assert!(sets_equal(&a1, &a1));
        assert_eq!(set_difference_size(&a1, &a5), 0);
    }

    #[test]
    fn scaling_keeps_the_point_set() {
        let f = FieldCtx::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let u = Subspace::graph(LinPoly::trinomial(&f, f.random(&mut rng), 1).unwrap());
        let l = linear_set(&u);
        let scaled = linear_set(&u.scaled(f.random_nonzero(&mut rng)).unwrap());
        assert!(sets_equal(&l, &scaled));
    }

    #[test]
    fn difference_counts() {
        let f = FieldCtx::new(1).unwrap();
        let id = linear_set(&Subspace::graph(LinPoly::identity(&f, 1).unwrap()));
        let sq = linear_set(&Subspace::graph(LinPoly::monomial(&f, 1, 1, Felt::ONE).unwrap()));
        // (1 : x) for x with x^2 = x: only the point (1 : 1) is shared
        assert_eq!(set_difference_size(&sq, &id), sq.size() - 1);
        assert_eq!(set_difference_size(&id, &sq), 0);
        assert!(!sets_equal(&id, &sq));
    }

    #[test]
    fn images_under_the_stabilizer() {
        let f = FieldCtx::new(1).unwrap();
        let l = linear_set(&family_subspace(&f, FamilyKind::Pseudoregulus, 1, Felt::ZERO).unwrap());
        // diag(1, λ) with λ ∈ F_q and field automorphisms fix {(1 : x^(q-1))}
        for rho in 0..6 {
            let image = l.image_under(&f, [[Felt::ONE, Felt::ZERO], [Felt::ZERO, Felt::ONE]], rho).unwrap();
            assert!(sets_equal(&l, &image));
        }
        let g = f.generator();
        let moved = l.image_under(&f, [[Felt::ONE, Felt::ZERO], [Felt::ZERO, g]], 0).unwrap();
        assert_eq!(moved.size(), l.size());
        let singular = [[Felt::ONE, Felt::ONE], [Felt::ONE, Felt::ONE]];
        assert!(l.image_under(&f, singular, 0).is_err());
    }

    #[test]
    fn report_fields() {
        let f = FieldCtx::new(1).unwrap();
        let l = linear_set(&Subspace::graph(LinPoly::identity(&f, 1).unwrap()));
        let json = serde_json::to_string(&l.report()).unwrap();
        assert_eq!(json, r#"{"size":1,"weight_histogram":{"6":1},"max_scattered":false}"#);
    }

    #[test]
    fn pseudoregulus_compared_with_itself() {
        let f = FieldCtx::new(1).unwrap();
        let l = linear_set(&family_subspace(&f, FamilyKind::Pseudoregulus, 1, Felt::ZERO).unwrap());
        let cmp = compare_with_families(&f, &l, 1).unwrap();
        assert!(cmp.equals_pseudoregulus);
        assert_eq!(cmp.pseudoregulus_difference, 0);
        assert!(!cmp.distinct());
        // at q = 2 every nonzero norm is 1, so no LP-type set exists
        assert_eq!(cmp.lp_deltas_checked, 0);
    }
}
