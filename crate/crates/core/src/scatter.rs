//! Scatteredness of U_f = {(x, f(x))}: the fiber count, the Dickson rank sweep,
//! the determinantal system polynomials, and an exhaustive ΓL(2, 2^6) oracle.

use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU32, Ordering};

use crate::error::{param, Error, Result};
use crate::field::{Felt, FieldCtx, EXT_DEGREE};
use crate::linpoly::LinPoly;
use crate::matrix;

const N: usize = EXT_DEGREE;

/// Fields up to this order are swept on the calling thread.
const SEQUENTIAL_LIMIT: u64 = 1 << 14;
const CHUNK: u64 = 1 << 13;

/// Calls `visit(x, 1/x)` for every nonzero x, walking powers of the generator.
/// Stops early, returning false, as soon as `visit` returns false.
pub(crate) fn all_nonzero_with_inverse<F>(ctx: &FieldCtx, visit: F) -> bool
where
    F: Fn(Felt, Felt) -> bool + Sync,
{
    let total = ctx.order() - 1;
    let g = ctx.generator();
    let g_inv = ctx.inv(g).expect("generator is nonzero");
    let run = |start: u64, end: u64| {
        let mut x = ctx.pow(g, start);
        let mut x_inv = ctx.inv(x).expect("nonzero");
        for _ in start..end {
            if !visit(x, x_inv) {
                return false;
            }
            x = ctx.mul(x, g);
            x_inv = ctx.mul(x_inv, g_inv);
        }
        true
    };
    if ctx.order() <= SEQUENTIAL_LIMIT {
        return run(0, total);
    }
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .all(|k| run(k * CHUNK, ((k + 1) * CHUNK).min(total)))
}

/// Number of x != 0 with f(x)/x = r, indexed by the bits of r.
pub fn fiber_histogram(f: &LinPoly<'_>) -> Vec<u32> {
    let ctx = f.ctx();
    let counts: Vec<AtomicU32> = (0..ctx.order()).map(|_| AtomicU32::new(0)).collect();
    all_nonzero_with_inverse(ctx, |x, x_inv| {
        let r = ctx.mul(f.eval(x), x_inv);
        counts[r.bits() as usize].fetch_add(1, Ordering::Relaxed);
        true
    });
    counts.into_iter().map(AtomicU32::into_inner).collect()
}

/// Every value of x -> f(x)/x on nonzero x is taken exactly q - 1 times.
///
/// A fiber {x != 0 : f(x) = r x} is a punctured GF(q)-subspace, so its size is
/// q^k - 1 with k >= 1; the sweep stops at the first fiber that outgrows q - 1.
pub fn is_scattered_fibers(f: &LinPoly<'_>) -> bool {
    let ctx = f.ctx();
    let limit = (ctx.q() - 1) as u32;
    let counts: Vec<AtomicU32> = (0..ctx.order()).map(|_| AtomicU32::new(0)).collect();
    let overflow = AtomicBool::new(false);
    all_nonzero_with_inverse(ctx, |x, x_inv| {
        let r = ctx.mul(f.eval(x), x_inv);
        let seen = counts[r.bits() as usize].fetch_add(1, Ordering::Relaxed) + 1;
        if seen > limit {
            overflow.store(true, Ordering::Relaxed);
            return false;
        }
        !overflow.load(Ordering::Relaxed)
    }) && !overflow.load(Ordering::Relaxed)
}

/// rank(D(mX + f)) >= 5 for every m.
pub fn is_scattered_dickson(f: &LinPoly<'_>) -> bool {
    let ctx = f.ctx();
    let base = f.dickson_matrix(None);
    let check = |m: u32| base.shifted(Felt::from_bits(m)).rank_at_least(N - 1);
    let order = ctx.order() as u32;
    if ctx.order() <= SEQUENTIAL_LIMIT {
        (0..order).all(check)
    } else {
        (0..order).into_par_iter().with_min_len(1024).all(check)
    }
}

/// The F_q-subspace U_f = {(x, f(x)) : x in F_{q^6}} of F_{q^6}^2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Subspace<'a> {
    f: LinPoly<'a>,
}

impl<'a> Subspace<'a> {
    pub fn graph(f: LinPoly<'a>) -> Subspace<'a> {
        Subspace { f }
    }

    pub fn poly(&self) -> &LinPoly<'a> {
        &self.f
    }

    pub fn ctx(&self) -> &'a FieldCtx {
        self.f.ctx()
    }

    pub fn size(&self) -> u64 {
        self.ctx().order()
    }

    pub fn contains(&self, x: Felt, y: Felt) -> bool {
        self.f.eval(x) == y
    }

    pub fn vectors(&self) -> impl Iterator<Item = (Felt, Felt)> + '_ {
        self.ctx().elements().map(|x| (x, self.f.eval(x)))
    }

    /// λ U_f = U_g with g = λ f(λ^{-1} X).
    pub fn scaled(&self, lambda: Felt) -> Result<Subspace<'a>> {
        let ctx = self.ctx();
        let inv = ctx
            .inv(lambda)
            .ok_or_else(|| param("cannot scale a subspace by zero"))?;
        let step = self.f.step() as i64;
        let g = LinPoly::scalar(ctx, step, lambda)?
            .compose(&self.f)?
            .compose(&LinPoly::scalar(ctx, step, inv)?)?;
        Ok(Subspace { f: g })
    }

    pub fn is_scattered(&self) -> bool {
        is_scattered_fibers(&self.f)
    }
}

/// Known families of maximum scattered subspaces of F_{q^6}^2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// {(x, x^(q^s))}
    Pseudoregulus,
    /// {(x, δ x^(q^s) + x^(q^(6-s)))}
    LunardonPolverino,
    /// {(x, δ x^(q^s) + x^(q^(s+3)))}
    HalfShift,
}

fn coprime_to_six(s: i64) -> bool {
    matches!(s.rem_euclid(6), 1 | 5)
}

/// Subspace of the given family. Scatteredness is not assumed.
pub fn family_subspace<'a>(ctx: &'a FieldCtx, kind: FamilyKind, s: i64, delta: Felt) -> Result<Subspace<'a>> {
    if !(1..=5).contains(&s) {
        return Err(param(format!("family step {s} outside 1..=5")));
    }
    let f = match kind {
        FamilyKind::Pseudoregulus => {
            if !coprime_to_six(s) {
                return Err(param(format!("gcd({s}, 6) != 1")));
            }
            LinPoly::monomial(ctx, s, 1, Felt::ONE)?
        }
        FamilyKind::LunardonPolverino => {
            if !coprime_to_six(s) {
                return Err(param(format!("gcd({s}, 6) != 1")));
            }
            let n = ctx.norm(delta, 1)?;
            if n.is_zero() || n == Felt::ONE {
                return Err(param("N_{q^6/q}(delta) must avoid 0 and 1"));
            }
            let mut coeffs = [Felt::ZERO; N];
            coeffs[1] = delta;
            coeffs[5] = Felt::ONE;
            LinPoly::new(ctx, s, coeffs)?
        }
        FamilyKind::HalfShift => {
            if s % 3 == 0 {
                return Err(param(format!("gcd({s}, 3) != 1")));
            }
            let n = ctx.norm(delta, 3)?;
            if n.is_zero() || n == Felt::ONE {
                return Err(param("N_{q^6/q^3}(delta) must avoid 0 and 1"));
            }
            let mut q_coeffs = [Felt::ZERO; N];
            q_coeffs[s as usize] = delta;
            q_coeffs[(s as usize + 3) % N] = Felt::ONE;
            let step = if coprime_to_six(s) { s } else { 1 };
            LinPoly::from_q_coeffs(ctx, step, q_coeffs)?
        }
    };
    Ok(Subspace::graph(f))
}

/// Which determinant of the system to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemPoly {
    /// The 6x6 determinant p.
    P,
    /// q_i for i in 0..6; q_0 is a 5x5 minor of the p matrix.
    Q(u8),
}

/// Dickson matrix of f_{c,1} with the diagonal replaced by the variables.
pub fn system_matrix(ctx: &FieldCtx, c: Felt, point: [Felt; N]) -> [[Felt; N]; N] {
    let f = LinPoly::trinomial(ctx, c, 1).expect("step 1 is valid");
    let mut m = *f.dickson_matrix(None).entries();
    for (i, v) in point.iter().enumerate() {
        m[i][i] = *v;
    }
    m
}

fn q0(ctx: &FieldCtx, c: Felt, point: [Felt; N]) -> Felt {
    let m = system_matrix(ctx, c, point);
    let minor: [[Felt; N - 1]; N - 1] = std::array::from_fn(|i| std::array::from_fn(|j| m[i][j + 1]));
    matrix::det(ctx, minor)
}

/// Evaluates p or q_i at `point`.
///
/// q_i is q_0 with its coefficients raised to q^i and its variables rotated by i:
/// q_i(c; v_0..v_5) = q_0(c^(q^i); v_i, ..., v_{i+5}).
pub fn system_poly_eval(ctx: &FieldCtx, c: Felt, point: [Felt; N], which: SystemPoly) -> Result<Felt> {
    match which {
        SystemPoly::P => Ok(matrix::det(ctx, system_matrix(ctx, c, point))),
        SystemPoly::Q(i) if (i as usize) < N => {
            let i = i as usize;
            let rotated = std::array::from_fn(|j| point[(j + i) % N]);
            Ok(q0(ctx, ctx.frobenius(c, i as i64), rotated))
        }
        SystemPoly::Q(i) => Err(param(format!("system polynomial index {i} outside 0..6"))),
    }
}

/// (m, m^q, ..., m^(q^5)).
pub fn frobenius_orbit(ctx: &FieldCtx, m: Felt) -> [Felt; N] {
    ctx.conjugates(m)
}

/// An element of ΓL(2, q^6): (x, y) -> M (x^(2^rho), y^(2^rho)).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaLWitness {
    pub matrix: [[Felt; 2]; 2],
    pub rho: u32,
}

impl GammaLWitness {
    pub fn apply(&self, ctx: &FieldCtx, x: Felt, y: Felt) -> (Felt, Felt) {
        let (x, y) = (ctx.automorphism(x, self.rho), ctx.automorphism(y, self.rho));
        let [[a, b], [c, d]] = self.matrix;
        (ctx.mul(a, x) + ctx.mul(b, y), ctx.mul(c, x) + ctx.mul(d, y))
    }

    /// The matrix is invertible and maps every vector of `from` into `to`.
    pub fn maps(&self, from: &Subspace<'_>, to: &Subspace<'_>) -> bool {
        let ctx = from.ctx();
        let [[a, b], [c, d]] = self.matrix;
        if (ctx.mul(a, d) + ctx.mul(b, c)).is_zero() {
            return false;
        }
        from.vectors().all(|(x, y)| {
            let (u, v) = self.apply(ctx, x, y);
            to.contains(u, v)
        })
    }
}

/// Exhaustive search for φ in ΓL(2, 2^6) with φ(U1) = U2. Only q = 2 is accepted.
///
/// For each automorphism ρ the condition reads C y + D h(y) = g(A y + B h(y))
/// for all y, with h = f1^ρ and g = f2. Both sides are GF(2)-linear in y, so it
/// suffices to test a GF(2) basis y_0..y_5. Two basis vectors with
/// y_i h_j != y_j h_i pin down (C, D) by Cramer's rule, and the other four give
/// residuals that must vanish. Since g is additive, (C, D) and every residual
/// split as a part depending on A plus a part depending on B, so the search over
/// (A, B) is a join on equal residual vectors: O(2^6) work per side.
pub fn gammal_equivalent_bruteforce(u1: &Subspace<'_>, u2: &Subspace<'_>) -> Result<Option<GammaLWitness>> {
    let ctx = u1.ctx();
    if !std::ptr::eq(ctx, u2.ctx()) {
        return Err(param("subspaces live over different field contexts"));
    }
    if ctx.e() != 1 {
        return Err(Error::Feasibility(format!(
            "exhaustive ΓL search needs q = 2, got q = {}",
            ctx.q()
        )));
    }
    let g = u2.poly();
    let basis: Vec<Felt> = ctx.f2_basis().collect();
    for rho in 0..ctx.degree() {
        let h = u1.poly().apply_automorphism(rho);
        let hy: Vec<Felt> = basis.iter().map(|&y| h.eval(y)).collect();
        let pair = (0..N)
            .flat_map(|i| (i + 1..N).map(move |j| (i, j)))
            .find(|&(i, j)| !(ctx.mul(basis[i], hy[j]) + ctx.mul(basis[j], hy[i])).is_zero());
        let Some((i, j)) = pair else {
            // h = λX: U1 is an F_{q^6}-line, so U2 must be one too
            if let Some(w) = line_witness(ctx, hy[0], basis[0], g, rho) {
                return Ok(Some(w));
            }
            continue;
        };
        let det_inv = ctx
            .inv(ctx.mul(basis[i], hy[j]) + ctx.mul(basis[j], hy[i]))
            .expect("pair has nonzero determinant");
        let rest: Vec<usize> = (0..N).filter(|&k| k != i && k != j).collect();
        // (C, D, residuals) contributed by one side, where `w` holds g(x v_k)
        let side = |x: Felt, v: &[Felt]| {
            let w: Vec<Felt> = v.iter().map(|&vk| g.eval(ctx.mul(x, vk))).collect();
            let c = ctx.mul(ctx.mul(w[i], hy[j]) + ctx.mul(w[j], hy[i]), det_inv);
            let d = ctx.mul(ctx.mul(basis[i], w[j]) + ctx.mul(basis[j], w[i]), det_inv);
            let mut key = [0u32; N - 2];
            for (slot, &k) in key.iter_mut().zip(&rest) {
                *slot = (ctx.mul(c, basis[k]) + ctx.mul(d, hy[k]) + w[k]).bits();
            }
            (c, d, key)
        };
        let mut by_key: HashMap<[u32; N - 2], Vec<(Felt, Felt, Felt)>> = HashMap::new();
        for b in ctx.elements() {
            let (c, d, key) = side(b, &hy);
            by_key.entry(key).or_default().push((b, c, d));
        }
        for a in ctx.elements() {
            let (ca, da, key) = side(a, &basis);
            let Some(matches) = by_key.get(&key) else { continue };
            for &(b, cb, db) in matches {
                let (c, d) = (ca + cb, da + db);
                if !(ctx.mul(a, d) + ctx.mul(b, c)).is_zero() {
                    return Ok(Some(GammaLWitness { matrix: [[a, b], [c, d]], rho }));
                }
            }
        }
    }
    Ok(None)
}

/// Witness from the line {(x, λx)} onto U2, which exists iff U2 is a line {(x, μx)}.
fn line_witness(ctx: &FieldCtx, hy0: Felt, y0: Felt, g: &LinPoly<'_>, rho: u32) -> Option<GammaLWitness> {
    let lambda = ctx.div(hy0, y0).expect("basis vectors are nonzero");
    let mu = g.eval(Felt::ONE);
    if ctx.elements().any(|x| g.eval(x) != ctx.mul(mu, x)) {
        return None;
    }
    // (x, λx) -> (x, (μ + λ) x + λ x) = (x, μ x)
    Some(GammaLWitness { matrix: [[Felt::ONE, Felt::ZERO], [mu + lambda, Felt::ONE]], rho })
}
