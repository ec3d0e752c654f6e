//! Two-dimensional rank-metric codes {aX + b f(X)} over F_{q^6}: parameters,
//! idealizers, adjoint codes, and the equivalence criteria for the trinomial codes.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{param, Error, Result};
use crate::family;
use crate::field::{Felt, FieldCtx, EXT_DEGREE};
use crate::gf2::{self, BitVec, Echelon};
use crate::linpoly::LinPoly;

const N: usize = EXT_DEGREE;

/// How the scalar b enters the second generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Span {
    /// {aX + b f(X)}: F_{q^6}-linear on the left.
    Left,
    /// {aX + f(bX)}: F_{q^6}-linear on the right; adjoints of left-spanned codes.
    Right,
}

/// The code spanned by X and a non-scalar linearized polynomial f.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RMCode<'a> {
    f: LinPoly<'a>,
    span: Span,
}

/// Which composition order the idealizer stabilizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// φ with g ∘ φ in C for all g in C.
    Right,
    /// φ with φ ∘ g in C for all g in C.
    Left,
}

/// D_{c,s} = <X, f_{c,s}>.
pub fn build_code(ctx: &FieldCtx, c: Felt, s: i64) -> Result<RMCode<'_>> {
    if c.is_zero() {
        return Err(param("the trinomial code needs c != 0"));
    }
    if !matches!(s, 1 | 5) {
        return Err(param(format!("code step {s} not in {{1, 5}}")));
    }
    RMCode::new(LinPoly::trinomial(ctx, c, s)?)
}

fn pivot_index(f: &LinPoly<'_>) -> Option<usize> {
    (1..N).find(|&k| !f.coeff(k).is_zero())
}

impl<'a> RMCode<'a> {
    /// Left span <X, f>. Fails when f is a scalar map, since the generators
    /// would then be dependent.
    pub fn new(f: LinPoly<'a>) -> Result<RMCode<'a>> {
        RMCode::with_span(f, Span::Left)
    }

    pub fn with_span(f: LinPoly<'a>, span: Span) -> Result<RMCode<'a>> {
        if pivot_index(&f).is_none() {
            return Err(param("second generator is a multiple of X"));
        }
        Ok(RMCode { f, span })
    }

    pub fn generator(&self) -> &LinPoly<'a> {
        &self.f
    }

    pub fn span(&self) -> Span {
        self.span
    }

    pub fn ctx(&self) -> &'a FieldCtx {
        self.f.ctx()
    }

    fn step(&self) -> i64 {
        self.f.step() as i64
    }

    /// aX + b f (left span) or aX + f(bX) (right span).
    pub fn codeword(&self, a: Felt, b: Felt) -> LinPoly<'a> {
        let ctx = self.ctx();
        let mut coeffs = *self.f.coeffs();
        for (k, coeff) in coeffs.iter_mut().enumerate() {
            *coeff = match self.span {
                Span::Left => ctx.mul(b, *coeff),
                Span::Right => ctx.mul(*coeff, ctx.frobenius(b, self.f.q_exponent(k) as i64)),
            };
        }
        coeffs[0] += a;
        LinPoly::new(ctx, self.step(), coeffs).expect("step already valid")
    }

    /// A GF(2)-basis: β X and the b = β codewords, β over the GF(2) basis.
    pub fn gf2_basis(&self) -> Vec<LinPoly<'a>> {
        let ctx = self.ctx();
        let mut out: Vec<LinPoly<'a>> = ctx.f2_basis().map(|b| self.codeword(b, Felt::ZERO)).collect();
        out.extend(ctx.f2_basis().map(|b| self.codeword(Felt::ZERO, b)));
        out
    }

    /// Coefficients of h minus its best approximation in the code; all zero
    /// exactly when h is a codeword. GF(2)-linear in h.
    fn residual(&self, h: &LinPoly<'a>) -> [Felt; N] {
        let ctx = self.ctx();
        let k0 = pivot_index(&self.f).expect("checked at construction");
        let ratio = ctx.div(h.coeff(k0), self.f.coeff(k0)).expect("pivot is nonzero");
        let b = match self.span {
            Span::Left => ratio,
            Span::Right => ctx.frobenius(ratio, -(self.f.q_exponent(k0) as i64)),
        };
        let fitted = self.codeword(Felt::ZERO, b);
        std::array::from_fn(|k| {
            if k == 0 {
                Felt::ZERO
            } else {
                h.coeff(k) + fitted.coeff(k)
            }
        })
    }

    pub fn contains(&self, h: &LinPoly<'a>) -> bool {
        h.step() == self.f.step()
            && std::ptr::eq(h.ctx(), self.ctx())
            && self.residual(h).iter().all(|r| r.is_zero())
    }

    /// Dimension over GF(q).
    pub fn dim_q(&self) -> usize {
        let vectors: Vec<BitVec> = self.gf2_basis().iter().map(poly_bits).collect();
        gf2::rank(&vectors) / self.ctx().e() as usize
    }

    /// Minimum rank over nonzero codewords.
    ///
    /// For b != 0 the codeword with (a, b) has the rank of (a/b) X + f, so one
    /// sweep over a covers every codeword; b = 0 gives rank 6.
    pub fn min_distance(&self) -> usize {
        let base = self.f.dickson_matrix(None);
        let order = self.ctx().order() as u32;
        let sweep = (0..order)
            .into_par_iter()
            .with_min_len(1024)
            .map(|a| base.shifted(Felt::from_bits(a)).rank())
            .min()
            .unwrap_or(N);
        sweep.min(N)
    }

    /// dim_q meets the Singleton-like bound 6 (6 - d + 1).
    pub fn is_mrd(&self) -> bool {
        let d = self.min_distance();
        self.dim_q() == N * (N - d + 1)
    }

    /// The idealizer on the given side, as a GF(2)-linear solution space.
    ///
    /// X lies in the code, so every idealizer element φ = X ∘ φ = φ ∘ X is itself
    /// a codeword; the unknowns are its coordinates in `gf2_basis`.
    pub fn idealizer(&self, side: Side) -> Idealizer<'a> {
        let basis = self.gf2_basis();
        let images: Vec<BitVec> = basis
            .par_iter()
            .map(|phi| {
                basis
                    .iter()
                    .flat_map(|g| {
                        let h = match side {
                            Side::Right => g.compose(phi),
                            Side::Left => phi.compose(g),
                        }
                        .expect("same context and step");
                        self.residual(&h).map(|r| r.bits() as u64)
                    })
                    .collect()
            })
            .collect();
        let solutions = gf2::null_space(&images)
            .into_iter()
            .map(|tag| combine(&basis, &tag))
            .collect();
        Idealizer { basis: solutions }
    }

    pub fn right_idealizer(&self) -> Idealizer<'a> {
        self.idealizer(Side::Right)
    }

    pub fn left_idealizer(&self) -> Idealizer<'a> {
        self.idealizer(Side::Left)
    }

    /// {ĝ : g in C}. The adjoint of aX + b f is aX + f̂(bX), so the span flips.
    pub fn adjoint_code(&self) -> RMCode<'a> {
        let span = match self.span {
            Span::Left => Span::Right,
            Span::Right => Span::Left,
        };
        RMCode { f: self.f.adjoint(), span }
    }

    /// Same set of codewords.
    pub fn same_codewords(&self, other: &RMCode<'a>) -> bool {
        self.f.step() == other.f.step()
            && other.gf2_basis().iter().all(|g| self.contains(g))
            && self.gf2_basis().iter().all(|g| other.contains(g))
    }
}

/// Coefficients packed one field element per word.
fn poly_bits(p: &LinPoly<'_>) -> BitVec {
    p.coeffs().iter().map(|a| a.bits() as u64).collect()
}

fn combine<'a>(basis: &[LinPoly<'a>], tag: &[u64]) -> LinPoly<'a> {
    let mut acc = LinPoly::zero(basis[0].ctx(), basis[0].step() as i64).expect("valid step");
    for (j, p) in basis.iter().enumerate() {
        if gf2::get_bit(tag, j) {
            acc = acc.add(p).expect("same context and step");
        }
    }
    acc
}

/// A GF(2)-subspace of linearized polynomials, held by a basis.
#[derive(Clone, Debug)]
pub struct Idealizer<'a> {
    basis: Vec<LinPoly<'a>>,
}

/// Largest idealizer dimension for which `elements` will enumerate.
const MAX_ENUMERATION_DIM: usize = 24;

impl<'a> Idealizer<'a> {
    pub fn basis(&self) -> &[LinPoly<'a>] {
        &self.basis
    }

    pub fn dim_f2(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> u64 {
        1u64 << self.basis.len()
    }

    /// Every element; refused above 2^24 elements.
    pub fn elements(&self) -> Result<Vec<LinPoly<'a>>> {
        if self.basis.len() > MAX_ENUMERATION_DIM {
            return Err(Error::Feasibility(format!("idealizer has 2^{} elements", self.basis.len())));
        }
        let Some(first) = self.basis.first() else {
            return Ok(Vec::new());
        };
        let zero = LinPoly::zero(first.ctx(), first.step() as i64)?;
        let mut out = vec![zero];
        for b in &self.basis {
            let shifted: Vec<LinPoly<'a>> = out.iter().map(|p| p.add(b).expect("compatible")).collect();
            out.extend(shifted);
        }
        Ok(out)
    }

    /// When every element is a scalar map αX, the GF(2)-basis of the α.
    pub fn scalars(&self) -> Option<Vec<Felt>> {
        self.basis
            .iter()
            .map(|p| (1..N).all(|k| p.coeff(k).is_zero()).then(|| p.coeff(0)))
            .collect()
    }

    /// The idealizer is exactly {αX : α in F_{q^ell}}.
    pub fn is_subfield_scalars(&self, ell: u32) -> bool {
        let Some(alphas) = self.scalars() else { return false };
        let Some(ctx) = self.basis.first().map(|p| p.ctx()) else { return false };
        alphas.iter().all(|&a| ctx.in_subfield(a, ell)) && self.basis.len() == (ctx.e() * ell) as usize
    }

    pub fn contains(&self, p: &LinPoly<'a>) -> bool {
        let mut ech = Echelon::new();
        for b in &self.basis {
            ech.insert(&poly_bits(b));
        }
        ech.contains(&poly_bits(p))
    }
}

/// Which criterion produced an equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivBranch {
    /// D f_2(X) = f_1^ρ(A X).
    SameStep { a: Felt, d: Felt },
    /// f_1^ρ(B f_2(X)) = C X.
    OppositeStep { b: Felt, c: Felt },
}

/// Explicit equivalence between D_{c1,s} and D_{c2,t}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivWitness {
    /// The automorphism x -> x^(2^rho).
    pub rho: u32,
    pub branch: EquivBranch,
}

/// Outcome of the equivalence test, with whether both inputs satisfied the
/// hypotheses under which the criteria are a complete decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivDecision {
    pub witness: Option<EquivWitness>,
    pub hypotheses_hold: bool,
}

fn check_code_step(s: i64) -> Result<()> {
    if matches!(s, 1 | 5) {
        Ok(())
    } else {
        Err(param(format!("code step {s} not in {{1, 5}}")))
    }
}

/// (c^(q^3s + q^s) + 1)(c^(q^5s) + 1) / (c + 1)^(q^s + q^3s); `None` at c = 1.
pub fn opposite_step_image(ctx: &FieldCtx, c: Felt, s: i64) -> Option<Felt> {
    let cs = ctx.frobenius(c, s);
    let c3s = ctx.frobenius(c, 3 * s);
    let c5s = ctx.frobenius(c, 5 * s);
    let one = Felt::ONE;
    let num = ctx.mul(ctx.mul(c3s, cs) + one, c5s + one);
    let den = ctx.mul(ctx.frobenius(c + one, s), ctx.frobenius(c + one, 3 * s));
    ctx.div(num, den)
}

/// N_{q^6/q^2}(c) + Tr_{q^6/q^2}(c).
fn norm_plus_trace(ctx: &FieldCtx, c: Felt) -> Felt {
    ctx.norm(c, 2).expect("2 divides 6") + ctx.trace(c, 2).expect("2 divides 6")
}

/// (B, C) for the opposite-step identity, with μ = 1.
fn opposite_step_scalars(ctx: &FieldCtx, c2: Felt, s: i64) -> Option<(Felt, Felt)> {
    let one = Felt::ONE;
    let c2p1 = c2 + one;
    let nt = norm_plus_trace(ctx, c2);
    let b_num = ctx.frobenius(c2p1, 2 * s);
    let b_den = ctx.mul(nt, ctx.mul(c2p1, ctx.frobenius(c2p1, 2 * s)));
    let b = ctx.div(b_num, b_den)?;
    let c_den = ctx.mul(ctx.frobenius(c2p1, s), ctx.frobenius(c2p1, 3 * s));
    let c = ctx.inv(c_den)?;
    Some((b, c))
}

impl EquivWitness {
    /// Re-checks the composition identity exactly.
    pub fn validates(&self, ctx: &FieldCtx, c1: Felt, s: i64, c2: Felt, t: i64) -> Result<bool> {
        let f1_rho = LinPoly::trinomial(ctx, c1, s)?.apply_automorphism(self.rho);
        let f2 = LinPoly::trinomial(ctx, c2, t)?.with_step(s)?;
        Ok(match self.branch {
            EquivBranch::SameStep { a, d } => {
                !a.is_zero() && !d.is_zero() && f2.scale(d) == f1_rho.compose(&LinPoly::scalar(ctx, s, a)?)?
            }
            EquivBranch::OppositeStep { b, c } => {
                !b.is_zero() && !c.is_zero() && f1_rho.compose(&f2.scale(b))? == LinPoly::scalar(ctx, s, c)?
            }
        })
    }
}

/// Decides whether D_{c1,s} and D_{c2,t} are equivalent by the two criteria,
/// searching all 6e automorphisms. Inputs outside the admissible set are
/// accepted with a warning; the answer is then only heuristic.
pub fn codes_equivalent(ctx: &FieldCtx, c1: Felt, s: i64, c2: Felt, t: i64) -> Result<EquivDecision> {
    check_code_step(s)?;
    check_code_step(t)?;
    if c1.is_zero() || c2.is_zero() {
        return Err(param("the trinomial code needs c != 0"));
    }
    let hypotheses_hold = family::in_frak_c(ctx, c1) && family::in_frak_c(ctx, c2);
    if !hypotheses_hold {
        log::warn!(
            "equivalence test on {} / {} outside the admissible set is heuristic",
            ctx.to_hex(c1),
            ctx.to_hex(c2)
        );
    }
    let target = if s == t { Some(c2) } else { opposite_step_image(ctx, c2, s) };
    let mut witness = None;
    if let Some(target) = target {
        for rho in 0..ctx.degree() {
            if ctx.automorphism(c1, rho) != target {
                continue;
            }
            let branch = if s == t {
                EquivBranch::SameStep { a: Felt::ONE, d: Felt::ONE }
            } else {
                let Some((b, c)) = opposite_step_scalars(ctx, c2, s) else { continue };
                EquivBranch::OppositeStep { b, c }
            };
            let w = EquivWitness { rho, branch };
            if w.validates(ctx, c1, s, c2, t)? {
                witness = Some(w);
                break;
            }
            log::warn!("criterion matched at rho = {rho} but the constructed witness failed to validate");
        }
    }
    Ok(EquivDecision { witness, hypotheses_hold })
}

/// Node of the equivalence graph: the code D_{c,s}.
pub type CodeId = (Felt, u8);

/// Partition of the codes over the admissible set into equivalence classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivPartition {
    /// Classes sorted by their smallest member; members sorted by (c, s).
    pub classes: Vec<Vec<CodeId>>,
    /// A spanning forest: every union performed, with its validated witness.
    pub edges: Vec<(CodeId, CodeId, EquivWitness)>,
    /// Opposite-step images that fell outside the admissible set.
    pub images_outside: usize,
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Partitions {D_{c,s} : c in `frak_c`, s in {1, 5}}.
///
/// Candidate partners of (c, s) are the automorphic images of c with the same s,
/// and the automorphic images of the opposite-step image with the other s. Each
/// candidate edge is confirmed by [`codes_equivalent`] before merging.
pub fn partition(ctx: &FieldCtx, frak_c: &[Felt]) -> Result<EquivPartition> {
    partition_steps(ctx, frak_c, &[1, 5])
}

/// [`partition`] restricted to the codes whose step is in `steps`.
pub fn partition_steps(ctx: &FieldCtx, frak_c: &[Felt], steps: &[u8]) -> Result<EquivPartition> {
    for &s in steps {
        check_code_step(s as i64)?;
    }
    let mut nodes: Vec<CodeId> = frak_c.iter().flat_map(|&c| steps.iter().map(move |&s| (c, s))).collect();
    nodes.sort_by_key(|&(c, s)| (c.bits(), s));
    nodes.dedup();
    let position = |id: CodeId| nodes.binary_search_by_key(&(id.0.bits(), id.1), |&(c, s)| (c.bits(), s)).ok();

    let per_node: Vec<Result<(Vec<(usize, usize, EquivWitness)>, usize)>> = nodes
        .par_iter()
        .enumerate()
        .map(|(i, &(c2, t))| {
            let mut edges = Vec::new();
            let mut outside = 0;
            let mut partners: Vec<CodeId> = (0..ctx.degree()).map(|k| (ctx.automorphism(c2, k), t)).collect();
            let s = 6 - t as i64;
            let image = if steps.contains(&(s as u8)) { opposite_step_image(ctx, c2, s) } else { None };
            if let Some(image) = image {
                partners.extend((0..ctx.degree()).map(|k| (ctx.automorphism(image, k), s as u8)));
            }
            partners.sort_by_key(|&(c, s)| (c.bits(), s));
            partners.dedup();
            for (c1, s1) in partners {
                let Some(j) = position((c1, s1)) else {
                    outside += 1;
                    continue;
                };
                let decision = codes_equivalent(ctx, c1, s1 as i64, c2, t as i64)?;
                if let Some(w) = decision.witness {
                    edges.push((j, i, w));
                }
            }
            Ok((edges, outside))
        })
        .collect();

    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    let mut edges = Vec::new();
    let mut images_outside = 0;
    for entry in per_node {
        let (node_edges, outside) = entry?;
        images_outside += outside;
        for (j, i, w) in node_edges {
            let (rj, ri) = (find(&mut parent, j), find(&mut parent, i));
            if rj != ri {
                parent[rj.max(ri)] = rj.min(ri);
                edges.push((nodes[j], nodes[i], w));
            }
        }
    }
    let mut classes: Vec<Vec<CodeId>> = Vec::new();
    let mut root_slot = vec![usize::MAX; nodes.len()];
    for i in 0..nodes.len() {
        let r = find(&mut parent, i);
        if root_slot[r] == usize::MAX {
            root_slot[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[root_slot[r]].push(nodes[i]);
    }
    Ok(EquivPartition { classes, edges, images_outside })
}

/// (|C| / 6e, |C| / (12e + 1)): the stated lower bound on the number of classes
/// and the one that follows from "each code is equivalent to at most 12e others".
pub fn class_count_bounds(frak_c_size: u64, e: u32) -> (Ratio<u64>, Ratio<u64>) {
    let e = e as u64;
    (
        Ratio::new(frak_c_size, 6 * e),
        Ratio::new(frak_c_size, 12 * e + 1),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn trace_code(ctx: &FieldCtx) -> RMCode<'_> {
        RMCode::new(LinPoly::new(ctx, 1, [Felt::ONE; N]).unwrap()).unwrap()
    }

    #[test]
    fn construction_errors() {
        let f = FieldCtx::new(1).unwrap();
        assert!(build_code(&f, Felt::ZERO, 1).is_err());
        assert!(build_code(&f, Felt::ONE, 2).is_err());
        assert!(RMCode::new(LinPoly::identity(&f, 1).unwrap()).is_err());
    }

    #[test]
    fn step_five_trinomial() {
        let f = FieldCtx::new(2).unwrap();
        let c = f.generator();
        let code = build_code(&f, c, 5).unwrap();
        let q = code.generator().q_coeffs();
        assert_eq!(q, [Felt::ZERO, c, Felt::ZERO, Felt::ONE, Felt::ZERO, Felt::ONE]);
    }

    #[test]
    fn parameters_of_simple_codes() {
        let f = FieldCtx::new(1).unwrap();
        let t = trace_code(&f);
        assert_eq!(t.min_distance(), 1);
        assert!(!t.is_mrd());
        assert_eq!(t.dim_q(), 12);
        let pr = RMCode::new(LinPoly::monomial(&f, 1, 1, Felt::ONE).unwrap()).unwrap();
        assert_eq!(pr.min_distance(), 5);
        assert!(pr.is_mrd());
        assert_eq!(pr.right_idealizer().order(), f.order());
        assert_eq!(pr.left_idealizer().order(), f.order());
    }

    #[test]
    fn membership() {
        let f = FieldCtx::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let code = build_code(&f, f.random_nonzero(&mut rng), 1).unwrap();
        let adj = code.adjoint_code();
        for _ in 0..50 {
            let (a, b) = (f.random(&mut rng), f.random(&mut rng));
            let w = code.codeword(a, b);
            assert!(code.contains(&w));
            assert!(adj.contains(&w.adjoint()));
            let mut off = *w.coeffs();
            off[2] += Felt::ONE;
            assert!(!code.contains(&LinPoly::new(&f, 1, off).unwrap()));
        }
    }

    fn idealizer_by_scan<'a>(code: &RMCode<'a>, side: Side) -> Vec<LinPoly<'a>> {
        let ctx = code.ctx();
        let basis = code.gf2_basis();
        let mut found = Vec::new();
        for a in ctx.elements() {
            for b in ctx.elements() {
                let phi = code.codeword(a, b);
                let ok = basis.iter().all(|g| {
                    let h = match side {
                        Side::Right => g.compose(&phi).unwrap(),
                        Side::Left => phi.compose(g).unwrap(),
                    };
                    code.contains(&h)
                });
                if ok {
                    found.push(phi);
                }
            }
        }
        found
    }

    #[test]
    fn idealizer_solve_matches_scan_at_q2() {
        let f = FieldCtx::new(1).unwrap();
        let mut polys = vec![
            LinPoly::monomial(&f, 1, 1, Felt::ONE).unwrap(),
            LinPoly::new(&f, 1, [Felt::ONE; N]).unwrap(),
        ];
        for c in [3, 17, 42] {
            polys.push(LinPoly::trinomial(&f, Felt::from_bits(c), 1).unwrap());
        }
        for p in polys {
            for span in [Span::Left, Span::Right] {
                let code = RMCode::with_span(p, span).unwrap();
                for side in [Side::Left, Side::Right] {
                    let solved = code.idealizer(side);
                    let scanned = idealizer_by_scan(&code, side);
                    assert_eq!(solved.order(), scanned.len() as u64);
                    assert!(scanned.iter().all(|phi| solved.contains(phi)));
                }
            }
        }
    }

    #[test]
    fn adjoint_code_basics() {
        let f = FieldCtx::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let c = f.random_nonzero(&mut rng);
        let code = build_code(&f, c, 1).unwrap();
        let adj = code.adjoint_code();
        assert!(adj.adjoint_code().same_codewords(&code));
        assert_eq!(adj.min_distance(), code.min_distance());
        // f̂_{c,1} = c^q X^q + X^(q^3) + X^(q^5)
        let expected = [Felt::ZERO, f.frobenius(c, 1), Felt::ZERO, Felt::ONE, Felt::ZERO, Felt::ONE];
        assert_eq!(*adj.generator().coeffs(), expected);
    }

    #[test]
    fn equivalence_rejects_bad_steps() {
        let f = FieldCtx::new(1).unwrap();
        assert!(codes_equivalent(&f, Felt::ONE, 2, Felt::ONE, 1).is_err());
        assert!(codes_equivalent(&f, Felt::ZERO, 1, Felt::ONE, 1).is_err());
    }

    #[test]
    fn opposite_step_determinant() {
        let f = FieldCtx::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for s in [1i64, 5] {
            for _ in 0..100 {
                let c1r = f.random(&mut rng);
                let c2 = f.random(&mut rng);
                let m = [
                    [f.frobenius(c2, s), Felt::ONE, c1r],
                    [Felt::ONE, f.frobenius(c2, 3 * s), c1r],
                    [Felt::ONE, Felt::ONE, f.mul(c1r, f.frobenius(c2, 5 * s))],
                ];
                let expected = f.mul(c1r, f.frobenius(norm_plus_trace(&f, c2), s));
                assert_eq!(crate::matrix::det(&f, m), expected);
            }
        }
    }

    #[test]
    fn bounds() {
        let (a, b) = class_count_bounds(64, 2);
        assert_eq!(a, Ratio::new(64, 12));
        assert_eq!(b, Ratio::new(64, 25));
        let (a, b) = class_count_bounds(0, 3);
        assert_eq!((a, b), (Ratio::from_integer(0), Ratio::from_integer(0)));
    }

    #[test]
    fn admissible_codes_at_q4() {
        let f = FieldCtx::new(2).unwrap();
        let set = family::frak_c(&f);
        let c = set[0];
        let code = build_code(&f, c, 1).unwrap();
        assert_eq!(code.min_distance(), 5);
        assert!(code.is_mrd());
        let right = code.right_idealizer();
        assert_eq!(right.order(), 16);
        assert!(right.is_subfield_scalars(2));
        assert_eq!(code.left_idealizer().order(), 4096);
        // the adjoint code is not the left span of X and the adjoint generator
        let left_span = RMCode::new(*code.adjoint_code().generator()).unwrap();
        assert!(!left_span.same_codewords(&code.adjoint_code()));
    }

    #[test]
    fn equivalence_witnesses_at_q4() {
        let f = FieldCtx::new(2).unwrap();
        let set = family::frak_c(&f);
        for &c in set.iter().take(6) {
            for s in [1i64, 5] {
                let d = codes_equivalent(&f, c, s, f.frobenius(c, 1), s).unwrap();
                assert!(d.hypotheses_hold);
                let w = d.witness.unwrap();
                assert_eq!(w.rho, 2);
                assert!(w.validates(&f, c, s, f.frobenius(c, 1), s).unwrap());
                let image = opposite_step_image(&f, c, 6 - s).unwrap();
                let w = codes_equivalent(&f, image, 6 - s, c, s).unwrap().witness;
                assert!(matches!(w, Some(EquivWitness { rho: 0, branch: EquivBranch::OppositeStep { .. } })));
            }
        }
    }

    #[test]
    fn single_step_partition_is_the_automorphism_orbits() {
        let f = FieldCtx::new(2).unwrap();
        let set = family::frak_c(&f);
        let p = partition_steps(&f, &set, &[1]).unwrap();
        let mut orbits: Vec<Vec<u32>> = set
            .iter()
            .map(|&c| {
                let mut o: Vec<u32> = (0..f.degree()).map(|k| f.automorphism(c, k).bits()).collect();
                o.sort_unstable();
                o.dedup();
                o
            })
            .collect();
        orbits.sort();
        orbits.dedup();
        assert_eq!(p.classes.len(), orbits.len());
        assert!(p.classes.iter().flatten().all(|&(_, s)| s == 1));
        assert_eq!(p.images_outside, 0);
        assert!(partition_steps(&f, &set, &[3]).is_err());
    }

    #[test]
    fn full_partition_at_q4() {
        let f = FieldCtx::new(2).unwrap();
        let set = family::frak_c(&f);
        let p = partition(&f, &set).unwrap();
        assert_eq!(p.classes.iter().map(Vec::len).sum::<usize>(), 2 * set.len());
        assert_eq!(p.edges.len(), 2 * set.len() - p.classes.len());
        for &((c1, s), (c2, t), w) in &p.edges {
            assert!(w.validates(&f, c1, s as i64, c2, t as i64).unwrap());
        }
        let (stated, conservative) = class_count_bounds(set.len() as u64, 2);
        assert!(Ratio::from_integer(p.classes.len() as u64) >= stated);
        assert!(Ratio::from_integer(p.classes.len() as u64) >= conservative);
    }
}
