//! The admissible coefficient set for f_{c,1} = X^q + X^(q^3) + c X^(q^5): the
//! polynomials F_1..F_5 and A_1..A_4, enumeration, the rational expressions for
//! c^(q^4) and c^(q^5), the three-factor splitting of the trivariate resultant
//! factor, and the per-element side conditions.

pub mod tables;

use std::collections::BTreeMap;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{param, Error, Result};
use crate::field::{Felt, FieldCtx, EXT_DEGREE};
use crate::linpoly::LinPoly;
use crate::scatter;
use tables::Exponents;

const N: usize = EXT_DEGREE;
const MAX_DIGIT: usize = 4;

/// (c^(q^j))^k for j < 6 and k <= 4.
struct DigitPowers {
    table: [[Felt; MAX_DIGIT + 1]; N],
}

impl DigitPowers {
    fn new(ctx: &FieldCtx, c: Felt) -> DigitPowers {
        let conj = ctx.conjugates(c);
        let table = std::array::from_fn(|j| {
            let mut row = [Felt::ONE; MAX_DIGIT + 1];
            for k in 1..=MAX_DIGIT {
                row[k] = ctx.mul(row[k - 1], conj[j]);
            }
            row
        });
        DigitPowers { table }
    }

    fn monomial(&self, ctx: &FieldCtx, exps: &Exponents) -> Felt {
        let mut acc = Felt::ONE;
        for (j, &k) in exps.iter().enumerate() {
            if k != 0 {
                acc = ctx.mul(acc, self.table[j][k as usize]);
            }
        }
        acc
    }

    fn sum(&self, ctx: &FieldCtx, monomials: &[Exponents]) -> Felt {
        monomials.iter().map(|m| self.monomial(ctx, m)).sum()
    }
}

/// Sum of the listed monomials at c.
pub fn eval_monomials(ctx: &FieldCtx, monomials: &[Exponents], c: Felt) -> Felt {
    DigitPowers::new(ctx, c).sum(ctx, monomials)
}

fn f_table(index: u8) -> Result<&'static [Exponents]> {
    Ok(match index {
        1 => tables::F1,
        2 => tables::F2,
        3 => tables::F3,
        4 => tables::F4,
        5 => tables::F5,
        _ => return Err(param(format!("F_{index} does not exist; expected 1..=5"))),
    })
}

fn a_table(index: u8) -> Result<&'static [Exponents]> {
    Ok(match index {
        1 => tables::A1,
        2 => tables::A2,
        3 => tables::A3,
        4 => tables::A4,
        _ => return Err(param(format!("A_{index} does not exist; expected 1..=4"))),
    })
}

/// F_index(c) for index in 1..=5.
pub fn eval_f(ctx: &FieldCtx, index: u8, c: Felt) -> Result<Felt> {
    Ok(eval_monomials(ctx, f_table(index)?, c))
}

/// A_index(c) for index in 1..=4.
pub fn eval_a(ctx: &FieldCtx, index: u8, c: Felt) -> Result<Felt> {
    Ok(eval_monomials(ctx, a_table(index)?, c))
}

fn all_f(ctx: &FieldCtx, powers: &DigitPowers) -> [Felt; 5] {
    [tables::F1, tables::F2, tables::F3, tables::F4, tables::F5].map(|t| powers.sum(ctx, t))
}

/// Side conditions that every admissible c must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaChecks {
    pub not_in_fq2: bool,
    pub not_in_fq3: bool,
    /// N_{q^6/q^2}(c) != 1
    pub norm_ne_1: bool,
    /// N_{q^6/q^2}(c) + Tr_{q^6/q^2}(c) != 0
    pub norm_plus_trace_ne_0: bool,
}

impl LemmaChecks {
    pub fn all(&self) -> bool {
        self.not_in_fq2 && self.not_in_fq3 && self.norm_ne_1 && self.norm_plus_trace_ne_0
    }
}

pub fn lemma_checks(ctx: &FieldCtx, c: Felt) -> LemmaChecks {
    let norm = ctx.norm(c, 2).expect("2 divides 6");
    let trace = ctx.trace(c, 2).expect("2 divides 6");
    LemmaChecks {
        not_in_fq2: !ctx.in_subfield(c, 2),
        not_in_fq3: !ctx.in_subfield(c, 3),
        norm_ne_1: norm != Felt::ONE,
        norm_plus_trace_ne_0: !(norm + trace).is_zero(),
    }
}

/// One point of F_1 = F_2 = 0 with everything the campaign reports about it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrakCRecord {
    pub c: Felt,
    /// F_1(c), ..., F_5(c)
    pub f_values: [Felt; 5],
    pub in_frak_c: bool,
    pub lemmas: LemmaChecks,
    /// Fiber verdict for f_{c,1}; `None` when not computed.
    pub scattered_s1: Option<bool>,
}

impl FrakCRecord {
    pub fn new(ctx: &FieldCtx, c: Felt) -> FrakCRecord {
        let f_values = all_f(ctx, &DigitPowers::new(ctx, c));
        let lemmas = lemma_checks(ctx, c);
        let in_frak_c = f_values[0].is_zero()
            && f_values[1].is_zero()
            && f_values[2..].iter().all(|v| !v.is_zero())
            && lemmas.not_in_fq2;
        FrakCRecord { c, f_values, in_frak_c, lemmas, scattered_s1: None }
    }

    /// F_1 = F_2 = 0 and F_3 != 0 but F_4 F_5 = 0: outside the set only through
    /// the two extra exclusions.
    pub fn excluded_by_f4_f5(&self) -> bool {
        self.f_values[0].is_zero()
            && self.f_values[1].is_zero()
            && !self.f_values[2].is_zero()
            && self.lemmas.not_in_fq2
            && (self.f_values[3].is_zero() || self.f_values[4].is_zero())
    }
}

/// Which records get a scatteredness verdict during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScatterPolicy {
    Skip,
    All,
    /// A seeded uniform sample of at most `limit` records.
    Sample { limit: usize, seed: u64 },
}

/// Whether c is in the admissible set.
pub fn in_frak_c(ctx: &FieldCtx, c: Felt) -> bool {
    FrakCRecord::new(ctx, c).in_frak_c
}

/// Every c with F_1(c) = F_2(c) = 0, sorted by value, flagged for membership.
pub fn enumerate_frak_c(ctx: &FieldCtx, policy: ScatterPolicy) -> Vec<FrakCRecord> {
    if ctx.e() > 4 {
        log::warn!(
            "exhaustive enumeration over {} elements is far beyond desk scale",
            ctx.order()
        );
    }
    let mut records: Vec<FrakCRecord> = (0..ctx.order() as u32)
        .into_par_iter()
        .with_min_len(4096)
        .filter_map(|bits| {
            let c = Felt::from_bits(bits);
            let powers = DigitPowers::new(ctx, c);
            if !powers.sum(ctx, tables::F1).is_zero() || !powers.sum(ctx, tables::F2).is_zero() {
                return None;
            }
            Some(FrakCRecord::new(ctx, c))
        })
        .collect();
    let chosen: Vec<usize> = match policy {
        ScatterPolicy::Skip => Vec::new(),
        ScatterPolicy::All => (0..records.len()).collect(),
        ScatterPolicy::Sample { limit, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = index::sample(&mut rng, records.len(), limit.min(records.len())).into_vec();
            picked.sort_unstable();
            picked
        }
    };
    for i in chosen {
        let f = LinPoly::trinomial(ctx, records[i].c, 1).expect("step 1 is valid");
        records[i].scattered_s1 = Some(scatter::is_scattered_fibers(&f));
    }
    records
}

/// The admissible set itself, sorted.
pub fn frak_c(ctx: &FieldCtx) -> Vec<Felt> {
    enumerate_frak_c(ctx, ScatterPolicy::Skip)
        .into_iter()
        .filter(|r| r.in_frak_c)
        .map(|r| r.c)
        .collect()
}

fn nonzero(value: Felt, what: &str) -> Result<Felt> {
    if value.is_zero() {
        Err(Error::DegenerateInput(format!("{what} vanishes")))
    } else {
        Ok(value)
    }
}

/// (φ(c), ψ(c)): the rational expressions that equal c^(q^4) and c^(q^5) when
/// F_1(c) = 0 and c lies outside F_{q^2}.
///
/// The F_{q^2} exclusion is enforced up front; a vanishing denominator for any
/// other input is reported the same way.
pub fn phi_identities(ctx: &FieldCtx, c: Felt) -> Result<(Felt, Felt)> {
    if ctx.in_subfield(c, 2) {
        return Err(Error::DegenerateInput(format!(
            "{} lies in F_(q^2)",
            ctx.to_hex(c)
        )));
    }
    let p = DigitPowers::new(ctx, c);
    let [c0, c1, c2, c3, _, _] = ctx.conjugates(c);
    let one = Felt::ONE;

    let num = p.sum(ctx, tables::PHI_NUMERATOR);
    let c3_c1 = ctx.mul(c3, c1);
    let den = ctx.mul(ctx.mul(ctx.mul(c3, c2), c0), c3_c1 + one);
    let phi = ctx.div(num, nonzero(den, "denominator of φ")?).expect("nonzero");

    let c2_c1 = ctx.mul(c2, c1);
    let c3_c2 = ctx.mul(c3, c2);
    let num2 = ctx.mul(phi, c2_c1)
        + c1
        + ctx.mul(ctx.square(phi), c3_c2)
        + ctx.mul(phi, c3_c2)
        + phi
        + one;
    let den2 = ctx.mul(ctx.mul(phi, c3_c1), ctx.mul(phi, c2) + one);
    let psi = ctx.div(num2, nonzero(den2, "denominator of the c^(q^5) expression")?).expect("nonzero");
    Ok((phi, psi))
}

/// Polynomial in X, Y, Z over F_{q^6}, keyed by exponent triple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrivariatePoly {
    terms: BTreeMap<[u8; 3], Felt>,
}

impl TrivariatePoly {
    pub fn from_terms(terms: impl IntoIterator<Item = ([u8; 3], Felt)>) -> TrivariatePoly {
        let mut p = TrivariatePoly::default();
        for (exp, coeff) in terms {
            p.add_term(exp, coeff);
        }
        p
    }

    fn add_term(&mut self, exp: [u8; 3], coeff: Felt) {
        let slot = self.terms.entry(exp).or_insert(Felt::ZERO);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: [u8; 3]) -> Felt {
        self.terms.get(&exp).copied().unwrap_or(Felt::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = ([u8; 3], Felt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &TrivariatePoly) -> TrivariatePoly {
        let mut out = TrivariatePoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ctx.mul(*ca, *cb));
            }
        }
        out
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Felt, y: Felt, z: Felt) -> Felt {
        self.terms
            .iter()
            .map(|(e, coeff)| {
                let m = ctx.mul(
                    ctx.mul(ctx.pow(x, e[0] as u64), ctx.pow(y, e[1] as u64)),
                    ctx.pow(z, e[2] as u64),
                );
                ctx.mul(*coeff, m)
            })
            .sum()
    }
}

/// α, β, γ of the factorization together with A_1..A_4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorData {
    pub alpha: Felt,
    pub beta: Felt,
    pub gamma: Felt,
    pub a1: Felt,
    pub a2: Felt,
    pub a3: Felt,
    pub a4: Felt,
}

impl FactorData {
    /// α = F_3(c)^(q^3), β = A_3(c)/α^q, γ = A_4(c)/α. Needs only F_3(c) != 0.
    pub fn compute(ctx: &FieldCtx, c: Felt) -> Result<FactorData> {
        let p = DigitPowers::new(ctx, c);
        let f3 = nonzero(p.sum(ctx, tables::F3), "F_3(c)")?;
        let alpha = ctx.frobenius(f3, 3);
        let alpha_q = ctx.frobenius(alpha, 1);
        let [a1, a2, a3, a4] = [tables::A1, tables::A2, tables::A3, tables::A4].map(|t| p.sum(ctx, t));
        Ok(FactorData {
            alpha,
            beta: ctx.div(a3, alpha_q).expect("nonzero"),
            gamma: ctx.div(a4, alpha).expect("nonzero"),
            a1,
            a2,
            a3,
            a4,
        })
    }

    /// The seven-term trivariate factor of the resultant.
    pub fn resultant_factor(&self, ctx: &FieldCtx) -> TrivariatePoly {
        let alpha_q = ctx.frobenius(self.alpha, 1);
        TrivariatePoly::from_terms([
            ([0, 0, 1], self.a1),
            ([1, 0, 0], ctx.frobenius(self.a1, 1)),
            ([1, 1, 1], self.a2),
            ([0, 1, 2], self.a3),
            ([1, 2, 2], alpha_q),
            ([2, 1, 0], self.a4),
            ([2, 2, 1], self.alpha),
        ])
    }

    /// (α X + α^q Z)(X Y + β)(Y Z + γ).
    pub fn product(&self, ctx: &FieldCtx) -> TrivariatePoly {
        let linear = TrivariatePoly::from_terms([([1, 0, 0], self.alpha), ([0, 0, 1], ctx.frobenius(self.alpha, 1))]);
        let xy = TrivariatePoly::from_terms([([1, 1, 0], Felt::ONE), ([0, 0, 0], self.beta)]);
        let yz = TrivariatePoly::from_terms([([0, 1, 1], Felt::ONE), ([0, 0, 0], self.gamma)]);
        linear.mul(ctx, &xy).mul(ctx, &yz)
    }

    pub fn factorization_holds(&self, ctx: &FieldCtx) -> bool {
        self.resultant_factor(ctx) == self.product(ctx)
    }
}

/// Factor data under the full hypotheses: c outside F_{q^2}, F_1(c) = F_2(c) = 0
/// and F_3(c) != 0.
pub fn factor_data(ctx: &FieldCtx, c: Felt) -> Result<FactorData> {
    let p = DigitPowers::new(ctx, c);
    if ctx.in_subfield(c, 2) {
        return Err(param(format!("{} lies in F_(q^2)", ctx.to_hex(c))));
    }
    if !p.sum(ctx, tables::F1).is_zero() || !p.sum(ctx, tables::F2).is_zero() {
        return Err(param(format!("F_1 or F_2 does not vanish at {}", ctx.to_hex(c))));
    }
    FactorData::compute(ctx, c).map_err(|_| param(format!("F_3 vanishes at {}", ctx.to_hex(c))))
}

/// Whether the resultant factor splits into the three stated factors at c.
pub fn verify_factorization(ctx: &FieldCtx, c: Felt) -> Result<bool> {
    Ok(factor_data(ctx, c)?.factorization_holds(ctx))
}
