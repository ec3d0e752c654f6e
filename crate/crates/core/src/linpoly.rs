//! σ-linearized polynomials over GF(q^6), σ = x -> x^(q^s) with gcd(s, 6) = 1.
//!
//! A [`LinPoly`] stores the six coefficients a_0..a_5 of sum a_i X^(σ^i). The ring
//! structure is composition modulo X^(q^6) - X, which is exactly the algebra of
//! GF(q)-linear endomorphisms of GF(q^6).

use std::fmt;

use crate::error::{param, Error, Result};
use crate::field::{Felt, FieldCtx, EXT_DEGREE};
use crate::gf2::{self, Echelon};
use crate::matrix;

const N: usize = EXT_DEGREE;

#[derive(Clone, Copy)]
pub struct LinPoly<'a> {
    ctx: &'a FieldCtx,
    step: u8,
    coeffs: [Felt; N],
}

impl PartialEq for LinPoly<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ctx, other.ctx) && self.step == other.step && self.coeffs == other.coeffs
    }
}

impl Eq for LinPoly<'_> {}

impl fmt::Debug for LinPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinPoly({self})")
    }
}

impl fmt::Display for LinPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={};", self.step)?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "a{i}={}", self.ctx.to_hex(*a))?;
        }
        Ok(())
    }
}

fn normalize_step(step: i64) -> Result<u8> {
    let s = step.rem_euclid(N as i64) as u8;
    if s == 1 || s == 5 {
        Ok(s)
    } else {
        Err(param(format!("step {step} is not coprime to 6")))
    }
}

impl<'a> LinPoly<'a> {
    pub fn new(ctx: &'a FieldCtx, step: i64, coeffs: [Felt; N]) -> Result<LinPoly<'a>> {
        Ok(LinPoly { ctx, step: normalize_step(step)?, coeffs })
    }

    pub fn zero(ctx: &'a FieldCtx, step: i64) -> Result<LinPoly<'a>> {
        LinPoly::new(ctx, step, [Felt::ZERO; N])
    }

    /// a X^(σ^index).
    pub fn monomial(ctx: &'a FieldCtx, step: i64, index: usize, a: Felt) -> Result<LinPoly<'a>> {
        let mut coeffs = [Felt::ZERO; N];
        coeffs[index % N] = a;
        LinPoly::new(ctx, step, coeffs)
    }

    /// The scalar map x -> a x.
    pub fn scalar(ctx: &'a FieldCtx, step: i64, a: Felt) -> Result<LinPoly<'a>> {
        LinPoly::monomial(ctx, step, 0, a)
    }

    pub fn identity(ctx: &'a FieldCtx, step: i64) -> Result<LinPoly<'a>> {
        LinPoly::scalar(ctx, step, Felt::ONE)
    }

    /// f_{c,s}(X) = X^(q^s) + X^(q^3s) + c X^(q^5s), written with step s.
    pub fn trinomial(ctx: &'a FieldCtx, c: Felt, s: i64) -> Result<LinPoly<'a>> {
        let mut coeffs = [Felt::ZERO; N];
        coeffs[1] = Felt::ONE;
        coeffs[3] = Felt::ONE;
        coeffs[5] = c;
        LinPoly::new(ctx, s, coeffs)
    }

    /// sum a_k X^(q^k) with q-power exponents, re-expressed with the given step.
    pub fn from_q_coeffs(ctx: &'a FieldCtx, step: i64, q_coeffs: [Felt; N]) -> Result<LinPoly<'a>> {
        LinPoly::new(ctx, 1, q_coeffs)?.with_step(step)
    }

    #[inline]
    pub fn ctx(&self) -> &'a FieldCtx {
        self.ctx
    }

    #[inline]
    pub fn step(&self) -> u8 {
        self.step
    }

    #[inline]
    pub fn coeffs(&self) -> &[Felt; N] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> Felt {
        self.coeffs[i % N]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_zero())
    }

    /// σ-degree, `None` for the zero polynomial.
    pub fn sigma_degree(&self) -> Option<usize> {
        (0..N).rev().find(|&i| !self.coeffs[i].is_zero())
    }

    /// Exponent k such that X^(σ^i) = X^(q^k).
    #[inline]
    pub fn q_exponent(&self, i: usize) -> usize {
        self.step as usize * i % N
    }

    /// Coefficients indexed by q-power exponent.
    pub fn q_coeffs(&self) -> [Felt; N] {
        let mut out = [Felt::ZERO; N];
        for i in 0..N {
            out[self.q_exponent(i)] = self.coeffs[i];
        }
        out
    }

    /// Same map written as a polynomial in X^(q^step).
    pub fn with_step(&self, step: i64) -> Result<LinPoly<'a>> {
        let step = normalize_step(step)?;
        let q = self.q_coeffs();
        // step is 1 or 5, each its own inverse mod 6
        let coeffs = std::array::from_fn(|i| q[step as usize * i % N]);
        Ok(LinPoly { ctx: self.ctx, step, coeffs })
    }

    fn check_compatible(&self, other: &LinPoly<'_>) -> Result<()> {
        if !std::ptr::eq(self.ctx, other.ctx) {
            return Err(param("linearized polynomials live over different field contexts"));
        }
        if self.step != other.step {
            return Err(param(format!(
                "mismatched steps {} and {}",
                self.step, other.step
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn eval(&self, x: Felt) -> Felt {
        let mut acc = Felt::ZERO;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let xi = self.ctx.frobenius(x, self.q_exponent(i) as i64);
            acc += if *a == Felt::ONE { xi } else { self.ctx.mul(*a, xi) };
        }
        acc
    }

    pub fn add(&self, other: &LinPoly<'a>) -> Result<LinPoly<'a>> {
        self.check_compatible(other)?;
        Ok(LinPoly {
            coeffs: std::array::from_fn(|i| self.coeffs[i] + other.coeffs[i]),
            ..*self
        })
    }

    /// Left scalar multiple a f(X).
    pub fn scale(&self, a: Felt) -> LinPoly<'a> {
        LinPoly {
            coeffs: self.coeffs.map(|c| self.ctx.mul(a, c)),
            ..*self
        }
    }

    /// f(g(X)): h_k = sum_{i+j = k mod 6} a_i b_j^(σ^i).
    pub fn compose(&self, g: &LinPoly<'a>) -> Result<LinPoly<'a>> {
        self.check_compatible(g)?;
        let mut h = [Felt::ZERO; N];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let e = self.q_exponent(i) as i64;
            for (j, b) in g.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                h[(i + j) % N] += self.ctx.mul(*a, self.ctx.frobenius(*b, e));
            }
        }
        Ok(LinPoly { coeffs: h, ..*self })
    }

    /// Adjoint with respect to the trace form: coefficient i is a_{6-i}^(σ^i).
    pub fn adjoint(&self) -> LinPoly<'a> {
        let coeffs = std::array::from_fn(|i| {
            self.ctx
                .frobenius(self.coeffs[(N - i) % N], self.q_exponent(i) as i64)
        });
        LinPoly { coeffs, ..*self }
    }

    /// f^ρ: every coefficient moved by x -> x^(2^rho).
    pub fn apply_automorphism(&self, rho: u32) -> LinPoly<'a> {
        LinPoly {
            coeffs: self.coeffs.map(|a| self.ctx.automorphism(a, rho)),
            ..*self
        }
    }

    /// Dickson matrix of f, or of m X + f(X) when `diagonal_shift` is given.
    pub fn dickson_matrix(&self, diagonal_shift: Option<Felt>) -> DicksonMat<'a> {
        let mut a = self.coeffs;
        if let Some(m) = diagonal_shift {
            a[0] += m;
        }
        let entries = std::array::from_fn(|i| {
            let e = self.q_exponent(i) as i64;
            std::array::from_fn(|j| self.ctx.frobenius(a[(j + N - i) % N], e))
        });
        DicksonMat { ctx: self.ctx, step: self.step, entries }
    }

    /// Rank over GF(q) of the map, via the Dickson matrix.
    pub fn rank(&self) -> usize {
        self.dickson_matrix(None).rank()
    }

    /// dim over GF(q) of the kernel.
    pub fn kernel_dim(&self) -> usize {
        N - self.rank()
    }

    pub fn is_bijective(&self) -> bool {
        self.rank() == N
    }

    /// Images of the GF(2) basis vectors 1, X, X^2, ...: the map as a GF(2) matrix.
    pub fn gf2_columns(&self) -> Vec<u32> {
        self.ctx.f2_basis().map(|b| self.eval(b).bits()).collect()
    }

    /// A GF(q)-basis of the kernel, computed from the GF(2) null space.
    ///
    /// The GF(2) kernel basis is put in reduced echelon form with rows sorted by
    /// pivot; a row is kept whenever it is outside the GF(q)-span of the rows kept
    /// so far. The output is therefore deterministic.
    pub fn kernel_basis(&self) -> Vec<Felt> {
        let images: Vec<gf2::BitVec> = self.gf2_columns().into_iter().map(|c| vec![c as u64]).collect();
        let kernel_f2 = gf2::null_space(&images);
        let fq = self
            .ctx
            .subfield_basis(1)
            .expect("1 divides 6");
        let mut span = Echelon::new();
        let mut out = Vec::new();
        for v in kernel_f2 {
            let x = Felt::from_bits(v[0] as u32);
            if span.contains(&[x.bits() as u64]) {
                continue;
            }
            out.push(x);
            for &l in &fq {
                span.insert(&[self.ctx.mul(l, x).bits() as u64]);
            }
        }
        out
    }

    /// Parse the `s=<s>;a0=<hex>,...,a5=<hex>` text form.
    pub fn parse(ctx: &'a FieldCtx, text: &str) -> Result<LinPoly<'a>> {
        let bad = || Error::Parse(format!("malformed linearized polynomial {text:?}"));
        let (s_part, rest) = text.trim().split_once(';').ok_or_else(bad)?;
        let step: i64 = s_part
            .trim()
            .strip_prefix("s=")
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        let mut coeffs = [Felt::ZERO; N];
        let mut seen = [false; N];
        for item in rest.split(',') {
            let (k, v) = item.trim().split_once('=').ok_or_else(bad)?;
            let idx: usize = k.strip_prefix('a').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if idx >= N || seen[idx] {
                return Err(bad());
            }
            seen[idx] = true;
            coeffs[idx] = ctx.parse_hex(v)?;
        }
        if !seen.iter().all(|s| *s) {
            return Err(bad());
        }
        LinPoly::new(ctx, step, coeffs)
    }
}

/// The 6x6 σ-twisted circulant: entry (i, j) is a_{j-i mod 6}^(σ^i).
#[derive(Clone, Copy, Debug)]
pub struct DicksonMat<'a> {
    ctx: &'a FieldCtx,
    step: u8,
    entries: [[Felt; N]; N],
}

impl<'a> DicksonMat<'a> {
    pub fn entries(&self) -> &[[Felt; N]; N] {
        &self.entries
    }

    pub fn step(&self) -> u8 {
        self.step
    }

    pub fn rank(&self) -> usize {
        matrix::rank(self.ctx, self.entries)
    }

    pub fn rank_at_least(&self, k: usize) -> bool {
        matrix::rank_at_least(self.ctx, self.entries, k)
    }

    /// Dickson matrix of m X + f, given that of f.
    pub fn shifted(&self, m: Felt) -> DicksonMat<'a> {
        let mut out = *self;
        for i in 0..N {
            out.entries[i][i] += self.ctx.frobenius(m, (self.step as usize * i % N) as i64);
        }
        out
    }

    pub fn det(&self) -> Felt {
        matrix::det(self.ctx, self.entries)
    }

    /// Row i equals row 0 shifted right by i with entries raised to σ^i.
    pub fn is_twisted_circulant(&self) -> bool {
        (0..N).all(|i| {
            let e = (self.step as usize * i % N) as i64;
            (0..N).all(|j| self.entries[i][j] == self.ctx.frobenius(self.entries[0][(j + N - i) % N], e))
        })
    }
}
