//! The field GF(q^6), q = 2^e, realised as GF(2)[X]/(P) with deg P = 6e.
//!
//! Subfields GF(q^l) for l | 6 are never built separately; they are the fixed
//! points of x -> x^(q^l). Every q-power Frobenius is stored as a GF(2)-linear map
//! with byte-sliced lookup tables, so applying it costs a handful of loads.
//!
//! Elements are bit vectors: bit i is the coefficient of X^i. The text form is
//! fixed-width lowercase hex of that vector.

use std::fmt;
use std::ops::{Add, AddAssign, Sub};

use rand::Rng;

use crate::error::{param, Error, Result};

/// Degree of the extension GF(q^6) / GF(q).
pub const EXT_DEGREE: usize = 6;

/// Largest supported `e`; 6e bits must fit a `u32` with room for reduction tables.
pub const MAX_E: u32 = 5;

/// An element of GF(q^6) as a GF(2) coefficient vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Felt(u32);

impl Felt {
    pub const ZERO: Felt = Felt(0);
    pub const ONE: Felt = Felt(1);

    #[inline]
    pub const fn from_bits(bits: u32) -> Felt {
        Felt(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Felt({:#x})", self.0)
    }
}

impl Add for Felt {
    type Output = Felt;
    #[inline]
    fn add(self, rhs: Felt) -> Felt {
        Felt(self.0 ^ rhs.0)
    }
}

impl AddAssign for Felt {
    #[inline]
    fn add_assign(&mut self, rhs: Felt) {
        self.0 ^= rhs.0;
    }
}

impl Sub for Felt {
    type Output = Felt;
    #[inline]
    fn sub(self, rhs: Felt) -> Felt {
        Felt(self.0 ^ rhs.0)
    }
}

impl std::iter::Sum for Felt {
    fn sum<I: Iterator<Item = Felt>>(iter: I) -> Felt {
        iter.fold(Felt::ZERO, |a, b| a + b)
    }
}

/// A GF(2)-linear map on `n`-bit vectors.
#[derive(Clone, Debug)]
pub struct Gf2Map {
    columns: Vec<u32>,
    lut: Vec<[u32; 256]>,
}

impl Gf2Map {
    fn from_columns(columns: Vec<u32>) -> Gf2Map {
        let chunks = columns.len().div_ceil(8);
        let mut lut = vec![[0u32; 256]; chunks];
        for (chunk, table) in lut.iter_mut().enumerate() {
            for byte in 1..256usize {
                let mut acc = 0;
                for bit in 0..8 {
                    let idx = chunk * 8 + bit;
                    if byte >> bit & 1 == 1 && idx < columns.len() {
                        acc ^= columns[idx];
                    }
                }
                table[byte] = acc;
            }
        }
        Gf2Map { columns, lut }
    }

    /// Image of the i-th basis vector, i.e. the i-th matrix column.
    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        let mut acc = 0;
        let mut x = x;
        for table in &self.lut {
            acc ^= table[(x & 0xff) as usize];
            x >>= 8;
        }
        acc
    }

    /// Apply by walking the columns, without the lookup tables.
    pub fn apply_by_columns(&self, x: u32) -> u32 {
        self.columns
            .iter()
            .enumerate()
            .filter(|(i, _)| x >> i & 1 == 1)
            .fold(0, |acc, (_, c)| acc ^ c)
    }
}

/// Context for GF(q^6) with q = 2^e. Immutable once built.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    e: u32,
    degree: u32,
    modulus: u64,
    mask: u64,
    reduce: [[u32; 256]; 4],
    frobenius: Vec<Gf2Map>,
    squaring: Gf2Map,
    generator: Felt,
    hw_clmul: bool,
}

/// Build the field for `e`, with the default modulus unless one is supplied.
pub fn make_field(e: u32, modulus_override: Option<u64>) -> Result<FieldCtx> {
    match modulus_override {
        Some(m) => FieldCtx::with_modulus(e, m),
        None => FieldCtx::new(e),
    }
}

impl FieldCtx {
    /// GF(2^(6e)) with the smallest irreducible modulus of degree 6e, ordering
    /// polynomials by their integer bit encoding.
    pub fn new(e: u32) -> Result<FieldCtx> {
        check_e(e)?;
        let degree = 6 * e;
        let modulus = (1u64 << degree..1u64 << (degree + 1))
            .find(|&m| m & 1 == 1 && is_irreducible(m))
            .expect("irreducible polynomials exist in every degree");
        Ok(FieldCtx::build(e, modulus))
    }

    pub fn with_modulus(e: u32, modulus: u64) -> Result<FieldCtx> {
        check_e(e)?;
        let degree = 6 * e;
        if poly_degree(modulus) != Some(degree) {
            return Err(Error::Modulus(format!(
                "modulus {modulus:#x} does not have degree {degree}"
            )));
        }
        if !is_irreducible(modulus) {
            return Err(Error::Modulus(format!("modulus {modulus:#x} is reducible over GF(2)")));
        }
        Ok(FieldCtx::build(e, modulus))
    }

    fn build(e: u32, modulus: u64) -> FieldCtx {
        let degree = 6 * e;
        let mut reduce = [[0u32; 256]; 4];
        for (k, table) in reduce.iter_mut().enumerate() {
            for (b, slot) in table.iter_mut().enumerate() {
                let shift = degree as usize + 8 * k;
                if shift + 8 <= 64 {
                    *slot = poly_mod((b as u64) << shift, modulus) as u32;
                }
            }
        }
        let identity = Gf2Map::from_columns((0..degree).map(|i| 1u32 << i).collect());
        let mut ctx = FieldCtx {
            e,
            degree,
            modulus,
            mask: (1u64 << degree) - 1,
            reduce,
            frobenius: vec![identity.clone(); EXT_DEGREE],
            squaring: identity,
            generator: Felt::ONE,
            hw_clmul: hw_clmul_available(),
        };

        let square_cols: Vec<u32> = (0..degree)
            .map(|i| ctx.mul_generic(Felt(1 << i), Felt(1 << i)).0)
            .collect();
        ctx.squaring = Gf2Map::from_columns(square_cols);

        let q = ctx.q();
        let frob1: Vec<u32> = (0..degree).map(|i| ctx.pow(Felt(1 << i), q).0).collect();
        let mut current = frob1.clone();
        let frob1_map = Gf2Map::from_columns(frob1);
        for j in 1..EXT_DEGREE {
            ctx.frobenius[j] = Gf2Map::from_columns(current.clone());
            current = current.iter().map(|&c| frob1_map.apply(c)).collect();
        }

        ctx.generator = ctx.find_generator();
        ctx
    }

    fn find_generator(&self) -> Felt {
        let group_order = self.order() - 1;
        let primes = prime_factors(group_order);
        (2..self.order() as u32)
            .map(Felt)
            .find(|&g| primes.iter().all(|&p| self.pow(g, group_order / p) != Felt::ONE))
            .unwrap_or(Felt::ONE)
    }

    #[inline]
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Number of GF(2) coordinates, 6e.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn q(&self) -> u64 {
        1u64 << self.e
    }

    /// Field size 2^(6e).
    #[inline]
    pub fn order(&self) -> u64 {
        1u64 << self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// A fixed primitive element (the smallest one in the bit encoding).
    pub fn generator(&self) -> Felt {
        self.generator
    }

    /// Matrix of x -> x^(q^j), j taken mod 6.
    pub fn frobenius_map(&self, j: i64) -> &Gf2Map {
        &self.frobenius[j.rem_euclid(EXT_DEGREE as i64) as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Felt> + Clone {
        (0..self.order() as u32).map(Felt)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Felt> + Clone {
        (1..self.order() as u32).map(Felt)
    }

    /// GF(2)-basis 1, X, X^2, ...
    pub fn f2_basis(&self) -> impl Iterator<Item = Felt> {
        (0..self.degree).map(|i| Felt(1 << i))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Felt {
        Felt(rng.gen_range(0..self.order()) as u32)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Felt {
        Felt(rng.gen_range(1..self.order()) as u32)
    }

    #[inline]
    fn clmul(&self, a: u32, b: u32) -> u64 {
        #[cfg(target_arch = "x86_64")]
        {
            if self.hw_clmul {
                // SAFETY: `hw_clmul` is only set after runtime detection of pclmulqdq.
                return unsafe { clmul_hw(a, b) };
            }
        }
        clmul_sw(a, b)
    }

    #[inline]
    fn reduce(&self, p: u64) -> u32 {
        let hi = p >> self.degree;
        let r = &self.reduce;
        ((p & self.mask) as u32)
            ^ r[0][(hi & 0xff) as usize]
            ^ r[1][(hi >> 8 & 0xff) as usize]
            ^ r[2][(hi >> 16 & 0xff) as usize]
            ^ r[3][(hi >> 24 & 0xff) as usize]
    }

    fn mul_generic(&self, a: Felt, b: Felt) -> Felt {
        Felt(self.reduce(clmul_sw(a.0, b.0)))
    }

    #[inline]
    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        Felt(self.reduce(self.clmul(a.0, b.0)))
    }

    #[inline]
    pub fn square(&self, a: Felt) -> Felt {
        Felt(self.squaring.apply(a.0))
    }

    pub fn pow(&self, a: Felt, mut k: u64) -> Felt {
        let mut base = a;
        let mut acc = Felt::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the norm to GF(q): a^-1 = a^(q+...+q^5) / N(a).
    pub fn inv(&self, a: Felt) -> Option<Felt> {
        if a.is_zero() {
            return None;
        }
        let mut r = self.frobenius(a, 1);
        for j in 2..EXT_DEGREE as i64 {
            r = self.mul(r, self.frobenius(a, j));
        }
        let norm = self.mul(a, r);
        let norm_inv = self.pow(norm, self.q() - 2);
        Some(self.mul(r, norm_inv))
    }

    /// `a / b`; `None` when `b` is zero.
    pub fn div(&self, a: Felt, b: Felt) -> Option<Felt> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// x^(q^j), j taken mod 6.
    #[inline]
    pub fn frobenius(&self, x: Felt, j: i64) -> Felt {
        let j = j.rem_euclid(EXT_DEGREE as i64) as usize;
        if j == 0 {
            x
        } else {
            Felt(self.frobenius[j].apply(x.0))
        }
    }

    /// The 6 conjugates x, x^q, ..., x^(q^5).
    #[inline]
    pub fn conjugates(&self, x: Felt) -> [Felt; 6] {
        std::array::from_fn(|j| self.frobenius(x, j as i64))
    }

    /// The field automorphism x -> x^(2^rho), rho taken mod 6e.
    pub fn automorphism(&self, x: Felt, rho: u32) -> Felt {
        let rho = rho % self.degree;
        let mut y = self.frobenius(x, (rho / self.e) as i64);
        for _ in 0..rho % self.e {
            y = self.square(y);
        }
        y
    }

    /// Inverse automorphism of [`FieldCtx::automorphism`] for the same `rho`.
    pub fn automorphism_inverse(&self, x: Felt, rho: u32) -> Felt {
        let rho = rho % self.degree;
        self.automorphism(x, (self.degree - rho) % self.degree)
    }

    /// N_{q^6/q^l}(x) as the product of the 6/l conjugates over GF(q^l).
    pub fn norm(&self, x: Felt, ell: u32) -> Result<Felt> {
        let steps = conjugate_count(ell)?;
        Ok((0..steps)
            .map(|i| self.frobenius(x, (ell * i) as i64))
            .fold(Felt::ONE, |acc, y| self.mul(acc, y)))
    }

    /// Tr_{q^6/q^l}(x).
    pub fn trace(&self, x: Felt, ell: u32) -> Result<Felt> {
        let steps = conjugate_count(ell)?;
        Ok((0..steps).map(|i| self.frobenius(x, (ell * i) as i64)).sum())
    }

    /// Whether x is fixed by x -> x^(q^l), i.e. x lies in GF(q^gcd(l,6)).
    #[inline]
    pub fn in_subfield(&self, x: Felt, ell: u32) -> bool {
        self.frobenius(x, ell as i64) == x
    }

    /// A GF(2)-basis of the subfield GF(q^l), l | 6.
    pub fn subfield_basis(&self, ell: u32) -> Result<Vec<Felt>> {
        conjugate_count(ell)?;
        let map = self.frobenius_map(ell as i64);
        let images: Vec<Vec<u64>> = (0..self.degree as usize)
            .map(|i| vec![(map.columns()[i] ^ (1 << i)) as u64])
            .collect();
        Ok(crate::gf2::null_space(&images)
            .into_iter()
            .map(|v| Felt(v[0] as u32))
            .collect())
    }

    /// Fixed-width lowercase hex.
    pub fn to_hex(&self, x: Felt) -> String {
        let width = (self.degree as usize).div_ceil(4);
        format!("{:0width$x}", x.0, width = width)
    }

    pub fn parse_hex(&self, s: &str) -> Result<Felt> {
        let t = s.trim();
        let t = t.strip_prefix("0x").unwrap_or(t);
        let v = u64::from_str_radix(t, 16)
            .map_err(|_| Error::Parse(format!("invalid hex field element {s:?}")))?;
        if v >= self.order() {
            return Err(Error::Parse(format!(
                "element {s:?} has more than {} bits",
                self.degree
            )));
        }
        Ok(Felt(v as u32))
    }
}

fn check_e(e: u32) -> Result<()> {
    if e == 0 {
        return Err(param("e must be at least 1"));
    }
    if e > MAX_E {
        return Err(param(format!("e = {e} exceeds the supported maximum {MAX_E}")));
    }
    Ok(())
}

fn conjugate_count(ell: u32) -> Result<u32> {
    match ell {
        1 | 2 | 3 | 6 => Ok(6 / ell),
        _ => Err(param(format!("{ell} does not divide 6"))),
    }
}

#[cfg(target_arch = "x86_64")]
fn hw_clmul_available() -> bool {
    std::arch::is_x86_feature_detected!("pclmulqdq")
}

#[cfg(not(target_arch = "x86_64"))]
fn hw_clmul_available() -> bool {
    false
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq")]
unsafe fn clmul_hw(a: u32, b: u32) -> u64 {
    use std::arch::x86_64::{_mm_clmulepi64_si128, _mm_cvtsi128_si64, _mm_cvtsi64_si128};
    let r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(a as i64), _mm_cvtsi64_si128(b as i64), 0);
    _mm_cvtsi128_si64(r) as u64
}

/// Carry-less product of two 32-bit words, 4 bits at a time.
#[inline]
fn clmul_sw(a: u32, b: u32) -> u64 {
    let b = b as u64;
    let mut table = [0u64; 16];
    for i in 1..16 {
        table[i] = if i & 1 == 1 { table[i - 1] ^ b } else { table[i / 2] << 1 };
    }
    let mut acc = 0u64;
    for nib in (0..8).rev() {
        acc = (acc << 4) ^ table[(a >> (4 * nib) & 0xf) as usize];
    }
    acc
}

// Polynomials over GF(2) packed in a u64, bit i = coefficient of X^i.

fn poly_degree(p: u64) -> Option<u32> {
    (p != 0).then(|| 63 - p.leading_zeros())
}

fn poly_mod(mut a: u64, m: u64) -> u64 {
    let dm = poly_degree(m).expect("nonzero modulus");
    while let Some(da) = poly_degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

fn poly_mulmod(a: u64, b: u64, m: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = poly_mod(a, m);
    let dm = poly_degree(m).expect("nonzero modulus");
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> dm & 1 == 1 {
            a ^= m;
        }
    }
    acc
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_mod(a, b);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test: X^(2^d) = X mod m, and gcd(X^(2^(d/p)) - X, m) = 1 for primes p | d.
pub fn is_irreducible(m: u64) -> bool {
    let Some(d) = poly_degree(m) else { return false };
    if d == 0 {
        return false;
    }
    if d >= 32 {
        return false;
    }
    let x_pow_2k = |k: u32| {
        let mut r = 0b10u64;
        for _ in 0..k {
            r = poly_mulmod(r, r, m);
        }
        r
    };
    if x_pow_2k(d) != poly_mod(0b10, m) {
        return false;
    }
    prime_factors(d as u64)
        .into_iter()
        .all(|p| poly_gcd(m, x_pow_2k(d / p as u32) ^ 0b10) == 1)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
