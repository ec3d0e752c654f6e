//! Monomial tables for the polynomials over GF(2) that cut out the admissible set.
//!
//! An entry `[k0, k1, k2, k3, k4, k5]` stands for X^(k0 + k1 q + k2 q^2 + ... + k5 q^5).
//! Every coefficient is 1, so a polynomial is just its list of monomials; the
//! all-zero entry is the constant term.

/// Exponent vector over the q-adic digits.
pub type Exponents = [u8; 6];

pub const F1: &[Exponents] = &[
    [1, 1, 1, 2, 1, 0],
    [1, 0, 1, 1, 1, 0],
    [1, 1, 0, 1, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 1, 2, 0, 0],
    [0, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0],
];

pub const F2: &[Exponents] = &[
    [2, 2, 1, 1, 0, 0],
    [2, 1, 1, 0, 0, 0],
    [1, 2, 2, 1, 0, 0],
    [1, 1, 2, 2, 0, 0],
    [1, 1, 1, 0, 0, 0],
    [1, 1, 0, 1, 0, 0],
    [1, 0, 1, 1, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 1, 2, 0, 0],
    [0, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0],
];

pub const F3: &[Exponents] = &[[1, 1, 1, 0, 0, 0], [0, 0, 0, 0, 0, 0]];

pub const F4: &[Exponents] = &[
    [4, 1, 2, 0, 0, 0],
    [3, 2, 3, 0, 0, 0],
    [3, 2, 1, 0, 0, 0],
    [3, 1, 3, 0, 0, 0],
    [3, 1, 1, 0, 0, 0],
    [3, 0, 2, 0, 0, 0],
    [3, 0, 1, 0, 0, 0],
    [2, 1, 4, 0, 0, 0],
    [2, 1, 0, 0, 0, 0],
    [2, 0, 3, 0, 0, 0],
    [2, 0, 0, 0, 0, 0],
    [1, 2, 3, 0, 0, 0],
    [1, 2, 1, 0, 0, 0],
    [1, 1, 3, 0, 0, 0],
    [1, 1, 1, 0, 0, 0],
    [1, 0, 3, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 2, 0, 0, 0],
    [0, 0, 2, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
];

pub const F5: &[Exponents] = &[
    [2, 1, 2, 0, 0, 0],
    [2, 1, 1, 0, 0, 0],
    [2, 0, 2, 0, 0, 0],
    [1, 1, 2, 0, 0, 0],
    [1, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
];

pub const A1: &[Exponents] = &[
    [1, 2, 1, 1, 1, 1],
    [1, 2, 1, 1, 0, 1],
    [1, 2, 1, 0, 0, 0],
    [1, 2, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 0, 0],
    [1, 1, 1, 0, 1, 1],
    [1, 1, 1, 0, 0, 1],
    [1, 0, 1, 0, 1, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 2, 1, 0, 0, 0],
    [0, 2, 0, 1, 1, 1],
    [0, 2, 0, 1, 0, 1],
    [0, 2, 0, 0, 0, 0],
    [0, 1, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 0],
    [0, 1, 0, 0, 1, 1],
    [0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
];

pub const A2: &[Exponents] = &[
    [1, 1, 1, 1, 1, 1],
    [1, 1, 0, 0, 0, 0],
    [1, 0, 1, 0, 1, 0],
    [1, 0, 0, 0, 0, 1],
    [0, 1, 1, 0, 0, 0],
    [0, 1, 0, 1, 0, 1],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0],
];

/// Also the numerator of β.
pub const A3: &[Exponents] = &[
    [1, 1, 0, 0, 1, 1],
    [1, 1, 0, 0, 0, 1],
    [1, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
];

/// Also the numerator of γ.
pub const A4: &[Exponents] = &[
    [0, 0, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0],
];

/// Numerator of φ(c), the expression for c^(q^4) on F_1(c) = 0.
pub const PHI_NUMERATOR: &[Exponents] = &[
    [1, 1, 0, 1, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 1, 2, 0, 0],
    [0, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0],
];
