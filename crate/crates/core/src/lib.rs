//! Scattered linearized trinomials X^(q^s) + X^(q^3s) + c X^(q^5s) over GF(q^6), q even.

pub mod campaign;
pub mod error;
pub mod family;
pub mod field;
pub mod gf2;
pub mod linpoly;
pub mod linset;
pub mod matrix;
pub mod mrd;
pub mod scatter;

pub use error::{Error, Result};
pub use field::{make_field, Felt, FieldCtx};
pub use linpoly::{DicksonMat, LinPoly};
