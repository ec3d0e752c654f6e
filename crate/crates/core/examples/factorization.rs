//! The trivariate factorization into (αX + α^q Z)(XY + β)(YZ + γ) and the
//! rational expressions for c^(q^4) and c^(q^5).
//!
//! ```text
//! cargo run --release --example factorization
//! ```

use scatter6::family::{self, FactorData};
use scatter6::FieldCtx;

fn main() -> scatter6::Result<()> {
    let f = FieldCtx::new(2)?;
    let c = family::frak_c(&f)[3];
    let data = FactorData::compute(&f, c)?;
    println!("c = {}", f.to_hex(c));
    println!("α = {}  β = {}  γ = {}", f.to_hex(data.alpha), f.to_hex(data.beta), f.to_hex(data.gamma));
    for (i, a) in [data.a1, data.a2, data.a3, data.a4].iter().enumerate() {
        println!("A{} = {}", i + 1, f.to_hex(*a));
    }
    let lhs = data.resultant_factor(&f);
    let rhs = data.product(&f);
    println!("terms on the left:");
    for (exp, coeff) in lhs.terms() {
        println!("  X^{} Y^{} Z^{}  {}", exp[0], exp[1], exp[2], f.to_hex(coeff));
    }
    println!("equal to the product: {}", lhs == rhs);

    let (phi, psi) = family::phi_identities(&f, c)?;
    println!("φ(c) = {}  c^(q^4) = {}", f.to_hex(phi), f.to_hex(f.frobenius(c, 4)));
    println!("ψ(c) = {}  c^(q^5) = {}", f.to_hex(psi), f.to_hex(f.frobenius(c, 5)));
    Ok(())
}
