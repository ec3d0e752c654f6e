//! σ-linearized polynomials: evaluation, composition, adjoints and Dickson
//! matrices.
//!
//! ```text
//! cargo run --release --example linearized_polys
//! ```

use scatter6::{Felt, FieldCtx, LinPoly};

fn main() -> scatter6::Result<()> {
    let f = FieldCtx::new(2)?;
    let c = f.pow(f.generator(), 777);
    let t = LinPoly::trinomial(&f, c, 1)?;
    println!("f      = {t}");
    println!("f^     = {}", t.adjoint());
    println!("q-coefficients of the step-5 trinomial: {:?}", LinPoly::trinomial(&f, c, 5)?.q_coeffs().map(|a| f.to_hex(a)));

    // composition is composition of maps
    let g = LinPoly::parse(&f, &format!("s=1;a0={},a1=001,a2=000,a3=000,a4=000,a5=000", f.to_hex(c)))?;
    let fg = t.compose(&g)?;
    let x = f.pow(f.generator(), 99);
    assert_eq!(fg.eval(x), t.eval(g.eval(x)));
    println!("f∘g    = {fg}");

    // trace form over GF(q): Tr(y f(x)) = Tr(x f^(y))
    let y = f.pow(f.generator(), 1234);
    let lhs = f.trace(f.mul(y, t.eval(x)), 1)?;
    let rhs = f.trace(f.mul(x, t.adjoint().eval(y)), 1)?;
    println!("Tr(y f(x)) = {}  Tr(x f^(y)) = {}", f.to_hex(lhs), f.to_hex(rhs));
    assert_eq!(lhs, rhs);

    let d = t.dickson_matrix(None);
    println!("Dickson matrix of f (rank {}):", d.rank());
    for row in d.entries() {
        println!("  {}", row.iter().map(|a| f.to_hex(*a)).collect::<Vec<_>>().join(" "));
    }
    println!("bijective: {}  kernel dim over GF(q): {}", t.is_bijective(), t.kernel_dim());

    // X^q - X has kernel GF(q)
    let artin = LinPoly::monomial(&f, 1, 1, Felt::ONE)?.add(&LinPoly::identity(&f, 1)?)?;
    let kernel = artin.kernel_basis();
    println!("ker(X^q + X) has GF(q)-basis {:?}", kernel.iter().map(|a| f.to_hex(*a)).collect::<Vec<_>>());
    Ok(())
}
