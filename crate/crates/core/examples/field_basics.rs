//! The field GF(q^6), q = 2^e: arithmetic, Frobenius maps, norms, traces and
//! subfields.
//!
//! ```text
//! cargo run --release --example field_basics -- 2
//! ```

use scatter6::{FieldCtx, Felt};

fn main() -> scatter6::Result<()> {
    let e = std::env::args().nth(1).map_or(Ok(2), |a| a.parse()).expect("e must be an integer");
    let f = FieldCtx::new(e)?;
    println!("GF({}^6) = GF(2^{}) with modulus {:#x}", f.q(), f.degree(), f.modulus());

    let g = f.generator();
    let x = f.pow(g, 12345 % f.order());
    println!("generator        {}", f.to_hex(g));
    println!("x                {}", f.to_hex(x));
    println!("x^-1             {}", f.to_hex(f.inv(x).unwrap()));
    println!("x * x^-1         {}", f.to_hex(f.mul(x, f.inv(x).unwrap())));

    let conj = f.conjugates(x);
    println!("conjugates x^(q^i):");
    for (i, c) in conj.iter().enumerate() {
        println!("  i={i}  {}", f.to_hex(*c));
    }
    assert_eq!(f.frobenius(conj[5], 1), x);

    for ell in [1, 2, 3] {
        let n = f.norm(x, ell)?;
        let t = f.trace(x, ell)?;
        println!(
            "N_(q^6/q^{ell})(x) = {}  Tr = {}  (both in GF(q^{ell}): {})",
            f.to_hex(n),
            f.to_hex(t),
            f.in_subfield(n, ell) && f.in_subfield(t, ell)
        );
    }

    let sub: Vec<Felt> = f.nonzero_elements().filter(|&y| f.in_subfield(y, 2)).collect();
    println!("|GF(q^2)*| = {} (expected {})", sub.len(), f.q() * f.q() - 1);

    let text = f.to_hex(x);
    assert_eq!(f.parse_hex(&text)?, x);
    println!("hex round trip ok: {text}");
    Ok(())
}
