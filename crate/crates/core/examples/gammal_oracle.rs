//! Exhaustive ΓL(2, 64) equivalence search at q = 2.
//!
//! ```text
//! cargo run --release --example gammal_oracle
//! ```

use scatter6::campaign::{known_family_subspaces, u_bc};
use scatter6::scatter::{self, FamilyKind};
use scatter6::{Felt, FieldCtx};

fn main() -> scatter6::Result<()> {
    let f = FieldCtx::new(1)?;
    let a1 = scatter::family_subspace(&f, FamilyKind::Pseudoregulus, 1, Felt::ZERO)?;
    let a5 = scatter::family_subspace(&f, FamilyKind::Pseudoregulus, 5, Felt::ZERO)?;
    let swap = scatter::gammal_equivalent_bruteforce(&a1, &a5)?.expect("the swap exists");
    println!("U(1) -> U(5): rho {} matrix {:?}", swap.rho, swap.matrix.map(|r| r.map(|x| f.to_hex(x))));
    assert!(swap.maps(&a1, &a5));

    let b = f.generator();
    let c = f.pow(b, 10);
    assert!(c != f.pow(b, 5));
    let u = u_bc(&f, b, c)?;
    let families = known_family_subspaces(&f);
    let found = families
        .iter()
        .filter(|(.., v)| scatter::gammal_equivalent_bruteforce(&u, v).map(|w| w.is_some()).unwrap_or(false))
        .count();
    println!(
        "U(b={}, c={}) (scattered: {}) against {} known-family subspaces: {found} equivalent",
        f.to_hex(b),
        f.to_hex(c),
        u.is_scattered(),
        families.len()
    );

    let too_big = FieldCtx::new(2)?;
    let p = scatter::family_subspace(&too_big, FamilyKind::Pseudoregulus, 1, Felt::ZERO)?;
    println!("q = 4: {}", scatter::gammal_equivalent_bruteforce(&p, &p).unwrap_err());
    Ok(())
}
