//! Linear sets of PG(1, q^6): points and weights of L_U, the maximum scattered
//! test, and set-level comparison with the pseudoregulus and LP-type sets.
//!
//! ```text
//! cargo run --release --example linear_sets
//! ```

use scatter6::family;
use scatter6::linset::{self, linear_set};
use scatter6::scatter::Subspace;
use scatter6::{Felt, FieldCtx, LinPoly};

fn main() -> scatter6::Result<()> {
    let f = FieldCtx::new(2)?;
    let c = family::frak_c(&f)[0];
    let l = linear_set(&Subspace::graph(LinPoly::trinomial(&f, c, 1)?));
    println!("L(c={}, 1): {:?}", f.to_hex(c), l.report());

    let cmp = linset::compare_with_families(&f, &l, 1)?;
    println!(
        "vs pseudoregulus: equal {} ({} points not on it); vs {} LP-type sets: {} equal",
        cmp.equals_pseudoregulus, cmp.pseudoregulus_difference, cmp.lp_deltas_checked, cmp.lp_matches
    );

    let degenerate = linear_set(&Subspace::graph(LinPoly::trinomial(&f, Felt::ONE, 1)?));
    println!("L(c=1, 1): {:?}", degenerate.report());

    // the point set is unchanged by scaling U and moved by a generic PΓL element
    let u = Subspace::graph(LinPoly::trinomial(&f, c, 1)?);
    let scaled = linear_set(&u.scaled(f.generator())?);
    println!("L(λU) = L(U): {}", linset::sets_equal(&l, &scaled));
    let g = f.generator();
    let moved = l.image_under(&f, [[Felt::ONE, g], [g, Felt::ONE]], 3)?;
    println!("image under a PΓL element: {} points, equal to L: {}", moved.size(), linset::sets_equal(&l, &moved));
    Ok(())
}
