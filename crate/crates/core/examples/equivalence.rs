//! Equivalence of the codes D_{c,s}: explicit witnesses for both criteria and the
//! partition of the admissible set into classes.
//!
//! ```text
//! cargo run --release --example equivalence -- 2
//! ```

use scatter6::family;
use scatter6::mrd::{self, EquivBranch};
use scatter6::FieldCtx;

fn main() -> scatter6::Result<()> {
    let e = std::env::args().nth(1).map_or(Ok(2), |a| a.parse()).expect("e must be an integer");
    let f = FieldCtx::new(e)?;
    let members = family::frak_c(&f);
    let c = members[0];

    let same = mrd::codes_equivalent(&f, c, 1, f.frobenius(c, 1), 1)?;
    println!("(c, 1) ~ (c^q, 1): {:?}", same.witness);

    let image = mrd::opposite_step_image(&f, c, 5).expect("c != 1");
    let opposite = mrd::codes_equivalent(&f, image, 5, c, 1)?;
    if let Some(w) = opposite.witness {
        if let EquivBranch::OppositeStep { b, c: scalar } = w.branch {
            println!("(c', 5) ~ (c, 1) with c' = {}: B = {}, C = {}", f.to_hex(image), f.to_hex(b), f.to_hex(scalar));
        }
        println!("  validates: {}", w.validates(&f, image, 5, c, 1)?);
    }
    println!("c' admissible: {}", family::in_frak_c(&f, image));

    let partition = mrd::partition(&f, &members)?;
    let (stated, conservative) = mrd::class_count_bounds(members.len() as u64, e);
    println!(
        "{} codes fall into {} classes; bounds |C|/6e = {stated}, |C|/(12e+1) = {conservative}; images outside C: {}",
        2 * members.len(),
        partition.classes.len(),
        partition.images_outside
    );
    let mut sizes: Vec<usize> = partition.classes.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes.dedup();
    println!("class sizes: {sizes:?}");
    Ok(())
}
