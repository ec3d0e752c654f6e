//! Exhaustive enumeration of the admissible set {c : F1 = F2 = 0, F3 F4 F5 != 0,
//! c outside GF(q^2)} with a seeded scatteredness sample.
//!
//! ```text
//! cargo run --release --example frak_c_enumeration -- 3
//! ```

use std::collections::BTreeSet;

use scatter6::family::{self, ScatterPolicy};
use scatter6::FieldCtx;

fn main() -> scatter6::Result<()> {
    let e = std::env::args().nth(1).map_or(Ok(2), |a| a.parse()).expect("e must be an integer");
    let f = FieldCtx::new(e)?;
    let records = family::enumerate_frak_c(&f, ScatterPolicy::Sample { limit: 32, seed: 1 });
    let members: Vec<_> = records.iter().filter(|r| r.in_frak_c).collect();
    println!("q = {}: {} points with F1 = F2 = 0, |C| = {}, q^3 = {}", f.q(), records.len(), members.len(), f.q().pow(3));

    let set: BTreeSet<u32> = members.iter().map(|r| r.c.bits()).collect();
    let stable = members.iter().all(|r| set.contains(&f.frobenius(r.c, 1).bits()));
    println!("closed under c -> c^q: {stable}");

    let excluded: Vec<_> = records.iter().filter(|r| r.excluded_by_f4_f5()).collect();
    println!("points removed only by F4 F5 = 0: {}", excluded.len());

    for r in members.iter().take(5) {
        println!(
            "  c={}  F3..F5 = {:?}  lemmas ok: {}  scattered (sampled): {:?}",
            f.to_hex(r.c),
            r.f_values[2..].iter().map(|v| f.to_hex(*v)).collect::<Vec<_>>(),
            r.lemmas.all(),
            r.scattered_s1
        );
    }
    let sampled: Vec<bool> = records.iter().filter(|r| r.in_frak_c).filter_map(|r| r.scattered_s1).collect();
    println!("sampled members scattered: {}/{}", sampled.iter().filter(|&&b| b).count(), sampled.len());
    Ok(())
}
