//! Deciding scatteredness of f_{c,s} = X^(q^s) + X^(q^3s) + c X^(q^5s) with the
//! fiber criterion and the Dickson rank criterion, and evaluating the system
//! determinants along Frobenius orbits.
//!
//! ```text
//! cargo run --release --example scatteredness
//! ```

use scatter6::family;
use scatter6::scatter::{self, SystemPoly};
use scatter6::{Felt, FieldCtx, LinPoly};

fn main() -> scatter6::Result<()> {
    let f = FieldCtx::new(2)?;
    let members = family::frak_c(&f);
    let inside = members[0];
    let outside = Felt::ONE;

    for (label, c) in [("admissible", inside), ("c = 1", outside)] {
        for s in [1, 5] {
            let p = LinPoly::trinomial(&f, c, s)?;
            let hist = scatter::fiber_histogram(&p);
            let largest = hist.iter().max().copied().unwrap_or(0);
            println!(
                "{label:>10} c={} s={s}: fibers {}  dickson {}  largest fiber {largest}",
                f.to_hex(c),
                scatter::is_scattered_fibers(&p),
                scatter::is_scattered_dickson(&p),
            );
        }
    }

    // det of the system matrix along (m, m^q, ..., m^(q^5)) is det(D_f + m I)
    let m = f.pow(f.generator(), 4321);
    let orbit = scatter::frobenius_orbit(&f, m);
    let p = scatter::system_poly_eval(&f, inside, orbit, SystemPoly::P)?;
    let d = LinPoly::trinomial(&f, inside, 1)?.dickson_matrix(Some(m)).det();
    println!("p(orbit of m) = {}  det(D + m) = {}", f.to_hex(p), f.to_hex(d));
    for i in 0..6 {
        let qi = scatter::system_poly_eval(&f, inside, orbit, SystemPoly::Q(i))?;
        println!("q_{i}(orbit of m) = {}", f.to_hex(qi));
    }
    Ok(())
}
