//! The rank-metric code <X, f_{c,s}>: minimum distance, MRD property,
//! idealizers and the adjoint code.
//!
//! ```text
//! cargo run --release --example mrd_codes
//! ```

use scatter6::family;
use scatter6::mrd::{self, Span};
use scatter6::FieldCtx;

fn main() -> scatter6::Result<()> {
    let f = FieldCtx::new(2)?;
    let c = family::frak_c(&f)[0];
    for s in [1, 5] {
        let code = mrd::build_code(&f, c, s)?;
        let right = code.right_idealizer();
        let left = code.left_idealizer();
        println!(
            "D(c={}, s={s}): dim_q {}  d {}  MRD {}  |I_R| {} (scalars of GF(q^2): {})  |I_L| {}",
            f.to_hex(c),
            code.dim_q(),
            code.min_distance(),
            code.is_mrd(),
            right.order(),
            right.is_subfield_scalars(2),
            left.order()
        );
        let adj = code.adjoint_code();
        println!(
            "  adjoint code: span {:?}, d {}, generator {}",
            adj.span(),
            adj.min_distance(),
            adj.generator()
        );
        assert_eq!(adj.span(), Span::Right);
    }
    let bad = mrd::build_code(&f, scatter6::Felt::ONE, 1)?;
    println!("c = 1: d {}  MRD {}", bad.min_distance(), bad.is_mrd());
    Ok(())
}
