//! Regular numbers of `S_5` and `G(4,4,2)`, with Springer's description of
//! the centralizer acting on the eigenspace.

use cm_gaudin::reflection_groups::Builtin;
use cm_gaudin::regular_elts::{max_element_order, regular_report};

fn main() -> cm_gaudin::Result<()> {
    for b in [Builtin::Symmetric { n: 5 }, Builtin::Dihedral { e: 4 }] {
        let g = b.build()?;
        println!("{}", g.name());
        for d in 1..=max_element_order(&g) {
            let r = regular_report(&g, d)?;
            if r.regular {
                println!(
                    "  d = {d}: dim V^tau = {}, |W^tau| = {}, reflection group: {}",
                    r.dim_v_tau.unwrap(),
                    r.order_w_tau.unwrap(),
                    r.springer_pass.unwrap()
                );
            } else {
                println!("  d = {d}: not regular");
            }
        }
    }
    Ok(())
}
