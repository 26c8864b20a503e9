//! A `tau` outside the group: the element of order 2 in `N(G(4,4,2))` that
//! swaps the two hyperplane orbits up to a scalar. Extended norms come from
//! an explicit intertwiner.

use cm_gaudin::families::{theorem_a_report, Context};
use cm_gaudin::numerics::{cx, root_of_unity, CMatrix, SpectralOptions, ZERO};
use cm_gaudin::reflection_groups::{Builtin, ParamC};
use cm_gaudin::regular_elts::RegularAutomorphism;

fn main() -> cm_gaudin::Result<()> {
    let g = Builtin::Dihedral { e: 4 }.build()?;
    let z = root_of_unity(8, 1);
    let tau = CMatrix::from_row_slice(2, 2, &[ZERO, z, z.inv(), ZERO]);
    let tau = RegularAutomorphism::general(&g, tau)?;
    println!("tau has order {}, fixes {} group elements", tau.order, tau.fixed_elements().len());

    // tau swaps the two reflection classes, so c must be constant.
    let c = ParamC::constant(&g, cx(0.6, 0.1));
    let ctx = Context::new(g, c, tau, SpectralOptions::default())?;
    for (r, n) in ctx.norms.iter().enumerate() {
        match n {
            Some(x) => println!("{:<6} |chi~(tau)|^2 = {x:.6}, tau-fixed covectors {}", ctx.table.labels[r], ctx.fixed_counts[r]),
            None => println!("{:<6} not tau-stable", ctx.table.labels[r]),
        }
    }
    let report = theorem_a_report(&ctx)?;
    println!("sum = {} = |W^tau| = {}; pass = {}", report.global.sum_criteria.0, report.global.order_w_tau, report.pass);
    Ok(())
}
