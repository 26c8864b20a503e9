//! Evidence for the converse direction on `S_3` with `d = 2`: the
//! character `(2,1)` vanishes at the transposition and has no `tau`-fixed
//! covector.

use cm_gaudin::families::{conjecture_b_report, singleton_partition, Context};
use cm_gaudin::numerics::{cx, SpectralOptions};
use cm_gaudin::reflection_groups::{k_to_c, Builtin, ParamK};
use cm_gaudin::regular_elts::{find_regular_element, RegularAutomorphism};

fn main() -> cm_gaudin::Result<()> {
    let g = Builtin::Symmetric { n: 3 }.build()?;
    let k = ParamK::new(&g, vec![vec![cx(0.0, 0.0), cx(1.0, 0.0)]])?;
    let c = k_to_c(&g, &k)?;
    let tau = RegularAutomorphism::inner(&g, &find_regular_element(&g, 2).expect("2 is regular for S_3"));
    let ctx = Context::new(g.clone(), c, tau, SpectralOptions::default())?;
    let families = singleton_partition(&g, &ctx.table, &k)?;
    let report = conjecture_b_report(&ctx, &families)?;
    for b in &report.blocks {
        println!("{:?}: criterion {}, {}", b.chis, b.criterion.0, b.verdict);
    }
    Ok(())
}
