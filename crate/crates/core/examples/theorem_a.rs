//! For every regular `d` of `G(5,5,2)`: each `tau`-stable character with
//! nonzero extended norm has a `tau`-fixed Gaudin covector.

use cm_gaudin::families::{theorem_a_report, Context};
use cm_gaudin::numerics::{cx, SpectralOptions};
use cm_gaudin::reflection_groups::{Builtin, ParamC};
use cm_gaudin::regular_elts::{find_regular_element, max_element_order, RegularAutomorphism};

fn main() -> cm_gaudin::Result<()> {
    let g = Builtin::Dihedral { e: 5 }.build()?;
    let c = ParamC::constant(&g, cx(0.41, -0.13));
    for d in 1..=max_element_order(&g) {
        let Some(re) = find_regular_element(&g, d) else { continue };
        let tau = RegularAutomorphism::inner(&g, &re);
        let ctx = Context::new(g.clone(), c.clone(), tau, SpectralOptions::default())?;
        let report = theorem_a_report(&ctx)?;
        println!("d = {d}: pass = {}, sum of criteria = {}, |W^tau| = {}", report.pass, report.global.sum_criteria.0, report.global.order_w_tau);
        for ch in report.characters.iter().filter(|c| c.tau_stable) {
            println!("    {:<6} {:<28} fixed covectors {}", ch.chi, ch.verdict, ch.tau_fixed_count);
        }
    }
    Ok(())
}
