//! Builds `G(2,1,2)` (the hyperoctahedral group of rank 2) and a group given
//! by explicit generators, then lists reflections and hyperplane orbits.

use cm_gaudin::reflection_groups::{parse_group_spec, Builtin};

fn main() -> cm_gaudin::Result<()> {
    let b2 = Builtin::Imprimitive { d: 2, r: 2 }.build()?;
    println!("{}: order {}, rank {}", b2.name(), b2.order(), b2.dim());
    for o in b2.orbits() {
        println!("  orbit {}: {} hyperplanes, e = {}", o.id, o.hyperplanes.len(), o.e);
    }
    for r in b2.reflections() {
        println!("  reflection #{} on hyperplane {} det {:.3}", r.element, r.hyperplane, r.det);
    }

    // mu_3 from a file-style description; entries may be rationals or [re, im].
    let spec = parse_group_spec(&serde_json::json!({
        "name": "mu3",
        "dim": 1,
        "generators": [[["-1/2", "0.8660254037844386"]]]
    }))?;
    let mu3 = spec.build_default()?;
    println!("{}: order {}, {} reflections, e = {}", mu3.name(), mu3.order(), mu3.reflections().len(), mu3.orbits()[0].e);
    Ok(())
}
