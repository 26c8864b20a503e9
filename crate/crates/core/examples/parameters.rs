//! Converting between the two parameter spaces, and the per-orbit shift
//! that leaves `c` unchanged.

use cm_gaudin::numerics::cx;
use cm_gaudin::reflection_groups::{c_to_k, k_to_c, Builtin, ParamK};

fn main() -> cm_gaudin::Result<()> {
    let g = Builtin::Imprimitive { d: 3, r: 2 }.build()?;
    let values: Vec<Vec<_>> =
        g.orbits().iter().map(|o| (0..o.e).map(|j| cx(0.3 * j as f64, 0.1 * (o.id + j) as f64)).collect()).collect();
    let k = ParamK::new(&g, values)?;
    let c = k_to_c(&g, &k)?;
    println!("{}: {} orbits, {} reflection classes", g.name(), g.orbits().len(), c.values().len());
    println!("c = {:.4?}", c.values());

    let back = c_to_k(&g, &c)?;
    println!("k from c (k_0 = 0 on each orbit) = {:.4?}", back.values());

    let shifted = k.shifted(&vec![cx(5.0, -2.0); g.orbits().len()]);
    let c2 = k_to_c(&g, &shifted)?;
    let diff = c.values().iter().zip(c2.values()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    println!("shifting k moves c by {diff:.1e}");
    Ok(())
}
