//! Joint spectrum of the Gaudin operators on each isotypic component of
//! `C[S_3]` at a generic parameter.

use cm_gaudin::char_theory::character_table;
use cm_gaudin::gaudin::{commutator_residual, spectra};
use cm_gaudin::numerics::{cx, SpectralOptions};
use cm_gaudin::reflection_groups::{Builtin, ParamC};

fn main() -> cm_gaudin::Result<()> {
    let g = Builtin::Symmetric { n: 3 }.build()?;
    let table = character_table(&g)?;
    let c = ParamC::constant(&g, cx(0.7, 0.2));
    let v = [cx(0.0, 0.0), cx(1.0, 0.0), cx(3.0, 0.5)];

    let (res, scale) = commutator_residual(&g, &c, &v)?;
    println!("max commutator {res:.2e} (scale {scale:.2})");

    let rows: Vec<usize> = (0..table.len()).collect();
    for s in spectra(&g, &table, &c, &v, &rows, SpectralOptions::default())? {
        println!("{} (degree {}):", table.labels[s.chi], s.degree);
        for e in &s.entries {
            let vstar: Vec<String> = e.covector.iter().map(|z| format!("{:.4}", z)).collect();
            println!("  [{}] x {}", vstar.join(", "), e.multiplicity);
        }
    }
    Ok(())
}
