//! Character table of `S_4` from class sums, with b-invariants, and a check
//! that the rows agree with the Murnaghan-Nakayama values.

use cm_gaudin::char_theory::{burnside_table, character_table, export_table};
use cm_gaudin::numerics::SpectralOptions;
use cm_gaudin::reflection_groups::Builtin;

fn main() -> cm_gaudin::Result<()> {
    let g = Builtin::Symmetric { n: 4 }.build()?;
    let mn = character_table(&g)?;
    let ex = export_table(&g, &mn)?;
    println!("class sizes {:?}", ex.classes.iter().map(|c| c.size).collect::<Vec<_>>());
    for (i, label) in ex.labels.iter().enumerate() {
        let row: Vec<String> = mn.rows[i].iter().map(|z| format!("{:>3}", z.re.round())).collect();
        println!("{label:>10}  b={}  {}", ex.b_invariants[i], row.join(" "));
    }

    // Same group, generic algorithm: rows agree up to ordering.
    let generic = burnside_table(g.group(), SpectralOptions::default())?;
    let (row_res, col_res) = generic.orthogonality_residuals();
    println!("class-sum table: {} rows, orthogonality residuals {row_res:.1e} / {col_res:.1e}", generic.len());
    for r in 0..mn.len() {
        let found = (0..generic.len()).any(|s| {
            (0..mn.classes.len()).all(|l| (mn.rows[r][l] - generic.value(s, mn.classes.representatives[l])).norm() < 1e-8)
        });
        assert!(found, "row {} missing from the class-sum table", mn.labels[r]);
    }
    Ok(())
}
