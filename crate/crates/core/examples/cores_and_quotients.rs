//! Murnaghan-Nakayama values at `w_d`, `d`-cores and `d`-quotients for
//! `S_7`, `d = 3`.

use cm_gaudin::combinatorics_sn::{partition_table, regular_split, regular_wd};

fn main() -> cm_gaudin::Result<()> {
    let (n, d) = (7, 3);
    let (j, r) = regular_split(n, d)?;
    println!("n = {n}, d = {d}: w_d = {} (j = {j}, r = {r})", regular_wd(n, d)?);
    for row in partition_table(n, d)? {
        let mark = if row.in_part_n_d { "*" } else { " " };
        println!(
            "{mark} {:<18} chi(w_d) = {:>3}  core {:<8} quotient {:?} dim {}",
            row.lambda.to_string(),
            row.chi_at_wd,
            row.core.to_string(),
            row.quotient.components().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            row.quotient_dim
        );
    }
    Ok(())
}
