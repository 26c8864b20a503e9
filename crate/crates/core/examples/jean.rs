//! Squared values `|chi_lambda(w_d)|^2` against squared degrees of
//! `G(d,1,r)` labelled by `d`-quotients, for `S_6` and every regular `d`.

use cm_gaudin::families::conjecture_jean_report_sn;
use cm_gaudin::numerics::{cx, ONE};

fn main() -> cm_gaudin::Result<()> {
    let n = 6;
    for d in (1..=n).filter(|d| n % d == 0 || (n - 1) % d == 0) {
        let rep = conjecture_jean_report_sn(n, d, (cx(0.0, 0.0), ONE))?;
        let nonzero = rep.rows.iter().filter(|r| r.lhs != 0).count();
        println!("d = {d} (r = {}, w_d = {}): {nonzero} nonzero rows, all equal: {}", rep.r, rep.wd, rep.pass);
    }
    Ok(())
}
