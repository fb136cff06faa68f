// Checks the symbolic counts against brute force over `GL(3, Z/25)`.
//
// ```bash
// cargo run --release --example oracle_verify
// ```

use gl3branch::oracle::report::{verify_report, VerifyOptions};
use gl3branch::poset::{ConductorData, Triple};

pub fn run_example() -> gl3branch::Result<()> {
    let top = Triple::new(2, 2, 2);
    let mid = Triple::new(1, 1, 2);
    let pairs = [(top, top), (mid, mid), (top, mid)];
    for (m, n) in [(1, 1), (2, 2)] {
        let m = ConductorData::new(m, n)?;
        let usable: Vec<_> = pairs
            .iter()
            .copied()
            .filter(|(c, d)| c.in_tm(&m) && d.in_tm(&m))
            .collect();
        let report = verify_report(5, 2, &m, &usable, &VerifyOptions::default())?;
        for r in &report.pairs {
            println!(
                "m={} c={} d={}: |R| {} vs {}, |S| {} vs {} ({:?}), [K:C_c] {} vs {} -> {:?}",
                m.base(),
                r.c,
                r.d,
                r.expected_r,
                r.oracle_r,
                r.expected_s,
                r.oracle_s,
                r.mode,
                r.expected_index,
                r.oracle_index,
                r.status
            );
        }
        assert!(report.all_pass);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> gl3branch::Result<()> {
    run_example()
}
