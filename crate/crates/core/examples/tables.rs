// `dim V_c` over a bounded `T_m`, as CSV.
//
// ```bash
// cargo run --example tables
// ```

use gl3branch::cli::table_emit;
use gl3branch::poset::{Bound, ConductorData, Triple};

pub fn run_example() -> gl3branch::Result<()> {
    let m = ConductorData::new(2, 2)?;
    let csv = table_emit(&m, Bound::ComponentwiseMax(Triple::new(4, 4, 4)), Some(5))?;
    print!("{csv}");
    assert_eq!(csv.lines().count(), 15);
    Ok(())
}

#[allow(dead_code)]
fn main() -> gl3branch::Result<()> {
    run_example()
}
