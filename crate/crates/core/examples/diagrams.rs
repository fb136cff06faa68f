// Hasse diagram of `T_m` with `I(V,V)` labels, as Graphviz DOT.
//
// ```bash
// cargo run --example diagrams | dot -Tsvg > tm.svg
// ```

use gl3branch::cli::build_diagram;
use gl3branch::poset::{Bound, ConductorData};

pub fn run_example() -> gl3branch::Result<()> {
    let m = ConductorData::new(1, 2)?;
    let d = build_diagram(&m, Bound::SumMax(9))?;
    print!("{}", d.to_dot());
    assert_eq!(d.nodes.len(), 13);
    assert_eq!(d.equivalences.len(), 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> gl3branch::Result<()> {
    run_example()
}
