// Double coset representatives for `C_c \ K / C_d`, symbolically and
// concretely at `q = 5`.
//
// ```bash
// cargo run --example double_cosets
// ```

use gl3branch::cosets::{count_r, enumerate_r, expand_r, tcd_set};
use gl3branch::poset::Triple;

pub fn run_example() -> gl3branch::Result<()> {
    let c = Triple::new(2, 2, 2);
    let d = Triple::new(1, 1, 2);
    println!("T_(c,d) = {:?}", tcd_set(c, d).iter().map(|a| a.to_string()).collect::<Vec<_>>());
    for rep in enumerate_r(c, d) {
        println!("  {rep}: {} cosets", rep.multiplicity());
    }
    let total = count_r(c, d);
    println!("|R| = {total} = {} at q = 5", total.eval(5)?);
    assert_eq!(expand_r(c, d, 5).len(), 9);
    Ok(())
}

#[allow(dead_code)]
fn main() -> gl3branch::Result<()> {
    run_example()
}
