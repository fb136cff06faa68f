// The poset `T_m`, immediate descendants and their meets.
//
// ```bash
// cargo run --example poset
// ```

use gl3branch::poset::{descendants, enumerate_tm, meet_family, subsets, Bound, ConductorData, Triple};

pub fn run_example() -> gl3branch::Result<()> {
    let m = ConductorData::new(1, 2)?;
    let tm = enumerate_tm(&m, Bound::SumMax(9));
    println!("T_m for m = {} and c1 + c2 + c3 <= 9: {} triples", m.base(), tm.len());
    let c = Triple::new(2, 3, 4);
    let desc = descendants(c, &m)?;
    for sub in subsets(&desc.sset) {
        println!("  meet over {sub:?} = {}", meet_family(c, &sub, &m));
    }
    assert_eq!(tm.len(), 13);
    assert_eq!(meet_family(c, &desc.sset, &m), Triple::new(1, 2, 3));
    Ok(())
}

#[allow(dead_code)]
fn main() -> gl3branch::Result<()> {
    run_example()
}
