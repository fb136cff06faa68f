// Intertwining numbers `I(V_c, V_d)` and which quotients are irreducible.
//
// ```bash
// cargo run --example irreducibility
// ```

use gl3branch::poset::{enumerate_tm, Bound, ConductorData, Triple};
use gl3branch::support::{intertwine_v, irreducibility_report};

pub fn run_example() -> gl3branch::Result<()> {
    let m = ConductorData::new(2, 2)?;
    for c in enumerate_tm(&m, Bound::ComponentwiseMax(Triple::new(4, 4, 4))) {
        let r = irreducibility_report(c, &m)?;
        let tags: Vec<String> = r.theorem_tags.iter().map(|t| format!("{:?}", t.tag)).collect();
        println!("{c}: I(V,V) = {} {}", r.i_vv, tags.join(" "));
    }
    let a = Triple::new(2, 3, 3);
    let rep = intertwine_v(a, a, &m)?;
    for t in &rep.subset_terms {
        let sign = if t.sign < 0 { '-' } else { '+' };
        println!("  {sign} I(U{}, U{}) = {}", t.c_i, t.d_j, t.i_uu);
    }
    assert_eq!(rep.i_vv.eval(5)?, 2.into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> gl3branch::Result<()> {
    run_example()
}
