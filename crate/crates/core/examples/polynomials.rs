// Exact arithmetic in `Z[q]`.
//
// ```bash
// cargo run --example polynomials
// ```

use gl3branch::polyq::{phi, QPoly};
use gl3branch::poset::Triple;
use gl3branch::support::index_poly;

pub fn run_example() -> gl3branch::Result<()> {
    let q = QPoly::q();
    let alpha = (&q + &QPoly::one()) * (q.pow(2) + &q + QPoly::one());
    println!("alpha = {alpha}");
    println!("phi(3) = {}", phi(3));
    let index = q.pow(3) * &alpha;
    for q0 in [5, 7, 9] {
        println!("[K : C_(2,2,2)] at q = {q0}: {}", index.eval(q0)?);
    }
    assert_eq!(index.eval(5)?, 23250.into());
    assert_eq!(index, index_poly(Triple::new(2, 2, 2))?);
    assert!(QPoly::constant(2).cmp_asymptotic(&q).is_lt());
    Ok(())
}

#[allow(dead_code)]
fn main() -> gl3branch::Result<()> {
    run_example()
}
