//! Published tables and figures, kept in factored form and expanded here.
#![allow(dead_code)]

use gl3branch::polyq::QPoly;
use gl3branch::poset::Triple;

pub fn t(a: u32, b: u32, c: u32) -> Triple {
    Triple::new(a, b, c)
}

pub fn q() -> QPoly {
    QPoly::q()
}

/// `q^e (q - 1)^f (q - 2)^g (q + 1)(q^2 + q + 1)`.
pub fn dim(e: u32, f: u32, g: u32) -> QPoly {
    let alpha = QPoly::from_coeffs([1, 1]) * QPoly::from_coeffs([1, 1, 1]);
    q().pow(e) * QPoly::from_coeffs([-1, 1]).pow(f) * QPoly::from_coeffs([-2, 1]).pow(g) * alpha
}

/// Dimensions of `V_c` for `M = N = 2`, `c <= (4,4,4)`.
pub fn table_one() -> Vec<(Triple, QPoly)> {
    vec![
        (t(4, 4, 4), dim(7, 2, 0)),
        (t(3, 4, 4), dim(6, 2, 0)),
        (t(4, 3, 4), dim(6, 2, 0)),
        (t(3, 3, 4), dim(4, 3, 0)),
        (t(2, 4, 4), dim(6, 1, 0)),
        (t(4, 2, 4), dim(6, 1, 0)),
        (t(2, 3, 4), dim(4, 2, 0)),
        (t(3, 3, 3), dim(4, 2, 0)),
        (t(3, 2, 4), dim(4, 2, 0)),
        (t(2, 3, 3), dim(4, 1, 0)),
        (t(2, 2, 4), dim(4, 1, 0)),
        (t(3, 2, 3), dim(4, 1, 0)),
        (t(2, 2, 3), dim(3, 1, 0)),
        (t(2, 2, 2), dim(3, 0, 0)),
    ]
}

/// Dimensions of `V_c` for `M = 1`, `N = 2`, `c1 + c2 + c3 <= 9`.
pub fn table_two() -> Vec<(Triple, QPoly)> {
    vec![
        (t(1, 4, 4), dim(5, 1, 0)),
        (t(3, 3, 3), dim(4, 2, 0)),
        (t(3, 2, 4), dim(4, 2, 0)),
        (t(2, 3, 4), dim(4, 1, 1)),
        (t(1, 3, 4), dim(4, 1, 0)),
        (t(2, 2, 4), dim(4, 1, 0)),
        (t(3, 2, 3), dim(4, 1, 0)),
        (t(2, 3, 3), dim(3, 2, 0)),
        (t(1, 3, 3), dim(3, 1, 0)),
        (t(2, 2, 3), dim(2, 2, 0)),
        (t(1, 2, 3), dim(2, 1, 0)),
        (t(2, 2, 2), dim(2, 1, 0)),
        (t(1, 2, 2), dim(2, 0, 0)),
    ]
}

fn qm(k: i64) -> QPoly {
    QPoly::from_coeffs([-k, 1])
}

/// `I(V_c, V_c)` labels for `M = N = 2`, `c <= (4,4,4)`.
pub fn figure_one() -> Vec<(Triple, QPoly)> {
    let one = QPoly::one;
    vec![
        (t(4, 4, 4), one()),
        (t(3, 4, 4), one()),
        (t(4, 3, 4), one()),
        (t(2, 4, 4), QPoly::constant(3)),
        (t(3, 3, 4), qm(1)),
        (t(4, 2, 4), QPoly::constant(3)),
        (t(2, 3, 4), one()),
        (t(3, 3, 3), one()),
        (t(3, 2, 4), one()),
        (t(2, 3, 3), QPoly::constant(2)),
        (t(2, 2, 4), one()),
        (t(3, 2, 3), QPoly::constant(2)),
        (t(2, 2, 3), one()),
        (t(2, 2, 2), one()),
    ]
}

/// `I(V_c, V_c)` labels for `M = 1`, `N = 2`, `c1 + c2 + c3 <= 9`.
pub fn figure_two() -> Vec<(Triple, QPoly)> {
    let one = QPoly::one;
    vec![
        (t(1, 4, 4), QPoly::constant(2)),
        (t(2, 3, 4), qm(2)),
        (t(3, 3, 3), one()),
        (t(3, 2, 4), one()),
        (t(1, 3, 4), one()),
        (t(2, 3, 3), one()),
        (t(2, 2, 4), one()),
        (t(3, 2, 3), QPoly::constant(2)),
        (t(1, 3, 3), QPoly::constant(2)),
        (t(2, 2, 3), one()),
        (t(1, 2, 3), one()),
        (t(2, 2, 2), one()),
        (t(1, 2, 2), one()),
    ]
}

/// Dashed edges of the second figure.
pub fn figure_two_equivalences() -> Vec<(Triple, Triple)> {
    vec![(t(1, 3, 4), t(2, 2, 4)), (t(1, 4, 4), t(2, 3, 4))]
}

pub mod checks;
