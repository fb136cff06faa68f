//! Spot checks of the matrix-coefficient relations satisfied by coset
//! pairs `(g, g')` with `g h = h g'`, `g` in `C_c`, `g'` in `C_d`.
//!
//! Pairs are drawn mod `p^n`, then `g` is lifted to an integer matrix and
//! `g' = h^-1 g h` is taken over `Z` (every representative has determinant
//! `±1`). The relations are then integer identities; they are checked
//! after multiplying through by a power of `p` that clears negative
//! exponents.

use rand::Rng;
use serde::Serialize;

use super::mackey::{orbit_rng, random_c_element};
use super::reps::rep_integer_matrix;
use super::ring::ResidueRing;
use crate::cosets::{is_representative, CosetRep};
use crate::error::{Error, Result};
use crate::poset::Triple;

pub type IntMat = [[i128; 3]; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RelationFamily {
    S1,
    #[serde(rename = "T_FAMILY")]
    TFamily,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub family: RelationFamily,
    pub rep: String,
    pub c: Triple,
    pub d: Triple,
    pub level: u32,
    pub samples: u64,
    pub failures: u64,
    pub pass: bool,
}

fn mul(a: &IntMat, b: &IntMat) -> IntMat {
    let mut out = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn det(m: &IntMat) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Inverse of an integer matrix of determinant `±1`.
fn unimodular_inverse(m: &IntMat) -> IntMat {
    let d = det(m);
    assert!(d == 1 || d == -1, "representative must be unimodular");
    let mut out = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let r: Vec<usize> = (0..3).filter(|&x| x != j).collect();
            let c: Vec<usize> = (0..3).filter(|&x| x != i).collect();
            let minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]];
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            out[i][j] = sign * minor * d;
        }
    }
    out
}

/// Scaled arithmetic: `term(v, e)` is `v * p^(S + e)`.
struct Scaled {
    p: i128,
    shift: i64,
}

impl Scaled {
    fn term(&self, v: i128, e: i64) -> i128 {
        let k = self.shift + e;
        assert!(k >= 0, "scaling too small for exponent {e}");
        v * self.p.pow(k as u32)
    }
}

/// Whether `(g, g2)` satisfies every coefficient relation for `rep`.
/// Entries are integers; `g21`, `g32`, `g31` of `g` (and of `g2`) are
/// read as `gamma * p^c` (resp. `p^d`).
pub fn relations_hold(rep: &CosetRep, p: u64, g: &IntMat, g2: &IntMat) -> Result<bool> {
    let sc = Scaled { p: i128::from(p), shift: 12 };
    let t = |v: i128, e: i64| sc.term(v, e);
    let eq = |lhs: i128, rhs: &[i128]| lhs == rhs.iter().sum::<i128>();
    let (a, b) = (g, g2);
    Ok(match *rep {
        CosetRep::S1 { alpha, beta } => {
            let (al, be) = (i64::from(alpha), i64::from(beta));
            let base = [t(a[2][2], 0), -t(a[1][2], be)];
            let g22 = eq(
                t(a[1][1], 0),
                &[base[0], base[1], -t(b[1][0], al - be), t(a[2][1], -be), -t(b[2][0], -be)],
            );
            let g22p = eq(
                t(b[1][1], 0),
                &[base[0], base[1], -t(a[1][0], be - al), -t(b[2][1], -al), t(a[2][0], -al)],
            );
            let g33p = eq(t(b[2][2], 0), &[base[0], base[1], -t(b[1][2], al)]);
            let rest = eq(t(a[0][0], 0), &[t(b[1][1], 0), -t(b[1][2], al)])
                && eq(t(b[0][0], 0), &[t(a[1][1], 0), t(a[1][2], be)])
                && eq(t(a[0][1], 0), &[t(b[1][0], 0), -t(b[1][2], be)])
                && eq(t(b[0][1], 0), &[t(a[1][2], al), t(a[1][0], 0)])
                && a[0][2] == b[1][2]
                && b[0][2] == a[1][2];
            g22 && g22p && g33p && rest
        }
        CosetRep::T { a: tri, x } => {
            let x = i128::from(
                x.residue
                    .ok_or_else(|| Error::Usage(format!("representative {rep} has no concrete x")))?,
            );
            let (a1, a2, a3) = (i64::from(tri.c1()), i64::from(tri.c2()), i64::from(tri.c3()));
            let pp = i128::from(p);
            let r = pp.pow((a1 + a2) as u32) - x * pp.pow(a3 as u32);
            let main = eq(
                t((a[0][1] * pp.pow(a1 as u32) + a[0][2] * pp.pow((a1 + a2) as u32)
                    - a[1][2] * pp.pow(a2 as u32))
                    * x
                    * r, 0),
                &[
                    -t(a[1][0] * x, a2),
                    -t(b[1][0] * r, a2 - a3),
                    t(a[2][1] * r, a1 - a3),
                    t(b[2][1] * x, a1),
                    t(a[2][0], a1 + a2 - a3),
                    -t(b[2][0], a1 + a2 - a3),
                ],
            );
            let g11p = eq(
                t(b[0][0], 0),
                &[t(a[1][1], 0), t(a[1][2] * x, a3 - a1), t(a[1][0], -a1), -t(b[1][0], -a1)],
            );
            let g11 = eq(t(a[0][0], 0), &[t(b[0][0], 0), -t(a[0][1], a1), -t(a[0][2] * x, a3)]);
            let g22p = eq(
                t(b[1][1], 0),
                &[t(a[1][1], 0), -t(a[0][1], a1), -t(a[0][2], a1 + a2), t(a[1][2], a2)],
            );
            let g33p = eq(
                t(b[2][2], 0),
                &[t(a[1][1], 0), -t(a[0][1] * r, -a2), -t(a[2][1], -a2), t(b[2][1], -a2)],
            );
            let g33 = eq(t(a[2][2], 0), &[t(b[2][2], 0), -t(a[0][2] * r, 0), t(a[1][2], a2)]);
            let rest = b[0][1] == a[0][1] + a[0][2] * pp.pow(a2 as u32)
                && b[0][2] == a[0][2]
                && b[1][2] == a[1][2] - a[0][2] * pp.pow(a1 as u32);
            main && g11p && g11 && g22p && g33p && g33 && rest
        }
        _ => return Err(Error::Usage(format!("no coefficient relations recorded for {rep}"))),
    })
}

/// `h^-1 g h` over the integers.
pub fn partner(rep: &CosetRep, p: u64, g: &IntMat) -> Result<IntMat> {
    let h = rep_integer_matrix(rep, p)?.map(|r| r.map(i128::from));
    Ok(mul(&mul(&unimodular_inverse(&h), g), &h))
}

/// Draws `samples` coset pairs for `rep` in `C_c x C_d` mod `p^n` and
/// checks the coefficient relations on each.
pub fn coset_pair_relations_check(
    family: RelationFamily,
    rep: &CosetRep,
    c: Triple,
    d: Triple,
    ring: &ResidueRing,
    samples: u64,
    seed: u64,
) -> Result<RelationReport> {
    let matches_family = matches!(
        (family, rep),
        (RelationFamily::S1, CosetRep::S1 { .. }) | (RelationFamily::TFamily, CosetRep::T { .. })
    );
    if !matches_family {
        return Err(Error::Usage(format!("{rep} is not in the {family:?} family")));
    }
    if !is_representative(rep, c, d) {
        return Err(Error::ForeignRepresentative { rep: rep.to_string(), c, d });
    }
    if c.c3().max(d.c3()) > ring.level() {
        return Err(Error::InvalidRing(format!("level {} is below c3 or d3", ring.level())));
    }
    let p = ring.p();
    let mut rng = orbit_rng(seed, 0);
    let mut found = 0;
    let mut failures = 0;
    let mut draws: u64 = 0;
    let max_draws = samples.saturating_mul(100_000).max(1);
    while found < samples {
        draws += 1;
        if draws > max_draws {
            return Err(Error::ResourceLimit {
                what: "draws for coset pairs",
                needed: u128::from(draws),
                ceiling: u128::from(max_draws),
            });
        }
        let g = random_c_element(ring, c, &mut rng);
        let lift = g.0.map(|r| r.map(i128::from));
        let g2 = partner(rep, p, &lift)?;
        let g2_mod = ring.mat(g2.map(|r| r.map(|v| v.rem_euclid(ring.modulus() as i128) as i64)));
        if !ring.in_c(&g2_mod, d) {
            continue;
        }
        found += 1;
        // an arbitrary lift of the same pair exercises the p-adic reading
        let shift: i128 = rng.gen_range(0..3);
        let mut g_alt = lift;
        g_alt[0][1] += shift * ring.modulus() as i128;
        let g2_alt = partner(rep, p, &g_alt)?;
        if !relations_hold(rep, p, &lift, &g2)? || !relations_hold(rep, p, &g_alt, &g2_alt)? {
            failures += 1;
        }
    }
    Ok(RelationReport {
        family,
        rep: rep.to_string(),
        c,
        d,
        level: ring.level(),
        samples,
        failures,
        pass: failures == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::expand_r;

    const ID: IntMat = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

    #[test]
    fn identity_pair_satisfies_relations() {
        let c = Triple::new(1, 1, 1);
        for rep in expand_r(c, c, 5) {
            if matches!(rep, CosetRep::S1 { .. } | CosetRep::T { .. }) {
                assert!(relations_hold(&rep, 5, &ID, &ID).unwrap(), "{rep}");
            }
        }
    }

    #[test]
    fn sampled_s1_pairs() {
        let ring = ResidueRing::new(5, 1).unwrap();
        let c = Triple::new(1, 1, 1);
        let rep = CosetRep::S1 { alpha: 1, beta: 1 };
        let r = coset_pair_relations_check(RelationFamily::S1, &rep, c, c, &ring, 1000, 3).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn corrupted_pair_fails() {
        let ring = ResidueRing::new(5, 1).unwrap();
        let c = Triple::new(1, 1, 1);
        let rep = CosetRep::S1 { alpha: 1, beta: 1 };
        let mut rng = orbit_rng(1, 0);
        let g = loop {
            let g = random_c_element(&ring, c, &mut rng).0.map(|r| r.map(i128::from));
            let g2 = partner(&rep, 5, &g).unwrap();
            let m = ring.mat(g2.map(|r| r.map(|v| v.rem_euclid(5) as i64)));
            if ring.in_c(&m, c) {
                break g;
            }
        };
        let mut g2 = partner(&rep, 5, &g).unwrap();
        assert!(relations_hold(&rep, 5, &g, &g2).unwrap());
        g2[1][0] += 5;
        assert!(!relations_hold(&rep, 5, &g, &g2).unwrap());
    }

    #[test]
    fn family_mismatch_is_rejected() {
        let ring = ResidueRing::new(5, 1).unwrap();
        let c = Triple::new(1, 1, 1);
        let rep = CosetRep::W0;
        assert!(coset_pair_relations_check(RelationFamily::S1, &rep, c, c, &ring, 1, 0).is_err());
    }
}
