//! Distinguished representatives for the double coset space
//! `C_c \ K / C_d`.
//!
//! Representatives come in six families indexed by the Weyl group
//! `W = {1, s1, s2, s1s2, s2s1, w0}`. The identity family `t_{a,x}` is the
//! only one whose size depends on `q`: the parameter `x` runs over a set of
//! residue classes whose shape is controlled by the depth invariants
//! `a(c,d) <= a(c,d)'`.
//!
//! Symbolically the `x` parameter is carried as a *stratum*: all classes
//! sharing `val(x - 1)` and precision. [`expand_r`] splits strata into
//! concrete residues for a given prime.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::polyq::{phi, QPoly};
use crate::poset::Triple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeylElement {
    #[serde(rename = "1")]
    Identity,
    #[serde(rename = "s1")]
    S1,
    #[serde(rename = "s2")]
    S2,
    #[serde(rename = "s1s2")]
    S1S2,
    #[serde(rename = "s2s1")]
    S2S1,
    #[serde(rename = "w0")]
    W0,
}

impl WeylElement {
    pub const ALL: [WeylElement; 6] = [
        WeylElement::Identity,
        WeylElement::S1,
        WeylElement::S2,
        WeylElement::S1S2,
        WeylElement::S2S1,
        WeylElement::W0,
    ];
}

/// The subset `W_{c,d}` of Weyl elements that index nonempty families.
pub fn weyl_subset(c: Triple, d: Triple) -> Vec<WeylElement> {
    use WeylElement::*;
    let [c1, c2, _] = c.0;
    let [d1, d2, _] = d.0;
    let one = Triple::new(1, 1, 1);
    if one.leq(c) && one.leq(d) {
        WeylElement::ALL.to_vec()
    } else if c1 * d1 * (c2 + d2) > 0 && c2 * d2 == 0 {
        vec![Identity, S1, W0]
    } else if c1 * d1 == 0 && (c1 + d1) * c2 * d2 > 0 {
        vec![Identity, S2, W0]
    } else if c1 * c2 == 0 && d1 * d2 == 0 && (c1 + c2) * (d1 + d2) > 0 {
        vec![Identity, W0]
    } else {
        // Only c = (0,0,0) or d = (0,0,0) reaches this branch.
        vec![Identity]
    }
}

/// The triples `a` indexing the identity family, in lexicographic order.
pub fn tcd_set(c: Triple, d: Triple) -> Vec<Triple> {
    let [c1, c2, _] = c.0;
    let [d1, d2, _] = d.0;
    if c.is_zero() || d.is_zero() {
        return vec![Triple::new(1, 1, 1)];
    }
    if c2 * d2 > 0 && c1 == 0 && d1 == 0 {
        return (1..=c2.min(d2)).map(|a| Triple::new(1, a, a)).collect();
    }
    if c1 * d1 > 0 && c2 == 0 && d2 == 0 {
        return (1..=c1.min(d1)).map(|a| Triple::new(a, 1, a)).collect();
    }
    let cu = c.underline();
    let du = d.underline();
    let mut out = Vec::new();
    for a1 in 1..=cu.c1().min(du.c1()) {
        for a2 in 1..=cu.c2().min(du.c2()) {
            let top = cu.c3().min(du.c3()).min(a1 + cu.c2()).min(du.c1() + a2);
            for a3 in a1.max(a2)..=top {
                out.push(Triple::new(a1, a2, a3));
            }
        }
    }
    out
}

/// The depth invariants `a(c,d)` and `a(c,d)'` of a triple `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthPair {
    pub a_cd: u32,
    pub a_cd_prime: u32,
}

/// `c - a` and `d - a` are read componentwise, so the inner minimum of
/// `a(c,d)` ranges over twelve terms.
pub fn depth_pair(a: Triple, c: Triple, d: Triple) -> DepthPair {
    let (a1, a2, a3) = (a.s(0), a.s(1), a.s(2));
    let mut terms = vec![a1, a2, a3 - a1, a3 - a2];
    for i in 0..3 {
        terms.push(c.s(i) - a.s(i));
        terms.push(d.s(i) - a.s(i));
    }
    terms.push(a1 + c.s(1) - a3);
    terms.push(d.s(0) + a2 - a3);
    let a_cd = terms.into_iter().min().unwrap().max(0);
    let a_cd_prime = [d.s(2) - a3, c.s(2) - a3, c.s(0) - a1, d.s(1) - a2]
        .into_iter()
        .min()
        .unwrap()
        .max(0);
    DepthPair {
        a_cd: a_cd as u32,
        a_cd_prime: a_cd_prime as u32,
    }
}

/// A p-adic valuation, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    /// `self <= bound`, where `None` is `+inf`.
    pub fn at_most(self, bound: Option<i64>) -> bool {
        match (self, bound) {
            (_, None) => true,
            (Valuation::Infinite, Some(_)) => false,
            (Valuation::Finite(v), Some(b)) => i64::from(v) <= b,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_u32(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum XClassKind {
    /// `a1 + a2 != a3`: `x` ranges over `(R/p^k)^x`, `k = a(c,d)`.
    UnitClass,
    /// `a1 + a2 = a3`: classes stratified by `val(x - 1)`.
    OnePlusPiClass,
}

/// A class (or, with `residue = None`, a whole stratum of classes) of the
/// `x` parameter of `t_{a,x}`.
///
/// For `OnePlusPiClass` every member has `val(x - 1)` equal to
/// `val_x_minus_1` and is read modulo `p^residue_precision`; the stratum
/// with infinite valuation is the single class of `x = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct XClassLabel {
    pub kind: XClassKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub val_x_minus_1: Option<Valuation>,
    pub residue_precision: u32,
    #[serde(rename = "representative_residue", skip_serializing_if = "Option::is_none")]
    pub residue: Option<u64>,
}

impl XClassLabel {
    pub fn is_stratum(&self) -> bool {
        self.residue.is_none()
    }

    pub fn stratum(&self) -> XClassLabel {
        XClassLabel { residue: None, ..*self }
    }

    /// Whether `val(x - 1) <= bound` for the members of this class. Unit
    /// classes carry no valuation constraint and always pass.
    pub fn passes(&self, bound: Option<i64>) -> bool {
        match self.val_x_minus_1 {
            None => true,
            Some(v) => v.at_most(bound),
        }
    }

    /// Number of classes in the stratum (1 for a concrete class).
    pub fn count(&self) -> QPoly {
        if self.residue.is_some() {
            return QPoly::one();
        }
        match (self.kind, self.val_x_minus_1) {
            (XClassKind::UnitClass, _) => phi(self.residue_precision),
            (XClassKind::OnePlusPiClass, Some(Valuation::Infinite)) => QPoly::one(),
            (XClassKind::OnePlusPiClass, Some(Valuation::Finite(0))) => {
                let k = self.residue_precision;
                if k == 0 {
                    QPoly::one()
                } else {
                    QPoly::q().pow(k - 1) * QPoly::from_coeffs([-2, 1])
                }
            }
            (XClassKind::OnePlusPiClass, Some(Valuation::Finite(i))) => {
                phi(self.residue_precision - i)
            }
            (XClassKind::OnePlusPiClass, None) => unreachable!("one-plus-pi class without valuation"),
        }
    }

    /// Representative residues of every class in the stratum, for `q = p`.
    pub fn residues(&self, p: u64) -> Vec<u64> {
        if let Some(r) = self.residue {
            return vec![r];
        }
        let units_mod = |k: u32| -> Vec<u64> {
            if k == 0 {
                vec![1]
            } else {
                (1..p.pow(k)).filter(|u| u % p != 0).collect()
            }
        };
        match (self.kind, self.val_x_minus_1) {
            (XClassKind::UnitClass, _) => units_mod(self.residue_precision),
            (XClassKind::OnePlusPiClass, Some(Valuation::Infinite)) => vec![1],
            (XClassKind::OnePlusPiClass, Some(Valuation::Finite(0))) => {
                let k = self.residue_precision;
                if k == 0 {
                    vec![2]
                } else {
                    (0..p.pow(k)).filter(|x| x % p != 0 && x % p != 1).collect()
                }
            }
            (XClassKind::OnePlusPiClass, Some(Valuation::Finite(i))) => {
                units_mod(self.residue_precision - i)
                    .into_iter()
                    .map(|u| 1 + p.pow(i) * u)
                    .collect()
            }
            (XClassKind::OnePlusPiClass, None) => unreachable!("one-plus-pi class without valuation"),
        }
    }
}

/// The strata of `X^a_{c,d}`.
pub fn x_strata(a: Triple, c: Triple, d: Triple) -> Vec<XClassLabel> {
    let DepthPair { a_cd: k, a_cd_prime: kp } = depth_pair(a, c, d);
    if a.c1() + a.c2() != a.c3() {
        return vec![XClassLabel {
            kind: XClassKind::UnitClass,
            val_x_minus_1: None,
            residue_precision: k,
            residue: None,
        }];
    }
    let stratum = |val, prec| XClassLabel {
        kind: XClassKind::OnePlusPiClass,
        val_x_minus_1: Some(val),
        residue_precision: prec,
        residue: None,
    };
    if kp == 0 {
        return vec![stratum(Valuation::Finite(0), 0)];
    }
    let mut out: Vec<XClassLabel> = (0..kp)
        .map(|i| stratum(Valuation::Finite(i), (i + k).min(kp)))
        .collect();
    out.push(stratum(Valuation::Infinite, kp));
    out
}

/// Number of classes of `X^a_{c,d}` with `val(x - 1) <= val_bound`
/// (`None` = unbounded). The bound only constrains the `a1 + a2 = a3` case.
pub fn x_count(a: Triple, c: Triple, d: Triple, val_bound: Option<i64>) -> QPoly {
    x_strata(a, c, d)
        .iter()
        .filter(|s| s.passes(val_bound))
        .map(XClassLabel::count)
        .sum()
}

/// A distinguished double coset representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "family", content = "params")]
pub enum CosetRep {
    #[serde(rename = "T_FAMILY")]
    T { a: Triple, x: XClassLabel },
    #[serde(rename = "S1")]
    S1 { alpha: u32, beta: u32 },
    #[serde(rename = "S2")]
    S2 { alpha: u32, beta: u32 },
    #[serde(rename = "S1S2")]
    S1S2 { alpha: u32 },
    #[serde(rename = "S2S1")]
    S2S1 { alpha: u32 },
    #[serde(rename = "W0")]
    W0,
}

impl CosetRep {
    pub fn weyl(&self) -> WeylElement {
        match self {
            CosetRep::T { .. } => WeylElement::Identity,
            CosetRep::S1 { .. } => WeylElement::S1,
            CosetRep::S2 { .. } => WeylElement::S2,
            CosetRep::S1S2 { .. } => WeylElement::S1S2,
            CosetRep::S2S1 { .. } => WeylElement::S2S1,
            CosetRep::W0 => WeylElement::W0,
        }
    }

    /// How many double cosets this label stands for.
    pub fn multiplicity(&self) -> QPoly {
        match self {
            CosetRep::T { x, .. } => x.count(),
            _ => QPoly::one(),
        }
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosetRep::T { a, x } => {
                write!(f, "t_{a},")?;
                match (x.residue, x.val_x_minus_1) {
                    (Some(r), _) => write!(f, "x={r}"),
                    (None, Some(v)) => write!(f, "[val(x-1)={v}, mod p^{}]", x.residue_precision),
                    (None, None) => write!(f, "[units mod p^{}]", x.residue_precision),
                }
            }
            CosetRep::S1 { alpha, beta } => write!(f, "s1^({alpha},{beta})"),
            CosetRep::S2 { alpha, beta } => write!(f, "s2^({alpha},{beta})"),
            CosetRep::S1S2 { alpha } => write!(f, "s1s2^({alpha})"),
            CosetRep::S2S1 { alpha } => write!(f, "s2s1^({alpha})"),
            CosetRep::W0 => f.write_str("w0"),
        }
    }
}

fn s_pairs(alpha_max: i64, beta_max: i64, diff_lo: i64, diff_hi: i64) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for alpha in 1..=alpha_max {
        for beta in 1..=beta_max {
            if (diff_lo..=diff_hi).contains(&(beta - alpha)) {
                out.push((alpha as u32, beta as u32));
            }
        }
    }
    out
}

fn family(w: WeylElement, c: Triple, d: Triple) -> Vec<CosetRep> {
    let cu = c.underline();
    let du = d.underline();
    match w {
        WeylElement::Identity => tcd_set(c, d)
            .into_iter()
            .flat_map(|a| x_strata(a, c, d).into_iter().map(move |x| CosetRep::T { a, x }))
            .collect(),
        WeylElement::S1 => s_pairs(
            du.s(1).min(c.s(2)),
            cu.s(1).min(d.s(2)),
            -c.s(0),
            d.s(0),
        )
        .into_iter()
        .map(|(alpha, beta)| CosetRep::S1 { alpha, beta })
        .collect(),
        WeylElement::S2 => s_pairs(
            du.s(0).min(c.s(2)),
            cu.s(0).min(d.s(2)),
            -c.s(1),
            d.s(1),
        )
        .into_iter()
        .map(|(alpha, beta)| CosetRep::S2 { alpha, beta })
        .collect(),
        WeylElement::S1S2 => (1..=d.c1().min(c.c2()))
            .map(|alpha| CosetRep::S1S2 { alpha })
            .collect(),
        WeylElement::S2S1 => (1..=c.c1().min(d.c2()))
            .map(|alpha| CosetRep::S2S1 { alpha })
            .collect(),
        WeylElement::W0 => vec![CosetRep::W0],
    }
}

/// All representatives of `C_c \ K / C_d`, with the `x` parameter of the
/// identity family grouped into strata. Ordered by family, then
/// lexicographically.
pub fn enumerate_r(c: Triple, d: Triple) -> Vec<CosetRep> {
    weyl_subset(c, d)
        .into_iter()
        .flat_map(|w| family(w, c, d))
        .collect()
}

/// `|C_c \ K / C_d|` as a polynomial in `q`.
pub fn count_r(c: Triple, d: Triple) -> QPoly {
    enumerate_r(c, d).iter().map(CosetRep::multiplicity).sum()
}

/// [`enumerate_r`] with every stratum split into concrete residues for
/// `q = p`.
pub fn expand_r(c: Triple, d: Triple, p: u64) -> Vec<CosetRep> {
    enumerate_r(c, d)
        .into_iter()
        .flat_map(|rep| match rep {
            CosetRep::T { a, x } => x
                .residues(p)
                .into_iter()
                .map(|r| CosetRep::T {
                    a,
                    x: XClassLabel { residue: Some(r), ..x },
                })
                .collect(),
            other => vec![other],
        })
        .collect()
}

/// Whether `rep` (a stratum or a concrete class) belongs to the
/// representative set of `(c, d)`.
pub fn is_representative(rep: &CosetRep, c: Triple, d: Triple) -> bool {
    let probe = match rep {
        CosetRep::T { a, x } => CosetRep::T { a: *a, x: x.stratum() },
        other => *other,
    };
    if !weyl_subset(c, d).contains(&rep.weyl()) {
        return false;
    }
    family(rep.weyl(), c, d).contains(&probe)
}
