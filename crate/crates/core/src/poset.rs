//! The poset `T` of triples `0 <= c1, c2 <= c3 <= c1 + c2` ordered
//! componentwise, and its up-set `T_m` above `m = (M, N, N)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A triple of valuation exponents `(c1, c2, c3)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct Triple(pub [u32; 3]);

impl Triple {
    pub const fn new(c1: u32, c2: u32, c3: u32) -> Self {
        Triple([c1, c2, c3])
    }

    pub fn c1(self) -> u32 {
        self.0[0]
    }

    pub fn c2(self) -> u32 {
        self.0[1]
    }

    pub fn c3(self) -> u32 {
        self.0[2]
    }

    /// Component as a signed integer, for the many formulas that subtract.
    pub fn s(self, i: usize) -> i64 {
        i64::from(self.0[i])
    }

    pub fn sum(self) -> u32 {
        self.0.iter().sum()
    }

    pub fn in_t(self) -> bool {
        let [c1, c2, c3] = self.0;
        c1 <= c3 && c2 <= c3 && c3 <= c1 + c2
    }

    /// Membership in `T^1 = { 1 <= a1, a2 <= a3 }`.
    pub fn in_t1(self) -> bool {
        let [a1, a2, a3] = self.0;
        a1 >= 1 && a2 >= 1 && a1 <= a3 && a2 <= a3
    }

    /// Componentwise `self <= other`.
    pub fn leq(self, other: Triple) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn in_tm(self, m: &ConductorData) -> bool {
        self.in_t() && m.base().leq(self)
    }

    /// Componentwise `max(c_i, 1)`.
    pub fn underline(self) -> Triple {
        Triple(self.0.map(|c| c.max(1)))
    }

    pub fn is_zero(self) -> bool {
        self.0 == [0, 0, 0]
    }
}

impl From<[u32; 3]> for Triple {
    fn from(a: [u32; 3]) -> Self {
        Triple(a)
    }
}

impl From<Triple> for [u32; 3] {
    fn from(t: Triple) -> Self {
        t.0
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"c1,c2,c3"`, optionally wrapped in parentheses.
impl FromStr for Triple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedTriple(s.to_string());
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<u32> = inner
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match parts.as_slice() {
            [a, b, c] => Ok(Triple::new(*a, *b, *c)),
            _ => Err(bad()),
        }
    }
}

/// Conductors `M = cond(chi_2) <= N = cond(chi_3)` of a normalized ramified
/// character, with `N >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConductorData {
    #[serde(rename = "M")]
    pub m: u32,
    #[serde(rename = "N")]
    pub n: u32,
}

impl ConductorData {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m > n || n == 0 {
            return Err(Error::InvalidConductors { m, n });
        }
        Ok(ConductorData { m, n })
    }

    /// Skips validation. Only the meet computation is meaningful for the
    /// unramified base `m = (0,0,0)` this admits.
    pub fn unchecked(m: u32, n: u32) -> Self {
        ConductorData { m, n }
    }

    /// The base triple `m = (M, N, N)`.
    pub fn base(&self) -> Triple {
        Triple::new(self.m, self.n, self.n)
    }

    fn require(&self, c: Triple) -> Result<()> {
        if c.in_tm(self) {
            Ok(())
        } else {
            Err(Error::NotInTm(c, self.base()))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PosetFlags {
    pub in_t: bool,
    pub in_t1: bool,
    pub in_tm: bool,
    pub leq_cd: bool,
}

pub fn poset_predicates(c: Triple, d: Triple, m: &ConductorData) -> PosetFlags {
    PosetFlags {
        in_t: c.in_t(),
        in_t1: c.in_t1(),
        in_tm: c.in_tm(m),
        leq_cd: c.leq(d),
    }
}

/// Immediate descendant candidates `c_{i}` of `c` and the indices `S_c` of
/// those that stay in `T_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Descendants {
    pub candidates: Vec<(u8, Triple)>,
    pub sset: Vec<u8>,
}

impl Descendants {
    pub fn get(&self, i: u8) -> Option<Triple> {
        self.candidates.iter().find(|(j, _)| *j == i).map(|(_, t)| *t)
    }
}

fn descendant_candidates(c: Triple) -> Vec<(u8, Triple)> {
    let [c1, c2, c3] = c.0;
    if c1 == 0 && c2 == 0 {
        Vec::new()
    } else if c1 == 0 {
        vec![(3, Triple::new(0, c2 - 1, c2 - 1))]
    } else if c2 == 0 {
        vec![(3, Triple::new(c1 - 1, 0, c1 - 1))]
    } else {
        vec![
            (1, Triple::new(c1 - 1, c2, c3)),
            (2, Triple::new(c1, c2 - 1, c3)),
            (3, Triple::new(c1, c2, c3 - 1)),
        ]
    }
}

pub fn descendants(c: Triple, m: &ConductorData) -> Result<Descendants> {
    m.require(c)?;
    let candidates = descendant_candidates(c);
    let sset = candidates
        .iter()
        .filter(|(_, t)| t.in_tm(m))
        .map(|(i, _)| *i)
        .collect();
    Ok(Descendants { candidates, sset })
}

/// The largest element of `T_m` below every `c_{i}`, `i` in `subset`;
/// `c` itself for the empty subset.
///
/// Closed form: componentwise minimum, then clamp `c3 <= c1 + c2`. Indices
/// outside the candidate list are ignored.
pub fn meet_family(c: Triple, subset: &[u8], _m: &ConductorData) -> Triple {
    if subset.is_empty() {
        return c;
    }
    let candidates = descendant_candidates(c);
    let mut w = [u32::MAX; 3];
    for i in subset {
        if let Some((_, t)) = candidates.iter().find(|(j, _)| j == i) {
            for k in 0..3 {
                w[k] = w[k].min(t.0[k]);
            }
        }
    }
    if w[0] == u32::MAX {
        return c;
    }
    w[2] = w[2].min(w[0] + w[1]);
    Triple(w)
}

/// Finite bounds for [`enumerate_tm`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    ComponentwiseMax(Triple),
    SumMax(u32),
}

impl Bound {
    pub fn admits(&self, c: Triple) -> bool {
        match *self {
            Bound::ComponentwiseMax(b) => c.leq(b),
            Bound::SumMax(s) => c.sum() <= s,
        }
    }

    fn box_limit(&self) -> u32 {
        match *self {
            Bound::ComponentwiseMax(b) => *b.0.iter().max().unwrap(),
            Bound::SumMax(s) => s,
        }
    }
}

/// All `c` in `T_m` admitted by `bound`, in lexicographic order.
pub fn enumerate_tm(m: &ConductorData, bound: Bound) -> Vec<Triple> {
    let lim = bound.box_limit();
    let mut out = Vec::new();
    for c1 in m.m..=lim {
        for c2 in m.n..=lim {
            for c3 in c1.max(c2)..=(c1 + c2).min(lim) {
                let c = Triple::new(c1, c2, c3);
                if bound.admits(c) && c.in_tm(m) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Every subset of `sset`, smallest first, each sorted ascending.
pub fn subsets(sset: &[u8]) -> Vec<Vec<u8>> {
    let n = sset.len();
    let mut out: Vec<Vec<u8>> = (0u32..(1 << n))
        .map(|mask| {
            (0..n)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| sset[b])
                .collect()
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
