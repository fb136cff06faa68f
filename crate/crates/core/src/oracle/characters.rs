//! Characters of `(Z/p^N)^x` as exponents of a fixed generator.

use serde::Serialize;

use super::ring::{ResidueMat, ResidueRing};
use crate::error::{Error, Result};
use crate::poset::{ConductorData, Triple};

/// `chi2 = psi^e2` and `chi3 = psi^e3`, where `psi` sends the generator to
/// a primitive root of unity of order `order`.
#[derive(Clone, Debug, Serialize)]
pub struct CharSpec {
    pub p: u64,
    pub m: u32,
    pub n: u32,
    pub generator: u64,
    pub order: u64,
    pub e2: u64,
    pub e3: u64,
    #[serde(skip)]
    dlog: Vec<u64>,
}

impl CharSpec {
    /// Discrete log base `generator` of a unit modulo `p^N`.
    pub fn dlog(&self, u: u64) -> u64 {
        let modulus = self.p.pow(self.n);
        let v = self.dlog[(u % modulus) as usize];
        assert!(v != u64::MAX, "{u} is not a unit mod {modulus}");
        v
    }

    /// Least `t` with `1 + p^t Z` in the kernel of `psi^e`.
    pub fn conductor(&self, e: u64) -> u32 {
        let modulus = self.p.pow(self.n);
        (0..=self.n)
            .find(|&t| {
                let step = self.p.pow(t);
                (0..modulus)
                    .step_by(step as usize)
                    .map(|k| (1 + k) % modulus)
                    .filter(|u| u % self.p != 0)
                    .all(|u| e * self.dlog(u) % self.order == 0)
            })
            .expect("1 + p^N Z is always in the kernel")
    }
}

/// Characters with `cond(chi2) = M`, `cond(chi3) = N` and
/// `cond(chi2 / chi3) = N`.
pub fn build_characters(p: u64, m: u32, n: u32) -> Result<CharSpec> {
    ConductorData::new(m, n)?;
    let ring = ResidueRing::new(p, n)?;
    let generator = ring.primitive_root();
    let order = ring.unit_order();
    let modulus = ring.modulus();
    let mut dlog = vec![u64::MAX; modulus as usize];
    let mut x = 1;
    for k in 0..order {
        dlog[x as usize] = k;
        x = ring.mul(x, generator);
    }
    let e3 = 1;
    let e2 = if m == 0 {
        0
    } else if m < n {
        p.pow(n - m)
    } else {
        2
    };
    let spec = CharSpec { p, m, n, generator, order, e2, e3, dlog };
    let ratio = (e2 + order - e3) % order;
    assert_eq!(spec.conductor(e2), m, "conductor of chi2");
    assert_eq!(spec.conductor(e3), n, "conductor of chi3");
    assert_eq!(spec.conductor(ratio), n, "conductor of chi2/chi3");
    Ok(spec)
}

/// Exponent of `chi_c(g) = chi2(g22) chi3(g33)`.
pub fn chi_exponent(ring: &ResidueRing, g: &ResidueMat, c: Triple, spec: &CharSpec) -> Result<u64> {
    let base = Triple::new(spec.m, spec.n, spec.n);
    if !base.leq(c) {
        return Err(Error::NotInTm(c, base));
    }
    if ring.p() != spec.p || ring.level() < spec.n {
        return Err(Error::InvalidRing(format!(
            "ring Z/{}^{} cannot carry characters of conductor {}",
            ring.p(),
            ring.level(),
            spec.n
        )));
    }
    if !ring.in_c(g, c) {
        return Err(Error::NotInSubgroup(format!("{g:?} is not in C_{c}")));
    }
    Ok(chi_exponent_unchecked(g, spec))
}

pub(crate) fn chi_exponent_unchecked(g: &ResidueMat, spec: &CharSpec) -> u64 {
    // with c1 = 0 the entry g22 need not be a unit, but then chi2 is trivial
    let two = if spec.e2 == 0 { 0 } else { spec.e2 * spec.dlog(g.0[1][1]) };
    (two + spec.e3 * spec.dlog(g.0[2][2])) % spec.order
}
