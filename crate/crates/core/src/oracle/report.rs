//! Comparison of the symbolic counts with the finite-group oracle.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::characters::{build_characters, CharSpec};
use super::mackey::{mackey_support_count, MackeyMode, DEFAULT_SAMPLES};
use super::orbits::{coset_space, orbits_on, CosetSpace, DEFAULT_CEILING};
use super::reps::rep_matrix;
use super::ring::ResidueRing;
use crate::cosets::{count_r, expand_r};
use crate::error::{Error, Result};
use crate::poset::{enumerate_tm, Bound, ConductorData, Triple};
use crate::support::{count_s, dim_u, supports};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome for one pair `(c, d)`.
#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    pub c: Triple,
    pub d: Triple,
    #[serde(rename = "expected_R")]
    pub expected_r: i128,
    #[serde(rename = "oracle_R")]
    pub oracle_r: usize,
    #[serde(rename = "expected_S")]
    pub expected_s: i128,
    #[serde(rename = "oracle_S")]
    pub oracle_s: usize,
    pub expected_index: i128,
    pub oracle_index: usize,
    /// The concrete representatives hit pairwise distinct double cosets
    /// and exhaust them.
    pub representatives_complete: bool,
    /// Representatives whose symbolic support verdict disagrees with the
    /// oracle.
    pub support_mismatches: Vec<String>,
    /// Mode actually used for the support count.
    pub mode: MackeyMode,
    pub probabilistic: bool,
    pub status: Status,
}

/// Oracle settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub mode: MackeyMode,
    pub ceiling: u128,
    /// Whether exact mode falls back to sampling (with `fallback_seed`
    /// and [`DEFAULT_SAMPLES`] draws) when an intersection is over the
    /// ceiling.
    pub fallback_to_sampled: bool,
    pub fallback_seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mode: MackeyMode::Exact,
            ceiling: DEFAULT_CEILING,
            fallback_to_sampled: true,
            fallback_seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub p: u64,
    pub level: u32,
    pub m: ConductorData,
    pub options: VerifyOptions,
    pub pairs: Vec<PairRecord>,
    pub all_pass: bool,
}

/// All pairs `(c, d)` in `T_m` with `c3, d3 <= level`.
pub fn default_pairs(m: &ConductorData, level: u32) -> Vec<(Triple, Triple)> {
    let tm = enumerate_tm(m, Bound::ComponentwiseMax(Triple::new(level, level, level)));
    tm.iter().flat_map(|&c| tm.iter().map(move |&d| (c, d))).collect()
}

struct Verifier {
    ring: ResidueRing,
    m: ConductorData,
    spec: CharSpec,
    opts: VerifyOptions,
    spaces: HashMap<Triple, CosetSpace>,
}

impl Verifier {
    fn space(&mut self, t: Triple) -> Result<&CosetSpace> {
        if !self.spaces.contains_key(&t) {
            let s = coset_space(&self.ring, t, self.opts.ceiling)?;
            self.spaces.insert(t, s);
        }
        Ok(&self.spaces[&t])
    }

    fn pair(&mut self, c: Triple, d: Triple) -> Result<PairRecord> {
        let p = self.ring.p();
        let oracle_index = self.space(c)?.len();
        let space = self.space(d)?.clone();
        let part = orbits_on(&self.ring, c, space)?;
        let mut mode = self.opts.mode;
        let mackey = match mackey_support_count(&self.ring, &part, &self.spec, mode, self.opts.ceiling) {
            Err(Error::ResourceLimit { .. }) if mode == MackeyMode::Exact && self.opts.fallback_to_sampled => {
                mode = MackeyMode::Sampled { samples: DEFAULT_SAMPLES, seed: self.opts.fallback_seed };
                log::info!("({c}, {d}): intersection over the ceiling, sampling instead");
                mackey_support_count(&self.ring, &part, &self.spec, mode, self.opts.ceiling)?
            }
            other => other?,
        };

        let reps = expand_r(c, d, p);
        let mut hit = BTreeSet::new();
        let mut support_mismatches = Vec::new();
        for rep in &reps {
            let o = part.orbit_of_matrix(&self.ring, &rep_matrix(&self.ring, rep)?);
            hit.insert(o);
            if supports(rep, c, d, &self.m)?.supported != mackey.verdicts[o].supported {
                support_mismatches.push(rep.to_string());
            }
        }
        let representatives_complete = hit.len() == reps.len() && hit.len() == part.count();

        let expected_r = count_r(c, d).eval_i128(p)?;
        let expected_s = count_s(c, d, &self.m)?.eval_i128(p)?;
        let expected_index = dim_u(c, &self.m)?.eval_i128(p)?;
        let ok = expected_r == part.count() as i128
            && expected_s == mackey.count as i128
            && expected_index == oracle_index as i128
            && representatives_complete
            && support_mismatches.is_empty();
        if !ok {
            log::warn!("oracle mismatch for ({c}, {d})");
        }
        Ok(PairRecord {
            c,
            d,
            expected_r,
            oracle_r: part.count(),
            expected_s,
            oracle_s: mackey.count,
            expected_index,
            oracle_index,
            representatives_complete,
            support_mismatches,
            mode,
            probabilistic: mackey.probabilistic,
            status: if ok { Status::Pass } else { Status::Fail },
        })
    }
}

/// Runs the oracle on every pair and compares it with the double coset
/// count, the support count and `dim U_c`, all evaluated at `q = p`.
pub fn verify_report(
    p: u64,
    level: u32,
    m: &ConductorData,
    pairs: &[(Triple, Triple)],
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let ring = ResidueRing::new(p, level)?;
    let spec = build_characters(p, m.m, m.n)?;
    let mut v = Verifier { ring, m: *m, spec, opts: *opts, spaces: HashMap::new() };
    let records = pairs
        .iter()
        .map(|&(c, d)| v.pair(c, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        schema: crate::SCHEMA,
        p,
        level,
        m: *m,
        options: *opts,
        all_pass: records.iter().all(|r| r.status == Status::Pass),
        pairs: records,
    })
}
