//! Mackey support: the double coset of `k` supports a nonzero element of
//! `H(chi_c, chi_d)` iff `chi_c(g) = chi_d(k^-1 g k)` for every `g` in
//! `C_c ∩ k C_d k^-1`.

use std::collections::{HashMap, HashSet};
use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::characters::{chi_exponent_unchecked, CharSpec};
use super::orbits::{closure, coset_space, DoubleCosetPartition};
use super::ring::{ResidueMat, ResidueRing};
use crate::error::{Error, Result};
use crate::poset::Triple;

/// Default number of draws per double coset in sampled mode.
pub const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum MackeyMode {
    /// Checks the Schreier generators of every stabilizer. Both sides of
    /// the criterion are homomorphisms, so this decides it on the whole
    /// intersection.
    Exact,
    /// Random words in the Schreier generators of each stabilizer.
    Sampled { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitVerdict {
    pub orbit: usize,
    pub supported: bool,
    /// Intersection elements checked.
    pub checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MackeyResult {
    pub count: usize,
    /// True when a positive verdict rests on sampling only.
    pub probabilistic: bool,
    pub verdicts: Vec<OrbitVerdict>,
}

fn agrees(ring: &ResidueRing, spec: &CharSpec, d: Triple, k: &ResidueMat, k_inv: &ResidueMat, g: &ResidueMat) -> Option<bool> {
    let conj = ring.mat_mul(&ring.mat_mul(k_inv, g), k);
    if !ring.in_c(&conj, d) {
        return None;
    }
    Some(chi_exponent_unchecked(g, spec) == chi_exponent_unchecked(&conj, spec))
}

fn check_conductors(ring: &ResidueRing, c: Triple, d: Triple, spec: &CharSpec) -> Result<()> {
    let base = Triple::new(spec.m, spec.n, spec.n);
    for t in [c, d] {
        if !base.leq(t) {
            return Err(Error::NotInTm(t, base));
        }
    }
    if ring.p() != spec.p {
        return Err(Error::InvalidRing(format!("characters live over p = {}", spec.p)));
    }
    Ok(())
}

/// `|C_c mod p^n|`.
pub fn subgroup_order(ring: &ResidueRing, c: Triple, ceiling: u128) -> Result<u128> {
    let index = coset_space(ring, c, ceiling)?.len() as u128;
    Ok(ring.group_order() / index)
}

/// Schreier generators of the stabilizer in `C_c` of the base coset of
/// orbit `o`.
pub fn stabilizer_generators(ring: &ResidueRing, part: &DoubleCosetPartition, o: usize) -> Vec<ResidueMat> {
    let base = part.orbits[o].base;
    let mut transversal: HashMap<usize, (ResidueMat, ResidueMat)> = HashMap::new();
    let id = ring.identity();
    transversal.insert(base, (id, id));
    let mut queue = VecDeque::from([base]);
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    while let Some(y) = queue.pop_front() {
        let (u_y, _) = transversal[&y];
        for (s, row) in part.generators.iter().zip(&part.action) {
            let z = row[y] as usize;
            let su = ring.mat_mul(s, &u_y);
            match transversal.get(&z) {
                None => {
                    let inv = ring.mat_inv(&su).expect("C_c elements are invertible");
                    transversal.insert(z, (su, inv));
                    queue.push_back(z);
                }
                Some((_, u_z_inv)) => {
                    let h = ring.mat_mul(u_z_inv, &su);
                    if h != id && seen.insert(h) {
                        out.push(h);
                    }
                }
            }
        }
    }
    out
}

fn exact_verdict(ring: &ResidueRing, part: &DoubleCosetPartition, o: usize, spec: &CharSpec) -> OrbitVerdict {
    let k = part.representative(o);
    let k_inv = ring.mat_inv(k).expect("coset representatives are invertible");
    let gens = stabilizer_generators(ring, part, o);
    let mut supported = true;
    for h in &gens {
        let ok = agrees(ring, spec, part.d, k, &k_inv, h)
            .expect("Schreier generators stabilize the base coset");
        if !ok {
            supported = false;
            break;
        }
    }
    OrbitVerdict { orbit: o, supported, checked: gens.len() as u64 }
}

/// Verdict from every element of the stabilizer, enumerated by closure.
pub fn exhaustive_verdict(
    ring: &ResidueRing,
    part: &DoubleCosetPartition,
    o: usize,
    spec: &CharSpec,
    ceiling: u128,
) -> Result<OrbitVerdict> {
    let k = part.representative(o);
    let k_inv = ring.mat_inv(k).expect("coset representatives are invertible");
    let elements = closure(ring, &stabilizer_generators(ring, part, o), ceiling)?;
    let supported = elements.iter().all(|g| {
        agrees(ring, spec, part.d, k, &k_inv, g).expect("closure stays in the stabilizer")
    });
    Ok(OrbitVerdict { orbit: o, supported, checked: elements.len() as u64 })
}

/// A uniform element of `C_c mod p^n`.
pub fn random_c_element<R: Rng>(ring: &ResidueRing, c: Triple, rng: &mut R) -> ResidueMat {
    let modulus = ring.modulus();
    loop {
        let mut g = [[0u64; 3]; 3];
        for (i, row) in g.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let e = match (i, j) {
                    (1, 0) => c.c1(),
                    (2, 1) => c.c2(),
                    (2, 0) => c.c3(),
                    _ => 0,
                };
                let scale = ring.pi_pow(e);
                *cell = if scale == 0 {
                    0
                } else {
                    ring.mul(scale, rng.gen_range(0..modulus / scale))
                };
            }
        }
        let g = ResidueMat(g);
        if ring.is_invertible(&g) {
            return g;
        }
    }
}

/// Generators multiplied together per sampled element.
pub const WORD_LEN: usize = 24;

/// Sampled verdict for orbit `o`: each draw is a product of [`WORD_LEN`]
/// random Schreier generators of the stabilizer.
pub fn sampled_verdict<R: Rng>(
    ring: &ResidueRing,
    part: &DoubleCosetPartition,
    o: usize,
    spec: &CharSpec,
    samples: u64,
    rng: &mut R,
) -> OrbitVerdict {
    let k = part.representative(o);
    let k_inv = ring.mat_inv(k).expect("coset representatives are invertible");
    let gens = stabilizer_generators(ring, part, o);
    if gens.is_empty() {
        return OrbitVerdict { orbit: o, supported: true, checked: 0 };
    }
    for i in 0..samples {
        let mut h = ring.identity();
        for _ in 0..WORD_LEN {
            h = ring.mat_mul(&h, &gens[rng.gen_range(0..gens.len())]);
        }
        let ok = agrees(ring, spec, part.d, k, &k_inv, &h).expect("words in the stabilizer stay in it");
        if !ok {
            return OrbitVerdict { orbit: o, supported: false, checked: i + 1 };
        }
    }
    OrbitVerdict { orbit: o, supported: true, checked: samples }
}

/// Per-orbit RNG so verdicts do not depend on scheduling.
pub fn orbit_rng(seed: u64, orbit: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (orbit as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Number of double cosets supporting `H(chi_c, chi_d)`.
pub fn mackey_support_count(
    ring: &ResidueRing,
    part: &DoubleCosetPartition,
    spec: &CharSpec,
    mode: MackeyMode,
    ceiling: u128,
) -> Result<MackeyResult> {
    let (c, d) = (part.c, part.d);
    check_conductors(ring, c, d, spec)?;
    let verdicts: Vec<OrbitVerdict> = match mode {
        MackeyMode::Exact => {
            let order = subgroup_order(ring, c, ceiling)?;
            let largest = order / part.orbits.iter().map(|o| o.size as u128).min().unwrap_or(1);
            if largest > ceiling {
                return Err(Error::ResourceLimit {
                    what: "intersection subgroup elements (use sampled mode)",
                    needed: largest,
                    ceiling,
                });
            }
            (0..part.count())
                .into_par_iter()
                .map(|o| exact_verdict(ring, part, o, spec))
                .collect()
        }
        MackeyMode::Sampled { samples, seed } => (0..part.count())
            .into_par_iter()
            .map(|o| sampled_verdict(ring, part, o, spec, samples, &mut orbit_rng(seed, o)))
            .collect(),
    };
    Ok(MackeyResult {
        count: verdicts.iter().filter(|v| v.supported).count(),
        probabilistic: matches!(mode, MackeyMode::Sampled { .. }),
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::characters::build_characters;
    use crate::oracle::orbits::{double_coset_orbits, DEFAULT_CEILING};

    fn t(a: u32, b: u32, c: u32) -> Triple {
        Triple::new(a, b, c)
    }

    fn exact(c: Triple, d: Triple, m: u32, n: u32) -> usize {
        let ring = ResidueRing::new(5, 1).unwrap();
        let part = double_coset_orbits(&ring, c, d, DEFAULT_CEILING).unwrap();
        let spec = build_characters(5, m, n).unwrap();
        mackey_support_count(&ring, &part, &spec, MackeyMode::Exact, DEFAULT_CEILING)
            .unwrap()
            .count
    }

    #[test]
    fn small_support_counts() {
        assert_eq!(exact(t(1, 1, 1), t(1, 1, 1), 0, 1), 2);
        assert_eq!(exact(t(1, 1, 1), t(1, 1, 1), 1, 1), 1);
        assert_eq!(exact(t(0, 1, 1), t(0, 1, 1), 0, 1), 1);
    }

    #[test]
    fn exhaustive_matches_generator_check() {
        let ring = ResidueRing::new(5, 1).unwrap();
        let c = t(1, 1, 1);
        let part = double_coset_orbits(&ring, c, c, DEFAULT_CEILING).unwrap();
        let spec = build_characters(5, 0, 1).unwrap();
        for o in 0..part.count() {
            let full = exhaustive_verdict(&ring, &part, o, &spec, DEFAULT_CEILING).unwrap();
            assert_eq!(full.supported, exact_verdict(&ring, &part, o, &spec).supported);
            assert_eq!(full.checked as u128 * part.orbits[o].size as u128, 8000);
        }
    }

    #[test]
    fn sampled_agrees_and_is_seeded() {
        let ring = ResidueRing::new(5, 1).unwrap();
        let c = t(1, 1, 1);
        let part = double_coset_orbits(&ring, c, c, DEFAULT_CEILING).unwrap();
        let spec = build_characters(5, 0, 1).unwrap();
        let mode = MackeyMode::Sampled { samples: 20_000, seed: 7 };
        let a = mackey_support_count(&ring, &part, &spec, mode, DEFAULT_CEILING).unwrap();
        let b = mackey_support_count(&ring, &part, &spec, mode, DEFAULT_CEILING).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.count, 2);
        assert!(a.probabilistic);
    }

    #[test]
    fn exact_mode_respects_ceiling() {
        let ring = ResidueRing::new(5, 1).unwrap();
        let c = t(1, 1, 1);
        let part = double_coset_orbits(&ring, c, c, DEFAULT_CEILING).unwrap();
        let spec = build_characters(5, 0, 1).unwrap();
        let err = mackey_support_count(&ring, &part, &spec, MackeyMode::Exact, 500);
        assert!(matches!(err, Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn conductor_requirement() {
        let ring = ResidueRing::new(5, 1).unwrap();
        let c = t(0, 1, 1);
        let part = double_coset_orbits(&ring, c, c, DEFAULT_CEILING).unwrap();
        let spec = build_characters(5, 1, 1).unwrap();
        assert!(mackey_support_count(&ring, &part, &spec, MackeyMode::Exact, DEFAULT_CEILING).is_err());
    }
}
