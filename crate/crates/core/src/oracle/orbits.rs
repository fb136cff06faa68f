//! Right cosets `K / C_d` and the orbits of `C_c` on them.

use std::collections::HashMap;
use std::collections::VecDeque;

use rayon::prelude::*;

use super::lattice::{coset_label, CosetLabel};
use super::ring::{ResidueMat, ResidueRing};
use crate::error::{Error, Result};
use crate::poset::Triple;

/// Default resource ceiling (cosets, or group elements in exact mode).
pub const DEFAULT_CEILING: u128 = 1_000_000_000;

/// The set `K / C_d` with a representative matrix per coset.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub d: Triple,
    index: HashMap<CosetLabel, u32>,
    reps: Vec<ResidueMat>,
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, i: usize) -> &ResidueMat {
        &self.reps[i]
    }

    /// Index of the coset `g C_d`.
    pub fn locate(&self, ring: &ResidueRing, g: &ResidueMat) -> usize {
        self.index[&coset_label(ring, g, self.d)] as usize
    }
}

fn check_level(ring: &ResidueRing, t: Triple) -> Result<()> {
    if !t.in_t() {
        return Err(Error::NotInT(t));
    }
    if t.c3() > ring.level() {
        return Err(Error::InvalidRing(format!(
            "level {} is below c3 = {} for {t}",
            ring.level(),
            t.c3()
        )));
    }
    Ok(())
}

/// Enumerates `K / C_d` by breadth-first search from the identity coset
/// under left multiplication by generators of `K`.
pub fn coset_space(ring: &ResidueRing, d: Triple, ceiling: u128) -> Result<CosetSpace> {
    check_level(ring, d)?;
    let gens = ring.k_generators();
    let mut index = HashMap::new();
    let mut reps = Vec::new();
    let id = ring.identity();
    index.insert(coset_label(ring, &id, d), 0);
    reps.push(id);
    let mut queue = VecDeque::from([0usize]);
    while let Some(y) = queue.pop_front() {
        for s in &gens {
            let g = ring.mat_mul(s, &reps[y]);
            let label = coset_label(ring, &g, d);
            if !index.contains_key(&label) {
                if reps.len() as u128 >= ceiling {
                    return Err(Error::ResourceLimit {
                        what: "cosets in K/C_d",
                        needed: reps.len() as u128 + 1,
                        ceiling,
                    });
                }
                index.insert(label, reps.len() as u32);
                queue.push_back(reps.len());
                reps.push(g);
            }
        }
    }
    log::debug!("K/C_{d} has {} cosets", reps.len());
    Ok(CosetSpace { d, index, reps })
}

/// One `C_c`-orbit on `K / C_d`, i.e. one double coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Smallest coset index in the orbit.
    pub base: usize,
    pub size: usize,
}

/// The partition of `K / C_d` into `C_c`-orbits.
#[derive(Clone, Debug)]
pub struct DoubleCosetPartition {
    pub c: Triple,
    pub d: Triple,
    pub space: CosetSpace,
    /// Generators of `C_c` used for the action.
    pub generators: Vec<ResidueMat>,
    /// `action[s][y]` is the coset `generators[s] * y`.
    pub action: Vec<Vec<u32>>,
    pub orbit_of: Vec<u32>,
    pub orbits: Vec<Orbit>,
}

impl DoubleCosetPartition {
    pub fn count(&self) -> usize {
        self.orbits.len()
    }

    /// Representative matrix `k` of the double coset `C_c k C_d` of orbit `o`.
    pub fn representative(&self, o: usize) -> &ResidueMat {
        self.space.rep(self.orbits[o].base)
    }

    /// Orbit containing the double coset of `g`.
    pub fn orbit_of_matrix(&self, ring: &ResidueRing, g: &ResidueMat) -> usize {
        self.orbit_of[self.space.locate(ring, g)] as usize
    }
}

/// `C_c \ K / C_d` as orbits of `C_c` acting on `K / C_d`.
pub fn double_coset_orbits(
    ring: &ResidueRing,
    c: Triple,
    d: Triple,
    ceiling: u128,
) -> Result<DoubleCosetPartition> {
    check_level(ring, c)?;
    let space = coset_space(ring, d, ceiling)?;
    orbits_on(ring, c, space)
}

/// Orbits of `C_c` on an already enumerated coset space.
pub fn orbits_on(ring: &ResidueRing, c: Triple, space: CosetSpace) -> Result<DoubleCosetPartition> {
    check_level(ring, c)?;
    let d = space.d;
    let generators = ring.c_generators(c);
    let action: Vec<Vec<u32>> = generators
        .iter()
        .map(|s| {
            (0..space.len())
                .into_par_iter()
                .map(|y| space.locate(ring, &ring.mat_mul(s, space.rep(y))) as u32)
                .collect()
        })
        .collect();
    let mut orbit_of = vec![u32::MAX; space.len()];
    let mut orbits = Vec::new();
    for start in 0..space.len() {
        if orbit_of[start] != u32::MAX {
            continue;
        }
        let id = orbits.len() as u32;
        orbit_of[start] = id;
        let mut size = 1;
        let mut stack = vec![start];
        while let Some(y) = stack.pop() {
            for row in &action {
                let z = row[y] as usize;
                if orbit_of[z] == u32::MAX {
                    orbit_of[z] = id;
                    size += 1;
                    stack.push(z);
                }
            }
        }
        orbits.push(Orbit { base: start, size });
    }
    Ok(DoubleCosetPartition { c, d, space, generators, action, orbit_of, orbits })
}

/// Elements of the subgroup generated by `gens`, by closure. Refuses once
/// the group exceeds `ceiling` elements.
pub fn closure(ring: &ResidueRing, gens: &[ResidueMat], ceiling: u128) -> Result<Vec<ResidueMat>> {
    let mut seen = std::collections::HashSet::new();
    let id = ring.identity();
    seen.insert(id);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        let g = out[i];
        i += 1;
        for s in gens {
            let h = ring.mat_mul(s, &g);
            if seen.insert(h) {
                if out.len() as u128 >= ceiling {
                    return Err(Error::ResourceLimit {
                        what: "subgroup elements",
                        needed: out.len() as u128 + 1,
                        ceiling,
                    });
                }
                out.push(h);
            }
        }
    }
    Ok(out)
}
