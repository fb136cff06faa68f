//! Matrices of the distinguished double coset representatives.

use super::ring::{ResidueMat, ResidueRing};
use crate::cosets::CosetRep;
use crate::error::{Error, Result};

/// Integer matrix of a concrete representative (`x` lifted to its residue).
pub fn rep_integer_matrix(rep: &CosetRep, p: u64) -> Result<[[i64; 3]; 3]> {
    let pw = |e: u32| (p as i64).pow(e);
    Ok(match *rep {
        CosetRep::T { a, x } => {
            let x = x.residue.ok_or_else(|| {
                Error::Usage(format!("representative {rep} has no concrete x"))
            })? as i64;
            [[1, 0, 0], [pw(a.c1()), 1, 0], [x * pw(a.c3()), pw(a.c2()), 1]]
        }
        CosetRep::S1 { alpha, beta } => [[0, 1, 0], [1, 0, 0], [pw(beta), pw(alpha), 1]],
        CosetRep::S2 { alpha, beta } => [[1, 0, 0], [pw(beta), 0, 1], [pw(alpha), 1, 0]],
        CosetRep::S1S2 { alpha } => [[0, 0, 1], [1, 0, 0], [pw(alpha), 1, 0]],
        CosetRep::S2S1 { alpha } => [[0, 1, 0], [0, pw(alpha), 1], [1, 0, 0]],
        CosetRep::W0 => [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    })
}

/// The representative reduced mod `p^n`.
pub fn rep_matrix(ring: &ResidueRing, rep: &CosetRep) -> Result<ResidueMat> {
    Ok(ring.mat(rep_integer_matrix(rep, ring.p())?))
}
