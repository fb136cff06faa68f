use thiserror::Error;

use crate::poset::Triple;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("evaluation point q = {0} is outside the supported range (q must be at least 4)")]
    QTooSmall(u64),

    #[error("invalid conductors M = {m}, N = {n}: need 0 <= M <= N and N >= 1")]
    InvalidConductors { m: u32, n: u32 },

    #[error("triple {0} is not in T_m for m = {1}")]
    NotInTm(Triple, Triple),

    #[error("triple {0} is not in T")]
    NotInT(Triple),

    #[error("dim U is undefined for {0}: both c1 and c2 vanish")]
    DegenerateTriple(Triple),

    #[error("malformed triple {0:?}; expected \"c1,c2,c3\"")]
    MalformedTriple(String),

    #[error("representative {rep} is not a double coset representative for ({c}, {d})")]
    ForeignRepresentative { rep: String, c: Triple, d: Triple },

    #[error("invalid residue ring: {0}")]
    InvalidRing(String),

    #[error("matrix is not in the required subgroup: {0}")]
    NotInSubgroup(String),

    #[error("resource ceiling exceeded: {what} needs {needed}, ceiling is {ceiling}")]
    ResourceLimit { what: &'static str, needed: u128, ceiling: u128 },

    #[error("bound exceeds the safety limit: {0}")]
    BoundTooLarge(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
