//! Brute-force verification over the finite groups `GL(3, Z/p^n)`.

pub mod lattice;
pub mod orbits;
pub mod ring;
pub mod characters;
pub mod mackey;
pub mod reps;
pub mod report;
pub mod relations;
