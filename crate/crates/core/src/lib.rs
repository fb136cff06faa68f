//! Exact branching data for ramified principal series representations of
//! `GL(3)` over a p-adic field, restricted to the maximal compact subgroup
//! `K = GL(3, R)`.
//!
//! Everything symbolic is a polynomial in the residue field size `q`
//! ([`polyq::QPoly`]). The layers build on one another:
//!
//! * [`poset`]: the index poset `T`, the up-set `T_m`, immediate descendants
//!   and meets.
//! * [`cosets`]: distinguished double coset representatives of
//!   `C_c \ K / C_d` and their symbolic counts.
//! * [`support`]: which double cosets support intertwining operators, the
//!   dimensions of `U_c`, `V_c` and the intertwining numbers `I(V_c, V_d)`.
//! * [`oracle`]: brute-force verification over `GL(3, Z/p^n)`.
//! * [`cli`]: the batch front end, DOT diagrams and CSV tables.
//!
//! ```
//! use gl3branch::poset::{ConductorData, Triple};
//! use gl3branch::support::intertwine_v;
//!
//! let m = ConductorData::new(2, 2).unwrap();
//! let c = Triple::new(3, 3, 4);
//! let report = intertwine_v(c, c, &m).unwrap();
//! assert_eq!(report.i_vv.to_string(), "q - 1");
//! ```

pub mod cli;
pub mod cosets;
pub mod error;
pub mod oracle;
pub mod polyq;
pub mod poset;
pub mod support;

pub use error::{Error, Result};

/// Version tag written at the top of every JSON document.
pub const SCHEMA: &str = "gl3branch/1";
