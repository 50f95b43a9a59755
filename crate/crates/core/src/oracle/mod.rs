//! Brute-force model of the q-Schur superalgebra inside the Hecke-Clifford
//! superalgebra, used as ground truth for the closed action formulas.

pub mod check;
pub mod hecke_clifford;
pub mod perm;
pub mod phi;

pub use check::{compare_actions, Mismatch, OracleReport};
pub use hecke_clifford::HcElement;
pub use perm::Perm;
pub use phi::{Oracle, DEFAULT_MAX_R};
