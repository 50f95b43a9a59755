//! Exact computations in the twisted queer q-Schur superalgebra.
//!
//! The algebra is spanned by endomorphisms `Phi_{A*}` labelled by super
//! matrix indices. This crate implements the action of the quantum queer
//! supergroup generators on that basis by closed formulas, an independent
//! Hecke-Clifford model that recomputes the same actions by brute force,
//! and the decomposition of the regular module into irreducible summands.

pub mod combinat;
pub mod error;
pub mod exec;
pub mod laurent;
pub mod linalg;
pub mod oracle;
pub mod qschur;
pub mod repr;

pub use error::{Error, Result};
