//! Quantum matrix algebras of `GL(m|n)` type built from compatible pairs of
//! Hecke R-matrices, together with exact machinery to verify their
//! Cayley-Hamilton identity and its supporting structures.

pub mod error;
pub mod scalars;
pub mod tableaux;
pub mod tensorop;
pub mod rmatrix;
pub mod heckeunits;
pub mod qmalgebra;
pub mod chverify;
pub mod cli;

pub use error::{Error, Result};
