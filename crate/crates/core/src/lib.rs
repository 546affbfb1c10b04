//! Exact chromatic and Tutte symmetric functions of vertex-weighted
//! multigraphs, formal graph combinations and their friendliness, reduction
//! to star forests, and the quasisymmetric analogues on digraphs.
//!
//! Vertices are 0-based throughout the library API. The JSON formats and the
//! `Display` implementations use 1-based vertices.

pub mod combinatorics;
pub mod error;
pub mod graphs;
pub mod invariants;
pub mod json;
pub mod kernel;
pub mod limits;
pub mod quasi;
pub mod selfcheck;
pub mod symfun;

pub use error::{Error, Result};
