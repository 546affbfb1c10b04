//! Enumeration bounds. `TUTTEKIT_MAX_N` overrides the vertex bounds for the
//! partition-sum routines and the reduction algorithm.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_VERTICES: usize = 10;
pub const DEFAULT_MAX_REDUCE_VERTICES: usize = 7;
pub const DEFAULT_MAX_CANONICAL_VERTICES: usize = 12;
pub const DEFAULT_MAX_SUBSET_EDGES: usize = 16;
pub const DEFAULT_DEGREE_CAP: usize = 12;
pub const DEFAULT_MAX_COLORINGS: usize = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex bound for set-partition sums (X, XB, friendliness).
    pub max_vertices: usize,
    /// Vertex bound for the star-forest reduction.
    pub max_reduce_vertices: usize,
    /// Vertex bound for brute-force canonical forms.
    pub max_canonical_vertices: usize,
    /// Edge bound for sums over all edge subsets.
    pub max_subset_edges: usize,
    /// Degree cap for e/p basis conversions.
    pub degree_cap: usize,
    /// Bound on N^n for coloring enumerations of digraphs.
    pub max_colorings: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_reduce_vertices: DEFAULT_MAX_REDUCE_VERTICES,
            max_canonical_vertices: DEFAULT_MAX_CANONICAL_VERTICES,
            max_subset_edges: DEFAULT_MAX_SUBSET_EDGES,
            degree_cap: DEFAULT_DEGREE_CAP,
            max_colorings: DEFAULT_MAX_COLORINGS,
        }
    }
}

impl Limits {
    /// The process-wide limits, read once from the environment.
    pub fn current() -> Limits {
        static LIMITS: OnceLock<Limits> = OnceLock::new();
        *LIMITS.get_or_init(|| {
            let mut limits = Limits::default();
            if let Some(n) = std::env::var("TUTTEKIT_MAX_N")
                .ok()
                .and_then(|v| v.trim().parse::<usize>().ok())
            {
                limits.max_vertices = n;
                limits.max_reduce_vertices = n;
                limits.max_canonical_vertices = limits.max_canonical_vertices.max(n);
            }
            limits
        })
    }
}

pub(crate) fn check(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        Err(Error::BoundExceeded { what, value, bound })
    } else {
        Ok(())
    }
}
