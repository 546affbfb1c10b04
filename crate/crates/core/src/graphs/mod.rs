//! Labelled vertex-weighted multigraphs.

mod canonical;
pub mod families;
mod multigraph;
mod structure;

pub use canonical::CanonicalForm;
pub use families::{broom, canonical_star_forest, complete, cycle, path, star, theta};
pub use multigraph::Multigraph;
pub(crate) use multigraph::{check_permutation, UnionFind};
pub use structure::AcyclicOrientation;
