//! Formal combinations of labelled graphs, friendliness, the kernel
//! generators, witness graphs, and the reduction to star forests.

mod classify;
mod combination;
pub mod generators;
mod reduce;
mod witness;

pub use classify::{
    classify_n4, exhaustive_nontrivial_friendly, n4_families_expected, sample_nontrivial_friendly, s_pair, simple_graphs,
    FriendlyPair,
};
pub use combination::{Friendliness, GraphCombination, StandardForm, XFriendliness};
pub use generators::{
    broom_relation, broom_terms, cycle_relation, ell_iso, ell_loop, ell_multi, ell_os,
    ell_os_plus, ell_tri, two_edge_connected_relation,
};
pub use reduce::{
    kernel_membership, precedes, reduce_to_star_forests, CertificateStep, Generator, Reduction,
    StarForestTerm,
};
pub use witness::{verify_witness, witness_graph, WitnessCheck};
