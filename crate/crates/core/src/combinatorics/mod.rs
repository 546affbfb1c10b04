//! Exact scalars, polynomials in `t`, and the partition primitives every
//! other module is built on.

mod int_partition;
mod rational;
mod set_partition;
mod tpoly;

pub use int_partition::IntPartition;
pub use rational::{binomial, factorial, format_rational, parse_rational, rat, Rational};
pub use set_partition::{lambda_of, p_shorthand, set_partitions, RgsIter, SetPartition, SetPartitions};
pub use tpoly::TPoly;
