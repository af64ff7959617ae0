//! Regularized submodular maximization.
//!
//! Maximizes `f(S) + ℓ(S)` where `f` is non-negative submodular and `ℓ` is
//! linear, optionally subject to a matroid constraint. The crate bundles the
//! algorithms (double greedy, continuous greedy variants, cut LPs), the
//! guarantee LPs that turn per-algorithm bounds into `(α, β)` tables, and
//! the symmetry-gap searches behind the matching hardness numbers.
//!
//! Subsets are `u64` bitmasks, so ground sets hold at most 64 elements.
//! Exact oracles that enumerate subsets are limited further (see
//! [`setfn::ENUM_MAX_N`]).

pub mod bench;
pub mod contgreedy;
pub mod cutlp;
pub mod doublegreedy;
pub mod error;
pub mod guarantees;
pub mod instance;
pub mod lp;
pub mod matroid;
pub mod setfn;
pub mod sgap;

pub use error::{Error, Result};
pub use instance::{Constraint, Instance};
pub use matroid::{Matroid, Polytope};
pub use setfn::{LinearFn, Mask, SubmodularFn};
