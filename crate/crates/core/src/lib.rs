//! Approximation algorithms for the minimum k-way cut problem.
//!
//! The crate is built around greedy iterative splitting: repeatedly remove a
//! minimum h-way split from the graph until it falls into `k` connected
//! components. Alongside the greedy pipeline it provides exact small-instance
//! solvers (partition enumeration and a maximum-adjacency-ordering global min
//! cut), exact-rational ratio analysis with machine-checked inequalities, and
//! generators for the worst-case instance family on which the greedy bound is
//! attained exactly.
//!
//! All weights and ratios are exact rationals; no floating point is used
//! anywhere.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod error;
pub mod graph;
pub mod greedy;
pub mod instances;
pub mod rational;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{ComponentLabeling, Graph};
pub use greedy::{GreedyTrace, SequenceSpec};
pub use rational::Rational;
pub use solvers::{SplitResult, TieBreakPolicy};
