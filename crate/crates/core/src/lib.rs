//! Removing all crossings of a 2-layer drawing by splitting a bounded number
//! of bottom vertices.
//!
//! [`solve`] kernelizes an instance, searches the kernel exhaustively and
//! lifts the kernel's solution back to a crossing-free drawing of the input.
//! [`oracle::oracle_solve`] answers the same question by plain enumeration
//! for small graphs.

#![no_std]

extern crate alloc;

pub mod biplanarity;
pub mod graph;
pub mod kernel;
pub mod lift;
pub mod oracle;
pub mod pipeline;
pub mod search;
pub mod solution;

pub use biplanarity::{count_crossings, is_biplanar, layout, Drawing, DrawingError};
pub use graph::{BipartiteGraph, GraphError, Side, VertexId};
pub use kernel::{kernelize, Kernel, NoCertificate, ReductionTrace, Rejection};
pub use lift::{lift, LiftError, LiftedResult};
pub use oracle::{oracle_solve, OracleConfig, OracleError, OracleWitness};
pub use pipeline::{solve, solve_with, Answer, NoAnswer, YesAnswer};
pub use search::{enumerate_partitions, solve_kernel, KernelSearch};
pub use solution::{apply_splits, Block, Solution, SolutionError, SplitGraph};
