//! Kernelize, search the kernel, lift.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;

use crate::graph::{BipartiteGraph, VertexId};
use crate::kernel::{kernelize, Budgets, KernelStats, Rejection};
use crate::lift::{lift, LiftError, LiftedResult};
use crate::search::solve_kernel;
use crate::solution::Solution;

#[derive(Debug, Clone)]
pub struct YesAnswer {
    pub budgets: Budgets,
    pub stats: KernelStats,
    /// Bottom vertices split by the reductions themselves.
    pub forced_splits: BTreeSet<VertexId>,
    /// Solution found on the kernel, in kernel ids.
    pub kernel_solution: Solution,
    pub lifted: LiftedResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoReason {
    Rejected(Rejection),
    /// The kernel passed every check but no split set within budget works.
    KernelInfeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoAnswer {
    pub reason: NoReason,
    pub budgets: Budgets,
    pub stats: KernelStats,
}

#[derive(Debug, Clone)]
pub enum Answer {
    Yes(Box<YesAnswer>),
    No(NoAnswer),
}

impl Answer {
    pub fn is_yes(&self) -> bool {
        matches!(self, Answer::Yes(_))
    }
}

/// Decides whether splitting at most `k` bottom vertices of `g` makes it
/// drawable on two layers without crossings, with a witness on YES.
pub fn solve(g: &BipartiteGraph, k: u32) -> Result<Answer, LiftError> {
    solve_with(g, k, solve_kernel)
}

/// [`solve`] with a caller-provided kernel search, which must return a
/// solution with at most `budget` split vertices whenever one exists.
pub fn solve_with(
    g: &BipartiteGraph,
    k: u32,
    search: impl FnOnce(&BipartiteGraph, i64) -> Option<Solution>,
) -> Result<Answer, LiftError> {
    let kernel = match kernelize(g, k) {
        Ok(kernel) => kernel,
        Err(no) => {
            return Ok(Answer::No(NoAnswer {
                reason: NoReason::Rejected(no.reason),
                budgets: no.budgets,
                stats: no.stats,
            }))
        }
    };
    let Some(kernel_solution) = search(&kernel.state.graph, kernel.state.budget) else {
        return Ok(Answer::No(NoAnswer {
            reason: NoReason::KernelInfeasible,
            budgets: kernel.budgets,
            stats: kernel.stats,
        }));
    };
    let lifted = lift(&kernel, &kernel_solution)?;
    if &lifted.split.contract()? != g {
        return Err(LiftError::ContractionMismatch);
    }
    Ok(Answer::Yes(Box::new(YesAnswer {
        budgets: kernel.budgets,
        stats: kernel.stats,
        forced_splits: kernel.state.forced_splits.clone(),
        kernel_solution,
        lifted,
    })))
}
