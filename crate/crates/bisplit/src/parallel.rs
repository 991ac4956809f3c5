//! Multi-threaded kernel search.

use bisplit_core::{BipartiteGraph, KernelSearch, Solution};
use rayon::prelude::*;

const CHUNK: usize = 256;

/// Same result as [`bisplit_core::solve_kernel`]: subsets are handed to the
/// pool in chunks and the first success in sequential order wins.
pub fn solve_kernel_parallel(g: &BipartiteGraph, budget: i64, pool: &rayon::ThreadPool) -> Option<Solution> {
    if budget < 0 {
        return None;
    }
    let search = KernelSearch::new(g, budget);
    pool.install(|| {
        for size in 0..=search.max_size() {
            let mut subsets = search.subsets(size);
            loop {
                let chunk: Vec<_> = subsets.by_ref().take(CHUNK).collect();
                if chunk.is_empty() {
                    break;
                }
                if let Some(sol) = chunk.par_iter().find_map_first(|s| search.try_subset(s)) {
                    return Some(sol);
                }
            }
        }
        None
    })
}

pub fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}
