//! Lifts every valid solution of the kernel, not only the first one found,
//! so that splits of merged path vertices are exercised too.

mod common;

use bisplit_core::kernel::kernelize;
use bisplit_core::search::{blocks_of, enumerate_partitions};
use bisplit_core::{apply_splits, count_crossings, is_biplanar, lift, BipartiteGraph, KernelSearch, Solution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn every_solution(g: &BipartiteGraph, budget: i64) -> Vec<Solution> {
    let search = KernelSearch::new(g, budget);
    let mut out = Vec::new();
    for size in 0..=search.max_size() {
        for subset in search.subsets(size) {
            let options: Vec<Vec<Vec<_>>> = subset
                .iter()
                .map(|&v| {
                    let nbrs = g.neighbors(v).unwrap();
                    enumerate_partitions(nbrs.len()).skip(1).map(|r| blocks_of(nbrs, &r)).collect()
                })
                .collect();
            let total: usize = options.iter().map(Vec::len).product();
            for mut code in 0..total {
                let mut sol = Solution::new();
                for (i, &v) in subset.iter().enumerate() {
                    let n = options[i].len();
                    sol.insert(v, options[i][code % n].clone());
                    code /= n;
                }
                if is_biplanar(&apply_splits(g, &sol).unwrap().graph) {
                    out.push(sol);
                }
            }
        }
    }
    out
}

#[test]
fn every_kernel_solution_lifts_without_relayout() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut merged_splits = 0;
    let mut lifted = 0;
    for round in 0..400 {
        let g = common::structured_graph(&mut rng, 20 + round % 25);
        for k in 0..=3 {
            let Ok(kernel) = kernelize(&g, k) else { continue };
            let solutions = every_solution(&kernel.state.graph, kernel.state.budget);
            for sol in solutions.iter().take(60) {
                let result = lift(&kernel, sol).unwrap_or_else(|e| panic!("{e}: {:?} k={k}", g.labelled_edges()));
                assert_eq!(result.relayouts, 0, "{:?} k={k} sol={sol:?}", g.labelled_edges());
                assert_eq!(count_crossings(&result.split.graph, &result.drawing), Ok(0));
                assert_eq!(result.split.contract().unwrap(), g);
                assert!(result.solution.len() <= k as usize);
                merged_splits += sol.split_vertices().filter(|v| v.index() >= g.id_bound()).count();
                lifted += 1;
            }
        }
    }
    assert!(merged_splits > 50, "only {merged_splits} merged vertices were split");
    eprintln!("{lifted} lifts, {merged_splits} merged splits");
}
