//! Exhaustive split search on a (small) kernel.

use alloc::vec;
use alloc::vec::Vec;

use crate::biplanarity::is_biplanar;
use crate::graph::{BipartiteGraph, VertexId};
use crate::solution::{apply_splits, Block, Solution};

/// Set partitions of `0..n` as restricted growth strings, in lexicographic
/// order. Entry `i` of a string is the block index of element `i`.
#[derive(Debug, Clone)]
pub struct Partitions {
    rgs: Vec<usize>,
    // max[i] = largest entry among rgs[..i]
    max: Vec<usize>,
    done: bool,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Partitions {
            rgs: vec![0; n],
            max: vec![0; n],
            done: n == 0,
        }
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            if self.rgs[i] <= self.max[i] {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.max[j] = self.max[j - 1].max(self.rgs[j - 1]);
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.rgs.clone();
        self.advance();
        Some(out)
    }
}

/// All partitions of `n` elements, each as a restricted growth string.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions::new(n)
}

/// Groups `items` by a restricted growth string.
pub fn blocks_of<T: Copy>(items: &[T], rgs: &[usize]) -> Vec<Vec<T>> {
    let count = rgs.iter().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); count];
    for (&x, &b) in items.iter().zip(rgs) {
        blocks[b].push(x);
    }
    blocks
}

/// Brute-force search for at most `budget` split vertices.
///
/// Subsets of candidate vertices (bottom vertices of degree two or more) are
/// tried by size, then lexicographically; for each subset every combination
/// of proper partitions is tried, the first vertex's partition varying
/// slowest.
#[derive(Debug, Clone)]
pub struct KernelSearch<'a> {
    graph: &'a BipartiteGraph,
    candidates: Vec<VertexId>,
    budget: usize,
}

impl<'a> KernelSearch<'a> {
    pub fn new(graph: &'a BipartiteGraph, budget: i64) -> Self {
        let candidates: Vec<_> = graph.bottom_vertices().filter(|&b| graph.deg(b) >= 2).collect();
        let budget = usize::try_from(budget.max(0)).unwrap_or(usize::MAX).min(candidates.len());
        KernelSearch { graph, candidates, budget }
    }

    pub fn candidates(&self) -> &[VertexId] {
        &self.candidates
    }

    /// Largest subset size worth trying.
    pub fn max_size(&self) -> usize {
        self.budget
    }

    /// Subsets of the candidates of exactly `size` elements, in order.
    pub fn subsets(&self, size: usize) -> Combinations<'_> {
        Combinations::new(&self.candidates, size)
    }

    /// First split of exactly the vertices in `subset` that makes the graph
    /// biplanar.
    pub fn try_subset(&self, subset: &[VertexId]) -> Option<Solution> {
        if subset.is_empty() {
            return is_biplanar(self.graph).then(Solution::new);
        }
        let options: Vec<Vec<Vec<Block>>> = subset
            .iter()
            .map(|&v| {
                let nbrs = self.graph.adj(v);
                enumerate_partitions(nbrs.len())
                    .skip(1)
                    .map(|rgs| blocks_of(nbrs, &rgs))
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; subset.len()];
        loop {
            let mut sol = Solution::new();
            for (i, &v) in subset.iter().enumerate() {
                sol.insert(v, options[i][choice[i]].clone());
            }
            let split = apply_splits(self.graph, &sol).expect("enumerated partitions are valid");
            if is_biplanar(&split.graph) {
                return Some(sol);
            }
            // odometer, last position fastest
            let mut i = subset.len();
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < options[i].len() {
                    break;
                }
                choice[i] = 0;
            }
        }
    }

    pub fn run(&self) -> Option<Solution> {
        (0..=self.budget).find_map(|size| self.subsets(size).find_map(|s| self.try_subset(&s)))
    }
}

/// `size`-element subsets of a slice in lexicographic index order.
#[derive(Debug, Clone)]
pub struct Combinations<'a> {
    items: &'a [VertexId],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Combinations<'a> {
    fn new(items: &'a [VertexId], size: usize) -> Self {
        Combinations {
            items,
            idx: (0..size).collect(),
            done: size > items.len(),
        }
    }
}

impl Iterator for Combinations<'_> {
    type Item = Vec<VertexId>;

    fn next(&mut self) -> Option<Vec<VertexId>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.items[i]).collect();
        let (n, k) = (self.items.len(), self.idx.len());
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Searches `g` for a solution with at most `budget` split vertices; the one
/// returned has as few split vertices as possible.
pub fn solve_kernel(g: &BipartiteGraph, budget: i64) -> Option<Solution> {
    if budget < 0 {
        return None;
    }
    KernelSearch::new(g, budget).run()
}
