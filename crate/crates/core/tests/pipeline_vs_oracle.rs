mod common;

use bisplit_core::kernel::{extract_core, reduce_cycles_and_paths, reduce_forced_and_leaves, KernelStats};
use bisplit_core::{count_crossings, oracle_solve, solve, Answer, BipartiteGraph, OracleConfig, Side};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn oracle(g: &BipartiteGraph, k: i64) -> bool {
    k >= 0 && oracle_solve(g, k as u32, &OracleConfig { max_vertices: 16, max_budget: 3 }).unwrap().is_some()
}

fn check(g: &BipartiteGraph, k: u32) {
    let expected = oracle(g, k.into());
    let answer = solve(g, k).unwrap_or_else(|e| panic!("lift failed: {e}\n{g:?}"));
    assert_eq!(answer.is_yes(), expected, "k={k} graph={:?}", g.labelled_edges());
    if let Answer::Yes(yes) = answer {
        let lifted = &yes.lifted;
        assert_eq!(count_crossings(&lifted.split.graph, &lifted.drawing), Ok(0));
        assert!(lifted.solution.len() <= k as usize);
        assert_eq!(&lifted.split.contract().unwrap(), g);
        assert_eq!(lifted.relayouts, 0, "relayout on {:?} k={k}", g.labelled_edges());
    }
}

#[test]
fn all_graphs_up_to_six_vertices() {
    for g in common::all_small(6) {
        for k in 0..=2 {
            check(&g, k);
        }
    }
}

#[test]
fn random_graphs_up_to_ten_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1500 {
        let g = common::random_graph(&mut rng, 10, 14);
        for k in 0..=2 {
            check(&g, k);
        }
    }
}

#[test]
fn each_reduction_preserves_the_answer() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..800 {
        let g = common::random_graph(&mut rng, 10, 14);
        for k in 0..=2u32 {
            let (mut state, mut trace, mut stats) = reduce_forced_and_leaves(g.clone(), k);
            let first = oracle(&state.graph, state.budget);
            assert_eq!(oracle(&g, k.into()), first, "first reduction {:?} k={k}", g.labelled_edges());
            if state.budget < 0 {
                continue;
            }
            state.core = extract_core(&state);
            let before = state.graph.clone();
            let budget = state.budget;
            reduce_cycles_and_paths(&mut state, &mut trace, &mut stats);
            assert_eq!(oracle(&before, budget), oracle(&state.graph, state.budget));
            let _: KernelStats = stats;
        }
    }
}

/// A bottom vertex whose top leaves are removed must not end up as a leaf.
#[test]
fn leaf_removal_keeps_bottom_vertices_of_degree_two() {
    let mut g = BipartiteGraph::new();
    let t = g.add_vertex(Side::Top, "t");
    for name in ["b1", "b2"] {
        let b = g.add_vertex(Side::Bottom, name);
        let leaf = g.add_vertex(Side::Top, format!("{name}_leaf"));
        g.add_edge(t, b).unwrap();
        g.add_edge(leaf, b).unwrap();
    }
    let w = g.add_vertex(Side::Bottom, "w");
    g.add_edge(t, w).unwrap();
    for name in ["u1", "u2"] {
        let u = g.add_vertex(Side::Top, name);
        g.add_edge(u, w).unwrap();
    }
    let c: Vec<_> = ["x1", "x2"].iter().map(|n| g.add_vertex(Side::Top, *n)).collect();
    let d: Vec<_> = ["y1", "y2"].iter().map(|n| g.add_vertex(Side::Bottom, *n)).collect();
    for &x in &c {
        for &y in &d {
            g.add_edge(x, y).unwrap();
        }
    }
    assert!(!oracle(&g, 1));
    assert!(!solve(&g, 1).unwrap().is_yes());
    check(&g, 2);
}

#[test]
fn structured_graphs_with_long_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..600 {
        let g = common::structured_graph(&mut rng, 16);
        for k in 0..=3 {
            check(&g, k);
        }
    }
}
