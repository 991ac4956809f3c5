//! Result documents, as `key value` lines or JSON.

use std::fmt::Write as _;

use bisplit_core::kernel::{Budgets, KernelStats, Rejection};
use bisplit_core::pipeline::NoReason;
use bisplit_core::{count_crossings, Answer, BipartiteGraph, Drawing, Kernel, NoCertificate, OracleWitness, Solution};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Decision {
    Yes,
    No,
    /// `kernel-only` mode when the instance survived kernelization.
    Kernel,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Yes => "YES",
            Decision::No => "NO",
            Decision::Kernel => "KERNEL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub forced_splits: usize,
    pub core_size: usize,
    pub cycles_removed: usize,
    pub path_components_removed: usize,
    pub paths: usize,
    pub shortened_paths: usize,
    pub kernel_vertices: usize,
    pub kernel_edges: usize,
    /// Size bound for the kernel; absent when a budget went negative.
    pub size_bound: Option<u128>,
}

impl From<&KernelStats> for KernelReport {
    fn from(s: &KernelStats) -> Self {
        KernelReport {
            forced_splits: s.forced_splits,
            core_size: s.core_size,
            cycles_removed: s.cycles_removed,
            path_components_removed: s.path_components_removed,
            paths: s.attached_paths,
            shortened_paths: s.shortened_paths,
            kernel_vertices: s.kernel_vertices,
            kernel_edges: s.kernel_edges,
            size_bound: s.size_bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitEntry {
    pub vertex: String,
    /// Top-vertex names of each copy's neighbourhood.
    pub blocks: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DrawingReport {
    pub top_order: Vec<String>,
    pub bottom_order: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultDocument {
    pub decision: Decision,
    pub k: u32,
    pub mode: String,
    pub budget_after_forced: Option<i64>,
    pub budget_after_cycles: Option<i64>,
    pub reason: Option<String>,
    pub forced_splits: Vec<String>,
    pub kernel: Option<KernelReport>,
    pub solution: Vec<SplitEntry>,
    pub drawing: Option<DrawingReport>,
    pub crossings: Option<u64>,
    /// `kernel-only` mode: the reduced instance in the instance file format.
    pub kernel_instance: Option<String>,
}

fn name(g: &BipartiteGraph, v: bisplit_core::VertexId) -> String {
    g.label(v).map_or_else(|| v.to_string(), str::to_string)
}

fn solution_entries(g: &BipartiteGraph, sol: &Solution) -> Vec<SplitEntry> {
    sol.iter()
        .map(|(v, blocks)| SplitEntry {
            vertex: name(g, v),
            blocks: blocks.iter().map(|b| b.iter().map(|&t| name(g, t)).collect()).collect(),
        })
        .collect()
}

fn drawing_report(split: &BipartiteGraph, d: &Drawing) -> DrawingReport {
    DrawingReport {
        top_order: d.top_order.iter().map(|&v| name(split, v)).collect(),
        bottom_order: d.bottom_order.iter().map(|&v| name(split, v)).collect(),
    }
}

fn rejection_text(g: &BipartiteGraph, r: &Rejection) -> String {
    match r {
        Rejection::DegreeTooHigh { vertex, degree, limit } => {
            format!("top vertex {} has degree {degree}, more than budget + 2 = {limit}", name(g, *vertex))
        }
        other => other.to_string(),
    }
}

impl ResultDocument {
    fn empty(mode: &str, k: u32, decision: Decision, budgets: Option<&Budgets>) -> Self {
        ResultDocument {
            decision,
            k,
            mode: mode.to_string(),
            budget_after_forced: budgets.and_then(|b| b.after_forced),
            budget_after_cycles: budgets.and_then(|b| b.after_cycles),
            reason: None,
            forced_splits: Vec::new(),
            kernel: None,
            solution: Vec::new(),
            drawing: None,
            crossings: None,
            kernel_instance: None,
        }
    }

    pub fn from_answer(g: &BipartiteGraph, k: u32, answer: &Answer) -> Self {
        match answer {
            Answer::Yes(yes) => {
                let mut doc = Self::empty("auto", k, Decision::Yes, Some(&yes.budgets));
                doc.forced_splits = yes.forced_splits.iter().map(|&v| name(g, v)).collect();
                doc.kernel = Some((&yes.stats).into());
                doc.solution = solution_entries(g, &yes.lifted.solution);
                let split = &yes.lifted.split.graph;
                doc.drawing = Some(drawing_report(split, &yes.lifted.drawing));
                doc.crossings = count_crossings(split, &yes.lifted.drawing).ok();
                doc
            }
            Answer::No(no) => {
                let mut doc = Self::empty("auto", k, Decision::No, Some(&no.budgets));
                doc.kernel = Some((&no.stats).into());
                doc.reason = Some(match &no.reason {
                    NoReason::Rejected(r) => rejection_text(g, r),
                    NoReason::KernelInfeasible => "no split set within budget makes the kernel biplanar".into(),
                });
                doc
            }
        }
    }

    pub fn from_oracle(g: &BipartiteGraph, k: u32, witness: Option<&OracleWitness>) -> Self {
        let Some(w) = witness else {
            let mut doc = Self::empty("oracle", k, Decision::No, None);
            doc.reason = Some("exhaustive search found no split set within budget".into());
            return doc;
        };
        let mut doc = Self::empty("oracle", k, Decision::Yes, None);
        doc.solution = solution_entries(g, &w.solution);
        doc.drawing = Some(drawing_report(&w.split_graph, &w.drawing));
        doc.crossings = count_crossings(&w.split_graph, &w.drawing).ok();
        doc
    }

    pub fn from_kernel(g: &BipartiteGraph, k: u32, kernel: &Result<Kernel, NoCertificate>) -> Self {
        match kernel {
            Ok(kernel) => {
                let mut doc = Self::empty("kernel-only", k, Decision::Kernel, Some(&kernel.budgets));
                doc.forced_splits = kernel.state.forced_splits.iter().map(|&v| name(g, v)).collect();
                doc.kernel = Some((&kernel.stats).into());
                doc.kernel_instance = Some(crate::instance::serialize(&kernel.state.graph));
                doc
            }
            Err(no) => {
                let mut doc = Self::empty("kernel-only", k, Decision::No, Some(&no.budgets));
                doc.kernel = Some((&no.stats).into());
                doc.reason = Some(rejection_text(g, &no.reason));
                doc
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes") + "\n"
    }

    /// `key value` lines. Kernel statistics are included when `stats` is set.
    pub fn to_text(&self, stats: bool) -> String {
        let mut out = String::new();
        let opt = |v: Option<i64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        writeln!(out, "decision {}", self.decision.as_str()).unwrap();
        writeln!(out, "k {}", self.k).unwrap();
        writeln!(out, "mode {}", self.mode).unwrap();
        if let Some(reason) = &self.reason {
            writeln!(out, "reason {reason}").unwrap();
        }
        if self.mode != "oracle" {
            writeln!(out, "budget_after_forced {}", opt(self.budget_after_forced)).unwrap();
            writeln!(out, "budget_after_cycles {}", opt(self.budget_after_cycles)).unwrap();
            writeln!(out, "forced_splits {}", self.forced_splits.join(" ")).unwrap();
        }
        if let (true, Some(s)) = (stats, &self.kernel) {
            writeln!(out, "core_size {}", s.core_size).unwrap();
            writeln!(out, "cycles_removed {}", s.cycles_removed).unwrap();
            writeln!(out, "path_components_removed {}", s.path_components_removed).unwrap();
            writeln!(out, "paths {}", s.paths).unwrap();
            writeln!(out, "shortened_paths {}", s.shortened_paths).unwrap();
            writeln!(out, "kernel_vertices {}", s.kernel_vertices).unwrap();
            writeln!(out, "kernel_edges {}", s.kernel_edges).unwrap();
            let bound = s.size_bound.map_or_else(|| "-".to_string(), |b| b.to_string());
            writeln!(out, "size_bound {bound}").unwrap();
        }
        for e in &self.solution {
            let blocks: Vec<String> = e.blocks.iter().map(|b| format!("{{{}}}", b.join(" "))).collect();
            writeln!(out, "split {} {}", e.vertex, blocks.join(" ")).unwrap();
        }
        if let Some(d) = &self.drawing {
            writeln!(out, "top_order {}", d.top_order.join(" ")).unwrap();
            writeln!(out, "bottom_order {}", d.bottom_order.join(" ")).unwrap();
        }
        if let Some(c) = self.crossings {
            writeln!(out, "crossings {c}").unwrap();
        }
        if let Some(kernel) = &self.kernel_instance {
            out.push_str("kernel_instance\n");
            out.push_str(kernel);
        }
        out
    }
}
