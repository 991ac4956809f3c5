//! Command-line front end.
//!
//! Exit status: 0 YES (or a kernel / instance was produced), 1 NO,
//! 2 usage, parse or I/O error, 3 internal error.

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use bisplit_core::{kernelize, oracle_solve, solve_with, Answer, BipartiteGraph, OracleConfig, Side, VertexId};
use clap::{Parser, Subcommand, ValueEnum};

use crate::generate;
use crate::instance::{parse, serialize};
use crate::parallel::{pool, solve_kernel_parallel};
use crate::report::{Decision, ResultDocument};
use crate::svg::render_svg;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bisplit", version, about = "Crossing-free 2-layer drawings by splitting few bottom vertices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide an instance and print a result document.
    Solve(SolveArgs),
    /// Write a generated instance.
    Gen(GenArgs),
    /// Time kernelization on random instances of growing size.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Auto,
    Oracle,
    KernelOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    pub mode: Mode,
    /// Write the document here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Include kernel statistics and the size bound in text output.
    #[arg(long)]
    pub stats: bool,
    /// Worker threads for the kernel search.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = OracleConfig::default().max_vertices)]
    pub oracle_max_vertices: usize,
    #[arg(long, default_value_t = OracleConfig::default().max_budget)]
    pub oracle_max_k: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenType {
    Caterpillar,
    Planted,
    Random,
}

#[derive(Debug, clap::Args)]
pub struct GenArgs {
    #[arg(long = "type", value_enum)]
    pub kind: GenType,
    /// Vertex count (for `planted`, before merging).
    #[arg(long)]
    pub n: usize,
    /// Edge count, `random` only.
    #[arg(long)]
    pub m: Option<usize>,
    /// Number of merged groups, `planted` only.
    #[arg(long)]
    pub planted_k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct BenchArgs {
    /// Edge counts; each instance has as many vertices as edges.
    #[arg(long, value_delimiter = ',', default_values_t = [10_000usize, 100_000, 1_000_000])]
    pub m: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub k: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Timed runs per size; the fastest is reported.
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve(args) => solve_cmd(&args, stdout),
        Command::Gen(args) => gen_cmd(&args, stdout),
        Command::Bench(args) => bench_cmd(&args, stdout),
    };
    match result {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn usage(msg: impl std::fmt::Display) -> (i32, String) {
    (EXIT_USAGE, msg.to_string())
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), (i32, String)> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| usage(e)),
    }
}

fn solve_cmd(args: &SolveArgs, stdout: &mut dyn Write) -> CmdResult {
    let text = std::fs::read_to_string(&args.input).map_err(|e| usage(format!("{}: {e}", args.input.display())))?;
    let g = parse(&text).map_err(|e| usage(format!("{}: {e}", args.input.display())))?;
    let mut svg = None;
    let doc = match args.mode {
        Mode::Auto => {
            let jobs = usize::from(args.jobs);
            let answer = if jobs > 1 {
                let pool = pool(jobs);
                solve_with(&g, args.k, |kg, budget| solve_kernel_parallel(kg, budget, &pool))
            } else {
                solve_with(&g, args.k, bisplit_core::solve_kernel)
            }
            .map_err(|e| (EXIT_INTERNAL, e.to_string()))?;
            if let (Some(_), Answer::Yes(yes)) = (&args.svg, &answer) {
                let split = &yes.lifted.split;
                svg = Some(render_svg(&split.graph, &yes.lifted.drawing, |v| split.original(v)));
            }
            ResultDocument::from_answer(&g, args.k, &answer)
        }
        Mode::Oracle => {
            let config = OracleConfig {
                max_vertices: args.oracle_max_vertices,
                max_budget: args.oracle_max_k,
            };
            let witness = oracle_solve(&g, args.k, &config).map_err(usage)?;
            if let (Some(_), Some(w)) = (&args.svg, &witness) {
                let origin = origins_by_name(&g);
                svg = Some(render_svg(&w.split_graph, &w.drawing, |v| {
                    let label = w.split_graph.label(v).unwrap_or("");
                    let base = label.rsplit_once('#').map_or(label, |(b, _)| b);
                    let side = w.split_graph.side(v).unwrap_or(Side::Bottom);
                    origin.get(&(side, base)).copied().unwrap_or(v)
                }));
            }
            ResultDocument::from_oracle(&g, args.k, witness.as_ref())
        }
        Mode::KernelOnly => ResultDocument::from_kernel(&g, args.k, &kernelize(&g, args.k)),
    };
    if let Some(path) = &args.svg {
        // NO answers and kernels have no drawing; an empty canvas is written
        let svg = svg.unwrap_or_else(|| render_svg(&BipartiteGraph::new(), &Default::default(), |v| v));
        std::fs::write(path, svg).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    let rendered = match args.format {
        Format::Text => doc.to_text(args.stats),
        Format::Json => doc.to_json(),
    };
    emit(args.out.as_deref(), &rendered, stdout)?;
    Ok(match doc.decision {
        Decision::Yes | Decision::Kernel => EXIT_YES,
        Decision::No => EXIT_NO,
    })
}

fn origins_by_name(g: &BipartiteGraph) -> HashMap<(Side, &str), VertexId> {
    g.vertices()
        .filter_map(|v| Some(((g.side(v)?, g.label(v)?), v)))
        .collect()
}

fn gen_cmd(args: &GenArgs, stdout: &mut dyn Write) -> CmdResult {
    let g = match args.kind {
        GenType::Caterpillar => generate::caterpillar(args.n, args.seed),
        GenType::Planted => {
            let k = args.planted_k.ok_or_else(|| usage("--planted-k is required for planted instances"))?;
            generate::planted(args.n, k, args.seed)
        }
        GenType::Random => {
            let m = args.m.ok_or_else(|| usage("--m is required for random instances"))?;
            generate::random(args.n, m, args.seed)
        }
    }
    .map_err(usage)?;
    emit(args.out.as_deref(), &serialize(&g), stdout)?;
    Ok(EXIT_YES)
}

/// Fastest of `reps` kernelization runs, in seconds, and the kernel size.
pub fn time_kernelize(g: &BipartiteGraph, k: u32, reps: usize) -> (f64, Option<usize>) {
    let mut best = f64::INFINITY;
    let mut size = None;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let kernel = kernelize(g, k);
        best = best.min(start.elapsed().as_secs_f64());
        size = kernel.ok().map(|k| k.stats.kernel_vertices);
    }
    (best, size)
}

fn bench_cmd(args: &BenchArgs, stdout: &mut dyn Write) -> CmdResult {
    let mut out = String::from("m n seconds kernel_vertices\n");
    for &m in &args.m {
        let g = generate::random(m, m, args.seed).map_err(usage)?;
        let (secs, size) = time_kernelize(&g, args.k, args.reps);
        let size = size.map_or_else(|| "rejected".to_string(), |s| s.to_string());
        out.push_str(&format!("{m} {} {secs:.4} {size}\n", g.vertex_count()));
    }
    emit(None, &out, stdout)?;
    Ok(EXIT_YES)
}
