use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use inflata::check::{run_suite, CheckConfig, Suite};
use inflata::closed_forms::{cutedge_bounds, cutvertex_bounds, family_formula};
use inflata::decomposition::DECOMPOSITION_CAP;
use inflata::domination::{bounds, SolverConfig, DEFAULT_MAX_NODES};
use inflata::graph::io::{format_graph, read_graph};
use inflata::report::{canonical_json, decompose_report, prediction_text, solve_report, SolveOptions};
use inflata::{inflate, Error, Family, Graph, Result};

/// k-tuple total domination in inflated graphs.
#[derive(Parser, Debug)]
#[command(name = "inflata", version, about)]
struct Cli {
    /// Print canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Search-node budget for the exact solver.
    #[arg(long, global = true, env = "INFLATA_BUDGET_NODES", default_value_t = DEFAULT_MAX_NODES)]
    budget_nodes: u64,

    /// Wall-clock limit for the exact solver, in seconds.
    #[arg(long, global = true)]
    time_limit: Option<f64>,

    /// Vertex cap for exhaustive decomposition searches.
    #[arg(long, global = true, default_value_t = DECOMPOSITION_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the inflation as a graph file plus a vertex-map sidecar.
    Inflate {
        #[command(flatten)]
        input: Input,
        /// Output graph file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Vertex-map file; defaults to `<out>.map` when `--out` is given.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Exact gamma with bounds, certificate prediction and cross-checks.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        /// Use exhaustive enumeration on the inflation instead of the clique search.
        #[arg(long)]
        oracle: bool,
    },
    /// Lower and upper bounds from the degree profile.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Search for edge-disjoint 2-factors (and a matching) certifying gamma.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Closed-form value for a named family.
    Formula {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        k: usize,
    },
    /// Intervals for graphs glued at a cut edge or a cut vertex.
    Compose {
        /// The two parts' values, `gG,gH`.
        #[arg(long, value_name = "G,H", conflicts_with = "cut_vertex", required_unless_present = "cut_vertex")]
        cut_edge: Option<String>,
        /// The v-components' values, comma separated.
        #[arg(long, value_name = "G1,G2,...")]
        cut_vertex: Option<String>,
        /// k is below both minimum degrees (cut edge only).
        #[arg(long, requires = "cut_edge")]
        strict: bool,
        #[arg(long)]
        k: usize,
    },
    /// Run a reproduction battery.
    Check {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph file (`p edge n m` / `e u v`, 1-based).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Family shorthand: kn:N, kpq:P,Q, multi:A,B,..., harary:M,N, gpg:N,M, cycle:N.
    #[arg(long)]
    family: Option<Family>,
}

impl Input {
    fn load(&self) -> Result<(String, Graph)> {
        match (&self.graph, &self.family) {
            (Some(path), _) => Ok((path.display().to_string(), read_graph(path)?)),
            (_, Some(f)) => Ok((f.to_string(), f.build()?)),
            _ => unreachable!("clap enforces one input"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn solver_config(cli: &Cli) -> SolverConfig {
    SolverConfig {
        max_nodes: cli.budget_nodes,
        time_limit: cli.time_limit.map(Duration::from_secs_f64),
        ..SolverConfig::default()
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Inflate { input, out, map } => {
            let (_, g) = input.load()?;
            let gi = inflate(&g)?;
            let text = format_graph(gi.graph());
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            let map_path = map.clone().or_else(|| out.as_ref().map(|p| sidecar(p)));
            if let Some(path) = map_path {
                std::fs::write(path, gi.format_vertex_map())?;
            }
            Ok(0)
        }
        Command::Solve { input, k, oracle } => {
            let (name, g) = input.load()?;
            let opts = SolveOptions { solver: solver_config(cli), cap: cli.cap, oracle: *oracle };
            let start = Instant::now();
            let report = solve_report(&name, &g, input.family.as_ref(), *k, &opts)?;
            if cli.json {
                println!("{}", canonical_json(&report));
            } else {
                println!("input: {name} (n = {}, m = {}), k = {k}", report.n, report.m);
                println!("bounds: [{}, {}]", report.bounds.best_lower, report.bounds.best_upper);
                if let Some(p) = &report.prediction {
                    println!("prediction: {} ({:?})", prediction_text(p), p.basis);
                }
                match (report.gamma, report.interval) {
                    (Some(gamma), _) => println!(
                        "gamma = {gamma} ({}, {} nodes, {:.2?})",
                        report.method.map_or("", |m| m.as_str()),
                        report.nodes,
                        start.elapsed()
                    ),
                    (None, Some([lo, hi])) => {
                        println!("gamma in [{lo}, {hi}] (budget exhausted after {} nodes)", report.nodes)
                    }
                    (None, None) => {}
                }
                for d in &report.discrepancies {
                    println!("discrepancy: {}: expected {}, observed {}", d.claim, d.expected, d.observed);
                }
            }
            Ok(if report.gamma.is_none() {
                2
            } else if report.discrepancies.is_empty() {
                0
            } else {
                3
            })
        }
        Command::Bounds { input, k } => {
            let (name, g) = input.load()?;
            let report = bounds(&g, *k)?;
            if cli.json {
                println!("{}", canonical_json(&report));
            } else {
                println!("input: {name}, k = {k}");
                for b in &report.lower {
                    println!("lower {:>6}  {}", b.value, b.source.tag());
                }
                for b in &report.upper {
                    println!("upper {:>6}  {}", b.value, b.source.tag());
                }
                println!("interval: [{}, {}]", report.best_lower, report.best_upper);
            }
            Ok(0)
        }
        Command::Decompose { input, k } => {
            let (name, g) = input.load()?;
            let report = decompose_report(&name, &g, *k, cli.cap)?;
            if cli.json {
                println!("{}", canonical_json(&report));
            } else {
                println!("input: {name}, k = {k}");
                println!("certificate: {}", report.kind.as_deref().unwrap_or("none"));
                for (i, f) in report.factors.iter().enumerate() {
                    let cycles: Vec<String> =
                        f.iter().map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect();
                    println!("factor {}: ({})", i + 1, cycles.join(") ("));
                }
                if !report.matching.is_empty() {
                    let edges: Vec<String> = report.matching.iter().map(|[u, v]| format!("{u}-{v}")).collect();
                    println!("matching: {}", edges.join(" "));
                }
                if let Some(u) = report.unsaturated {
                    println!("unmatched: {u}");
                }
                let p = &report.gamma_prediction;
                println!("prediction: {} ({:?})", prediction_text(p), p.basis);
            }
            Ok(0)
        }
        Command::Formula { family, k } => {
            let value = family_formula(family, *k)?;
            if cli.json {
                let out = serde_json::json!({
                    "family": family.to_string(),
                    "k": k,
                    "value": value.value,
                    "exact": value.exact,
                    "basis": value.basis,
                });
                println!("{}", canonical_json(&out));
            } else {
                let kind = if value.exact { "exact" } else { "upper bound" };
                println!("{family} k={k}: {} ({kind}, {})", value.value, value.basis);
            }
            Ok(0)
        }
        Command::Compose { cut_edge, cut_vertex, strict, k } => {
            let bound = match (cut_edge, cut_vertex) {
                (Some(text), _) => match numbers(text)?[..] {
                    [g, h] => cutedge_bounds(g, h, *k, *strict),
                    _ => return Err(Error::Input("--cut-edge takes exactly two values".into())),
                },
                (_, Some(text)) => cutvertex_bounds(&numbers(text)?, *k)?,
                _ => unreachable!("clap enforces one mode"),
            };
            if cli.json {
                println!("{}", canonical_json(&bound));
            } else {
                println!("[{}, {}] ({:?})", bound.lower, bound.upper, bound.basis);
            }
            Ok(0)
        }
        Command::Check { suite } => {
            let cfg = CheckConfig { solver: solver_config(cli), cap: cli.cap };
            let report = run_suite(*suite, &cfg)?;
            if cli.json {
                println!("{}", canonical_json(&report));
            } else {
                for o in &report.outcomes {
                    let verdict = if o.passed() { "PASS" } else { "FAIL" };
                    println!("criterion {}: {verdict} ({} instances) {}", o.criterion, o.instances, o.title);
                    for d in &o.discrepancies {
                        println!(
                            "  discrepancy [{}] {}: expected {}, observed {}",
                            d.instance, d.claim, d.expected, d.observed
                        );
                    }
                    for f in &o.findings {
                        println!(
                            "  finding [{}] {}: formula {}, solver {}",
                            f.instance, f.claim, f.expected, f.observed
                        );
                    }
                }
                println!("{} discrepancies", report.discrepancies);
            }
            Ok(if report.discrepancies == 0 { 0 } else { 3 })
        }
    }
}

fn sidecar(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".map");
    PathBuf::from(name)
}

fn numbers(text: &str) -> Result<Vec<usize>> {
    text.split(',').map(|t| t.trim().parse().map_err(|e| Error::Input(format!("bad value `{t}`: {e}")))).collect()
}
