use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homwarm::core::chromatic::{chromatic_number_with, ChromaticNumber};
use homwarm::core::folding::stiff_reduction;
use homwarm::core::homcomplex::{homological_connectivity, homology_of};
use homwarm::core::warmth::{warmth_with, Mode, WarmthOptions};
use homwarm::core::Graph;
use homwarm::deadline::Deadline;
use homwarm::experiments::{run_conjecture_check, run_random_sweep, CheckOptions, RandomModel, SweepConfig};
use homwarm::family::{generate, Provenance};
use homwarm::io::{self, Format, GraphDto};
use homwarm::report::{Check, ChromaticReport, ConnectivityReport, HomologyReport, WarmthReport, SCHEMA_VERSION};
use homwarm::suite::run_paper_suite;
use serde_json::json;

const OK: u8 = 0;
const CRITERION_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;
const BUDGET_ONLY: u8 = 3;

/// Warmth, hom-complex homology and chromatic number of graphs.
///
/// GRAPH arguments are a file (edge list, DIMACS or JSON) or a family spec
/// such as `kneser:6,2`, `toroidal:1,5` or `gnp:12,0.5`.
#[derive(Parser)]
#[command(name = "homwarm", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random families and sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Wall-clock budget for each exponential search, in milliseconds.
    #[arg(long, global = true)]
    budget_ms: Option<u64>,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FileFormat {
    Edges,
    Dimacs,
    Json,
}

impl From<FileFormat> for Format {
    fn from(f: FileFormat) -> Format {
        match f {
            FileFormat::Edges => Format::EdgeList,
            FileFormat::Dimacs => Format::Dimacs,
            FileFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Heuristic,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Heuristic => Mode::Heuristic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Gnp,
    ChungLu,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a generated graph.
    Gen {
        spec: String,
        #[arg(long, value_enum, default_value = "edges")]
        format: FileFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fold to the stiff residue.
    Fold {
        graph: String,
        /// Format for the residue.
        #[arg(long, value_enum, default_value = "edges")]
        format: FileFormat,
    },
    /// Warmth via d-stable families.
    Warmth {
        graph: String,
        /// Default: exact when the stiff residue is small enough, else heuristic.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long)]
        max_d: Option<usize>,
        #[arg(long)]
        no_fold: bool,
    },
    /// Integer homology of hom(K2, G).
    Homology {
        graph: String,
        #[arg(long)]
        max_dim: Option<usize>,
        /// Also print cell counts per dimension.
        #[arg(long)]
        f_vector: bool,
    },
    /// Chromatic number.
    Chromatic { graph: String },
    /// All invariants and the consistency checks.
    Conjecture {
        graph: String,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Seeded random-graph sweep.
    Sweep {
        #[arg(long, value_enum, default_value = "gnp")]
        model: ModelArg,
        /// Comma-separated sizes.
        #[arg(long, value_delimiter = ',', default_value = "8,12,16")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 30)]
        trials: usize,
        /// Edge probability for gnp.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Mean expected degree for chung-lu.
        #[arg(long, default_value_t = 3.0)]
        avg: f64,
        /// Power-law exponent for chung-lu.
        #[arg(long, default_value_t = 2.5)]
        beta: f64,
        /// Per-trial CSV; stdout when neither this nor --json is given.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Per-n aggregate CSV.
        #[arg(long)]
        aggregates: Option<PathBuf>,
        /// Full JSON report.
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Run the acceptance criteria and print a pass/fail table.
    PaperSuite {
        /// Comma-separated criterion ids; default all.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn load(arg: &str, seed: u64) -> Result<(Graph, Provenance), InputError> {
    let path = Path::new(arg);
    if path.is_file() {
        let bytes = std::fs::read(path)?;
        let text = String::from_utf8(bytes.clone())?;
        let g = io::parse(&text, Format::detect(path, &text)).map_err(|e| InputError(format!("{arg}: {e}")))?;
        return Ok((g, Provenance::file(arg, &bytes)));
    }
    let g = generate(arg, seed).map_err(|e| InputError(format!("{arg}: not a file, and {e}")))?;
    Ok((g.graph, g.provenance))
}

fn write_to(path: &Path, text: &str) -> Result<(), InputError> {
    std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).unwrap());
}

fn run(cli: Cli) -> Result<u8, InputError> {
    let seed = cli.seed;
    match cli.cmd {
        Cmd::Gen { spec, format, output } => {
            let g = generate(&spec, seed)?;
            let text = io::write(&g.graph, format.into());
            match output {
                Some(p) => write_to(&p, &text)?,
                None => print!("{text}"),
            }
            Ok(OK)
        }
        Cmd::Fold { graph, format } => {
            let (g, _) = load(&graph, seed)?;
            let red = stiff_reduction(&g);
            if cli.json {
                print_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "folds": red.folds.steps,
                    "kept": red.kept,
                    "residue": GraphDto::from(&red.graph),
                }));
            } else {
                for (v, w) in &red.folds.steps {
                    println!("# fold {v} -> {w}");
                }
                println!("# residue keeps {:?}", red.kept);
                print!("{}", io::write(&red.graph, format.into()));
            }
            Ok(OK)
        }
        Cmd::Warmth { graph, mode, max_d, no_fold } => {
            let (g, _) = load(&graph, seed)?;
            let opts = CheckOptions { mode: mode.map(Mode::from), max_d, fold: !no_fold, max_dim: None, budget_ms: cli.budget_ms };
            let run = |mode| {
                let w = WarmthOptions { mode, d_cap: opts.max_d, fold: opts.fold, ..WarmthOptions::default() };
                warmth_with(&g, &w, Deadline::after_ms(opts.budget_ms))
            };
            let result = match opts.mode {
                Some(m) => run(m)?,
                None => match run(Mode::Exact) {
                    Err(homwarm::core::Error::Capacity { .. }) => run(Mode::Heuristic)?,
                    other => other?,
                },
            };
            let rep = WarmthReport::from_result(&result);
            if cli.json {
                print_json(&rep);
            } else {
                println!("zeta = {} ({} mode)", rep.value, rep.mode);
                println!("lower bound: {}", rep.lower_reason);
                println!("upper bound: {}", rep.upper_reason);
                if let Some(r) = rep.residue_vertices {
                    println!("folded {} vertices; residue has {r}", rep.folds);
                }
                if let Some(c) = &rep.certificate {
                    println!("{}-stable family with {} members", c.d, c.members.len());
                }
                if rep.out_of_budget {
                    println!("budget exhausted");
                }
            }
            Ok(if rep.out_of_budget { BUDGET_ONLY } else { OK })
        }
        Cmd::Homology { graph, max_dim, f_vector } => {
            let (g, _) = load(&graph, seed)?;
            let (c, h) = homology_of(&g, max_dim)?;
            let rep = HomologyReport::new(&h, c.f_vector());
            let conn: ConnectivityReport = homological_connectivity(&h).into();
            if cli.json {
                print_json(&json!({ "schema_version": SCHEMA_VERSION, "homology": rep, "connectivity": conn }));
            } else {
                for (k, b) in rep.betti.iter().enumerate() {
                    let t = &rep.torsion[k];
                    let tors = if t.is_empty() { String::new() } else { format!(" + torsion Z/{}", t.join(" + Z/")) };
                    println!("H_{k}: Z^{b}{tors}");
                }
                if rep.truncated {
                    println!("(computed through dimension {} of {})", rep.max_dim, rep.top_dim);
                }
                println!("hconn = {}{}", conn.value, if conn.caveat { " (pi_1 not checked)" } else { "" });
                if f_vector {
                    println!("f-vector: {:?}", rep.f_vector);
                }
            }
            Ok(OK)
        }
        Cmd::Chromatic { graph } => {
            let (g, _) = load(&graph, seed)?;
            let r = chromatic_number_with(&g, Deadline::after_ms(cli.budget_ms));
            let rep: ChromaticReport = r.value.into();
            if cli.json {
                print_json(&json!({ "schema_version": SCHEMA_VERSION, "chromatic": rep, "coloring": r.coloring.map(|c| c.colors) }));
            } else {
                println!("chi = {} ({})", rep.value, rep.status);
            }
            Ok(if matches!(r.value, ChromaticNumber::Interval { .. }) { BUDGET_ONLY } else { OK })
        }
        Cmd::Conjecture { graph, mode, max_dim } => {
            let (g, prov) = load(&graph, seed)?;
            let opts = CheckOptions { mode: mode.map(Mode::from), max_dim, budget_ms: cli.budget_ms, ..Default::default() };
            let rep = run_conjecture_check(&g, prov, &opts)?;
            let violated = rep.checks.conjecture_consistent.status == Check::Violated;
            if violated {
                eprintln!("!!! VIOLATED: zeta = {} exceeds hconn + 3 with hconn = {} !!!", rep.warmth.value, rep.connectivity.value);
                eprintln!("{}", serde_json::to_string_pretty(&rep).unwrap());
            }
            if cli.json {
                print_json(&rep);
            } else {
                println!("graph {} ({})", &rep.graph_id[..16], rep.provenance);
                println!("zeta  = {} ({})", rep.warmth.value, rep.warmth.mode);
                println!("hconn = {}{}", rep.connectivity.value, if rep.connectivity.caveat { " (pi_1 not checked)" } else { "" });
                println!("chi   = {}", rep.chromatic.value);
                println!("betti = {:?}", rep.homology.betti);
                for (name, c) in rep.checks.all() {
                    let status = serde_json::to_value(c.status).unwrap();
                    println!("{name:<14} {:<24} {}", status.as_str().unwrap(), c.note);
                }
            }
            let budget_hit = rep.warmth.out_of_budget || rep.chromatic.status == "interval";
            Ok(if rep.checks.any_violation() {
                CRITERION_FAILED
            } else if budget_hit && rep.checks.any_inconclusive() {
                BUDGET_ONLY
            } else {
                OK
            })
        }
        Cmd::Sweep { model, n, trials, p, avg, beta, csv, aggregates, json_out } => {
            let model = match model {
                ModelArg::Gnp => RandomModel::Gnp { p },
                ModelArg::ChungLu => RandomModel::ChungLu { avg, beta },
            };
            let cfg = SweepConfig {
                model,
                ns: n,
                trials,
                seed,
                check: CheckOptions { budget_ms: cli.budget_ms, ..Default::default() },
                threads: cli.threads,
            };
            let rep = run_random_sweep(&cfg)?;
            if let Some(p) = &csv {
                write_to(p, &rep.trials_csv())?;
            }
            if let Some(p) = &aggregates {
                write_to(p, &rep.aggregates_csv())?;
            }
            if let Some(p) = &json_out {
                write_to(p, &serde_json::to_string_pretty(&rep).unwrap())?;
            }
            if cli.json {
                print_json(&rep);
            } else if csv.is_none() {
                print!("{}", rep.trials_csv());
            }
            eprint!("{}", rep.aggregates_csv());
            let reports = || rep.trials.iter().filter_map(|t| t.report.as_ref());
            let budget_hit = reports().any(|r| r.warmth.out_of_budget || r.chromatic.status == "interval");
            Ok(if reports().any(|r| r.checks.any_violation()) {
                CRITERION_FAILED
            } else if budget_hit {
                BUDGET_ONLY
            } else {
                OK
            })
        }
        Cmd::PaperSuite { only } => {
            let json = cli.json;
            let rep = run_paper_suite(&only, |r| {
                if !json {
                    println!("{}", r.line());
                    let _ = std::io::stdout().flush();
                }
            });
            if json {
                print_json(&rep);
            }
            Ok(if rep.passed() { OK } else { CRITERION_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(INPUT_ERROR);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
