use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use compid::algebra::DEFAULT_PRIME;
use compid::census::{classify_entries, CensusRow, CSV_HEADER};
use compid::ident::{b_pattern, IndexedBMatrix};
use compid::transforms::repair;
use compid::{decide, explain, Config, DirectedGraph, Mode};
use serde_json::json;

mod render;

#[derive(Parser)]
#[command(
    name = "compid",
    version,
    about = "Identifiable scaling reparametrizations of linear compartment models"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Prime modulus for random evaluations
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Random evaluations per rank test
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    /// RNG seed (random when omitted; always echoed)
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Fast)]
    mode: ModeArg,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    /// Include B(G) with row and column labels
    #[arg(long = "emit-B", global = true)]
    emit_b: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    Structural,
    Audit,
    RankOnly,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one graph; exit 0 for YES, 1 for NO
    Check { path: PathBuf },
    /// Run every check on one graph
    Explain { path: PathBuf },
    /// Remove or subdivide trivial ears
    Repair {
        path: PathBuf,
        /// Write deleted.json and subdivided.json here
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Classify all graphs on n vertices with at most 2n-2 edges
    Census {
        #[arg(long, num_args = 1.., required = true)]
        n: Vec<usize>,
        /// Per-graph classification as JSON lines
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Write the CSV table here
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn config(opts: &Opts) -> Config {
    let mode = match opts.mode {
        ModeArg::Fast => Mode::Fast,
        ModeArg::Structural => Mode::Structural,
        ModeArg::Audit => Mode::Audit,
        ModeArg::RankOnly => Mode::RankOnly,
    };
    Config {
        prime: opts.prime,
        trials: opts.trials,
        seed: opts.seed.unwrap_or_else(rand::random),
        mode,
        ..Config::default()
    }
}

fn read_graph(path: &Path) -> Result<DirectedGraph, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?
    };
    DirectedGraph::parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn b_json(g: &DirectedGraph, evaluated: &IndexedBMatrix) -> serde_json::Value {
    let (_, pattern) = b_pattern(g);
    let symbolic: Vec<Vec<String>> = (0..pattern.rows())
        .map(|r| pattern.row(r).iter().map(ToString::to_string).collect())
        .collect();
    let mut v = evaluated.to_json();
    v["symbolic"] = json!(symbolic);
    v
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let opts = &cli.opts;
    let cfg = config(opts);
    match cli.command {
        Command::Check { path } => {
            let g = read_graph(&path)?;
            let verdict = decide(&g, &cfg)?;
            let code = if verdict.answer.is_yes() { 0 } else { 1 };
            if opts.json {
                let mut v = serde_json::to_value(&verdict)?;
                if opts.emit_b {
                    v["B"] = b_json(&g, &explain(&g, &cfg)?.b_evaluated);
                }
                emit(&serde_json::to_string_pretty(&v)?)?;
            } else {
                emit(&render::verdict(&verdict))?;
                if opts.emit_b {
                    emit(&render::b_matrices(&explain(&g, &cfg)?))?;
                }
            }
            Ok(code)
        }
        Command::Explain { path } => {
            let g = read_graph(&path)?;
            let report = explain(&g, &cfg)?;
            let code = if report.verdict.answer.is_yes() { 0 } else { 1 };
            if opts.json {
                let mut v = serde_json::to_value(&report)?;
                v["graph"] = serde_json::to_value(&g)?;
                if opts.emit_b {
                    v["B"] = b_json(&g, &report.b_evaluated);
                }
                emit(&serde_json::to_string_pretty(&v)?)?;
            } else {
                emit(&render::report(&g, &report, opts.emit_b))?;
            }
            Ok(code)
        }
        Command::Repair { path, out_dir } => {
            let g = read_graph(&path)?;
            let result = repair(&g, &cfg)?;
            if let Some(dir) = &out_dir {
                fs::create_dir_all(dir)?;
                for (name, variant) in [
                    ("deleted", &result.deleted_variant),
                    ("subdivided", &result.subdivided_variant),
                ] {
                    let file = dir.join(format!("{name}.json"));
                    fs::write(&file, serde_json::to_string(variant)? + "\n")
                        .map_err(|e| Failure(format!("{}: {e}", file.display())))?;
                }
            }
            if opts.json {
                emit(&serde_json::to_string_pretty(&result)?)?;
            } else {
                emit(&render::repair(&g, &result))?;
            }
            Ok(0)
        }
        Command::Census { n, dump, out } => {
            let mut rows = Vec::with_capacity(n.len());
            let mut dump_lines = String::new();
            for &size in &n {
                let entries = classify_entries(size, &cfg)?;
                if dump.is_some() {
                    for e in &entries {
                        dump_lines.push_str(&serde_json::to_string(&json!({ "n": size, "entry": e }))?);
                        dump_lines.push('\n');
                    }
                }
                rows.push(CensusRow::from_entries(size, &entries));
            }
            let csv: String = std::iter::once(CSV_HEADER.to_string())
                .chain(rows.iter().map(CensusRow::to_csv))
                .map(|l| l + "\n")
                .collect();
            if let Some(file) = &dump {
                fs::write(file, dump_lines).map_err(|e| Failure(format!("{}: {e}", file.display())))?;
            }
            if let Some(file) = &out {
                fs::write(file, &csv).map_err(|e| Failure(format!("{}: {e}", file.display())))?;
            }
            if opts.json {
                emit(&serde_json::to_string_pretty(&rows)?)?;
            } else {
                emit(&csv)?;
            }
            Ok(0)
        }
    }
}
