use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rgc_core::compact::Model;
use rgc_core::criteria::{NormalityOptions, Verdict};
use rgc_core::lie::{levi_datum, RootSystem};
use rgc_core::report::table::{render_row, run_table};
use rgc_core::report::{analyze, render_cones, render_text, to_json, AnalyzeOptions};
use rgc_core::rep::{branch_to_levi, tensor_decompose};
use rgc_core::Error;

#[derive(Parser)]
#[command(name = "rgc", version, about = "Orbits, colored fan, normality and smoothness of the closure of G in P(End V)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report for V = sum of V(λ_i); weights are comma separated, e.g. "w1,2*w2" or "hr".
    Analyze {
        #[arg(value_name = "TYPE")]
        ty: String,
        weights: String,
        #[arg(long, value_name = "F")]
        json: Option<PathBuf>,
        #[arg(long, value_name = "F")]
        dot: Option<PathBuf>,
        /// Plain-text dump of vertices and colored cones.
        #[arg(long, value_name = "F")]
        cones: Option<PathBuf>,
        /// Degree cap of the semigroup search; by default the search runs to its degree bound.
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
        /// Generate from all L-highest weights instead of the short list.
        #[arg(long)]
        full_branching: bool,
    },
    /// Reproduce the classification rows of a scope: classical-small, exceptional-fg, stretch-e6, heavy, all.
    Table {
        scope: String,
        #[arg(long)]
        allow_heavy: bool,
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
    },
    /// Decompose V(λ) ⊗ V(μ).
    Tensor {
        #[arg(value_name = "TYPE")]
        ty: String,
        lambda: String,
        mu: String,
    },
    /// Restrict V(λ) to the Levi subgroup of λ₀.
    Branch {
        #[arg(value_name = "TYPE")]
        ty: String,
        lambda: String,
        lambda0: String,
    },
}

const OK: u8 = 0;
const MISMATCH: u8 = 1;
const UNKNOWN: u8 = 2;
const INPUT: u8 = 3;

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::InvalidType(_) | Error::Parse { .. } | Error::NotDominant(_) | Error::NotIntegral(_) | Error::NotVertex(_) | Error::EmptyWeights | Error::Domain(_) | Error::Unsupported(_) | Error::Io(_) => INPUT,
        Error::Capability(_) | Error::Resource(_) | Error::Internal(_) => UNKNOWN,
    }
}

fn write(path: &Option<PathBuf>, body: impl FnOnce() -> rgc_core::Result<String>) -> rgc_core::Result<()> {
    if let Some(p) = path {
        std::fs::write(p, body()?)?;
    }
    Ok(())
}

fn run(cli: Cli) -> rgc_core::Result<u8> {
    match cli.cmd {
        Cmd::Analyze { ty, weights, json, dot, cones, cap, full_branching } => {
            let model = Model::parse(&ty, &weights)?;
            let opts = AnalyzeOptions { normality: NormalityOptions { cap, full_branching, ..Default::default() } };
            let r = analyze(&model, &opts)?;
            print!("{}", render_text(&model, &r));
            write(&json, || to_json(&r))?;
            write(&dot, || Ok(r.orbits.to_dot(&model)))?;
            write(&cones, || Ok(render_cones(&model, &r)))?;
            Ok(if r.normal == Verdict::Unknown || r.smooth == Verdict::Unknown { UNKNOWN } else { OK })
        }
        Cmd::Table { scope, allow_heavy, cap } => {
            let opts = AnalyzeOptions { normality: NormalityOptions { cap, ..Default::default() } };
            let rows = run_table(&scope, allow_heavy, &opts)?;
            for r in &rows {
                println!("{}", render_row(r));
            }
            let failed = rows.iter().filter(|r| !r.passed()).count();
            println!("{} rows, {} passed, {} failed", rows.len(), rows.len() - failed, failed);
            Ok(if rows.iter().any(|r| r.unknown()) {
                UNKNOWN
            } else if failed > 0 {
                MISMATCH
            } else {
                OK
            })
        }
        Cmd::Tensor { ty, lambda, mu } => {
            let rs = RootSystem::parse(&ty)?;
            let (l, m) = (rs.parse_weight(&lambda)?, rs.parse_weight(&mu)?);
            for (w, k) in tensor_decompose(&rs, &l, &m)? {
                println!("{:>4}  V({})", k, rs.format_weight(&w));
            }
            Ok(OK)
        }
        Cmd::Branch { ty, lambda, lambda0 } => {
            let rs = RootSystem::parse(&ty)?;
            let (l, l0) = (rs.parse_weight(&lambda)?, rs.parse_weight(&lambda0)?);
            let levi = levi_datum(&rs, &l0)?;
            println!("L = {}", levi.type_string());
            for (w, k) in branch_to_levi(&rs, &l, &levi)? {
                let shifted: Vec<i64> = w.iter().zip(&l0).map(|(a, b)| a - b).collect();
                println!("{:>4}  V_L({})  shifted {}", k, rs.format_weight(&w), rs.format_weight(&shifted));
            }
            Ok(OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("RGC_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
