//! Command-line front end: validation, construction, spectral radius,
//! alpha sweeps, brute-force verification and contract fuzzing, with
//! machine-readable reports.
//!
//! Exit codes: 0 success or Pass, 1 verification failure, 2 usage error,
//! 3 I/O failure, 4 numeric failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::builders::{build_extremal_tree, build_extremal_unicyclic};
use crate::error::{Error, Result};
use crate::fuzz::{run_fuzz, FuzzConfig, FuzzTarget};
use crate::graph::{format_edge_list, parse_edge_list, DegreeSequence, SequenceClass};
use crate::oracle::{extremal_search_over, Verdict, VerificationReport};
use crate::spectrum::{sig15, spectral_radius, AlphaValue};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(
    name = "aalpha",
    version,
    about = "Extremal spectral radius of trees and unicyclic graphs over degree sequences"
)]
pub struct Invocation {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ClassArg {
    Tree,
    Unicyclic,
}

impl From<ClassArg> for SequenceClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Tree => SequenceClass::Tree,
            ClassArg::Unicyclic => SequenceClass::Unicyclic,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a degree sequence for realizability in its class
    Validate {
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Comma-separated degrees, e.g. 3,2,2,1,1,1
        #[arg(long)]
        pi: String,
    },
    /// Construct the extremal graph and emit its edge list plus layer data
    Build {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        pi: String,
        /// Edge-list destination; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
        /// Layer-annotation JSON destination
        #[arg(long)]
        layers: Option<PathBuf>,
    },
    /// Spectral radius of a graph read from an edge-list file
    Rho {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Spectral radius over an alpha grid, as CSV rows
    Sweep {
        /// Comma-separated alphas in [0,1)
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<f64>,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare the extremal builder against exhaustive enumeration
    Verify {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        pi: String,
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<f64>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also append report rows to a CSV file
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Fuzz one perturbation contract with seeded random instances
    Fuzz {
        /// Contract id: shift, swap, or subdivide (aliases 2.1, 2.3, 2.10)
        #[arg(long)]
        lemma: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        cases: usize,
        /// Counterexample JSONL destination
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

/// Parses argv into a structured invocation.
pub fn parse_invocation<I, T>(argv: I) -> std::result::Result<Invocation, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Invocation::try_parse_from(argv)
}

/// Parses and executes; the returned value is the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_invocation(argv) {
        Ok(inv) => execute(inv),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

/// Executes one invocation and maps every failure onto the exit-code
/// contract. A run timestamp goes to stderr so file artifacts stay
/// byte-identical across identical invocations.
pub fn execute(inv: Invocation) -> i32 {
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    eprintln!("# aalpha run, unix time {stamp}");
    match dispatch(inv) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) | Error::ParseEdgeList(_) => EXIT_IO,
                Error::NoConvergence(_, _) => EXIT_NUMERIC,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(inv: Invocation) -> Result<i32> {
    match inv.command {
        Command::Validate { class, pi } => {
            let seq = DegreeSequence::parse(&pi, class.into())?;
            let verdict = seq.validate();
            if verdict.valid {
                println!("valid");
                Ok(EXIT_OK)
            } else {
                println!("invalid: {}", verdict.reason.unwrap_or_default());
                Ok(EXIT_VERIFICATION_FAILED)
            }
        }
        Command::Build {
            class,
            pi,
            output,
            layers,
        } => {
            let seq = DegreeSequence::parse(&pi, class.into())?;
            let built = match seq.class() {
                SequenceClass::Tree => build_extremal_tree(&seq)?,
                _ => build_extremal_unicyclic(&seq)?,
            };
            let edge_text = format_edge_list(built.graph());
            let layer_json = serde_json::to_string_pretty(&built.layer_annotations())
                .expect("layer annotations serialize");
            match &output {
                Some(path) => {
                    write_text(path, &edge_text)?;
                    let layer_path = layers
                        .clone()
                        .unwrap_or_else(|| path.with_extension("layers.json"));
                    write_text(&layer_path, &layer_json)?;
                }
                None => {
                    print!("{edge_text}");
                    if let Some(path) = &layers {
                        write_text(path, &layer_json)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Rho {
            alpha,
            graph,
            output,
        } => {
            let a = AlphaValue::new(alpha)?;
            let g = read_graph(&graph)?;
            let result = spectral_radius(&g, a)?;
            let text =
                serde_json::to_string_pretty(&result.report_json()).expect("report serializes");
            emit(output.as_deref(), &(text + "\n"))?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            alpha,
            graph,
            output,
        } => {
            let alphas = parse_alphas(&alpha)?;
            let g = read_graph(&graph)?;
            let mut csv = String::from("alpha,rho\n");
            for a in alphas {
                let r = spectral_radius(&g, a)?;
                csv.push_str(&format!("{},{:.14e}\n", a.value(), sig15(r.rho)));
            }
            emit(output.as_deref(), &csv)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            class,
            pi,
            alpha,
            output,
            csv,
        } => {
            let seq = DegreeSequence::parse(&pi, class.into())?;
            let alphas = parse_alphas(&alpha)?;
            let reports: Vec<VerificationReport> = extremal_search_over(&seq, &alphas)?;
            let json = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0].report_json())
            } else {
                let arr: Vec<_> = reports.iter().map(|r| r.report_json()).collect();
                serde_json::to_string_pretty(&arr)
            }
            .expect("reports serialize");
            emit(output.as_deref(), &(json + "\n"))?;
            if let Some(path) = csv {
                let mut text = String::from(VerificationReport::csv_header());
                text.push('\n');
                for r in &reports {
                    text.push_str(&r.csv_row());
                    text.push('\n');
                }
                write_text(&path, &text)?;
            }
            let all_pass = reports.iter().all(|r| r.verdict == Verdict::Pass);
            Ok(if all_pass {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
        Command::Fuzz {
            lemma,
            seed,
            cases,
            dump,
        } => {
            let target = parse_fuzz_target(&lemma)?;
            let report = run_fuzz(target, FuzzConfig { seed, cases })?;
            let dump_path = dump.unwrap_or_else(|| PathBuf::from("aalpha_counterexamples.jsonl"));
            let mut lines = String::new();
            for v in &report.violations {
                lines.push_str(&serde_json::to_string(v).expect("counterexample serializes"));
                lines.push('\n');
            }
            write_text(&dump_path, &lines)?;
            println!(
                "{}: {} cases, {} counterexamples ({} ties downgraded), dump: {}",
                report.claim,
                report.cases,
                report.violations.len(),
                report.downgraded_ties,
                dump_path.display()
            );
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
    }
}

fn parse_fuzz_target(token: &str) -> Result<FuzzTarget> {
    match token {
        "shift" | "neighbor-shift" | "2.1" => Ok(FuzzTarget::NeighborShift),
        "swap" | "two-swap" | "2.3" => Ok(FuzzTarget::TwoSwap),
        "subdivide" | "subdivision" | "2.10" => Ok(FuzzTarget::Subdivision),
        other => Err(Error::Precondition(format!(
            "unknown contract {other:?}; use shift, swap, or subdivide"
        ))),
    }
}

fn parse_alphas(raw: &[f64]) -> Result<Vec<AlphaValue>> {
    if raw.is_empty() {
        return Err(Error::Precondition("alpha list must be nonempty".into()));
    }
    raw.iter().map(|&a| AlphaValue::new(a)).collect()
}

fn read_graph(path: &Path) -> Result<crate::graph::SimpleGraph> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text)
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(text.as_bytes())?;
    Ok(())
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write_text(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
