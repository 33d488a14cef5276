//! `fcx`: batch CLI over the fully-commutative-elements library.
//!
//! Verbs: `enum` (oracle counts), `gf` (generating function), `period`
//! (periodicity report), `classify` (family of a word), `check`
//! (oracle-vs-formula diff), `walks` (walk family polynomial).
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 check mismatch.

use std::fmt::Display;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fcx_core::family::{classify_bd, classify_ctilde, Decoration, FamilyLabel};
use fcx_core::genfun::{genfun, mean_value, GenFun};
use fcx_core::period::{detect_period, stated_periodicity, verify_theorem};
use fcx_core::walk::{enumerate_walks, Constraint, Stat, WalkFamily};
use fcx_core::{build_graph, enumerate_fc, fc_elements, Family, Heap, TypeSpec, Word};

#[derive(Parser)]
#[command(name = "fcx", version, about = "Fully commutative elements of finite and affine Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write output to a file instead of standard output
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Count FC elements by length with the brute-force oracle
    Enum {
        /// Type spec, e.g. A:4, Ctilde:3, I2:7, H3
        #[arg(long)]
        spec: String,
        /// Largest length to enumerate (defaults per spec)
        #[arg(long)]
        qmax: Option<usize>,
        /// Emit one JSON line {"len":l,"word":"..."} per element instead of counts
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Generating function of FC elements by length
    Gf {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        qmax: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Detect and verify ultimate periodicity of the growth sequence
    Period {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        qmax: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify the FC heap of a word into its family
    Classify {
        #[arg(long)]
        spec: String,
        /// Whitespace-separated generator names, e.g. "t s1 u s1 t"
        #[arg(long)]
        word: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare formula coefficients against the oracle (exit 3 on mismatch)
    Check {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        qmax: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate a labeled walk family into a q-polynomial
    Walks {
        /// Number of steps
        #[arg(long)]
        len: usize,
        /// Endpoint constraint: free, end-zero, from-height, closed
        #[arg(long, value_enum, default_value = "free")]
        constraint: ConstraintArg,
        /// Start height (only with --constraint from-height)
        #[arg(long, default_value_t = 0)]
        start: usize,
        /// Require level steps at height zero to carry label L
        #[arg(long)]
        star: bool,
        /// Keep only walks meeting the x-axis
        #[arg(long)]
        touch: bool,
        /// Statistic: ht (all points) or htp (all but the last)
        #[arg(long, value_enum, default_value = "ht")]
        stat: StatArg,
        /// Truncation degree of the polynomial
        #[arg(long, default_value_t = 20)]
        qmax: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstraintArg {
    Free,
    EndZero,
    FromHeight,
    Closed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatArg {
    Ht,
    Htp,
}

/// Domain failure carrying the message for standard error.
struct DomainError(String);

impl<E: Display> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

fn emit(output: &OutputArgs, text: String) -> Result<(), DomainError> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| DomainError(e.to_string())),
        None => {
            let mut stdout = std::io::stdout();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| DomainError(e.to_string()))
        }
    }
}

/// Default horizon: past the stated periodicity when one is known.
fn default_qmax(spec: TypeSpec) -> usize {
    match stated_periodicity(spec) {
        Some(s) => s.start + 2 * s.period,
        None => 20,
    }
}

fn counts_csv(counts: &[i64]) -> String {
    let mut s = String::from("length,count\n");
    for (l, c) in counts.iter().enumerate() {
        s.push_str(&format!("{l},{c}\n"));
    }
    s
}

fn genfun_json(gf: &GenFun) -> serde_json::Value {
    let mut v = json!({
        "spec": gf.spec.to_string(),
        "qmax": gf.qmax,
        "coeffs": gf.coeffs,
    });
    if let Some(tail) = &gf.tail {
        v["period"] = json!({
            "start": tail.start,
            "len": tail.pattern.len(),
            "pattern": tail.pattern,
        });
    }
    if let Ok(mean) = mean_value(gf.spec) {
        v["mean"] = json!(format!("{}/{}", mean.numer(), mean.denom()));
    } else if let Some(tail) = &gf.tail {
        let m = tail.mean();
        v["mean"] = json!(format!("{}/{}", m.numer(), m.denom()));
    }
    v
}

fn label_json(label: &FamilyLabel) -> serde_json::Value {
    let mut v = json!({ "family": label.family.name() });
    if let Some(j) = label.j {
        v["j"] = json!(j);
    }
    if let Some(k) = label.k {
        v["k"] = json!(k);
    }
    match label.decoration {
        Decoration::Btilde => v["decoration"] = json!("Btilde"),
        Decoration::Dtilde => v["decoration"] = json!("Dtilde"),
        Decoration::None => {}
    }
    v
}

fn run(cli: Cli) -> Result<u8, DomainError> {
    match cli.command {
        Command::Enum {
            spec,
            qmax,
            list,
            output,
        } => {
            let spec = TypeSpec::parse(&spec)?;
            let graph = build_graph(spec)?;
            let qmax = qmax.unwrap_or_else(|| default_qmax(spec));
            if list {
                let mut text = String::new();
                for e in fc_elements(&graph, qmax) {
                    let line = json!({"len": e.len, "word": e.word.display(&graph).to_string()});
                    text.push_str(&line.to_string());
                    text.push('\n');
                }
                emit(&output, text)?;
                return Ok(0);
            }
            let rec = enumerate_fc(&graph, qmax);
            let counts: Vec<i64> = rec.counts.iter().map(|&c| c as i64).collect();
            let text = match output.format {
                Format::Csv => counts_csv(&counts),
                Format::Json => {
                    json!({
                        "spec": spec.to_string(),
                        "qmax": qmax,
                        "coeffs": counts,
                        "complete": rec.complete,
                    })
                    .to_string()
                        + "\n"
                }
            };
            emit(&output, text)?;
            Ok(0)
        }
        Command::Gf { spec, qmax, output } => {
            let spec = TypeSpec::parse(&spec)?;
            let qmax = qmax.unwrap_or_else(|| default_qmax(spec));
            let gf = genfun(spec, qmax)?;
            let text = match output.format {
                Format::Csv => counts_csv(&gf.coeffs),
                Format::Json => genfun_json(&gf).to_string() + "\n",
            };
            emit(&output, text)?;
            Ok(0)
        }
        Command::Period { spec, qmax, output } => {
            let spec = TypeSpec::parse(&spec)?;
            let qmax = qmax.unwrap_or_else(|| default_qmax(spec));
            let report = match stated_periodicity(spec) {
                Some(_) => verify_theorem(spec, qmax)?,
                None => {
                    let graph = build_graph(spec)?;
                    detect_period(&enumerate_fc(&graph, qmax).counts, 2)?
                }
            };
            let mut v = json!({
                "spec": spec.to_string(),
                "start": report.start,
                "period": report.period,
                "verified_up_to": report.verified_up_to,
            });
            if let Some(s) = report.stated {
                v["stated"] = json!({"start": s.start, "period": s.period});
            }
            if let Some(d) = report.divides_stated {
                v["divides_stated"] = json!(d);
            }
            emit(&output, v.to_string() + "\n")?;
            Ok(0)
        }
        Command::Classify { spec, word, output } => {
            let spec = TypeSpec::parse(&spec)?;
            let graph = build_graph(spec)?;
            let word = Word::parse(&graph, &word)?;
            let heap = Heap::of_word(&graph, &word);
            let label = match spec.family {
                Family::CTilde => classify_ctilde(&graph, &heap)?,
                Family::BTilde | Family::DTilde => {
                    let n = match spec.family {
                        Family::BTilde => spec.rank - 1,
                        _ => spec.rank - 2,
                    };
                    let cspec = TypeSpec::new(Family::CTilde, n);
                    let cgraph = build_graph(cspec)?;
                    classify_bd(&graph, &heap, &cgraph)?.0
                }
                _ => {
                    return Err(DomainError(format!(
                        "classify supports Ctilde, Btilde and Dtilde specs, got {spec}"
                    )))
                }
            };
            emit(&output, label_json(&label).to_string() + "\n")?;
            Ok(0)
        }
        Command::Check { spec, qmax, output } => {
            let spec = TypeSpec::parse(&spec)?;
            let qmax = qmax.unwrap_or_else(|| default_qmax(spec));
            let graph = build_graph(spec)?;
            let gf = genfun(spec, qmax)?;
            let oracle = enumerate_fc(&graph, qmax);
            let mut mismatches = Vec::new();
            for l in 0..=qmax {
                let formula = gf.coeffs[l];
                let counted = oracle.counts[l] as i64;
                if formula != counted {
                    mismatches.push(json!({"length": l, "formula": formula, "oracle": counted}));
                }
            }
            let ok = mismatches.is_empty();
            let v = json!({
                "spec": spec.to_string(),
                "qmax": qmax,
                "match": ok,
                "mismatches": mismatches,
            });
            emit(&output, v.to_string() + "\n")?;
            Ok(if ok { 0 } else { 3 })
        }
        Command::Walks {
            len,
            constraint,
            start,
            star,
            touch,
            stat,
            qmax,
            output,
        } => {
            let constraint = match constraint {
                ConstraintArg::Free => Constraint::Free,
                ConstraintArg::EndZero => Constraint::EndsAtZero,
                ConstraintArg::FromHeight => Constraint::FromHeight(start),
                ConstraintArg::Closed => Constraint::Closed,
            };
            let mut fam = WalkFamily::new(len, constraint);
            if star {
                fam = fam.star();
            }
            if touch {
                fam = fam.touch();
            }
            let stat = match stat {
                StatArg::Ht => Stat::Ht,
                StatArg::Htp => Stat::HtPrime,
            };
            let poly = enumerate_walks(fam, stat, qmax);
            let text = match output.format {
                Format::Csv => counts_csv(poly.coeffs()),
                Format::Json => {
                    json!({
                        "len": len,
                        "qmax": qmax,
                        "coeffs": poly.coeffs(),
                    })
                    .to_string()
                        + "\n"
                }
            };
            emit(&output, text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(DomainError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
