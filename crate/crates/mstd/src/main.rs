//! Command-line front end for the library: single-set verification,
//! exhaustive and sampled subset statistics over [0, N-1], largest-subset
//! search, and the embedded corpus audit.
//!
//! Exit codes: 0 means the verified set is MSTD (or the command succeeded),
//! 1 means the verified set is not MSTD, 2 means error. Output for a given
//! invocation is byte-identical regardless of `--workers`, which is why the
//! worker count is the one parameter never echoed into reports.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mstd::search::{self, EnumerationReport, LargestResult, MonteCarloReport, SearchOptions,
    SeriesRow};
use mstd::{corpus, verify, Error, IntegerSet, Label, Result, VerificationReport};

#[derive(Parser)]
#[command(name = "mstd", version, about = "Sumset vs difference-set tooling for finite integer sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Monte Carlo trials per sampled N.
    #[arg(long, global = true, default_value_t = 100_000)]
    trials: u64,

    /// Seed for all sampling; series rows derive a per-N seed from it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Exact-enumeration ceiling; may only be lowered from the hard cap.
    #[arg(long, global = true, default_value_t = search::EXACT_ENUMERATION_CAP)]
    exact_cap: u32,

    /// Candidate-subset budget for the largest-subset search.
    #[arg(long, global = true, default_value_t = search::DEFAULT_NODE_BUDGET)]
    node_budget: u64,

    /// Worker threads (default: all cores). Affects speed, never output.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one set (literal like "{0, 2, 3}" or a file containing one);
    /// exit 0 if MSTD, 1 if not.
    Verify {
        /// Set literal, or path to a file holding one.
        input: String,
    },
    /// Classify every subset of [0, N-1] exactly.
    Enumerate {
        #[arg(value_name = "N")]
        n: u32,
    },
    /// Find the largest MSTD subset of [0, N-1].
    Largest {
        #[arg(value_name = "N")]
        n: u32,
    },
    /// Estimate the MSTD probability at one N by seeded sampling.
    Prob {
        #[arg(value_name = "N")]
        n: u32,
    },
    /// Probability-versus-N rows: exact up to the cap, sampled above it.
    Series {
        #[arg(value_name = "N_MIN")]
        n_min: u32,
        #[arg(value_name = "N_MAX")]
        n_max: u32,
    },
    /// Audit the embedded corpus of published MSTD sets.
    Corpus,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Enumerate { .. } => "enumerate",
            Command::Largest { .. } => "largest",
            Command::Prob { .. } => "prob",
            Command::Series { .. } => "series",
            Command::Corpus => "corpus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn as_str(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

/// Effective run parameters, echoed into every report that can depend on
/// them so results are reproducible from their own output.
#[derive(serde::Serialize)]
struct ConfigEcho {
    command: &'static str,
    format: &'static str,
    seed: u64,
    trials: u64,
    exact_cap: u32,
    node_budget: u64,
    #[serde(skip)]
    fmt: Format,
}

impl ConfigEcho {
    fn comment_line(&self) -> String {
        format!(
            "# command={} format={} seed={} trials={} exact_cap={} node_budget={}",
            self.command, self.format, self.seed, self.trials, self.exact_cap, self.node_budget
        )
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.workers {
        Some(workers) => match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => {
                eprintln!("error: building worker pool: {e}");
                return ExitCode::from(2);
            }
        },
        None => dispatch(&cli),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    let config = ConfigEcho {
        command: cli.command.name(),
        format: cli.format.as_str(),
        seed: cli.seed,
        trials: cli.trials,
        exact_cap: cli.exact_cap,
        node_budget: cli.node_budget,
        fmt: cli.format,
    };
    match &cli.command {
        Command::Verify { input } => cmd_verify(input, cli.format),
        Command::Enumerate { n } => {
            let report = search::enumerate_interval_with_cap(*n, cli.exact_cap)?;
            print!("{}", render_enumeration(&report, &config));
            Ok(ExitCode::SUCCESS)
        }
        Command::Largest { n } => {
            let options = SearchOptions {
                node_budget: cli.node_budget,
                prune_reflections: true,
            };
            let result = search::largest_mstd_cardinality_with(*n, options)?;
            print!("{}", render_largest(&result, &config));
            Ok(ExitCode::SUCCESS)
        }
        Command::Prob { n } => {
            let report = search::mstd_probability_monte_carlo(*n, cli.trials, cli.seed)?;
            print!("{}", render_monte_carlo(&report, &config));
            Ok(ExitCode::SUCCESS)
        }
        Command::Series { n_min, n_max } => {
            let rows = search::probability_series_with_cap(
                *n_min,
                *n_max,
                cli.trials,
                cli.seed,
                cli.exact_cap,
            )?;
            print!("{}", render_series(&rows, &config));
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus => {
            let findings = corpus::validate_corpus();
            print!("{}", render_corpus(&findings, &config));
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Reads the verify argument as a set literal first, falling back to
/// treating it as a path to a file holding one.
fn resolve_set_input(input: &str) -> Result<(IntegerSet, usize)> {
    match IntegerSet::parse(input) {
        Ok(parsed) => Ok(parsed),
        Err(literal_err) => {
            let path = Path::new(input);
            if path.is_file() {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))?;
                IntegerSet::parse(text.trim())
            } else {
                Err(literal_err)
            }
        }
    }
}

fn cmd_verify(input: &str, format: Format) -> Result<ExitCode> {
    let (set, duplicates_dropped) = resolve_set_input(input)?;
    if duplicates_dropped > 0 {
        eprintln!("warning: dropped {duplicates_dropped} duplicate element(s) from the input");
    }
    let report = verify(&set)?;
    print!("{}", render_verification(&report, format));
    Ok(if report.classification.label == Label::Mstd {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut line = serde_json::to_string(value).expect("reports contain only serializable data");
    line.push('\n');
    line
}

fn envelope_json<T: serde::Serialize>(config: &ConfigEcho, result: &T) -> String {
    #[derive(serde::Serialize)]
    struct Envelope<'a, T> {
        config: &'a ConfigEcho,
        result: &'a T,
    }
    json_line(&Envelope { config, result })
}

fn render_verification(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => json_line(report),
        Format::Csv => {
            let mut out = String::new();
            out.push_str(
                "elements,n,sum_cardinality,diff_cardinality,label,additions,subtractions,\
                 comparisons,bit_cost_paper,bit_cost_practical\n",
            );
            let _ = writeln!(
                out,
                "\"{}\",{},{},{},{},{},{},{},{},{}",
                report.set,
                report.set.cardinality(),
                report.classification.sum_cardinality,
                report.classification.diff_cardinality,
                report.classification.label,
                report.op_counts.additions,
                report.op_counts.subtractions,
                report.op_counts.comparisons,
                report.bit_cost_paper,
                report.bit_cost_practical
            );
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "set: {}", report.set);
            let _ = writeln!(out, "n: {}", report.set.cardinality());
            let _ = writeln!(out, "sum_cardinality: {}", report.classification.sum_cardinality);
            let _ = writeln!(out, "diff_cardinality: {}", report.classification.diff_cardinality);
            let _ = writeln!(out, "label: {}", report.classification.label);
            let _ = writeln!(out, "additions: {}", report.op_counts.additions);
            let _ = writeln!(out, "subtractions: {}", report.op_counts.subtractions);
            let _ = writeln!(out, "comparisons: {}", report.op_counts.comparisons);
            let _ = writeln!(out, "bit_cost_paper: {}", report.bit_cost_paper);
            let _ = writeln!(out, "bit_cost_practical: {}", report.bit_cost_practical);
            out
        }
    }
}

fn render_enumeration(report: &EnumerationReport, config: &ConfigEcho) -> String {
    match config.fmt {
        Format::Json => envelope_json(config, report),
        Format::Csv => {
            let by_card: Vec<String> = report
                .mstd_count_by_cardinality
                .iter()
                .map(|(card, count)| format!("{card}:{count}"))
                .collect();
            format!(
                "{}\nN,total_subsets,mstd_count,mstd_count_by_cardinality,probability_numerator,\
                 probability_denominator,probability_float\n{},{},{},{},{},{},{}\n",
                config.comment_line(),
                report.n,
                report.total_subsets,
                report.mstd_count,
                by_card.join(";"),
                report.probability.numerator,
                report.probability.denominator,
                report.probability_float
            )
        }
        Format::Text => {
            let by_card: Vec<String> = report
                .mstd_count_by_cardinality
                .iter()
                .map(|(card, count)| format!("{card}: {count}"))
                .collect();
            let mut out = config.comment_line();
            out.push('\n');
            let _ = writeln!(out, "N: {}", report.n);
            let _ = writeln!(out, "total_subsets: {}", report.total_subsets);
            let _ = writeln!(out, "mstd_count: {}", report.mstd_count);
            let _ = writeln!(out, "mstd_count_by_cardinality: {{{}}}", by_card.join(", "));
            let _ = writeln!(
                out,
                "probability: {}/{}",
                report.probability.numerator, report.probability.denominator
            );
            let _ = writeln!(out, "probability_float: {}", report.probability_float);
            out
        }
    }
}

fn render_largest(result: &LargestResult, config: &ConfigEcho) -> String {
    match config.fmt {
        Format::Json => envelope_json(config, result),
        Format::Csv => {
            let card = result
                .max_cardinality
                .map(|c| c.to_string())
                .unwrap_or_default();
            let witness = result
                .witness
                .as_ref()
                .map(|w| format!("\"{w}\""))
                .unwrap_or_default();
            format!(
                "{}\nN,max_cardinality,witness\n{},{card},{witness}\n",
                config.comment_line(),
                result.n
            )
        }
        Format::Text => {
            let mut out = config.comment_line();
            out.push('\n');
            let _ = writeln!(out, "N: {}", result.n);
            match result.max_cardinality {
                Some(card) => {
                    let _ = writeln!(out, "max_cardinality: {card}");
                }
                None => {
                    let _ = writeln!(out, "max_cardinality: none");
                }
            }
            if let Some(witness) = &result.witness {
                let _ = writeln!(out, "witness: {witness}");
            }
            out
        }
    }
}

fn render_monte_carlo(report: &MonteCarloReport, config: &ConfigEcho) -> String {
    match config.fmt {
        Format::Json => envelope_json(config, report),
        Format::Csv => format!(
            "{}\nN,trials,seed,rng,hits,estimate,std_error\n{},{},{},{},{},{},{}\n",
            config.comment_line(),
            report.n,
            report.trials,
            report.seed,
            report.rng,
            report.hits,
            report.estimate,
            report.std_error
        ),
        Format::Text => {
            let mut out = config.comment_line();
            out.push('\n');
            let _ = writeln!(out, "N: {}", report.n);
            let _ = writeln!(out, "trials: {}", report.trials);
            let _ = writeln!(out, "seed: {}", report.seed);
            let _ = writeln!(out, "rng: {}", report.rng);
            let _ = writeln!(out, "hits: {}", report.hits);
            let _ = writeln!(out, "estimate: {}", report.estimate);
            let _ = writeln!(out, "std_error: {}", report.std_error);
            out
        }
    }
}

fn render_series(rows: &[SeriesRow], config: &ConfigEcho) -> String {
    match config.fmt {
        Format::Json => envelope_json(config, &rows),
        Format::Csv => {
            let mut out = config.comment_line();
            out.push_str("\nN,method,estimate,std_error\n");
            for row in rows {
                let _ = writeln!(out, "{},{},{},{}", row.n, row.method, row.estimate, row.std_error);
            }
            out
        }
        Format::Text => {
            let mut out = config.comment_line();
            out.push('\n');
            for row in rows {
                let _ = writeln!(
                    out,
                    "N={} method={} estimate={} std_error={}",
                    row.n, row.method, row.estimate, row.std_error
                );
            }
            out
        }
    }
}

fn render_corpus(findings: &[corpus::CorpusFinding], config: &ConfigEcho) -> String {
    match config.fmt {
        Format::Json => envelope_json(config, &findings),
        Format::Csv => {
            let mut out = config.comment_line();
            out.push_str(
                "\nid,actual_cardinality,cardinality_matches,duplicates_in_print,\
                 sum_cardinality,diff_cardinality,label\n",
            );
            for f in findings {
                let dups: Vec<String> =
                    f.duplicates_in_print.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    f.id,
                    f.actual_cardinality,
                    f.cardinality_matches,
                    dups.join(";"),
                    f.classification.sum_cardinality,
                    f.classification.diff_cardinality,
                    f.classification.label
                );
            }
            out
        }
        Format::Text => {
            let mut out = config.comment_line();
            out.push('\n');
            for f in findings {
                let claim = if f.cardinality_matches {
                    "claim matches".to_string()
                } else {
                    format!("CLAIM MISMATCH (actual {})", f.actual_cardinality)
                };
                let _ = writeln!(
                    out,
                    "{}: actual {}, {}, duplicates {:?}, sum {}, diff {}, {}",
                    f.id,
                    f.actual_cardinality,
                    claim,
                    f.duplicates_in_print,
                    f.classification.sum_cardinality,
                    f.classification.diff_cardinality,
                    f.classification.label
                );
            }
            out
        }
    }
}
