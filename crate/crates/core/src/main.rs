//! CLI front end: reproducible experiments over the library.
//!
//! Exit codes: 0 success (or verdict true), 1 verdict false, 2 error.

use clap::{Args, Parser, Subcommand};
use orthoexp::cli::contradiction_table;
use orthoexp::distances::{distinct_distances, DistanceMode};
use orthoexp::domains::{zero_set, Domain, DomainKind};
use orthoexp::ortho::check_orthogonal;
use orthoexp::points::PointSet;
use orthoexp::search::{run_search, SearchLog, SearchStrategy};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "orthoexp",
    about = "Fourier zero sets, orthogonal exponentials, and distinct distances for the cube and the ball"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate ball zero-set radii up to a horizon (CSV `index,radius`)
    Zeros {
        /// Domain, e.g. ball:2 (the cube zero set is symbolic, not a table)
        #[arg(long)]
        domain: String,
        /// Enumerate radii r <= horizon
        #[arg(long)]
        horizon: f64,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Check the orthogonality criterion for a point-set file (JSON report)
    Check {
        #[arg(long)]
        domain: String,
        /// Point-set CSV: one point per line, `#` comments, p/q tokens
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Distinct pairwise distances of a point-set file (CSV `value,multiplicity`)
    Distances {
        #[arg(long)]
        points: PathBuf,
        /// exact (squared rationals) or clustered (floats merged at --tol)
        #[arg(long, default_value = "exact")]
        mode: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Available vs demanded distinct distances per radius (CSV table)
    Contradiction {
        #[arg(long, short = 'd')]
        dimension: usize,
        /// Comma-separated ascending radii, e.g. 10,20,40,80,160
        #[arg(long)]
        radii: String,
        #[arg(long, default_value_t = 1.0)]
        density_constant: f64,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Search for a large orthogonal family in the ball (PointSet CSV + JSON log)
    Search {
        /// Domain, e.g. ball:2
        #[arg(long, default_value = "ball:2")]
        domain: String,
        #[arg(long, short = 'R')]
        radius: f64,
        /// chain (collinear root sums) or clique (triangle candidates)
        #[arg(long, default_value = "chain")]
        strategy: String,
        /// Node-count budget (deterministic truncation)
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Recorded in the log; the search itself is deterministic
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: OutputArg,
        /// Where to write the JSON search log (stderr when omitted)
        #[arg(long)]
        log: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OutputArg {
    /// Output file (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

impl OutputArg {
    fn write(&self, text: &str) -> orthoexp::Result<()> {
        match &self.output {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct LoggedSearch<'a> {
    seed: u64,
    #[serde(flatten)]
    log: &'a SearchLog,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    });
}

fn run(cli: Cli) -> orthoexp::Result<i32> {
    match cli.command {
        Command::Zeros {
            domain,
            horizon,
            out,
        } => {
            let dom = Domain::parse(&domain)?;
            if dom.kind() != DomainKind::UnitBall {
                return Err(orthoexp::Error::Unsupported(
                    "the cube zero set is the hyperplane rule x_i = nonzero integer; \
                     only ball zero sets tabulate as radii"
                        .into(),
                ));
            }
            let zs = zero_set(dom, horizon)?;
            out.write(&zs.to_csv()?)?;
            Ok(0)
        }
        Command::Check {
            domain,
            points,
            tol,
            out,
        } => {
            let dom = Domain::parse(&domain)?;
            let text = std::fs::read_to_string(&points)?;
            let label = points
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "points".into());
            let set = PointSet::parse_csv(&text, label)?;
            let report = check_orthogonal(dom, &set, tol)?;
            out.write(&format!("{}\n", report.to_json()))?;
            Ok(if report.verdict { 0 } else { 1 })
        }
        Command::Distances {
            points,
            mode,
            tol,
            out,
        } => {
            let text = std::fs::read_to_string(&points)?;
            let set = PointSet::parse_csv(&text, "points")?;
            let mode = match mode.as_str() {
                "exact" => DistanceMode::Exact,
                "clustered" => DistanceMode::Clustered(tol),
                other => {
                    return Err(orthoexp::Error::InvalidArgument(format!(
                        "mode must be exact or clustered, got {other:?}"
                    )))
                }
            };
            let summary = distinct_distances(&set, mode)?;
            out.write(&summary.to_csv())?;
            Ok(0)
        }
        Command::Contradiction {
            dimension,
            radii,
            density_constant,
            out,
        } => {
            let r_list = parse_radii(&radii)?;
            let table = contradiction_table(dimension, &r_list, density_constant)?;
            out.write(&table.to_csv())?;
            Ok(0)
        }
        Command::Search {
            domain,
            radius,
            strategy,
            budget,
            seed,
            tol,
            out,
            log,
        } => {
            let dom = Domain::parse(&domain)?;
            if dom.kind() != DomainKind::UnitBall {
                return Err(orthoexp::Error::Unsupported(
                    "search runs over the ball; the cube has the lattice spectrum".into(),
                ));
            }
            let strategy: SearchStrategy = strategy.parse()?;
            let result = run_search(dom.dimension(), radius, strategy, tol, budget)?;
            out.write(&result.points.to_csv())?;
            let log_json = serde_json::to_string_pretty(&LoggedSearch {
                seed,
                log: &result.log,
            })
            .expect("log serialization cannot fail");
            match log {
                Some(path) => std::fs::write(path, format!("{log_json}\n"))?,
                None => eprintln!("{log_json}"),
            }
            Ok(0)
        }
    }
}

fn parse_radii(text: &str) -> orthoexp::Result<Vec<f64>> {
    let mut out = Vec::new();
    for tok in text.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        out.push(tok.parse().map_err(|_| {
            orthoexp::Error::InvalidArgument(format!("bad radius token {tok:?}"))
        })?);
    }
    Ok(out)
}
