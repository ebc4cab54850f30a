//! Command-line surface: statistics queries, graph export, hook censuses,
//! distribution tables, partition enumeration, and verification suites.
//!
//! Output is JSON on stdout (DOT and TSV where requested) and is
//! byte-deterministic given identical arguments, except for the wall-time
//! field of suite reports. Exit codes: 0 success, 1 verification failure,
//! 2 usage or validation error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use slopestat::{
    boundary_path, minimal_k, partitions, rect_hook_census, stats_at_slope, verify_hook_theorem,
    Error, Slope, YoungDiagram,
};
use slopestat_cli::suites::{run_suite, SuiteName};
use slopestat_cli::tables::{cell_dimension_table, histogram};

#[derive(Parser)]
#[command(
    name = "slopestat",
    version,
    about = "Slope statistics on Young diagrams, boundary multigraphs, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the statistic bundle of a partition at a slope as flat JSON
    Stats {
        /// Comma-separated row lengths, bottom row first; `-` for empty
        #[arg(long)]
        partition: String,
        /// Slope written p,q
        #[arg(long)]
        pq: Slope,
        /// Rectangle multiple used for the built-in graph-formula cross-check
        #[arg(long = "K")]
        k: Option<i64>,
    },
    /// Export the boundary multigraph of a partition
    Graph {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        pq: Slope,
        #[arg(long = "K")]
        k: Option<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Hook census with its explicit matching, or a rectangle census
    Census {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        arm: i64,
        #[arg(long)]
        leg: i64,
        /// Census inside the K p x K q rectangle instead of the quadrant
        #[arg(long, requires = "pq")]
        rect: bool,
        #[arg(long)]
        pq: Option<Slope>,
        #[arg(long = "K")]
        k: Option<i64>,
    },
    /// Histogram of h (or of the cell dimension |D| + h) over partitions of n
    Table {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        pq: Slope,
        /// Tabulate |D| + h instead of h
        #[arg(long)]
        dims: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
    },
    /// Run a verification suite; exits 1 if any instance fails
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteName,
        #[arg(long = "max-n")]
        max_n: i64,
        #[arg(long = "slope-bound")]
        slope_bound: Option<i64>,
    },
    /// List every partition of n in enumeration order
    Enumerate {
        #[arg(long)]
        n: i64,
    },
}

fn parse_diagram(text: &str) -> Result<YoungDiagram, Error> {
    text.parse()
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Stats { partition, pq, k } => {
            let d = parse_diagram(&partition)?;
            let bundle = stats_at_slope(&d, pq);
            let k = k.unwrap_or_else(|| minimal_k(&d, pq));
            let graph = boundary_path(&d, pq, k)?.graph();
            assert_eq!(
                graph.ctot(),
                bundle.ctot,
                "graph formula disagrees with definition"
            );
            assert_eq!(
                graph.midd(),
                bundle.midd,
                "graph formula disagrees with definition"
            );
            println!("{}", json(&bundle));
            Ok(0)
        }
        Command::Graph {
            partition,
            pq,
            k,
            format,
        } => {
            let d = parse_diagram(&partition)?;
            let k = k.unwrap_or_else(|| minimal_k(&d, pq));
            let graph = boundary_path(&d, pq, k)?.graph();
            match format {
                GraphFormat::Json => println!("{}", json(&graph)),
                GraphFormat::Dot => print!("{}", graph.to_dot()),
            }
            Ok(0)
        }
        Command::Census {
            partition,
            arm,
            leg,
            rect,
            pq,
            k,
        } => {
            let d = parse_diagram(&partition)?;
            if rect {
                let pq = pq.expect("clap enforces --pq with --rect");
                let k = k.unwrap_or_else(|| minimal_k(&d, pq));
                let report = rect_hook_census(&d, pq, k, arm, leg)?;
                println!("{}", json(&report));
            } else {
                let report = verify_hook_theorem(&d, arm, leg)?;
                println!("{}", json(&report));
            }
            Ok(0)
        }
        Command::Table {
            n,
            pq,
            dims,
            format,
        } => {
            if n < 0 {
                return Err(Error::InvalidArgument(format!(
                    "n must be non-negative, got {n}"
                )));
            }
            let table = if dims {
                cell_dimension_table(n, pq)?
            } else {
                histogram(n, pq)?
            };
            match format {
                TableFormat::Json => println!("{}", json(&table)),
                TableFormat::Tsv => {
                    println!("value\tcount");
                    for (value, count) in &table {
                        println!("{value}\t{count}");
                    }
                }
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            max_n,
            slope_bound,
        } => {
            if max_n < 0 {
                return Err(Error::InvalidArgument(format!(
                    "max-n must be non-negative, got {max_n}"
                )));
            }
            if let Some(bound) = slope_bound {
                if bound < 1 {
                    return Err(Error::InvalidArgument(format!(
                        "slope-bound must be at least 1, got {bound}"
                    )));
                }
            }
            let report = run_suite(suite, max_n, slope_bound);
            println!("{}", json(&report));
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Enumerate { n } => {
            if n < 0 {
                return Err(Error::InvalidArgument(format!(
                    "n must be non-negative, got {n}"
                )));
            }
            #[derive(serde::Serialize)]
            struct Listing {
                n: i64,
                count: usize,
                partitions: Vec<String>,
            }
            let names: Vec<String> = partitions(n).map(|d| d.to_string()).collect();
            println!(
                "{}",
                json(&Listing {
                    n,
                    count: names.len(),
                    partitions: names,
                })
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
