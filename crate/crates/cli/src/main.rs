//! `specbounds` command-line front end.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use specbounds::bounds::bound_report;
use specbounds::graph::MAX_GRAPH6_N;
use specbounds::harness::{run_batch, verify_paper, BatchOptions, ClaimStatus, VerifyOptions};
use specbounds::invariants::invariant_report;
use specbounds::{Error, FamilySpec, Graph};

#[derive(Parser)]
#[command(name = "specbounds", version, about = "Combinatorial bounds on the least adjacency eigenvalue")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named family member as graph6, e.g. `multipartite:3,2`.
    Family { spec: String },
    /// Exact invariants (α, ω, χ, θ, η, ι, mad) as JSON.
    Invariants(GraphInput),
    /// Every bound and the chain check as JSON.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        /// Clique parameter for Nikiforov's bound; defaults to max(2, ω).
        #[arg(long)]
        nikiforov_r: Option<u32>,
    },
    /// Run every graph of a graph6 corpus.
    Batch {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Treat graphs beyond the solver ceilings as errors.
        #[arg(long)]
        strict: bool,
    },
    /// Re-derive the sharpness and comparison claims.
    VerifyPaper {
        /// Comma-separated claim ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        #[arg(long, default_value_t = 4)]
        max_s: usize,
        /// Print results as JSON instead of one line per claim.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GraphInput {
    /// A graph in graph6 format.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    graph6: Option<String>,
    /// Read graphs from a file, one graph6 string per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Exit status 2: the input could not be understood.
fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Graph6(_)
            | Error::Line { .. }
            | Error::InvalidFamily(_)
            | Error::Io(_)
            | Error::UnknownClaim(_)
            | Error::InvalidR(_)
            | Error::TooManyVertices { .. }
    )
}

impl GraphInput {
    /// One graph from the argument, or every graph of the file.
    fn graphs(&self) -> Result<(bool, Vec<Graph>), Error> {
        match (&self.graph6, &self.file) {
            (Some(g6), _) => Ok((false, vec![Graph::parse_graph6(g6)?])),
            (None, Some(path)) => {
                let text = fs::read_to_string(path)?;
                let graphs = specbounds::harness::parse_corpus(&text)?;
                Ok((true, graphs.into_iter().map(|(_, _, g)| g).collect()))
            }
            (None, None) => unreachable!("clap requires one of the inputs"),
        }
    }
}

fn print_json<T: serde::Serialize>(many: bool, values: Vec<T>) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if many {
        serde_json::to_writer_pretty(&mut out, &values)?;
    } else {
        serde_json::to_writer_pretty(&mut out, &values[0])?;
    }
    writeln!(out)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Family { spec } => {
            let g = spec.parse::<FamilySpec>()?.generate()?;
            if g.n() > MAX_GRAPH6_N {
                return Err(Error::TooManyVertices { n: g.n(), max: MAX_GRAPH6_N });
            }
            println!("{}", g.to_graph6());
        }
        Command::Invariants(input) => {
            let (many, graphs) = input.graphs()?;
            let reports = graphs.iter().map(invariant_report).collect::<Result<Vec<_>, _>>()?;
            print_json(many, reports)?;
        }
        Command::Bounds { input, nikiforov_r } => {
            let (many, graphs) = input.graphs()?;
            let reports = graphs.iter().map(|g| bound_report(g, nikiforov_r)).collect::<Result<Vec<_>, _>>()?;
            let ok = reports.iter().all(|r| r.chain_ok);
            print_json(many, reports)?;
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Batch { input, format, strict } => {
            let text = fs::read_to_string(&input)?;
            let output = run_batch(&text, BatchOptions { strict })?;
            let stdout = io::stdout();
            match format {
                Format::Csv => {
                    output.write_csv(stdout.lock())?;
                    let s = &output.summary;
                    eprintln!(
                        "rows={} skipped={} chain_failures={} eta_sharp={} iota_sharp={} explicit_sharp={} \
                         min_eta_gap={} mean_eta_gap={}",
                        s.rows,
                        s.skipped,
                        s.chain_failures,
                        s.eta_sharp,
                        s.iota_sharp,
                        s.explicit_sharp,
                        s.min_eta_gap.map(specbounds::harness::format_sig10).unwrap_or_default(),
                        s.mean_eta_gap.map(specbounds::harness::format_sig10).unwrap_or_default(),
                    );
                }
                Format::Json => {
                    let mut out = stdout.lock();
                    output.write_json(&mut out)?;
                    writeln!(out)?;
                }
            }
            if output.summary.skipped > 0 {
                eprintln!("warning: {} graph(s) skipped", output.summary.skipped);
            }
            if !output.ok() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::VerifyPaper { claims, max_s, json } => {
            let options = VerifyOptions { claims, max_s, ..VerifyOptions::default() };
            let results = verify_paper(&options)?;
            if json {
                print_json(true, results.clone())?;
            } else {
                for r in &results {
                    let tag = match r.status {
                        ClaimStatus::Pass => "PASS",
                        ClaimStatus::Fail => "FAIL",
                        ClaimStatus::Vacuous => "VACUOUS",
                    };
                    println!("{tag:7} {:9} {} expected: {}; computed: {}", r.id, r.parameters, r.expected, r.computed);
                }
            }
            if !results.iter().all(|r| r.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if usage_error(&e) { 2 } else { 1 })
        }
    }
}
