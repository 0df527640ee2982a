use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use domchain::family_spec::{is_family_spec, parse_family_spec};
use domchain::scan::{analyze, enumerate_labeled, GraphRecord, ScanMode, ScanOptions, Status};
use domchain::{encode_graph6, parse_graph6, verify, Graph, Limits};

mod stream;

/// Exit codes.
const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(name = "domchain", version, about = "Domination-chain invariants and class checks for small graphs")]
struct Cli {
    /// Override the solver size caps (also read from DOMCHAIN_MAX_N).
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chain values with witnesses for one graph (graph6 or family spec).
    Invariants { input: String },
    /// Chain values, F / F_alpha membership and property verdicts for one graph.
    Classify { input: String },
    /// Analyze a stream of graph6 lines, one JSON or CSV record per line.
    Scan {
        /// Input file; standard input when omitted or "-".
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Classify)]
        mode: Mode,
        /// Skip disconnected graphs.
        #[arg(long)]
        connected_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Include per-graph wall time in records.
        #[arg(long)]
        timings: bool,
    },
    /// Print every labeled graph on N vertices as graph6, by edge bitmask.
    Enumerate {
        n: usize,
        #[arg(long)]
        connected_only: bool,
    },
    /// Print the graph6 encoding of a family spec such as `hypercube:3`.
    Family { spec: String },
    /// Run the reproduction table and print expected against computed values.
    #[command(alias = "verify-paper")]
    Verify {
        /// Run only these rows (1-15); repeatable.
        #[arg(long = "row", value_name = "ROW")]
        rows: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Report,
    Classify,
    Theorems,
    Problem1,
}

impl From<Mode> for ScanMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Report => ScanMode::Report,
            Mode::Classify => ScanMode::Classify,
            Mode::Theorems => ScanMode::Theorems,
            Mode::Problem1 => ScanMode::Problem1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        // A closed pipe (`domchain enumerate 7 | head`) is not an error.
        Err(err) if is_broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn is_broken_pipe(err: &anyhow::Error) -> bool {
    let broken = Some(io::ErrorKind::BrokenPipe);
    err.chain().any(|e| {
        e.downcast_ref::<io::Error>().map(io::Error::kind) == broken
            || e.downcast_ref::<serde_json::Error>().and_then(serde_json::Error::io_error_kind) == broken
            || matches!(e.downcast_ref::<csv::Error>().map(csv::Error::kind),
                Some(csv::ErrorKind::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe)
    })
}

/// `println!` panics on a closed pipe; this reports it as an error instead.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(io::stdout().lock(), $($arg)*)?
    };
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<domchain::Error>() {
        Some(e) if e.is_capacity() => EXIT_CAPACITY,
        Some(domchain::Error::Consistency(_)) => EXIT_FAILURE,
        Some(_) => EXIT_INPUT,
        None if err.downcast_ref::<io::Error>().is_some() => EXIT_INPUT,
        None => EXIT_FAILURE,
    }
}

fn limits(max_n: Option<usize>) -> Result<Limits> {
    match max_n {
        Some(n) => Ok(Limits::default().with_max_n(n)),
        None => Ok(Limits::from_env()?),
    }
}

fn read_input(input: &str) -> Result<Graph> {
    let input = input.trim();
    if is_family_spec(input) {
        Ok(parse_family_spec(input)?)
    } else {
        Ok(parse_graph6(input)?)
    }
}

fn run(cli: Cli) -> Result<u8> {
    let limits = limits(cli.max_n)?;
    match cli.command {
        Command::Invariants { input } => single(&input, ScanMode::Report, limits),
        Command::Classify { input } => single(&input, ScanMode::Classify, limits),
        Command::Scan { file, mode, connected_only, format, jobs, timings } => {
            let opts = ScanOptions { mode: mode.into(), connected_only, timings, limits };
            let summary = stream::scan(file.as_deref(), &opts, format, jobs)?;
            Ok(if summary.failed > 0 { EXIT_FAILURE } else { 0 })
        }
        Command::Enumerate { n, connected_only } => {
            let mut out = BufWriter::new(io::stdout().lock());
            for g in enumerate_labeled(n, connected_only)? {
                writeln!(out, "{}", encode_graph6(&g))?;
            }
            out.flush()?;
            Ok(0)
        }
        Command::Family { spec } => {
            out!("{}", encode_graph6(&parse_family_spec(&spec)?));
            Ok(0)
        }
        Command::Verify { rows } => verify_table(&rows, &limits),
    }
}

fn single(input: &str, mode: ScanMode, limits: Limits) -> Result<u8> {
    let g = read_input(input).with_context(|| format!("cannot read graph {input:?}"))?;
    let record: GraphRecord = analyze(&g, &ScanOptions { mode, limits, ..Default::default() });
    out!("{}", serde_json::to_string_pretty(&record)?);
    Ok(match &record.status {
        Status::Ok | Status::Skipped { .. } => 0,
        Status::Capped { invariants } => {
            eprintln!("capped: {} (raise --max-n or {})", invariants.join(", "), domchain::limits::MAX_N_ENV);
            EXIT_CAPACITY
        }
        Status::Failed { reason } => {
            eprintln!("failed: {reason}");
            EXIT_FAILURE
        }
    })
}

fn verify_table(rows: &[usize], limits: &Limits) -> Result<u8> {
    let rows: Vec<usize> = if rows.is_empty() { (1..=verify::ROW_TITLES.len()).collect() } else { rows.to_vec() };
    let mut failed = Vec::new();
    for &row in rows.iter() {
        if row == 0 || row > verify::ROW_TITLES.len() {
            bail!(domchain::Error::Input(format!("no row {row}; rows are 1..={}", verify::ROW_TITLES.len())));
        }
        let result = verify::run_row(row, limits)?;
        out!("{result} [{:.2} s]", result.elapsed.as_secs_f64());
        if !result.pass {
            failed.push(row);
        }
    }
    out!("note: {}", verify::LIMITATIONS);
    if failed.is_empty() {
        out!("all {} rows pass", rows.len());
        Ok(0)
    } else {
        let names: Vec<String> = failed.iter().map(|r| format!("{r} ({})", verify::ROW_TITLES[r - 1])).collect();
        eprintln!("failing rows: {}", names.join(", "));
        Ok(EXIT_FAILURE)
    }
}
