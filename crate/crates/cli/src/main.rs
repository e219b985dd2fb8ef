//! `singline`: counts of surfaces in P³ singular along a line.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
//! or domain errors.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use singline_core::verify::{run_suite, Suite, VerifyOptions};
use singline_core::{count_via_pipeline, CohClass, MultiplicationTable, SchubertBasis, SurfaceQuery};

use output::{render, Format, OutputRecord};

#[derive(Parser, Debug)]
#[command(name = "singline", version, about = "Count surfaces in P^3 singular to order k along a line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count degree-d surfaces singular to order k along a line.
    Count {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Tabulate every 1 <= k <= d <= dmax.
    Table {
        #[arg(long, allow_negative_numbers = true)]
        dmax: i64,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Run the self-check suites.
    Verify {
        /// Run a single suite.
        #[arg(long)]
        suite: Option<Suite>,
        /// Replace σ11·σ2 = 0 by σ22 before running, to see the checks fail.
        #[arg(long, hide = true)]
        mutate_table: bool,
    },
}

enum Failure {
    Domain(String),
    Verification,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Count { d, k, format } => {
            let record = count_record(d, k)?;
            render(io::stdout().lock(), &[record], format)?;
        }
        Command::Table { dmax, format } => {
            if dmax < 2 {
                return Err(Failure::Domain(format!("invalid table bound (dmax={dmax}): dmax >= 2 is violated")));
            }
            let dmax = u32::try_from(dmax)
                .map_err(|_| Failure::Domain(format!("dmax={dmax} is too large")))?;
            let mut records = Vec::new();
            for q in SurfaceQuery::grid(dmax) {
                records.push(count_record(q.d().into(), q.k().into())?);
            }
            render(io::stdout().lock(), &records, format)?;
        }
        Command::Verify { suite, mutate_table } => verify(suite, mutate_table)?,
    }
    Ok(())
}

fn count_record(d: i64, k: i64) -> Result<OutputRecord, Failure> {
    let q = SurfaceQuery::new(d, k).map_err(|e| Failure::Domain(e.to_string()))?;
    let r = count_via_pipeline(&q).map_err(|e| Failure::Domain(e.to_string()))?;
    Ok(OutputRecord::from(&r))
}

fn verify(suite: Option<Suite>, mutate_table: bool) -> Result<(), Failure> {
    use SchubertBasis::*;
    let mutated = MultiplicationTable::standard().with_product(S11, S2, CohClass::basis(S22));
    let opts = VerifyOptions {
        table: if mutate_table { &mutated } else { MultiplicationTable::standard() },
        ..VerifyOptions::default()
    };
    let suites = suite.map_or_else(|| Suite::ALL.to_vec(), |s| vec![s]);
    let mut out = io::stdout().lock();
    let mut all_passed = true;
    for s in suites {
        let report = run_suite(s, &opts);
        writeln!(out, "{report}")?;
        for note in &report.notes {
            writeln!(out, "    note: {note}")?;
        }
        for failure in &report.failures {
            writeln!(out, "    {failure}")?;
        }
        all_passed &= report.passed();
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
