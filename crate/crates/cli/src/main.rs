//! `orbit-bell`: classical bounds and quantum values for Bell inequalities
//! built from group orbits of measurement settings.

mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orbit_bell::{Error, SearchOptions};

use report::{render, Format};

#[derive(Debug, Parser)]
#[command(name = "orbit-bell", version, about = "Bell inequalities from group orbits of measurement settings")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (defaults to text, or delimited for z4-scan)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the output to PATH instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker threads for the classical-bound search (0 = all processors)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the canonical solids
    Solids,
    /// Classical bound and quantum value for one pair of orbits
    Bounds {
        /// Alice's settings: a solid name or an orbit JSON file
        alice: String,
        /// Bob's settings: a solid name or an orbit JSON file
        bob: String,
    },
    /// Reproduce the reference table of bounds
    Table1 {
        /// Compare against the embedded reference values
        #[arg(long)]
        check: bool,
    },
    /// Decompose the classical vectors of a solid into group orbits
    Classify {
        solid: String,
        /// Mark the orbits realising the classical bound against this solid
        #[arg(long)]
        pair: Option<String>,
    },
    /// Z4 model: sweep Bob's initial vector over the sphere
    Z4Scan {
        /// Grid resolution: steps + 1 polar by steps azimuthal samples
        #[arg(long, default_value_t = 12)]
        steps: usize,
        /// Evaluate only these vectors (normalised), e.g. --point 1,0,0
        #[arg(long, value_name = "A,B,C", allow_hyphen_values = true, value_parser = commands::parse_point)]
        point: Vec<orbit_bell::Z4InitialVector<f64>>,
    },
    /// Z4 model: minimise the classical bound over Bob's initial vector
    Z4Min,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0} rows outside tolerance")]
    CheckFailed(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) | Self::Core(Error::UnknownSolid(_)) => 2,
            Self::Core(Error::BudgetExceeded { .. }) => 3,
            Self::CheckFailed(_) => 4,
            _ => 1,
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let options = SearchOptions::threads(cli.threads);
    let mut format = cli.format.unwrap_or(Format::Text);
    let mut failures = 0;
    let reports = match &cli.command {
        Command::Solids => commands::solids()?,
        Command::Bounds { alice, bob } => commands::bounds(alice, bob, &options)?,
        Command::Table1 { check } => {
            let (reports, failed) = commands::table1(*check, &options)?;
            failures = failed;
            reports
        }
        Command::Classify { solid, pair } => commands::classify(solid, pair.as_deref(), &options)?,
        Command::Z4Scan { steps, point } => {
            format = cli.format.unwrap_or(Format::Delimited);
            commands::z4_scan(*steps, point, &options)?
        }
        Command::Z4Min => commands::z4_min()?,
    };

    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    render(&reports, format, &mut out)?;
    out.flush()?;

    if failures > 0 {
        return Err(CliError::CheckFailed(failures));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("orbit-bell: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
