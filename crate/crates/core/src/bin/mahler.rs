//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a property or validation failure, 2 a usage or
//! parse error, 3 an internal invariant violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mahler::geometry::SymPolygon;
use mahler::rational::{self, Rational};
use mahler::zonogen::{random_zonogon, GenSpec};
use mahler::{descend, named_polygon, svg, verify, Error};

#[derive(Parser)]
#[command(
    name = "mahler",
    version,
    about = "Exact Mahler volume and descent for symmetric polygons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random zonogon with 2n vertices as polygon JSON.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = GenSpec::DEFAULT_BOUND)]
        bound: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print area, polar area and Mahler volume.
    Volume {
        /// Polygon JSON file, or `named:<square|diamond|hex6|hex6b|oct8>`.
        input: String,
    },
    /// Delete pairs down to a parallelogram and write the trace.
    Descend {
        input: String,
        #[arg(long)]
        trace_out: Option<PathBuf>,
        #[arg(long)]
        svg_out: Option<PathBuf>,
    },
    /// Run the full property battery and print a pass/fail table.
    Verify { input: String },
    /// Draw the polygon and its polar as SVG.
    Render {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// An error paired with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidSpec(_) | Error::UnknownName(_) => 2,
            ref e if e.is_internal() => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

fn load(input: &str) -> Result<SymPolygon, Failure> {
    if let Some(name) = input.strip_prefix("named:") {
        return Ok(named_polygon(name)?);
    }
    let path = Path::new(input);
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok(SymPolygon::from_json(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn show(q: &Rational) -> String {
    format!("{q} ({:.6})", rational::to_f64(q))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gen {
            n,
            seed,
            bound,
            out,
        } => {
            let spec = GenSpec::new(n, seed, bound)?;
            emit(out.as_deref(), &random_zonogon(&spec).to_json())?;
        }
        Command::Volume { input } => {
            let poly = load(&input)?;
            let area = poly.area();
            let dual_area = poly.polar_dual().area();
            println!("vertices:  {}", poly.len());
            println!("area:      {}", show(&area));
            println!("polar:     {}", show(&dual_area));
            println!("mahler:    {}", show(&(area * dual_area)));
        }
        Command::Descend {
            input,
            trace_out,
            svg_out,
        } => {
            let trace = descend(&load(&input)?)?;
            emit(trace_out.as_deref(), &trace.to_json())?;
            if let Some(path) = svg_out {
                fs::write(&path, svg::render_trace(&trace)).map_err(|e| io_failure(&path, e))?;
            }
        }
        Command::Verify { input } => {
            let poly = load(&input)?;
            let battery = verify::run_battery(&poly);
            print!("{}", battery.table());
            return Ok(battery.exit_code() as u8);
        }
        Command::Render { input, out } => {
            emit(out.as_deref(), &svg::render_pair(&load(&input)?))?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
