//! `steiner`: closed-form Euclidean Steiner minimal trees for three and
//! four terminals, with structured-text and JSON reports, SVG figures,
//! and an independent numerical cross-check.
//!
//! Exit codes: 0 success, 2 invalid input, 3 no full tree exists,
//! 4 verification failure.

pub mod commands;
pub mod instance;
pub mod report;
pub mod svg;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "steiner",
    about = "Closed-form Euclidean Steiner minimal trees for three and four terminals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the three-terminal problem.
    Solve3(Solve3Args),
    /// Solve the four-terminal problem, comparing both full-tree topologies.
    Solve4(Solve4Args),
    /// Trace the junction loci while the third terminal walks a path.
    Loci(LociArgs),
    /// Cross-check the closed form against the numerical solver and the
    /// identity suite; exits 4 when any identity fails.
    Verify(VerifyArgs),
}

#[derive(Args)]
pub struct Solve3Args {
    /// Instance file, or three inline "x,y" pairs. Put pairs that start
    /// with a minus sign after a `--` separator.
    #[arg(required = true, value_name = "INPUT")]
    pub input: Vec<String>,
    /// Write an SVG figure of the construction.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Run the independent numerical solver and report agreement.
    #[arg(long)]
    pub verify: bool,
    /// Override the geometric tolerance eps_geom.
    #[arg(long, value_name = "X")]
    pub tol: Option<f64>,
    /// Also write the report as JSON.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Args)]
pub struct Solve4Args {
    /// Instance file, or four inline "x,y" pairs.
    #[arg(required = true, value_name = "INPUT")]
    pub input: Vec<String>,
    /// Write an SVG figure with both trees and the construction circles.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Accepted for symmetry with solve3; the numerical cross-check is
    /// always included in solve4 reports.
    #[arg(long)]
    pub verify: bool,
    /// Reorder the terminals into counterclockwise convex order when
    /// possible, recording the permutation.
    #[arg(long)]
    pub normalize: bool,
    /// Override the geometric tolerance eps_geom.
    #[arg(long, value_name = "X")]
    pub tol: Option<f64>,
    /// Also write the report as JSON.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Args)]
pub struct LociArgs {
    /// First fixed terminal, "x,y".
    #[arg(value_name = "P1", allow_hyphen_values = true)]
    pub p1: String,
    /// Second fixed terminal, "x,y".
    #[arg(value_name = "P2", allow_hyphen_values = true)]
    pub p2: String,
    /// Fourth fixed terminal, "x,y".
    #[arg(value_name = "P4", allow_hyphen_values = true)]
    pub p4: String,
    /// Polyline for the wandering terminal: whitespace-separated
    /// "x,y" pairs.
    #[arg(long, value_name = "PAIRS", allow_hyphen_values = true)]
    pub path: String,
    /// Number of samples taken evenly along the polyline.
    #[arg(long, value_name = "N", default_value_t = 50)]
    pub samples: usize,
    /// Write an SVG figure with the circles and junction trails.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Override the geometric tolerance eps_geom.
    #[arg(long, value_name = "X")]
    pub tol: Option<f64>,
    /// Also write the report as JSON.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Instance file, or four inline "x,y" pairs.
    #[arg(required = true, value_name = "INPUT")]
    pub input: Vec<String>,
    /// Replace the first junction with this "x,y" point before checking;
    /// a negative test of the checker itself.
    #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
    pub check_point: Option<String>,
    /// Override the geometric tolerance eps_geom.
    #[arg(long, value_name = "X")]
    pub tol: Option<f64>,
    /// Also write the report as JSON.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

/// Parses the command line and runs one subcommand, returning the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let started = std::time::Instant::now();
    let code = match cli.command {
        Command::Solve3(args) => commands::cmd_solve3(&args),
        Command::Solve4(args) => commands::cmd_solve4(&args),
        Command::Loci(args) => commands::cmd_loci(&args),
        Command::Verify(args) => commands::cmd_verify(&args),
    };
    // Timing stays on stderr so reports are byte-identical across runs.
    eprintln!("timing: {} us", started.elapsed().as_micros());
    code
}
