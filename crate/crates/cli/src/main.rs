//! `logred`: batch front end for the log reduction toolkit.
//!
//! Exit status: 0 when a result was computed (or a yes/no question was
//! answered yes), 1 when a yes/no question was answered no, 2 on input
//! errors.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "logred", version, about = "Combinatorics of log regular models and sncd curve fibres")]
struct Cli {
    /// Print a single JSON object {command, input_digest, result}.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FileArg {
    /// Model or dual-graph JSON file.
    file: std::path::PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the fan axioms, chart multiplicities and p-locus monotonicity.
    Validate(FileArg),
    /// Split the strata into p-locus and p'-locus.
    Classify(FileArg),
    /// Tame monodromy zeta function.
    Zeta(FileArg),
    /// Tame Euler characteristic.
    Euler(FileArg),
    /// Does a tamely ramified point exist?
    TamePoint(FileArg),
    /// Log smoothness from charts (models) or Saito's criterion (graphs).
    CheckSmooth(FileArg),
    /// Restrictions a log smooth model imposes on its p-locus.
    Restrictions(FileArg),
    /// Saito's criterion on a dual graph.
    Saito(FileArg),
    /// Multiply every multiplicity of a dual graph by m.
    Scale {
        #[command(flatten)]
        input: FileArg,
        #[arg(long)]
        m: u64,
        /// Emit Graphviz text instead of a graph file.
        #[arg(long)]
        dot: bool,
    },
    /// Contract (-1)-curves.
    Contract {
        #[command(flatten)]
        input: FileArg,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        vertex: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Minimal sncd dual graph of a Kodaira fibre type.
    Kodaira {
        /// I, I*, II, III, IV, II*, III*, IV* (or I<n>, I<n>*).
        #[arg(long = "type")]
        symbol: String,
        #[arg(long)]
        n: Option<u32>,
        /// Residue characteristic recorded in the emitted graph file.
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long)]
        dot: bool,
    },
    /// Decide log good reduction of a genus-1 curve.
    Genus1 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        period: u64,
        /// true, false, or auto (true for p >= 5 with good or multiplicative Jacobian).
        #[arg(long = "h1-tame")]
        h1_tame: String,
        /// good, mult or add.
        #[arg(long)]
        jacobian: String,
        #[arg(long = "coh-flat")]
        coh_flat: Option<bool>,
        #[arg(long)]
        mu: Option<u64>,
        #[arg(long)]
        supersingular: Option<bool>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = commands::run(&cli.command);
    let code = run.exit_code();
    let (stdout, stderr) = run.render(cli.json);
    print!("{stdout}");
    eprint!("{stderr}");
    ExitCode::from(code)
}
