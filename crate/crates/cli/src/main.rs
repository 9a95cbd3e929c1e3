use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cyclic_moduli_cli::{configure_threads, run, Command, Options};

/// Exact computations on cyclic Higgs bundle moduli over the projective line.
///
/// SPEC is `cyclic t=<int> nodes=(<int>,...)` or
/// `k1 t=<int> split=(<int>,...) tail=<int>`.
#[derive(Parser)]
#[command(name = "cyclic-moduli", version)]
struct Cli {
    /// Emit canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sheet count, nilpotent cone and dimensions (cyclic); reduction and decomposition (k1).
    Analyze { spec: String },
    /// Points of the Hitchin fibre over a split section gamma.
    Fibre {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Fibre size over a base point with the given multiplicity profile.
    Count {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        profile: String,
    },
    /// The fibre over zero.
    Nilcone { spec: String },
    /// Limit of the rep under t -> 0 in the C* action.
    Flow {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
    },
    /// Stability test with a destabilizing coordinate subbundle on failure.
    Stable {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
    },
    /// Euclidean reduction of a k1 rep.
    Reduce {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
    },
    /// Product decomposition of a k1 moduli space.
    Decompose { spec: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("{e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    let (command, spec) = match cli.command {
        Cmd::Analyze { spec } => (Command::Analyze, spec),
        Cmd::Fibre { spec, gamma } => (Command::Fibre { gamma }, spec),
        Cmd::Count { spec, profile } => (Command::Count { profile }, spec),
        Cmd::Nilcone { spec } => (Command::Nilcone, spec),
        Cmd::Flow { spec, rep } => (Command::Flow { rep }, spec),
        Cmd::Stable { spec, rep } => (Command::Stable { rep }, spec),
        Cmd::Reduce { spec, rep } => (Command::Reduce { rep }, spec),
        Cmd::Decompose { spec } => (Command::Decompose, spec),
    };
    let out = run(&command, &spec, &Options { json: cli.json });
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
