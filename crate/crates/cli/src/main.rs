use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Environment variable that redirects relative `--out` paths into a directory.
pub const OUT_DIR_ENV: &str = "SYMCIRC_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "symcirc", version, about = "Symmetry-invariant subalgebras of su(2^n), paths and circuits")]
struct Cli {
    /// Omit the timestamped header line from text and CSV output.
    #[arg(long, global = true)]
    no_header: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Number of qubits (required with a preset, optional with a spec file).
    #[arg(long)]
    pub n: Option<usize>,

    /// Symmetry spec file (JSON) or preset: trivial, full_swap, cyclic, dihedral.
    #[arg(long, default_value = "full_swap")]
    pub symmetry: String,

    /// Invariance tolerance.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Write primary output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the invariant basis and its dimension.
    Basis {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Dimension table (n, group, dimension, burnside) as CSV.
    Dim {
        #[command(flatten)]
        common: CommonArgs,
        /// Emit rows for every qubit count from this value up to --n (presets only).
        #[arg(long)]
        from: Option<usize>,
    },
    /// Per-element symmetry defects of a matrix; exit 1 when not invariant.
    Check {
        #[command(flatten)]
        common: CommonArgs,
        /// JSON matrix file (nested arrays of [re, im]).
        #[arg(long)]
        matrix: PathBuf,
        /// Check generators only instead of every group element.
        #[arg(long)]
        generators_only: bool,
    },
    /// Sample the path A(t) from the identity to a unitary as CSV.
    Path {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// Compile an exponential into a circuit, or evaluate a circuit file.
    Synth {
        #[command(flatten)]
        common: CommonArgs,
        /// Index of an invariant basis element.
        #[arg(long, conflicts_with_all = ["pauli", "sum", "eval"])]
        element: Option<usize>,
        /// A single Pauli string, most-significant qubit first.
        #[arg(long, conflicts_with_all = ["sum", "eval"])]
        pauli: Option<String>,
        /// File with a Pauli sum in text form.
        #[arg(long, conflicts_with = "eval")]
        sum: Option<PathBuf>,
        /// Circuit file to evaluate into a JSON matrix.
        #[arg(long)]
        eval: Option<PathBuf>,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        alpha: f64,
    },
    /// Sample a random invariant unitary as a JSON matrix.
    Random {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Run the composition, closure, commuting-diagram and path suites.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 20)]
        pairs: usize,
        #[arg(long, default_value_t = 10)]
        paths: usize,
    },
}

/// Primary output plus exit code.
pub struct Outcome {
    pub body: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(body: String) -> Self {
        Self { body, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Basis { common } => (common, commands::basis(common)),
        Command::Dim { common, from } => (common, commands::dim(common, *from)),
        Command::Check { common, matrix, generators_only } => {
            (common, commands::check(common, matrix, *generators_only))
        }
        Command::Path { common, matrix, samples } => (common, commands::path(common, matrix, *samples)),
        Command::Synth { common, element, pauli, sum, eval, alpha } => {
            (common, commands::synth(common, *element, pauli.as_deref(), sum.as_deref(), eval.as_deref(), *alpha))
        }
        Command::Random { common, depth } => (common, commands::random(common, *depth)),
        Command::Verify { common, pairs, paths } => (common, commands::verify(common, *pairs, *paths)),
    };
    match result {
        Ok(outcome) => match emit(common, &outcome.body, cli.no_header) {
            Ok(()) => ExitCode::from(outcome.code),
            Err(message) => {
                eprintln!("error: {message}");
                ExitCode::from(2)
            }
        },
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn emit(common: &CommonArgs, body: &str, no_header: bool) -> Result<(), String> {
    let mut text = String::new();
    if !no_header && common.format != Format::Json {
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        text.push_str(&format!("# symcirc {} unix-time {secs}\n", env!("CARGO_PKG_VERSION")));
    }
    text.push_str(body);
    match &common.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let path = resolve_out(path);
            std::fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
    }
}

fn resolve_out(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}
