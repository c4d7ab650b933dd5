use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dirichlet_core::{Error, ErrorCategory, Limits};

mod census;
mod commands;
mod plot;

#[derive(Debug, Parser)]
#[command(name = "dirichlet", version, about = "Dirichlet arrangements of electrical networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Semicompatible,
    Compatible,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a network file.
    Validate { file: PathBuf },
    /// Precoloring (characteristic) polynomial.
    Charpoly { file: PathBuf },
    /// Total and bounded chamber counts.
    CountChambers { file: PathBuf },
    /// Semicompatible or compatible orientations.
    Orientations {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Compatible)]
        mode: Mode,
        /// Include an exact point in each chamber.
        #[arg(long)]
        points: bool,
        /// Include facet adjacency among bounded chambers.
        #[arg(long)]
        adjacency: bool,
    },
    /// Intersection poset with its Möbius function.
    Poset { file: PathBuf },
    /// Supersolvability with an elimination ordering or a chordless cycle.
    Supersolvable { file: PathBuf },
    /// Harmonic extension of the boundary values.
    Harmonic {
        file: PathBuf,
        /// Conductances as `edge=value,...`; overrides the file.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Edge energies of the harmonic extension.
    Energies {
        file: PathBuf,
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Functions with prescribed edge energies, one per bounded chamber.
    CriticalPoints {
        file: PathBuf,
        /// Energies as `edge=value,...`; overrides the file.
        #[arg(long)]
        eta: Option<String>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 200)]
        max_iter: usize,
    },
    /// SVG of the line arrangement of a network with two interior vertices.
    Plot { file: PathBuf },
    /// CSV of invariants over the exhaustive corpus.
    Census {
        /// Largest vertex count in the corpus.
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
    },
}

fn category_name(c: ErrorCategory) -> &'static str {
    match c {
        ErrorCategory::Validation => "validation",
        ErrorCategory::SizeCap => "size_cap",
        ErrorCategory::Convergence => "convergence",
        ErrorCategory::Internal => "internal",
    }
}

fn exit_code(c: ErrorCategory) -> u8 {
    match c {
        ErrorCategory::Validation | ErrorCategory::Internal => 1,
        ErrorCategory::SizeCap => 2,
        ErrorCategory::Convergence => 3,
    }
}

fn fail(kind: &str, category: ErrorCategory, message: String) -> ExitCode {
    let body = json!({
        "error": {
            "kind": kind,
            "category": category_name(category),
            "message": message,
        }
    });
    eprintln!("{body}");
    ExitCode::from(exit_code(category))
}

fn fail_with(e: &Error) -> ExitCode {
    fail(e.kind(), e.category(), e.to_string())
}

fn run(cli: &Cli, limits: &Limits) -> Result<String, Error> {
    let format = cli.format;
    let report = match &cli.command {
        Command::Validate { file } => commands::validate(&commands::load(file)?),
        Command::Charpoly { file } => commands::charpoly(&commands::load(file)?)?,
        Command::CountChambers { file } => commands::count_chambers(&commands::load(file)?)?,
        Command::Orientations {
            file,
            mode,
            points,
            adjacency,
        } => commands::orientations(&commands::load(file)?, *mode, *points, *adjacency, limits)?,
        Command::Poset { file } => commands::poset(&commands::load(file)?, limits)?,
        Command::Supersolvable { file } => commands::supersolvable(&commands::load(file)?),
        Command::Harmonic { file, gamma } => commands::harmonic(&commands::load(file)?, gamma.as_deref())?,
        Command::Energies { file, gamma } => commands::energies(&commands::load(file)?, gamma.as_deref())?,
        Command::CriticalPoints {
            file,
            eta,
            tol,
            max_iter,
        } => commands::critical_points(&commands::load(file)?, eta.as_deref(), *tol, *max_iter, limits)?,
        Command::Plot { file } => return plot::plot(&commands::load(file)?.net),
        Command::Census { max_vertices } => return census::census(*max_vertices),
    };
    Ok(match format {
        Format::Json => format!("{}\n", report.json),
        Format::Text => report.text,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            return fail("Usage", ErrorCategory::Validation, message.trim().to_string());
        }
    };
    let limits = match Limits::from_env() {
        Ok(l) => l,
        Err(e) => return fail_with(&e),
    };
    let text = match run(&cli, &limits) {
        Ok(t) => t,
        Err(e) => return fail_with(&e),
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                return fail("Io", ErrorCategory::Validation, format!("{}: {e}", path.display()));
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
