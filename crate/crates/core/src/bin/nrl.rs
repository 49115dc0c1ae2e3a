use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nrl_core::cli::{self, Command};
use nrl_core::Error;

/// Contact scattering, regularization comparison, few-boson stability and
/// boost-positivity tables.
#[derive(Parser)]
#[command(name = "nrl", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Amplitude and phase shift against momentum or cutoff.
    Scatter(Common),
    /// Binding energy against the renormalized coupling.
    Bound(Common),
    /// Sharp cutoff, square well and lattice binding energies across eps.
    Regcompare(Common),
    /// Few-boson ground energies or the hard-core excitation branch.
    Edscan(Common),
    /// Minima of the boosted free Hamiltonian.
    Passivity(Common),
}

#[derive(Args)]
struct Common {
    /// `key = value` configuration file.
    #[arg(long)]
    config: Option<String>,
    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<String>,
    /// csv or json.
    #[arg(long)]
    format: Option<String>,
    /// Per-key overrides, `--key value`.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true, value_name = "--KEY VALUE")]
    overrides: Vec<String>,
}

fn execute(command: Command, common: Common) -> Result<(), Error> {
    let text = match &common.config {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.clone(),
            msg: e.to_string(),
        })?,
        None => String::new(),
    };
    let mut overrides = Vec::new();
    if let Some(out) = common.out {
        overrides.extend(["--out".to_string(), out]);
    }
    if let Some(format) = common.format {
        overrides.extend(["--format".to_string(), format]);
    }
    overrides.extend(common.overrides);
    let cfg = cli::parse_config(&text, &overrides)?;
    let rows = cli::run(command, &cfg)?;
    cli::emit_table(&rows, cfg.format, cfg.out.as_deref().map(Path::new))
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (command, common) = match args.command {
        Sub::Scatter(c) => (Command::Scatter, c),
        Sub::Bound(c) => (Command::Bound, c),
        Sub::Regcompare(c) => (Command::Regcompare, c),
        Sub::Edscan(c) => (Command::Edscan, c),
        Sub::Passivity(c) => (Command::Passivity, c),
    };
    match execute(command, common) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("nrl: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
