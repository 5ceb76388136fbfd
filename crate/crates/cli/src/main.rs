use std::path::PathBuf;
use std::process::ExitCode;

use akhecke::commands::{cmd_enumerate, cmd_induce, cmd_layers, cmd_verify, ParamSource, RunConfig};
use akhecke::combinatorics::MultiPartition;
use akhecke::{checks, Error};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "akh", version, about = "Exact Specht filtrations of induced modules of Ariki-Koike algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multipartitions, tableau counts, addable and removable nodes, layer orders.
    Enumerate(Common),
    /// Builds and certifies the Specht filtration of Ind S(μ).
    Induce(Common),
    /// Runs the verification checks at (ℓ, n).
    Verify {
        #[command(flatten)]
        common: Common,
        /// Run only this check (repeatable); see `akh checks`.
        #[arg(long = "check")]
        checks: Vec<String>,
    },
    /// The outer layers of M(μ∪ω) and their dominance inversions, without linear algebra.
    Layers(Common),
    /// Lists the available checks.
    Checks,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 1)]
    ell: usize,
    #[arg(long)]
    n: usize,
    /// Multipartition as a JSON array of arrays, e.g. [[2,1],[1]].
    #[arg(long)]
    mu: Option<String>,
    /// `rational` or `gfp:<p>`; requires --q and --Q.
    #[arg(long, requires_all = ["q", "big_q"], conflicts_with = "preset")]
    field: Option<String>,
    #[arg(long, requires = "field")]
    q: Option<String>,
    /// Comma-separated Q_1,..,Q_ℓ.
    #[arg(long = "Q", id = "big_q", requires = "field", value_delimiter = ',')]
    big_q: Vec<String>,
    /// `generic` or `root-of-unity:<e>`.
    #[arg(long)]
    preset: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "AKH_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Skip the ambient dimension budget.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    jobs: Option<usize>,
    /// More logging (repeatable).
    #[arg(short, long, action = clap::ArgAction::Count)]
    verbose: u8,
}

impl Common {
    fn config(&self, checks: Vec<String>) -> Result<RunConfig, Error> {
        let source = match &self.field {
            Some(field) => ParamSource::Explicit {
                field: field.clone(),
                q: self.q.clone().unwrap_or_default(),
                big_q: self.big_q.iter().map(|s| s.trim().to_string()).collect(),
            },
            None => ParamSource::Preset(self.preset.clone().unwrap_or_else(|| "generic".into())),
        };
        let mu = match &self.mu {
            Some(s) => Some(
                serde_json::from_str::<MultiPartition>(s)
                    .map_err(|_| Error::Parse { what: "multipartition", input: s.clone() })?,
            ),
            None => None,
        };
        Ok(RunConfig { ell: self.ell, n: self.n, mu, source, checks, force: self.force, jobs: self.jobs })
    }

    fn setup(&self) {
        let level = match self.verbose {
            0 => "warn",
            1 => "info",
            _ => "debug",
        };
        let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).try_init();
        akhecke::cache::set_cache_dir(self.cache_dir.clone());
    }

    fn emit<T: Serialize>(&self, value: &T) -> Result<(), Error> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        match &self.out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::InvalidMultiPartition(_)
            | Error::InvalidParams(_)
            | Error::UnknownCheck(_)
            | Error::Budget { .. }
            | Error::FieldMismatch(..)
    )
}

/// `Ok(true)` when every verdict holds.
fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Checks => {
            for c in checks::registry() {
                println!("{:<12} {}", c.name(), c.summary());
            }
            Ok(true)
        }
        Command::Enumerate(common) => {
            common.setup();
            let cfg = common.config(Vec::new())?;
            common.emit(&cmd_enumerate(&cfg)?)?;
            Ok(true)
        }
        Command::Layers(common) => {
            common.setup();
            let cfg = common.config(Vec::new())?;
            common.emit(&cmd_layers(&cfg)?)?;
            Ok(true)
        }
        Command::Induce(common) => {
            common.setup();
            let cfg = common.config(Vec::new())?;
            let cert = cfg.install(|| cmd_induce(&cfg))??;
            common.emit(&cert)?;
            for f in cert.failures() {
                eprintln!("check failed: {f}");
            }
            Ok(cert.ok)
        }
        Command::Verify { common, checks } => {
            common.setup();
            let cfg = common.config(checks)?;
            let report = cfg.install(|| cmd_verify(&cfg))??;
            common.emit(&report)?;
            for f in report.failures() {
                eprintln!("check failed: {f}");
            }
            Ok(report.ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}
