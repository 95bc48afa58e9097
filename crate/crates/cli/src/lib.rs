//! Command-line front end: crystal graphs, orbit and multiplicity tables,
//! verification suites.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub mod commands;
pub mod config;
pub mod error;
pub mod graph;

pub use config::{Format, RunConfig};
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "rank2-crystal", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ConfigArgs {
    #[arg(long, global = true, default_value_t = 3, allow_hyphen_values = true)]
    pub a1: i64,
    #[arg(long, global = true, default_value_t = 3, allow_hyphen_values = true)]
    pub a2: i64,
    /// λ = k1·Λ1 − k2·Λ2.
    #[arg(long, global = true, default_value_t = 1, allow_hyphen_values = true)]
    pub k1: i64,
    #[arg(long, global = true, default_value_t = 1, allow_hyphen_values = true)]
    pub k2: i64,
    /// Radius of the explored ball around the straight-line path.
    #[arg(long, global = true, default_value_t = 4)]
    pub depth: usize,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Read the configuration from a JSON object with the same keys as the
    /// flags instead.
    #[arg(long, global = true, conflicts_with_all = ["a1", "a2", "k1", "k2", "depth"])]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The Weyl orbit of λ and the sequence p.
    Orbit {
        #[arg(long, default_value_t = -4, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
        to: i64,
    },
    /// The crystal graph around the straight-line path.
    Graph,
    /// Weight multiplicities of λ − n1·α1 − n2·α2 for λ = Λ1 − Λ2.
    Mult {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        n1_min: i64,
        #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
        n1_max: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        n2_min: i64,
        #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
        n2_max: i64,
    },
    /// Checks the path model against the polyhedral model.
    Verify {
        #[arg(long, hide = true)]
        corrupt_theta: bool,
    },
    /// The successor bounds F and F'.
    FTable {
        #[arg(long, default_value_t = 0)]
        x_min: i64,
        #[arg(long, default_value_t = 10)]
        x_max: i64,
    },
}

impl ConfigArgs {
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut config = match &self.json {
            Some(path) => RunConfig::from_json_file(path)?,
            None => RunConfig {
                a1: self.a1,
                a2: self.a2,
                k1: self.k1,
                k2: self.k2,
                depth: self.depth,
                format: None,
                out: None,
            },
        };
        if self.format.is_some() {
            config.format = self.format;
        }
        if self.out.is_some() {
            config.out.clone_from(&self.out);
        }
        Ok(config)
    }
}

/// Runs the command and writes its output. A failing verification is
/// reported after the report has been written.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let config = cli.config.resolve()?;
    let rendered = match &cli.command {
        Command::Orbit { from, to } => commands::orbit(&config, *from, *to)?,
        Command::Graph => commands::graph(&config)?,
        Command::Mult {
            n1_min,
            n1_max,
            n2_min,
            n2_max,
        } => commands::mult(&config, (*n1_min, *n1_max), (*n2_min, *n2_max))?,
        Command::Verify { corrupt_theta } => commands::verify(&config, *corrupt_theta)?,
        Command::FTable { x_min, x_max } => commands::f_table(&config, *x_min, *x_max)?,
    };
    match &config.out {
        Some(path) => std::fs::write(path, &rendered.text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        None => print!("{}", rendered.text),
    }
    match rendered.failure {
        Some(f) => Err(CliError::Verification(f)),
        None => Ok(()),
    }
}
