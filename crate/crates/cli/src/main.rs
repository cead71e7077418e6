//! `isoform`: build, check and export finite lattices.
//!
//! Exit codes: 0 pass, 1 a check failed, 2 usage or input error, 3 resource
//! cap or construction error, 4 inconclusive.

mod commands;
mod dot;
mod gen;
mod io;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use isoform_core::{Error, Limits};

use commands::CheckKind;
use dot::LabelMode;
use io::{emit, read_lattice, to_json, LatticeFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(Error),
    #[error("{0}")]
    Construction(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(e) if is_cap(e) => 3,
            CliError::Input(_) => 2,
            CliError::Construction(_) => 3,
        }
    }
}

fn is_cap(e: &Error) -> bool {
    matches!(
        e,
        Error::CapExceeded { .. } | Error::SizeOverflow { .. } | Error::BudgetExhausted(_)
    )
}

#[derive(Debug, Parser)]
#[command(name = "isoform", version, about = "Finite lattices and their congruences")]
struct Cli {
    /// Largest lattice any construction may build.
    #[arg(long, global = true, default_value_t = Limits::default().max_elements)]
    max_elements: usize,
    /// Largest polynomial closure for --alg-isoform.
    #[arg(long, global = true, default_value_t = Limits::default().max_functions)]
    max_functions: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a lattice from a generator expression.
    Gen {
        expr: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Extra elements allowed when searching for simple extensions.
        #[arg(long, default_value_t = 3)]
        budget: usize,
    },
    /// Run predicates on a lattice file (all of them when none is selected).
    Check {
        file: PathBuf,
        #[arg(long)]
        regular: bool,
        #[arg(long)]
        uniform: bool,
        #[arg(long)]
        isoform: bool,
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        permutable: bool,
        #[arg(long)]
        alg_isoform: bool,
        #[arg(long)]
        pq: bool,
        #[arg(long)]
        distributive: bool,
        #[arg(long)]
        seccomp: bool,
        #[arg(long)]
        json: bool,
    },
    /// Summarize the congruence lattice.
    Con {
        file: PathBuf,
        /// Write Con L as a lattice file.
        #[arg(long)]
        export: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check whether an embedding K -> L is congruence-preserving.
    Cpe {
        kfile: PathBuf,
        lfile: PathBuf,
        mapfile: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Scan all lattices up to a size for class-implication violations.
    Survey {
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Export a Hasse diagram in DOT.
    Dot {
        file: PathBuf,
        /// Draw the removed product edges dashed.
        #[arg(long)]
        show_pruned: bool,
        #[arg(long, value_enum, default_value_t = LabelMode::Index)]
        labels: LabelMode,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_elements: cli.max_elements,
        max_functions: cli.max_functions,
        ..Limits::default()
    };
    match run(cli.command, &limits) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command, limits: &Limits) -> Result<u8, CliError> {
    match command {
        Command::Gen { expr, output, budget } => {
            let parsed = gen::parse(&expr).map_err(CliError::Usage)?;
            let g = gen::eval(&parsed, limits, budget)?;
            let file = LatticeFile::from_lattice(&expr, &g.lattice, g.labels, g.pruned_edges);
            emit(output.as_deref(), &to_json(&file))?;
            Ok(0)
        }
        Command::Check {
            file,
            regular,
            uniform,
            isoform,
            simple,
            permutable,
            alg_isoform,
            pq,
            distributive,
            seccomp,
            json,
        } => {
            let loaded = read_lattice(&file)?;
            let flags = [
                regular,
                uniform,
                isoform,
                simple,
                permutable,
                alg_isoform,
                pq,
                distributive,
                seccomp,
            ];
            let mut kinds: Vec<CheckKind> = CheckKind::ALL
                .into_iter()
                .zip(flags)
                .filter(|(_, on)| *on)
                .map(|(k, _)| k)
                .collect();
            if kinds.is_empty() {
                kinds = CheckKind::ALL.to_vec();
            }
            let (report, err) = commands::check(&loaded, &kinds, limits);
            print!("{}", report.render(json));
            match err {
                Some(e) => Err(e),
                None => Ok(report.exit_code() as u8),
            }
        }
        Command::Con { file, export, json } => {
            let loaded = read_lattice(&file)?;
            let report = commands::con(&loaded, export.as_deref(), limits)?;
            print!("{}", report.render(json));
            Ok(report.exit_code() as u8)
        }
        Command::Cpe {
            kfile,
            lfile,
            mapfile,
            json,
        } => {
            let report = commands::cpe(&kfile, &lfile, &mapfile, limits)?;
            print!("{}", report.render(json));
            Ok(report.exit_code() as u8)
        }
        Command::Survey { max_n, json } => {
            let report = commands::survey(max_n, limits)?;
            print!("{}", report.render(json));
            Ok(report.exit_code() as u8)
        }
        Command::Dot {
            file,
            show_pruned,
            labels,
            output,
        } => {
            let loaded = read_lattice(&file)?;
            let text = dot::export(&loaded, show_pruned, labels)?;
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
    }
}
