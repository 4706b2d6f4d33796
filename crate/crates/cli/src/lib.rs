//! Command-line front end for the eight-level teleportation simulator.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage or input error.

use std::io::{self, Write};

use thiserror::Error;

pub mod commands;
pub mod config;
pub mod render;
pub mod verify;

pub use config::{Cli, CliConfig, CommandKind, OutputFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] qteleport_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_USAGE,
            CliError::Core(_) | CliError::Io(_) => EXIT_FAILURE,
        }
    }
}

/// Dispatches a parsed command line; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = CliConfig::from_cli(cli).and_then(|cfg| match cfg.command {
        CommandKind::Teleport => commands::cmd_teleport(&cfg, out),
        CommandKind::SwapCompare => commands::cmd_swap_compare(&cfg, out),
        CommandKind::Verify => commands::cmd_verify(&cfg, out, err),
        CommandKind::DumpTables => commands::cmd_dump_tables(&cfg, out),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "qteleport: {e}");
            e.exit_code()
        }
    }
}
