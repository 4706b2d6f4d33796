//! Command-line parsing and the resolved run configuration.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use qteleport_core::protocol::Mode;
use qteleport_core::QubitState;

use crate::CliError;

/// Default acceptance tolerance; `QTELEPORT_TOL` overrides it, `--tol` wins
/// over both.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Inputs whose squared norm is further than this from 1 need `--renormalize`.
pub const INPUT_NORM_TOL: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "qteleport", version, about = "Qubit teleportation inside a single eight-level system")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the teleportation protocol and report the transferred state.
    Teleport(RunArgs),
    /// Contrast the teleportation channel with the SWAP of factors 1 and 3.
    SwapCompare(RunArgs),
    /// Run the invariant suite.
    Verify(VerifyArgs),
    /// Print A^i, B^i, SWAP and the Bell vectors.
    DumpTables(DumpArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Ensemble,
    SingleShot,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Ensemble => Mode::Ensemble,
            ModeArg::SingleShot => Mode::SingleShot,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Seed for every random draw.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Acceptance tolerance.
    #[arg(long, env = "QTELEPORT_TOL")]
    pub tol: Option<f64>,
}

/// Input amplitudes. `--alpha-re/--alpha-im` (and the `beta` pair) replace
/// the matching part of the `--alpha`/`--beta` literal when both are given.
#[derive(Debug, Clone, Args)]
pub struct StateArgs {
    /// Amplitude of |0>, e.g. `0.6`, `0.8i`, `0.6+0.8i`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub alpha: String,
    /// Amplitude of |1>.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_re: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_im: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta_re: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta_im: Option<f64>,
    /// Rescale (alpha, beta) to unit norm instead of rejecting them.
    #[arg(long)]
    pub renormalize: bool,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Resource Bell state |β^j> on factors 2 and 3 (1..=4).
    #[arg(long = "resource", visible_alias = "resource-index", default_value_t = 1)]
    pub resource_index: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Ensemble)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Number of random states in each sweep.
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Replace entry (0, 6) of A^1 by zero before checking (negative control).
    #[arg(long, hide = true)]
    pub corrupt_a1: bool,
}

#[derive(Debug, Clone, Args)]
pub struct DumpArgs {
    /// Resource whose B^i are printed.
    #[arg(long = "resource", visible_alias = "resource-index", default_value_t = 1)]
    pub resource_index: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Teleport,
    SwapCompare,
    Verify,
    DumpTables,
}

/// Fully resolved settings for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub command: CommandKind,
    pub alpha: Complex64,
    pub beta: Complex64,
    pub renormalize: bool,
    pub resource_index: usize,
    pub mode: Mode,
    pub seed: u64,
    pub output: OutputFormat,
    pub tol: f64,
    pub count: usize,
    pub corrupt_a1: bool,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            command: CommandKind::Teleport,
            alpha: Complex64::new(1.0, 0.0),
            beta: Complex64::new(0.0, 0.0),
            renormalize: false,
            resource_index: 1,
            mode: Mode::Ensemble,
            seed: 0,
            output: OutputFormat::Text,
            tol: DEFAULT_TOL,
            count: 1000,
            corrupt_a1: false,
        }
    }
}

impl CliConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let base = Self::default();
        let cfg = match &cli.command {
            Command::Teleport(a) | Command::SwapCompare(a) => {
                let (alpha, beta) = a.state.amplitudes()?;
                Self {
                    command: if matches!(cli.command, Command::Teleport(_)) {
                        CommandKind::Teleport
                    } else {
                        CommandKind::SwapCompare
                    },
                    alpha,
                    beta,
                    renormalize: a.state.renormalize,
                    resource_index: a.resource_index,
                    mode: a.mode.into(),
                    seed: a.common.seed,
                    output: a.common.output,
                    tol: a.common.tol.unwrap_or(DEFAULT_TOL),
                    ..base
                }
            }
            Command::Verify(v) => Self {
                command: CommandKind::Verify,
                seed: v.common.seed,
                output: v.common.output,
                tol: v.common.tol.unwrap_or(DEFAULT_TOL),
                count: v.count,
                corrupt_a1: v.corrupt_a1,
                ..base
            },
            Command::DumpTables(d) => Self {
                command: CommandKind::DumpTables,
                resource_index: d.resource_index,
                output: d.output,
                ..base
            },
        };
        if !(cfg.tol.is_finite() && cfg.tol >= 0.0) {
            return Err(CliError::Input(format!("tolerance must be a non-negative number, got {}", cfg.tol)));
        }
        if !(1..=4).contains(&cfg.resource_index) {
            return Err(CliError::Input(format!("resource index must be 1..=4, got {}", cfg.resource_index)));
        }
        Ok(cfg)
    }

    /// The input qubit, rejecting amplitudes whose norm is off by more than
    /// [`INPUT_NORM_TOL`] unless renormalization was requested.
    pub fn input_state(&self) -> Result<QubitState, CliError> {
        let norm_sqr = self.alpha.norm_sqr() + self.beta.norm_sqr();
        if !norm_sqr.is_finite() || norm_sqr == 0.0 {
            return Err(CliError::Input("amplitudes must be finite and not both zero".into()));
        }
        if (norm_sqr - 1.0).abs() > INPUT_NORM_TOL && !self.renormalize {
            return Err(CliError::Input(format!(
                "|alpha|^2 + |beta|^2 = {norm_sqr} is not 1 (pass --renormalize to rescale)"
            )));
        }
        QubitState::normalized(self.alpha, self.beta).map_err(|e| CliError::Input(e.to_string()))
    }
}

impl StateArgs {
    fn amplitudes(&self) -> Result<(Complex64, Complex64), CliError> {
        let mut alpha = parse_complex(&self.alpha)?;
        let mut beta = parse_complex(&self.beta)?;
        if let Some(x) = self.alpha_re {
            alpha.re = x;
        }
        if let Some(x) = self.alpha_im {
            alpha.im = x;
        }
        if let Some(x) = self.beta_re {
            beta.re = x;
        }
        if let Some(x) = self.beta_im {
            beta.im = x;
        }
        Ok((alpha, beta))
    }
}

/// Parses `a`, `bi`, `a+bi` or `a-bi` (whitespace ignored, `j` accepted for `i`).
pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .parse::<Complex64>()
        .map_err(|_| CliError::Input(format!("cannot parse {text:?} as a complex number")))
}
