//! Command-line front end: cross sections, ε → 0 limit studies and momentum
//! sweeps, all emitted as CSV.
//!
//! Exit codes: 0 success, 2 invalid input, 3 limit not converged,
//! 4 special-function domain violation.

pub mod format;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use delta2d::{
    cross_section_closed, cross_section_partial_wave, limit_extrapolate, s_wave_phase_shift,
    EpsilonSchedule, Error, RegularizationMode, ScatteringProblem,
};

use crate::format::sig15;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_NOT_CONVERGED: u8 = 3;
pub const EXIT_DOMAIN: u8 = 4;

/// Partial-wave cutoff used by `--method partial-wave`; only m = 0 contributes.
const PARTIAL_WAVE_M_MAX: u32 = 0;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "delta2d",
    version,
    about = "Cross section for scattering from a 2D delta-function potential"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print one CSV record with the total cross section.
    CrossSection(CrossSectionArgs),
    /// Tabulate σ(ε) along a geometric cutoff schedule and report the limit.
    LimitStudy(LimitStudyArgs),
    /// Tabulate δ₀ and σ over geometrically spaced momenta.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    PartialWave,
    Limit,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Self::Closed => "closed",
            Self::PartialWave => "partial-wave",
            Self::Limit => "limit",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    Asymptotic,
    #[value(alias = "truncated_log")]
    TruncatedLog,
}

impl From<ModeArg> for RegularizationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Full => Self::Full,
            ModeArg::Asymptotic => Self::Asymptotic,
            ModeArg::TruncatedLog => Self::TruncatedLog,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    /// Particle momentum k (> 0).
    #[arg(long, allow_negative_numbers = true)]
    pub k: f64,
    /// Bound-state energy E0 (< 0).
    #[arg(long, allow_negative_numbers = true)]
    pub e0: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ScheduleArgs {
    /// Regularized-bracket evaluation mode.
    #[arg(long, value_enum, default_value = "full")]
    pub mode: ModeArg,
    /// Largest cutoff ε in the schedule.
    #[arg(long, allow_negative_numbers = true, default_value_t = 1e-2)]
    pub eps_start: f64,
    /// Ratio between successive ε, in (0, 1).
    #[arg(long, allow_negative_numbers = true, default_value_t = 1e-1)]
    pub eps_factor: f64,
    /// Number of ε samples (>= 2).
    #[arg(long, default_value_t = 5)]
    pub eps_count: usize,
}

#[derive(Debug, Clone, Args)]
pub struct CrossSectionArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, value_enum, default_value = "closed")]
    pub method: Method,
    #[command(flatten)]
    pub schedule: ScheduleArgs,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct LimitStudyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[command(flatten)]
    pub schedule: ScheduleArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Bound-state energy E0 (< 0).
    #[arg(long, allow_negative_numbers = true)]
    pub e0: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.1)]
    pub k_min: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 10.0)]
    pub k_max: f64,
    /// Number of momenta (>= 2), geometrically spaced from k-min to k-max.
    #[arg(long, default_value_t = 21)]
    pub points: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Validation(String),
    Domain(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Validation(_) | Self::Io(_) => EXIT_VALIDATION,
            Self::Domain(_) => EXIT_DOMAIN,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Validation(msg) | Self::Domain(msg) | Self::Io(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidProblem {
                field,
                value,
                reason,
            } => Self::Validation(format!("invalid value {value} for --{field}: {reason}")),
            Error::InvalidSchedule(msg) => Self::Validation(msg),
            e @ (Error::Domain { .. }
            | Error::DegenerateBracket { .. }
            | Error::SingularInput(_)) => Self::Domain(e.to_string()),
        }
    }
}

/// A completed run: the CSV text and the exit code it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub csv: String,
    pub exit_code: u8,
}

impl Report {
    fn ok(csv: String) -> Self {
        Self {
            csv,
            exit_code: EXIT_OK,
        }
    }
}

impl RunConfig {
    pub fn output_path(&self) -> Option<&PathBuf> {
        match &self.command {
            Command::CrossSection(a) => a.output.as_ref(),
            Command::LimitStudy(a) => a.output.as_ref(),
            Command::Sweep(a) => a.output.as_ref(),
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    match &cfg.command {
        Command::CrossSection(args) => run_cross_section(args),
        Command::LimitStudy(args) => run_limit_study(args),
        Command::Sweep(args) => run_sweep(args),
    }
}

fn build_problem(args: &ProblemArgs) -> Result<ScatteringProblem, CliError> {
    Ok(ScatteringProblem::new(args.k, args.e0)?)
}

fn build_schedule(args: &ScheduleArgs) -> Result<EpsilonSchedule, CliError> {
    if !(args.eps_start > 0.0 && args.eps_start.is_finite()) {
        return Err(CliError::Validation(format!(
            "invalid value {} for --eps-start: must be positive and finite",
            args.eps_start
        )));
    }
    if !(args.eps_factor > 0.0 && args.eps_factor < 1.0) {
        return Err(CliError::Validation(format!(
            "invalid value {} for --eps-factor: must lie in (0, 1)",
            args.eps_factor
        )));
    }
    if args.eps_count < 2 {
        return Err(CliError::Validation(format!(
            "invalid value {} for --eps-count: must be at least 2",
            args.eps_count
        )));
    }
    EpsilonSchedule::new(args.eps_start, args.eps_factor, args.eps_count).map_err(|e| {
        CliError::Validation(format!("invalid --eps-start/--eps-factor/--eps-count: {e}"))
    })
}

/// `k,e0,x,ln_x,method,sigma` header plus one record.
pub fn run_cross_section(args: &CrossSectionArgs) -> Result<Report, CliError> {
    let p = build_problem(&args.problem)?;
    let (sigma, exit_code) = match args.method {
        Method::Closed => (cross_section_closed(&p).sigma(), EXIT_OK),
        Method::PartialWave => (
            cross_section_partial_wave(&p, PARTIAL_WAVE_M_MAX).sigma(),
            EXIT_OK,
        ),
        Method::Limit => {
            let schedule = build_schedule(&args.schedule)?;
            let est = limit_extrapolate(&p, &schedule, args.schedule.mode.into())?;
            let code = if est.converged {
                EXIT_OK
            } else {
                EXIT_NOT_CONVERGED
            };
            (est.sigma_limit, code)
        }
    };
    let mut csv = String::from("k,e0,x,ln_x,method,sigma\n");
    writeln!(
        csv,
        "{},{},{},{},{},{}",
        sig15(p.k()),
        sig15(p.e0()),
        sig15(p.x()),
        sig15(p.log_x()),
        args.method.as_str(),
        sig15(sigma)
    )
    .unwrap();
    Ok(Report { csv, exit_code })
}

/// `eps,sigma_eps,abs_err_vs_closed` rows, then `limit,<sigma_limit>,<error_estimate>`.
pub fn run_limit_study(args: &LimitStudyArgs) -> Result<Report, CliError> {
    let p = build_problem(&args.problem)?;
    let schedule = build_schedule(&args.schedule)?;
    let est = limit_extrapolate(&p, &schedule, args.schedule.mode.into())?;
    let closed = cross_section_closed(&p).sigma();

    let mut csv = String::from("eps,sigma_eps,abs_err_vs_closed\n");
    for &(eps, sigma) in &est.samples {
        writeln!(
            csv,
            "{},{},{}",
            sig15(eps),
            sig15(sigma),
            sig15((sigma - closed).abs())
        )
        .unwrap();
    }
    writeln!(
        csv,
        "limit,{},{}",
        sig15(est.sigma_limit),
        sig15(est.error_estimate)
    )
    .unwrap();
    Ok(Report {
        csv,
        exit_code: if est.converged {
            EXIT_OK
        } else {
            EXIT_NOT_CONVERGED
        },
    })
}

/// Geometrically spaced momenta from `k_min` to `k_max` inclusive.
pub fn sweep_momenta(k_min: f64, k_max: f64, points: usize) -> Vec<f64> {
    let ratio = k_max / k_min;
    let last = (points - 1) as f64;
    (0..points)
        .map(|i| {
            if i + 1 == points {
                k_max
            } else {
                k_min * ratio.powf(i as f64 / last)
            }
        })
        .collect()
}

/// `k,ln_x,delta0,sigma,sigma_times_k` over the momentum sweep.
pub fn run_sweep(args: &SweepArgs) -> Result<Report, CliError> {
    if !(args.k_min > 0.0 && args.k_min.is_finite()) {
        return Err(CliError::Validation(format!(
            "invalid value {} for --k-min: must be positive and finite",
            args.k_min
        )));
    }
    if !(args.k_max > args.k_min && args.k_max.is_finite()) {
        return Err(CliError::Validation(format!(
            "invalid value {} for --k-max: must be finite and greater than --k-min",
            args.k_max
        )));
    }
    if args.points < 2 {
        return Err(CliError::Validation(format!(
            "invalid value {} for --points: must be at least 2",
            args.points
        )));
    }
    // validates e0 once, with the same message as the other subcommands
    ScatteringProblem::new(args.k_min, args.e0)?;

    let mut csv = String::from("k,ln_x,delta0,sigma,sigma_times_k\n");
    for k in sweep_momenta(args.k_min, args.k_max, args.points) {
        let p = ScatteringProblem::new(k, args.e0)?;
        let cs = cross_section_closed(&p);
        writeln!(
            csv,
            "{},{},{},{},{}",
            sig15(k),
            sig15(p.log_x()),
            sig15(s_wave_phase_shift(&p).delta0()),
            sig15(cs.sigma()),
            sig15(cs.sigma_times_k(&p))
        )
        .unwrap();
    }
    Ok(Report::ok(csv))
}

/// Writes the report to `--output` or stdout.
pub fn emit(cfg: &RunConfig, report: &Report) -> Result<(), CliError> {
    match cfg.output_path() {
        Some(path) => std::fs::write(path, &report.csv)
            .map_err(|e| CliError::Io(format!("cannot write --output {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(report.csv.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}
