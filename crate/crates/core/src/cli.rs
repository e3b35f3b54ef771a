//! The `schottky-dim` command line: `check`, `dim`, `sweep` and `limit-set`.
//!
//! Exit codes: 0 success, 1 geometrically invalid input (or a numerical
//! failure on it), 2 usage or parse error, 3 resource cap.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::ConfigFile;
use crate::error::Error;
use crate::markov::EntryConvention;
use crate::schottky::{Family, SchottkyConfig, Verdict};
use crate::spectral::{dimension, AlphaSolve};
use crate::wordtree::{enumerate, word_count};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

pub const SWEEP_HEADER: &str = "theta,alpha,residual,matrix_dim,converged";
pub const LIMIT_SET_HEADER: &str = "word,zeta_re,zeta_im,v";

const DEFAULT_DEPTH: &str = "4";
const DEFAULT_TOL: &str = "1e-8";

#[derive(Debug, Parser)]
#[command(
    name = "schottky-dim",
    version,
    about = "Hausdorff dimension of limit sets of complex hyperbolic Schottky groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report pairwise margins of the isometric balls; exit 0 iff valid.
    Check {
        config: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Estimate the dimension of a configuration's limit set.
    Dim {
        config: PathBuf,
        #[command(flatten)]
        solve: SolveArgs,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the dimension over a built-in one-parameter family.
    Sweep {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true)]
        theta_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        theta_max: f64,
        #[arg(long, default_value = "50")]
        steps: usize,
        #[command(flatten)]
        solve: SolveArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the tagpoints of one tree level as a point cloud.
    LimitSet {
        config: PathBuf,
        #[arg(long, default_value = DEFAULT_DEPTH, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, clap::Args)]
struct SolveArgs {
    /// Word length of the partition.
    #[arg(long, default_value = DEFAULT_DEPTH, value_parser = clap::value_parser!(u32).range(1..))]
    depth: u32,
    /// Stop when |rho(T^alpha) - 1| <= tol.
    #[arg(long, default_value = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value = "det")]
    convention: ConventionArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConventionArg {
    Det,
    Cygan,
}

impl From<ConventionArg> for EntryConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Det => EntryConvention::Det,
            ConventionArg::Cygan => EntryConvention::Cygan,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Symmetric,
    Rcircle,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Symmetric => Family::Symmetric,
            FamilyArg::Rcircle => Family::RCircle,
        }
    }
}

/// A failed command: exit code plus message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) => EXIT_USAGE,
            Error::Resource(_) => EXIT_RESOURCE,
            Error::Configuration(_)
            | Error::Singularity(_)
            | Error::Structural(_)
            | Error::Convergence(_) => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Check { config, json } => check(&config, json, stdout),
        Command::Dim {
            config,
            solve,
            json,
            out,
        } => {
            let tol = checked_tol(solve.tol)?;
            let cfg = load(&config)?;
            let report = dim_report(&cfg, solve.depth as usize, tol, solve.convention.into())?;
            let text = if json {
                let mut s = serde_json::to_string_pretty(&report.to_json()).expect("json");
                s.push('\n');
                s
            } else {
                report.to_text()
            };
            emit(&text, out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            family,
            theta_min,
            theta_max,
            steps,
            solve,
            out,
        } => {
            let tol = checked_tol(solve.tol)?;
            let csv = sweep_csv(
                family.into(),
                theta_min,
                theta_max,
                steps,
                solve.depth as usize,
                tol,
                solve.convention.into(),
            )?;
            emit(&csv, out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::LimitSet { config, depth, out } => {
            let cfg = load(&config)?;
            let csv = limit_set_csv(&cfg, depth as usize)?;
            emit(&csv, out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
    }
}

fn checked_tol(tol: f64) -> Result<f64, Failure> {
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(Failure::usage(format!(
            "--tol must be positive and finite, got {tol}"
        )))
    }
}

fn load(path: &Path) -> Result<SchottkyConfig, Failure> {
    let file = ConfigFile::read(path).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(file.to_schottky()?)
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::usage(format!("cannot write output: {e}"))),
    }
}

/// Formats `x` with 12 significant digits, like C's `%.12g`.
pub fn fmt_sig(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..DIGITS).contains(&exp) {
        let fixed = format!("{:.*}", (DIGITS - 1 - exp) as usize, x);
        trim_zeros(&fixed).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds to what [`fmt_sig`] prints, for JSON output.
fn sig_value(x: f64) -> Value {
    match fmt_sig(x).parse::<f64>() {
        Ok(v) if v.is_finite() => json!(v),
        _ => Value::Null,
    }
}

fn check(path: &Path, json: bool, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let cfg = load(path)?;
    let report = cfg.validity();
    let text = if json {
        let pairs: Vec<Value> = report
            .pairs
            .iter()
            .map(|p| {
                json!({
                    "i": p.i,
                    "j": p.j,
                    "center_distance": sig_value(p.center_distance),
                    "radius_sum": sig_value(p.radius_sum),
                    "margin": sig_value(p.margin),
                    "overlap_ratio": p.overlap_ratio.map(sig_value),
                })
            })
            .collect();
        let doc = json!({
            "chains": cfg.len(),
            "pairs": pairs,
            "min_margin": sig_value(report.min_margin),
            "verdict": report.verdict.as_str(),
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json");
        s.push('\n');
        s
    } else {
        let mut s = format!("chains: {}\n", cfg.len());
        for p in &report.pairs {
            s.push_str(&format!(
                "pair {}-{}: center_distance={} radius_sum={} margin={}",
                p.i,
                p.j,
                fmt_sig(p.center_distance),
                fmt_sig(p.radius_sum),
                fmt_sig(p.margin)
            ));
            if let Some(r) = p.overlap_ratio {
                s.push_str(&format!(" overlap_ratio={}", fmt_sig(r)));
            }
            s.push('\n');
        }
        s.push_str(&format!("min_margin: {}\n", fmt_sig(report.min_margin)));
        s.push_str(&format!("verdict: {}\n", report.verdict.as_str()));
        s
    };
    emit(&text, None, stdout)?;
    Ok(if report.verdict == Verdict::Valid {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}

/// Output of the `dim` command.
#[derive(Debug, Clone, PartialEq)]
pub struct DimReport {
    pub depth: usize,
    pub convention: EntryConvention,
    pub matrix_dim: usize,
    pub solve: AlphaSolve,
}

impl DimReport {
    pub fn rho_residual(&self) -> f64 {
        self.solve.rho_at_alpha - 1.0
    }

    pub fn to_text(&self) -> String {
        format!(
            "alpha: {}\ndepth: {}\nconvention: {}\nmatrix_dim: {}\niterations: {}\nrho_residual: {}\nconverged: {}\n",
            fmt_sig(self.solve.alpha),
            self.depth,
            self.convention,
            self.matrix_dim,
            self.solve.iterations,
            fmt_sig(self.rho_residual()),
            self.solve.converged
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "alpha": sig_value(self.solve.alpha),
            "depth": self.depth,
            "convention": self.convention.as_str(),
            "matrix_dim": self.matrix_dim,
            "iterations": self.solve.iterations,
            "rho_residual": sig_value(self.rho_residual()),
            "converged": self.solve.converged,
        })
    }
}

fn dim_report(
    cfg: &SchottkyConfig,
    depth: usize,
    tol: f64,
    convention: EntryConvention,
) -> crate::Result<DimReport> {
    let solve = dimension(cfg, depth, tol, convention)?;
    Ok(DimReport {
        depth,
        convention,
        matrix_dim: word_count(cfg.len(), depth).expect("enumerated level fits"),
        solve,
    })
}

/// The `sweep` CSV: one row per grid point `θ_i = min + i (max − min)/(steps − 1)`.
pub fn sweep_csv(
    family: Family,
    theta_min: f64,
    theta_max: f64,
    steps: usize,
    depth: usize,
    tol: f64,
    convention: EntryConvention,
) -> Result<String, Failure> {
    let (lo, hi) = family.range();
    if !(theta_min > lo && theta_max < hi) {
        return Err(Failure::usage(format!(
            "{} family needs theta in the open interval ({}, {}), got [{theta_min}, {theta_max}]",
            family.name(),
            fmt_sig(lo),
            fmt_sig(hi)
        )));
    }
    if theta_min >= theta_max {
        return Err(Failure::usage(format!(
            "--theta-min must be below --theta-max, got {theta_min} and {theta_max}"
        )));
    }
    if steps < 2 {
        return Err(Failure::usage(format!(
            "--steps must be at least 2, got {steps}"
        )));
    }
    if depth == 0 {
        return Err(Failure::usage("depth must be at least 1"));
    }

    let grid: Vec<f64> = (0..steps)
        .map(|i| {
            if i == steps - 1 {
                theta_max
            } else {
                theta_min + i as f64 * (theta_max - theta_min) / (steps - 1) as f64
            }
        })
        .collect();
    let rows: Vec<crate::Result<String>> = grid
        .par_iter()
        .map(|&theta| {
            let cfg = family.build(theta)?;
            let report = dim_report(&cfg, depth, tol, convention)?;
            Ok(format!(
                "{},{},{},{},{}\n",
                fmt_sig(theta),
                fmt_sig(report.solve.alpha),
                fmt_sig(report.rho_residual()),
                report.matrix_dim,
                report.solve.converged
            ))
        })
        .collect();

    let mut csv = format!("{SWEEP_HEADER}\n");
    for (theta, row) in grid.iter().zip(rows) {
        match row {
            Ok(line) => csv.push_str(&line),
            Err(e) => {
                let mut f = Failure::from(e);
                f.message = format!("theta = {}: {}", fmt_sig(*theta), f.message);
                return Err(f);
            }
        }
    }
    Ok(csv)
}

/// The `limit-set` CSV: one row per word of length `depth`.
pub fn limit_set_csv(cfg: &SchottkyConfig, depth: usize) -> Result<String, Failure> {
    let nodes = enumerate(cfg, depth)?;
    let mut csv = String::with_capacity(64 * (nodes.len() + 1));
    csv.push_str(LIMIT_SET_HEADER);
    csv.push('\n');
    for node in nodes {
        let (zeta, v) = node
            .tagpoint
            .coords()
            .ok_or_else(|| Error::Singularity(format!("tagpoint of {} is infinite", node.word)))?;
        csv.push_str(&format!(
            "{},{},{},{}\n",
            node.word,
            fmt_sig(zeta.re),
            fmt_sig(zeta.im),
            fmt_sig(v)
        ));
    }
    Ok(csv)
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (exit {})", self.message, self.code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(1.0), "1");
        assert_eq!(fmt_sig(-2.5), "-2.5");
        assert_eq!(fmt_sig(2f64.ln() / 192f64.ln()), "0.131839808029");
        assert_eq!(fmt_sig(std::f64::consts::PI * 1e3), "3141.59265359");
        assert_eq!(fmt_sig(1.0 / 3.0 * 1e-7), "3.33333333333e-08");
        assert_eq!(fmt_sig(123456789012345.0), "1.23456789012e+14");
        assert_eq!(fmt_sig(1e-5), "0.00001");
        assert_eq!(fmt_sig(f64::NAN), "nan");
    }

    #[test]
    fn failure_codes() {
        assert_eq!(
            Failure::from(Error::Resource(String::new())).code,
            EXIT_RESOURCE
        );
        assert_eq!(
            Failure::from(Error::Configuration(String::new())).code,
            EXIT_INVALID
        );
        assert_eq!(Failure::from(Error::Domain(String::new())).code, EXIT_USAGE);
    }
}
