//! Command-line front end for `nefkit`.
//!
//! [`run`] parses an argument vector, dispatches to the library and returns
//! the exit status together with what should go to stdout and stderr, so
//! the binary is a thin wrapper and tests can drive every command in
//! process.

pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use nefkit::chern::{
    betti_ci, chern_degrees_ci, euler_ci_formula, euler_ci_recursive, euler_ci_series,
    euler_weighted, CIType, WeightedHypersurface,
};
use nefkit::cones::{codim_cones, combination, spherical_nef_diagonal_check, CycleDataset};
use nefkit::diagonal::{
    scan_ci, table_delpezzo, verdict_ci, verdict_curve, verdict_delpezzo_variant, ScanBounds,
    Sextic,
};
use nefkit::verdict::Verdict;
use nefkit::Error;

pub use report::{emit, Format, Generator, Payload, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DATASET: i32 = 3;
pub const EXIT_SCAN: i32 = 4;

pub const MAX_DIM: u32 = 64;
pub const MAX_DEGREE: u64 = 64;
pub const MAX_EQUATIONS: usize = 16;

#[derive(Debug, Parser)]
#[command(name = "nefkit", version, about = "Exact Chern numbers and nef-diagonal verdicts")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Topological Euler characteristic `deg c_n`.
    #[command(subcommand)]
    Euler(EulerCmd),
    /// Degrees `deg(c_k h^(n-k))` of all Chern classes.
    #[command(subcommand)]
    Chern(CiOnly),
    /// Betti numbers and Poincare polynomial.
    #[command(subcommand)]
    Betti(CiOnly),
    /// Whether the diagonal is nef.
    #[command(subcommand)]
    Verdict(VerdictCmd),
    /// Nef and pseudoeffective cones from a pairing dataset.
    #[command(subcommand)]
    Cone(ConeCmd),
    /// Exhaustive verification scans.
    #[command(subcommand)]
    Scan(ScanCmd),
    /// Static classification tables.
    #[command(subcommand)]
    Table(TableCmd),
}

#[derive(Debug, Args)]
pub struct CiArgs {
    /// Dimension of the complete intersection.
    #[arg(long)]
    pub dim: u32,
    /// Degrees of the defining equations, comma separated. Order does not
    /// matter and 1s are dropped; omit for projective space.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub degrees: Vec<u64>,
}

#[derive(Debug, Subcommand)]
pub enum EulerCmd {
    /// Complete intersection in projective space.
    Ci(CiArgs),
    /// Hypersurface in weighted projective space.
    Weighted {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u64>,
        #[arg(long)]
        degree: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CiOnly {
    Ci(CiArgs),
}

#[derive(Debug, Subcommand)]
pub enum VerdictCmd {
    Ci(CiArgs),
    Delpezzo {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        degree: u32,
        /// Which degree-6 variety: p1p1p1, flag or p2p2 (reporting only).
        #[arg(long)]
        variant: Option<String>,
    },
    Curve {
        #[arg(long)]
        genus: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConeCmd {
    /// Nef cone of codimension `k` as the dual of the effective cone of
    /// codimension `N - k`.
    Dual {
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long)]
        codim: u32,
    },
    /// Non-negativity of every complementary pairing of orbit closures.
    Check {
        #[arg(long)]
        dataset: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScanCmd {
    Ci {
        #[arg(long, default_value_t = 12)]
        max_dim: u32,
        #[arg(long, default_value_t = 6)]
        max_degree: u64,
        #[arg(long, default_value_t = 5)]
        max_r: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum TableCmd {
    Delpezzo,
}

/// Exit status and the two output streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(err: &Error) -> Self {
        Self { code: exit_code(err), stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    if err.is_scan_violation() {
        EXIT_SCAN
    } else if err.is_dataset_error() {
        EXIT_DATASET
    } else {
        EXIT_INVALID
    }
}

/// Parses `args` (including the program name) and runs the command, with
/// the dataset directory taken from `NEFKIT_DATA`.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let data_dir = std::env::var_os("NEFKIT_DATA").map(PathBuf::from);
    run_with_data_dir(args, data_dir.as_deref())
}

pub fn run_with_data_dir<I, T>(args: I, data_dir: Option<&Path>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INVALID, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: EXIT_OK, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command, data_dir) {
        Ok(report) => {
            Outcome { code: EXIT_OK, stdout: emit(&report, cli.format), stderr: String::new() }
        }
        Err(err) => Outcome::failure(&err),
    }
}

fn ci_from(args: &CiArgs) -> Result<CIType, Error> {
    if args.dim > MAX_DIM {
        return Err(Error::InvalidInput(format!("--dim {} exceeds {MAX_DIM}", args.dim)));
    }
    if let Some(d) = args.degrees.iter().find(|&&d| d > MAX_DEGREE) {
        return Err(Error::InvalidInput(format!("degree {d} exceeds {MAX_DEGREE}")));
    }
    let ci = CIType::new(args.degrees.clone(), args.dim)?;
    if ci.codimension() > MAX_EQUATIONS {
        return Err(Error::InvalidInput(format!("more than {MAX_EQUATIONS} equations")));
    }
    Ok(ci)
}

fn ci_report(command: &str, ci: &CIType, result: Payload) -> Report {
    Report::new(command, result)
        .input("ci", ci)
        .input("dim", ci.dimension())
        .input("degrees", ci.degrees().iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn verdict_report(command: &str, verdict: Verdict) -> Report {
    Report::new(command, Payload::Verdict { verdict })
}

/// `path` as given if it exists, else under `data_dir`, else a shipped
/// dataset of that file name.
fn load(path: &Path, data_dir: Option<&Path>) -> Result<CycleDataset, Error> {
    let mut candidates = vec![path.to_path_buf()];
    if let Some(dir) = data_dir {
        if path.is_relative() {
            candidates.push(dir.join(path));
        }
    }
    for candidate in &candidates {
        if candidate.is_file() {
            let text = std::fs::read_to_string(candidate).map_err(|e| {
                Error::SchemaError(format!("cannot read {}: {e}", candidate.display()))
            })?;
            return nefkit::cones::load_dataset(&text);
        }
    }
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
    CycleDataset::builtin(name)
        .ok_or_else(|| Error::SchemaError(format!("dataset {} not found", path.display())))
}

fn execute(command: &Command, data_dir: Option<&Path>) -> Result<Report, Error> {
    match command {
        Command::Euler(EulerCmd::Ci(args)) => {
            let ci = ci_from(args)?;
            let value = euler_ci_formula(&ci);
            if value != euler_ci_series(&ci) || value != euler_ci_recursive(&ci) {
                return Err(Error::ScanViolation {
                    case: ci.to_string(),
                    law: "formula, series and recursion disagree".into(),
                });
            }
            Ok(ci_report("euler ci", &ci, Payload::Integer { value })
                .note("symmetric-function formula; agrees with the series and the recursion"))
        }
        Command::Euler(EulerCmd::Weighted { weights, degree }) => {
            if weights.len() > MAX_DIM as usize + 2 || *degree > MAX_DEGREE * MAX_DEGREE {
                return Err(Error::InvalidInput("weighted input exceeds the size limits".into()));
            }
            let wh = WeightedHypersurface::new(weights.clone(), *degree)?;
            let value = euler_weighted(&wh)?.to_integer();
            let weights_text = weights.iter().map(ToString::to_string).collect::<Vec<_>>();
            Ok(Report::new("euler weighted", Payload::Integer { value })
                .input("weights", weights_text.join(","))
                .input("degree", degree)
                .input("dim", wh.dimension())
                .note(format!("deg h^{} = {}", wh.dimension(), wh.hyperplane_degree())))
        }
        Command::Chern(CiOnly::Ci(args)) => {
            let ci = ci_from(args)?;
            let degrees = chern_degrees_ci(&ci);
            Ok(ci_report("chern ci", &ci, Payload::ChernDegrees { degrees })
                .note("coefficients of (1+h)^(n+r+1) / prod(1+d_i h), times prod(d_i)"))
        }
        Command::Betti(CiOnly::Ci(args)) => {
            let ci = ci_from(args)?;
            let table = betti_ci(&ci)?;
            let poincare = table.poincare_polynomial().to_string();
            Ok(ci_report(
                "betti ci",
                &ci,
                Payload::Betti { betti: table.betti().to_vec(), poincare },
            )
            .note("Lefschetz: outside the middle degree the Betti numbers are those of P^n"))
        }
        Command::Verdict(VerdictCmd::Ci(args)) => {
            let ci = ci_from(args)?;
            let report = verdict_report("verdict ci", verdict_ci(&ci))
                .note("tried in order: exception table, sign of deg c_n, projection bound");
            Ok(report
                .input("ci", &ci)
                .input("dim", ci.dimension())
                .input("degrees", ci.degrees().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        }
        Command::Verdict(VerdictCmd::Delpezzo { dim, degree, variant }) => {
            if *dim > MAX_DIM {
                return Err(Error::InvalidInput(format!("--dim {dim} exceeds {MAX_DIM}")));
            }
            let sextic = variant.as_deref().map(str::parse::<Sextic>).transpose()?;
            let verdict = verdict_delpezzo_variant(*dim, *degree, sextic)?;
            let mut report =
                verdict_report("verdict delpezzo", verdict).input("dim", dim).input("degree", degree);
            if let Some(v) = sextic {
                report = report.input("variant", v.describe());
            }
            Ok(report)
        }
        Command::Verdict(VerdictCmd::Curve { genus }) => {
            Ok(verdict_report("verdict curve", verdict_curve(*genus)).input("genus", genus))
        }
        Command::Cone(ConeCmd::Dual { dataset, codim }) => {
            let ds = load(dataset, data_dir)?;
            let cones = codim_cones(&ds, *codim)?;
            let label = |g: &Vec<_>| Generator { coordinates: g.clone(), class: combination(&cones.basis, g) };
            Ok(Report::new(
                "cone dual",
                Payload::Cones {
                    variety: ds.variety().to_string(),
                    codim: *codim,
                    basis: cones.basis.clone(),
                    effective: cones.effective.generators().iter().map(label).collect(),
                    nef: cones.nef.generators().iter().map(label).collect(),
                },
            )
            .input("dataset", dataset.display())
            .input("codim", codim)
            .note("pseudoeffective cone spanned by the orbit closures of this codimension")
            .note("nef cone computed as the exact dual of the complementary pseudoeffective cone"))
        }
        Command::Cone(ConeCmd::Check { dataset }) => {
            let ds = load(dataset, data_dir)?;
            let verdict = spherical_nef_diagonal_check(&ds)?;
            Ok(verdict_report("cone check", verdict).input("dataset", dataset.display()))
        }
        Command::Scan(ScanCmd::Ci { max_dim, max_degree, max_r }) => {
            if *max_dim > MAX_DIM || *max_degree > MAX_DEGREE || *max_r > MAX_EQUATIONS {
                return Err(Error::InvalidInput("scan bounds exceed the size limits".into()));
            }
            let report = scan_ci(ScanBounds::new(*max_dim, *max_degree, *max_r))?;
            Ok(Report::new("scan ci", Payload::Scan { report })
                .input("max_dim", max_dim)
                .input("max_degree", max_degree)
                .input("max_r", max_r)
                .note("zero violations"))
        }
        Command::Table(TableCmd::Delpezzo) => {
            Ok(Report::new("table delpezzo", Payload::Table { rows: table_delpezzo() })
                .note("smooth del Pezzo varieties of dimension n >= 3 by degree"))
        }
    }
}
