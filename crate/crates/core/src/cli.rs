//! Command-line front end.  Every command produces a [`Report`], printed as
//! JSON or as a few lines of text.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfp::PrimeField;
use crate::homspace::{verify_stabilization_with, HomSpace, StabilizationReport};
use crate::shapes::{partitions_of, Partition};
use crate::specht_oracle::{oracle_compare_with, OracleComparison, DEFAULT_DEGREE_BOUND};
use crate::weyl::Limits;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

const DEFAULT_MAX_SCAN_JOBS: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "weylhom", version, about = "Hom spaces between Weyl modules over GF(p)")]
pub struct Args {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Pair {
    #[arg(short = 'p', long)]
    pub p: u64,
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub mu: Partition,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of Hom(Δ(λ), Δ(μ)).
    Dim(Pair),
    /// Dimension and an explicit basis.
    Basis(Pair),
    /// Compare (λ, μ) with its row-stabilized pair (λ⁺, μ⁺).
    Verify {
        #[command(flatten)]
        pair: Pair,
        #[arg(short = 'k', long, default_value_t = 1)]
        k: u64,
        #[arg(short = 'd', long, default_value_t = 1)]
        d: u32,
    },
    /// Run verify over every pair of partitions up to a degree.
    Scan {
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
        #[arg(long, value_delimiter = ',', default_value = "3")]
        primes: Vec<u64>,
        #[arg(short = 'k', long, value_delimiter = ',', default_value = "1")]
        k: Vec<u64>,
        #[arg(short = 'd', long, value_delimiter = ',', default_value = "1")]
        d: Vec<u32>,
        /// Stop after this many jobs and flag the report incomplete.
        #[arg(long, env = "WEYLHOM_MAX_SCAN_JOBS", default_value_t = DEFAULT_MAX_SCAN_JOBS)]
        max_jobs: usize,
        #[arg(long, env = "WEYLHOM_WORKERS")]
        workers: Option<usize>,
    },
    /// Compare with the symmetric-group intertwiner dimension.
    Oracle {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub p: u64,
    pub lambda: Partition,
    pub mu: Partition,
    pub standard_count: usize,
    pub dim: usize,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisTerm {
    pub tableau: String,
    pub coeff: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub p: u64,
    pub lambda: Partition,
    pub mu: Partition,
    pub standard: Vec<String>,
    pub dim: usize,
    /// Nonzero coefficients of each basis vector.
    pub basis: Vec<Vec<BasisTerm>>,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub hypotheses: bool,
    pub dims: [usize; 2],
    #[serde(flatten)]
    pub report: StabilizationReport,
    pub wall_time_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseStatus {
    Passed,
    Failed,
    Skipped,
    SkippedMismatch,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCase {
    pub lambda: Partition,
    pub mu: Partition,
    pub p: u64,
    pub k: u64,
    pub d: u32,
    pub status: CaseStatus,
    pub dims: Option<[usize; 2]>,
    pub message: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub max_degree: u32,
    pub primes: Vec<u64>,
    pub k: Vec<u64>,
    pub d: Vec<u32>,
    pub total_jobs: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub skipped_mismatch: usize,
    pub errors: usize,
    pub incomplete: bool,
    pub cases: Vec<ScanCase>,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    #[serde(flatten)]
    pub comparison: OracleComparison,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Report {
    Dim(DimReport),
    Basis(BasisReport),
    Verify(VerifyReport),
    Scan(ScanReport),
    Oracle(OracleReport),
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self {
            Report::Verify(v) if v.report.violated => EXIT_VIOLATION,
            Report::Scan(s) if s.failed > 0 => EXIT_VIOLATION,
            _ => EXIT_OK,
        }
    }

    /// Zeroes every wall-time field, leaving only deterministic content.
    pub fn without_timing(mut self) -> Self {
        match &mut self {
            Report::Dim(r) => r.wall_time_ms = 0,
            Report::Basis(r) => r.wall_time_ms = 0,
            Report::Verify(r) => r.wall_time_ms = 0,
            Report::Scan(r) => r.wall_time_ms = 0,
            Report::Oracle(r) => r.wall_time_ms = 0,
        }
        self
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self {
            Report::Dim(r) => {
                s += &format!(
                    "dim Hom(Δ({}), Δ({})) over GF({}) = {}  [{} standard tableaux, {} ms]\n",
                    r.lambda, r.mu, r.p, r.dim, r.standard_count, r.wall_time_ms
                );
            }
            Report::Basis(r) => {
                s += &format!("dim Hom(Δ({}), Δ({})) over GF({}) = {}\n", r.lambda, r.mu, r.p, r.dim);
                for (i, v) in r.basis.iter().enumerate() {
                    let terms: Vec<String> = v.iter().map(|t| format!("{}·φ[{}]", t.coeff, t.tableau)).collect();
                    s += &format!("  h{} = {}\n", i + 1, terms.join(" + "));
                }
            }
            Report::Verify(r) => {
                let v = &r.report;
                s += &format!(
                    "λ = {}, μ = {}  →  λ⁺ = {}, μ⁺ = {}  (p = {}, k = {}, d = {})\n",
                    v.lambda, v.mu, v.lambda_plus, v.mu_plus, v.p, v.k, v.d
                );
                s += &format!(
                    "  p^d > min(λ₂, μ₁ - λ₁): {}\n  μ₂ ≤ λ₁: {}\n  dims: {} / {}\n",
                    v.power_exceeds_min, v.second_row_fits, v.dim, v.dim_plus
                );
                if let Some(c) = v.basis_correspondence {
                    s += &format!("  basis transport preserves kernels: {c}\n");
                }
                if v.violated {
                    s += "  VIOLATION: hypotheses hold but the conclusion fails\n";
                }
            }
            Report::Scan(r) => {
                s += &format!(
                    "scan r ≤ {}, p ∈ {:?}, k ∈ {:?}, d ∈ {:?}: {} jobs\n",
                    r.max_degree, r.primes, r.k, r.d, r.total_jobs
                );
                s += &format!(
                    "  passed {}, failed {}, skipped {} (of which dims differ: {}), errors {}{}\n",
                    r.passed,
                    r.failed,
                    r.skipped + r.skipped_mismatch,
                    r.skipped_mismatch,
                    r.errors,
                    if r.incomplete { ", INCOMPLETE" } else { "" }
                );
                for c in r.cases.iter().filter(|c| matches!(c.status, CaseStatus::Failed | CaseStatus::Error)) {
                    s += &format!(
                        "  {:?}: λ = {}, μ = {}, p = {}, k = {}, d = {} {}\n",
                        c.status,
                        c.lambda,
                        c.mu,
                        c.p,
                        c.k,
                        c.d,
                        c.message.as_deref().unwrap_or("")
                    );
                }
            }
            Report::Oracle(r) => {
                let c = &r.comparison;
                s += &format!(
                    "λ = {}, μ = {}, p = {}: Weyl side {}, symmetric-group side {} ({:?}) → {}\n",
                    c.lambda,
                    c.mu,
                    c.p,
                    c.weyl_dim,
                    c.specht_dim,
                    c.orientation,
                    if c.agree { "agree" } else { "DISAGREE" }
                );
            }
        }
        s
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// One job of a scan grid, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanJob {
    pub lambda: Partition,
    pub mu: Partition,
    pub p: u64,
    pub k: u64,
    pub d: u32,
}

/// Degree, then λ, then μ (both in [`partitions_of`] order), then p, k, d.
pub fn scan_jobs(max_degree: u32, primes: &[u64], ks: &[u64], ds: &[u32]) -> Vec<ScanJob> {
    let mut jobs = Vec::new();
    for r in 1..=max_degree {
        let parts = partitions_of(r);
        for lambda in &parts {
            for mu in &parts {
                for &p in primes {
                    for &k in ks {
                        for &d in ds {
                            jobs.push(ScanJob {
                                lambda: lambda.clone(),
                                mu: mu.clone(),
                                p,
                                k,
                                d,
                            });
                        }
                    }
                }
            }
        }
    }
    jobs
}

/// Runs one scan job; errors are recorded in the case rather than returned.
pub fn run_job(job: &ScanJob, limits: Limits) -> ScanCase {
    let mut case = ScanCase {
        lambda: job.lambda.clone(),
        mu: job.mu.clone(),
        p: job.p,
        k: job.k,
        d: job.d,
        status: CaseStatus::Error,
        dims: None,
        message: None,
    };
    match verify_stabilization_with(&job.lambda, &job.mu, job.p, job.k, job.d, limits) {
        Ok(r) => {
            case.dims = Some([r.dim, r.dim_plus]);
            case.status = if r.hypotheses_hold() {
                if r.violated {
                    CaseStatus::Failed
                } else {
                    CaseStatus::Passed
                }
            } else if r.dim != r.dim_plus {
                CaseStatus::SkippedMismatch
            } else {
                CaseStatus::Skipped
            };
        }
        Err(e) => case.message = Some(e.to_string()),
    }
    case
}

pub fn scan(
    max_degree: u32,
    primes: &[u64],
    ks: &[u64],
    ds: &[u32],
    max_jobs: usize,
    limits: Limits,
) -> Result<ScanReport> {
    let start = Instant::now();
    for &p in primes {
        PrimeField::new(p)?;
    }
    let jobs = scan_jobs(max_degree, primes, ks, ds);
    let total_jobs = jobs.len();
    let incomplete_by_limit = total_jobs > max_jobs;
    let cases: Vec<ScanCase> = jobs[..total_jobs.min(max_jobs)]
        .par_iter()
        .map(|j| run_job(j, limits))
        .collect();
    let count = |s: CaseStatus| cases.iter().filter(|c| c.status == s).count();
    let errors = count(CaseStatus::Error);
    Ok(ScanReport {
        max_degree,
        primes: primes.to_vec(),
        k: ks.to_vec(),
        d: ds.to_vec(),
        total_jobs,
        passed: count(CaseStatus::Passed),
        failed: count(CaseStatus::Failed),
        skipped: count(CaseStatus::Skipped),
        skipped_mismatch: count(CaseStatus::SkippedMismatch),
        errors,
        incomplete: incomplete_by_limit || errors > 0,
        cases,
        wall_time_ms: elapsed_ms(start),
    })
}

fn render_basis(space: &HomSpace) -> Vec<Vec<BasisTerm>> {
    space
        .basis
        .iter()
        .map(|h| {
            h.coeffs
                .iter()
                .zip(&space.standard)
                .filter(|(c, _)| **c != 0)
                .map(|(&coeff, t)| BasisTerm {
                    tableau: t.render(),
                    coeff,
                })
                .collect()
        })
        .collect()
}

/// Executes a parsed command.
pub fn execute(command: &Command, limits: Limits) -> Result<Report> {
    let start = Instant::now();
    Ok(match command {
        Command::Dim(pair) => {
            let space = HomSpace::compute(&pair.lambda, &pair.mu, PrimeField::new(pair.p)?, limits)?;
            Report::Dim(DimReport {
                p: pair.p,
                lambda: pair.lambda.clone(),
                mu: pair.mu.clone(),
                standard_count: space.standard.len(),
                dim: space.dim(),
                wall_time_ms: elapsed_ms(start),
            })
        }
        Command::Basis(pair) => {
            let space = HomSpace::compute(&pair.lambda, &pair.mu, PrimeField::new(pair.p)?, limits)?;
            Report::Basis(BasisReport {
                p: pair.p,
                lambda: pair.lambda.clone(),
                mu: pair.mu.clone(),
                standard: space.standard.iter().map(|t| t.render()).collect(),
                dim: space.dim(),
                basis: render_basis(&space),
                wall_time_ms: elapsed_ms(start),
            })
        }
        Command::Verify { pair, k, d } => {
            let report = verify_stabilization_with(&pair.lambda, &pair.mu, pair.p, *k, *d, limits)?;
            Report::Verify(VerifyReport {
                hypotheses: report.hypotheses_hold(),
                dims: [report.dim, report.dim_plus],
                report,
                wall_time_ms: elapsed_ms(start),
            })
        }
        Command::Scan {
            max_degree,
            primes,
            k,
            d,
            max_jobs,
            workers,
        } => {
            let run = || scan(*max_degree, primes, k, d, *max_jobs, limits);
            let report = match workers {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*n)
                    .build()
                    .map_err(|e| Error::Internal(e.to_string()))?
                    .install(run)?,
                None => run()?,
            };
            Report::Scan(report)
        }
        Command::Oracle { pair, degree_bound } => {
            let comparison = oracle_compare_with(&pair.lambda, &pair.mu, pair.p, *degree_bound, limits)?;
            Report::Oracle(OracleReport {
                comparison,
                wall_time_ms: elapsed_ms(start),
            })
        }
    })
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out`; diagnostics go to `err`.  Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&args.command, Limits::from_env()) {
        Ok(report) => {
            let written = match args.format {
                Format::Json => serde_json::to_string_pretty(&report)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}")),
                Format::Text => write!(out, "{}", report.to_text()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INVALID;
            }
            report.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("weylhom").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn dim_command() {
        let (code, out, _) = run_capture(&["dim", "-p", "3", "--lambda", "8,3", "--mu", "11"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dim"], 1);
        assert_eq!(v["command"], "dim");
        let (_, out, _) = run_capture(&["dim", "-p", "3", "--lambda", "2", "--mu", "1,1"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dim"], 0);
    }

    #[test]
    fn verify_command_outside_hypotheses() {
        let (code, out, _) = run_capture(&[
            "verify", "-p", "3", "--lambda", "1,1,1,1", "--mu", "2,2", "-k", "1", "-d", "1",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["hypotheses"], false);
        assert_eq!(v["dims"], serde_json::json!([1, 0]));
    }

    #[test]
    fn invalid_input_exits_with_one() {
        let (code, _, err) = run_capture(&["dim", "-p", "4", "--lambda", "2", "--mu", "2"]);
        assert_eq!(code, 1);
        assert!(err.contains("not a prime"));
        let (code, _, err) = run_capture(&["dim", "-p", "3", "--lambda", "2,x", "--mu", "2"]);
        assert_eq!(code, 1);
        assert!(err.contains("position 3"), "{err}");
        let (code, _, _) = run_capture(&["dim", "-p", "3", "--lambda", "2", "--mu", "3"]);
        assert_eq!(code, 1);
        let (code, _, _) = run_capture(&["frobnicate"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn text_format() {
        let (code, out, _) = run_capture(&["--format", "text", "dim", "-p", "3", "--lambda", "8,3", "--mu", "11"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("dim Hom(Δ(8,3), Δ(11)) over GF(3) = 1"));
    }

    #[test]
    fn empty_scan() {
        let r = scan(0, &[3], &[1], &[1], 10, Limits::default()).unwrap();
        assert_eq!(r.total_jobs, 0);
        assert!(r.cases.is_empty());
        assert!(!r.incomplete);
    }

    #[test]
    fn scan_job_limit_marks_incomplete() {
        let r = scan(3, &[3], &[1], &[1], 2, Limits::default()).unwrap();
        assert_eq!(r.cases.len(), 2);
        assert!(r.incomplete);
    }
}
