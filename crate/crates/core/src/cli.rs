//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification failed or two routes disagreed,
//! 2 bad usage or an index outside a family's range.

use std::io::{self, Write};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{rat, CoeffRecord, Family, LaurentPoly, Route, Variable};
use crate::identities::{
    classical_check, verify_lemma1, verify_lemma2, verify_theorem1, Lemma2Identity,
    Theorem1Identity,
};
use crate::lgv::{self, dump_families, family_config, family_path_weight};
use crate::qcoeffs::{
    default_sample_points, family_poly, inverse_pair_degree_bound, invert_route,
    invert_route_table, verify_detinv_consistency, verify_dstr_vanishing, verify_inverse_pair,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "QFAUL_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "qfaul",
    version,
    about = "q-Faulhaber and q-Salie coefficient polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one polynomial X(m, k).
    Compute {
        #[arg(long, value_parser = Family::from_str)]
        family: Family,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Print every X(m, k) with 0 <= k < m <= max-m.
    Table {
        #[arg(long, value_parser = Family::from_str)]
        family: Family,
        #[arg(long, default_value_t = 5)]
        max_m: u32,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest m (or matrix size n); the suite's own default when absent.
        #[arg(long)]
        max_m: Option<u32>,
        /// Largest n for the power-sum suites.
        #[arg(long)]
        max_n: Option<u32>,
        /// Largest l for the series suites.
        #[arg(long)]
        max_l: Option<u32>,
        /// Series truncation order.
        #[arg(long, default_value_t = 12)]
        order: u32,
    },
    /// Unimodality and log-concavity of every X(m, k).
    Shape {
        #[arg(long, value_parser = Family::from_str)]
        family: Family,
        #[arg(long, default_value_t = 8)]
        max_m: u32,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// List the non-intersecting path families behind X(m, k) with weights.
    Paths {
        #[arg(long, value_parser = Family::from_str)]
        family: Family,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Det,
    Lgv,
    LgvDet,
    Invert,
}

impl Method {
    pub fn route(self) -> Route {
        match self {
            Method::Det => Route::Det,
            Method::Lgv => Route::LgvBrute,
            Method::LgvDet => Route::LgvDet,
            Method::Invert => Route::Invert,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    Lemma1,
    Lemma2,
    Inverse,
    Lgv,
    Symmetry,
    Classical,
    All,
}

/// Wire form of a [`CoeffRecord`]; coefficients are decimal strings in
/// ascending exponent order starting at `min_exp`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub family: Family,
    pub m: u32,
    pub k: u32,
    pub variable: Variable,
    pub route: Route,
    pub min_exp: i64,
    pub coefficients: Vec<String>,
}

impl From<&CoeffRecord> for CoeffJson {
    fn from(r: &CoeffRecord) -> Self {
        Self {
            family: r.family,
            m: r.m,
            k: r.k,
            variable: r.variable,
            route: r.route,
            min_exp: r.poly.min_exp(),
            coefficients: r.poly.coeffs().iter().map(BigInt::to_string).collect(),
        }
    }
}

impl CoeffJson {
    pub fn to_record(&self) -> std::result::Result<CoeffRecord, String> {
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|e| format!("bad coefficient {c:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CoeffRecord {
            family: self.family,
            m: self.m,
            k: self.k,
            route: self.route,
            variable: self.variable,
            poly: LaurentPoly::from_coeffs(self.min_exp, coeffs),
        })
    }
}

/// `X(m, k)` by the chosen route.
pub fn compute(family: Family, m: u32, k: u32, method: Method) -> Result<CoeffRecord> {
    let poly = match method {
        Method::Det => family_poly(family, m, k)?,
        Method::Lgv => lgv::lgv_brute(family, m, k)?,
        Method::LgvDet => lgv::lgv_det(family, m, k)?,
        Method::Invert => invert_route(family, m, k)?,
    };
    Ok(CoeffRecord {
        family,
        m,
        k,
        route: method.route(),
        variable: Variable::Q,
        poly,
    })
}

pub const CSV_HEADER: &str = "family,m,k,exp,coefficient";

fn csv_rows(r: &CoeffRecord) -> Vec<String> {
    r.poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let exp = r.poly.min_exp() + i as i64;
            format!("{},{},{},{exp},{c}", r.family, r.m, r.k)
        })
        .collect()
}

fn json_line(r: &CoeffRecord) -> String {
    serde_json::to_string(&CoeffJson::from(r)).expect("record serializes")
}

fn write_records(
    out: &mut dyn Write,
    records: &[CoeffRecord],
    format: Format,
    labelled: bool,
) -> io::Result<()> {
    match format {
        Format::Pretty => {
            for r in records {
                if labelled {
                    writeln!(out, "{}({},{}) = {}", r.family, r.m, r.k, r.poly)?;
                } else {
                    writeln!(out, "{}", r.poly)?;
                }
            }
        }
        Format::Json => {
            for r in records {
                writeln!(out, "{}", json_line(r))?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                for row in csv_rows(r) {
                    writeln!(out, "{row}")?;
                }
            }
        }
    }
    Ok(())
}

/// All `(m, k)` with `0 <= k < m <= max_m`, row by row.
fn index_range(max_m: u32) -> Vec<(u32, u32)> {
    (1..=max_m)
        .flat_map(|m| (0..m).map(move |k| (m, k)))
        .collect()
}

/// One verification outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub suite: &'static str,
    pub case: String,
    pub pass: bool,
    pub detail: Option<String>,
}

impl CaseResult {
    fn from_result(suite: &'static str, case: String, r: Result<bool>) -> Self {
        match r {
            Ok(pass) => Self {
                suite,
                case,
                pass,
                detail: None,
            },
            Err(e) => Self {
                suite,
                case,
                pass: false,
                detail: Some(e.to_string()),
            },
        }
    }
}

type Job = Box<dyn Fn() -> Result<bool> + Send + Sync>;

fn job(f: impl Fn() -> Result<bool> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

/// Bounds for [`run_suite`]; `None` picks the suite's default.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bounds {
    pub max_m: Option<u32>,
    pub max_n: Option<u32>,
    pub max_l: Option<u32>,
    pub order: u32,
}

fn suite_jobs(suite: Suite, b: Bounds) -> Vec<(&'static str, String, Job)> {
    let mut jobs: Vec<(&'static str, String, Job)> = Vec::new();
    match suite {
        Suite::Theorem1 => {
            let (max_m, max_n) = (b.max_m.unwrap_or(5), b.max_n.unwrap_or(6));
            for which in Theorem1Identity::ALL {
                for m in which.min_m()..=max_m {
                    for n in 1..=max_n {
                        jobs.push((
                            "theorem1",
                            format!("{which} m={m} n={n}"),
                            job(move || verify_theorem1(which, m, n)),
                        ));
                    }
                }
            }
        }
        Suite::Lemma1 => {
            let max_l = b.max_l.unwrap_or(5);
            let order = b.order;
            for (a, bb) in [(1, 1), (1, 0), (0, 1)] {
                for (num, den) in [(2, 1), (1, 2), (3, 1)] {
                    for l in 1..=max_l {
                        jobs.push((
                            "lemma1",
                            format!("a={a} b={bb} q0={} l={l} order={order}", rat(num, den)),
                            job(move || verify_lemma1(a, bb, &rat(num, den), l, order)),
                        ));
                    }
                }
            }
        }
        Suite::Lemma2 => {
            let max_m = b.max_m.unwrap_or(8);
            let max_l = b.max_l.unwrap_or(8);
            for which in Lemma2Identity::ALL {
                for m in 1..=max_m {
                    for l in 1..=max_l {
                        jobs.push((
                            "lemma2",
                            format!("{which} m={m} l={l}"),
                            job(move || Ok(verify_lemma2(which, m, l))),
                        ));
                    }
                }
            }
        }
        Suite::Inverse => {
            let max_n = b.max_m.unwrap_or(6);
            for family in Family::ALL {
                jobs.push((
                    "inverse",
                    format!("{family} n={max_n} pair"),
                    job(move || {
                        let pts =
                            default_sample_points(inverse_pair_degree_bound(family, max_n) + 1);
                        verify_inverse_pair(family, max_n, &pts)
                    }),
                ));
                jobs.push((
                    "inverse",
                    format!("{family} m<={max_n} interpolated"),
                    job(move || {
                        let table = invert_route_table(family, max_n)?;
                        for (&(m, k), p) in &table {
                            if *p != family_poly(family, m, k)? {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    }),
                ));
                for (m, k) in index_range(max_n).into_iter().filter(|&(_, k)| k > 0) {
                    jobs.push((
                        "inverse",
                        format!("{family}({m},{k}) minor"),
                        job(move || {
                            verify_detinv_consistency(family, m, k, &default_sample_points(3))
                        }),
                    ));
                }
            }
            for m in 2..=max_n {
                for (num, den) in [(2, 1), (1, 2), (3, 1)] {
                    jobs.push((
                        "inverse",
                        format!("vanishing m={m} t0={}", rat(num, den)),
                        job(move || verify_dstr_vanishing(m, &rat(num, den))),
                    ));
                }
            }
        }
        Suite::Lgv => {
            let max_m = b.max_m.unwrap_or(6);
            for family in Family::ALL {
                for (m, k) in index_range(max_m) {
                    jobs.push((
                        "lgv",
                        format!("{family}({m},{k})"),
                        job(move || {
                            let det = family_poly(family, m, k)?;
                            Ok(lgv::lgv_brute(family, m, k)? == det
                                && lgv::lgv_det(family, m, k)? == det)
                        }),
                    ));
                }
            }
        }
        Suite::Symmetry => {
            let max_m = b.max_m.unwrap_or(8);
            for family in Family::ALL {
                for (m, k) in index_range(max_m) {
                    jobs.push((
                        "symmetry",
                        format!("{family}({m},{k})"),
                        job(move || {
                            let p = family_poly(family, m, k)?;
                            Ok(p.is_palindromic() && p.has_nonnegative_coeffs())
                        }),
                    ));
                }
                for m in 2..=max_m {
                    jobs.push((
                        "symmetry",
                        format!("{family}({m},{}) boundary", m - 1),
                        job(move || {
                            let top = family_poly(family, m, m - 1)?;
                            let below = family_poly(family, m, m - 2)?;
                            let factor = match family {
                                Family::P | Family::Q => 1,
                                Family::G | Family::H => 2,
                            };
                            Ok(top == below.scale(&factor.into()))
                        }),
                    ));
                }
            }
        }
        Suite::Classical => {
            let (max_m, max_n) = (b.max_m.unwrap_or(4), b.max_n.unwrap_or(20));
            jobs.push((
                "classical",
                format!("m<={max_m} n<={max_n}"),
                job(move || Ok(classical_check(max_m, max_n))),
            ));
        }
        Suite::All => {
            for s in [
                Suite::Theorem1,
                Suite::Lemma1,
                Suite::Lemma2,
                Suite::Inverse,
                Suite::Lgv,
                Suite::Symmetry,
                Suite::Classical,
            ] {
                jobs.extend(suite_jobs(s, b));
            }
        }
    }
    jobs
}

/// Runs every case of `suite` in parallel; results come back in case order.
pub fn run_suite(suite: Suite, bounds: Bounds) -> Vec<CaseResult> {
    suite_jobs(suite, bounds)
        .into_par_iter()
        .map(|(s, case, f)| CaseResult::from_result(s, case, f()))
        .collect()
}

fn shape_line(family: Family, m: u32, k: u32) -> Result<(String, String)> {
    let p = family_poly(family, m, k)?;
    let rep = p.shape_report()?;
    let pretty = format!(
        "{family}({m},{k}) unimodal={} log_concave={}",
        rep.unimodal, rep.log_concave
    );
    let json = serde_json::json!({
        "family": family,
        "m": m,
        "k": k,
        "unimodal": rep.unimodal,
        "log_concave": rep.log_concave,
    })
    .to_string();
    Ok((pretty, json))
}

fn thread_pool() -> std::result::Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {v:?}"))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Disagreement(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli.command, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

fn dispatch(cmd: &Command, out: &mut Vec<u8>) -> Result<i32> {
    let io = |r: io::Result<()>| r.map_err(|e| Error::Disagreement(format!("write failed: {e}")));
    match *cmd {
        Command::Compute {
            family,
            m,
            k,
            method,
            format,
        } => {
            let rec = compute(family, m, k, method)?;
            io(write_records(out, &[rec], format, false))?;
            Ok(EXIT_OK)
        }
        Command::Table {
            family,
            max_m,
            format,
        } => {
            let mut idx = index_range(max_m);
            if family == Family::P {
                idx.insert(0, (0, 0));
            }
            let records = idx
                .into_par_iter()
                .map(|(m, k)| compute(family, m, k, Method::Det))
                .collect::<Result<Vec<_>>>()?;
            io(write_records(out, &records, format, true))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_m,
            max_n,
            max_l,
            order,
        } => {
            let results = run_suite(
                suite,
                Bounds {
                    max_m,
                    max_n,
                    max_l,
                    order,
                },
            );
            let failed = results.iter().filter(|r| !r.pass).count();
            for r in &results {
                let tag = if r.pass { "PASS" } else { "FAIL" };
                let line = match &r.detail {
                    Some(d) => format!("{tag} {} {} ({d})", r.suite, r.case),
                    None => format!("{tag} {} {}", r.suite, r.case),
                };
                io(writeln!(out, "{line}"))?;
            }
            io(writeln!(
                out,
                "{} passed, {failed} failed",
                results.len() - failed
            ))?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Shape {
            family,
            max_m,
            format,
        } => {
            let lines = index_range(max_m)
                .into_par_iter()
                .map(|(m, k)| shape_line(family, m, k))
                .collect::<Result<Vec<_>>>()?;
            for (pretty, json) in lines {
                let line = if format == Format::Json { json } else { pretty };
                io(writeln!(out, "{line}"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Paths { family, m, k } => {
            let config = family_config(family, m, k)?;
            let families = lgv::enumerate_nonintersecting(&config);
            let strings = dump_families(family, m, k)?;
            let mut total = LaurentPoly::zero();
            for (f, s) in families.iter().zip(strings) {
                let w = family_path_weight(family, f);
                io(writeln!(out, "{s}\t{w}"))?;
                total += w;
            }
            io(writeln!(out, "total\t{total}"))?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first) and runs them; clap's own usage and
/// help output keep clap's exit codes.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{}", e.render());
            EXIT_USAGE
        }
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            EXIT_OK
        }
    }
}
