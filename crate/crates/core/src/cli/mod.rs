//! The command-line surface: jobs, canonical output and the suite runner.
//!
//! Exit status: 0 on success or when every check passes, 1 when a check
//! fails, 2 on invalid input (including poles at the requested point).

pub mod job;
pub mod serial;
pub mod suites;

use serde::Serialize;

use crate::corealg::{LaurentPoly, Partition, QRatio, Ring};
use crate::demazure;
use crate::error::{Error, Result};
use crate::macdonald::{macdonald_numeric, macdonald_qpow, macdonald_t0};
use crate::qtoda::{whittaker_gz, whittaker_normalized};
use crate::qtorus::whittaker_matrix_element;

pub use job::{Command, Format, Job, Limits};
use serial::{to_poly_json, SerialCoeff};
pub use suites::{run_suites, SuiteParams, SuiteResult, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Result of a verification job.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub rank: usize,
    #[serde(rename = "box")]
    pub range: (i64, i64),
    pub trunc: usize,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.suites {
            let status = if r.passed { "PASS" } else { "FAIL" };
            let time = r.millis.map(|m| format!(" ({m} ms)")).unwrap_or_default();
            s.push_str(&format!("{status} {}{time}\n", r.suite));
            if let Some(e) = &r.error {
                s.push_str(&format!("  error: {e}\n"));
            }
            for c in &r.checks {
                let st = if c.passed() { "ok" } else { "FAILED" };
                s.push_str(&format!("  {st} {}: {}/{} cases pass\n", c.name, c.cases - c.failures, c.cases));
                if let Some(n) = &c.note {
                    s.push_str(&format!("    note: {n}\n"));
                }
                for m in &c.examples {
                    s.push_str(&format!("    case {}\n      lhs {}\n      rhs {}\n", m.case, m.lhs, m.rhs));
                }
            }
        }
        let summary = if self.passed { "all suites pass" } else { "some suites fail" };
        s.push_str(&format!("{summary}\n"));
        s
    }
}

/// Rendered output and the exit status it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit: i32,
}

fn render_poly<C: SerialCoeff + std::fmt::Display>(p: &LaurentPoly<C>, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(&to_poly_json(p, "z")).expect("plain data") + "\n",
        Format::Text => format!("{}\n", p.display_with("z")),
    }
}

fn value(text: String) -> Output {
    Output { text, exit: EXIT_OK }
}

fn run_macdonald(job: &Job) -> Result<Output> {
    let parts = job.lambda.clone().unwrap_or_default();
    let lambda = Partition::new(parts.clone())?
        .padded(job.rank)
        .ok_or_else(|| Error::InvalidInput(format!("{parts:?} does not fit {} variables", job.rank)))?;
    let n = job.rank;
    match (&job.q, &job.t, job.k) {
        (Some(q), Some(t), None) => Ok(value(render_poly(&macdonald_numeric(&lambda, n, q, t)?.poly, job.format))),
        (Some(q), None, Some(k)) => {
            let t = q.powi(-k).ok_or_else(|| Error::Pole("q = 0 with t = q^{-k}".into()))?;
            Ok(value(render_poly(&macdonald_numeric(&lambda, n, q, &t)?.poly, job.format)))
        }
        (None, None, Some(k)) => Ok(value(render_poly(&macdonald_qpow(&lambda, n, k)?.poly, job.format))),
        (None, Some(t), None) if t.is_zero() => Ok(value(render_poly(&macdonald_t0(&lambda, n)?.poly, job.format))),
        (None, None, None) => Ok(value(render_poly(&macdonald_t0(&lambda, n)?.poly, job.format))),
        _ => Err(Error::InvalidInput(
            "give --q with --t or --k, only --k (symbolic q), or nothing / --t 0 (symbolic q, t = 0)".into(),
        )),
    }
}

#[derive(Serialize)]
struct DemazureOutput {
    orbit: demazure::OrbitData,
    character: serial::PolyJson,
    /// The prefactor comparison, for antidominant points.
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<demazure::DemazureReport>,
}

fn run_demazure(job: &Job) -> Result<Output> {
    let point = job.point.clone().unwrap_or_default();
    let (pi, orbit) = demazure::demazure_pi(&point)?;
    let antidominant = point.windows(2).all(|w| w[0] <= w[1]);
    let report = antidominant.then(|| demazure::prefactor_check(&point)).transpose()?;
    match job.format {
        Format::Json => {
            let j = DemazureOutput { orbit, character: to_poly_json(&pi, "z"), comparison: report };
            Ok(value(serde_json::to_string(&j).expect("plain data") + "\n"))
        }
        Format::Text => {
            let mut s = format!(
                "k = {}, i = {}, word = {:?}\ncharacter: {}\n",
                orbit.k,
                orbit.i,
                orbit.word,
                pi.display_with("z")
            );
            if let Some(r) = report {
                s.push_str(&format!(
                    "stated exponent {}, observed {:?}, identity {}\n",
                    r.stated_exponent,
                    r.observed_exponent,
                    if r.holds { "holds" } else { "fails" }
                ));
            }
            Ok(value(s))
        }
    }
}

fn run_verify(job: &Job) -> Result<Output> {
    let names = suites::resolve(&job.suites)?;
    let params = SuiteParams { rank: job.rank, lo: job.range.0, hi: job.range.1, trunc: job.trunc };
    let results = run_suites(&names, &params, job.timing);
    let report = Report {
        rank: job.rank,
        range: job.range,
        trunc: job.trunc,
        passed: results.iter().all(|r| r.passed),
        suites: results,
    };
    let exit = if report.passed { EXIT_OK } else { EXIT_FAILED };
    let text = match job.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("plain data") + "\n",
        Format::Text => report.to_text(),
    };
    Ok(Output { text, exit })
}

/// Validates and runs a job.
pub fn run(job: &Job) -> Result<Output> {
    job.validate()?;
    match job.command {
        Command::Whittaker => {
            let p = job.point.clone().unwrap_or_default();
            if job.normalized {
                Ok(value(render_poly(&whittaker_normalized(&p)?, job.format)))
            } else {
                Ok(value(render_poly::<QRatio>(&whittaker_gz(&p)?, job.format)))
            }
        }
        Command::Macdonald => run_macdonald(job),
        Command::Demazure => run_demazure(job),
        Command::Torus => {
            let p = job.point.clone().unwrap_or_default();
            Ok(value(render_poly(&whittaker_matrix_element(&p)?, job.format)))
        }
        Command::Verify => run_verify(job),
    }
}

/// Like [`run`], but maps errors to exit status 2 with the message as text.
pub fn run_to_output(job: &Job) -> Output {
    match run(job) {
        Ok(o) => o,
        Err(e) => Output { text: format!("error: {e}\n"), exit: EXIT_INVALID },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::{rat, QLaurent, Rational};

    #[test]
    fn whittaker_example() {
        let mut job = Job::new(Command::Whittaker, 2);
        job.point = Some(vec![1, 0]);
        let out = run(&job).unwrap();
        assert_eq!(out.exit, 0);
        let z = LaurentPoly::from_terms(2, [(vec![1, 0], QRatio::one()), (vec![0, 1], QRatio::one())]);
        let expect = z.scale(&QRatio::one().div_exact(&QRatio::from(QLaurent::one_minus_q_pow(1))).unwrap());
        assert_eq!(serial::parse::<QRatio>(&out.text).unwrap(), expect);
    }

    #[test]
    fn macdonald_example() {
        let mut job = Job::new(Command::Macdonald, 2);
        job.lambda = Some(vec![2, 0]);
        job.q = Some(rat(1, 2));
        job.t = Some(rat(1, 3));
        let out = run(&job).unwrap();
        let p = serial::parse::<Rational>(&out.text).unwrap();
        assert_eq!(p.coeff(&[1, 1]), rat(6, 5));
        assert_eq!(p.coeff(&[2, 0]), rat(1, 1));
    }

    #[test]
    fn invalid_partition_exits_two() {
        let mut job = Job::new(Command::Macdonald, 2);
        job.lambda = Some(vec![0, 2]);
        assert_eq!(run_to_output(&job).exit, EXIT_INVALID);
    }

    #[test]
    fn small_verify() {
        let mut job = Job::new(Command::Verify, 2);
        job.suites = vec!["toda-eigen".into(), "torus-matrix-element".into()];
        job.range = (0, 2);
        let out = run(&job).unwrap();
        assert_eq!(out.exit, EXIT_OK, "{}", out.text);
    }
}
