//! Named verification suites. Each suite turns a rank and a box into one or
//! more check outcomes; suites run in parallel and are reported by name.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::check::CheckOutcome;
use crate::corealg::{partitions_in_box, rat};
use crate::cterm;
use crate::demazure;
use crate::error::{Error, Result};
use crate::macdonald;
use crate::qtoda;
use crate::qtorus;

const SEED: u64 = 20240601;

/// Parameters shared by all suites.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub rank: usize,
    pub lo: i64,
    pub hi: i64,
    pub trunc: usize,
}

pub const SUITES: &[&str] = &[
    "constant-term",
    "constant-term-norms",
    "demazure-character",
    "demazure-laws",
    "demazure-opposite-sign",
    "demazure-rank-one",
    "dual-t0",
    "fundamental-characters",
    "gz-recursion",
    "macdonald-bridge",
    "macdonald-norms",
    "macdonald-orthogonality",
    "macdonald-spectrum",
    "operator-identities",
    "self-duality",
    "sl2",
    "symmetry",
    "toda-eigen",
    "torus-algebra",
    "torus-matrix-element",
    "translation",
    "x-form",
];

fn specs() -> [(crate::corealg::Rational, crate::corealg::Rational); 2] {
    [(rat(1, 3), rat(1, 5)), (rat(2, 7), rat(3, 11))]
}

fn antidominant_box(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    partitions_in_box(n, lo, hi)
        .into_iter()
        .map(|p| {
            let mut v = p.into_parts();
            v.reverse();
            v
        })
        .collect()
}

/// Runs one suite.
pub fn run_suite(name: &str, p: &SuiteParams) -> Result<Vec<CheckOutcome>> {
    let (n, lo, hi) = (p.rank, p.lo, p.hi);
    let nonneg_hi = hi.max(0);
    let one = |c: Result<CheckOutcome>| c.map(|c| vec![c]);
    match name {
        "gz-recursion" => one(qtoda::verify_gz_recursive(n, lo, hi)),
        "toda-eigen" => one(qtoda::verify_toda_eigen(n, lo, hi)),
        "x-form" => one(qtoda::verify_change_of_variables(n, lo, hi)),
        "symmetry" => one(qtoda::verify_symmetry(n, lo, hi)),
        "translation" => one(qtoda::verify_translation(n, lo, hi, &[-1, 0, 2])),
        "fundamental-characters" => one(qtoda::verify_fundamental_characters(n, &[-1, 0, 2])),
        "sl2" => one(qtoda::verify_sl2_discrete(nonneg_hi.max(1))),
        "macdonald-bridge" => one(qtoda::verify_macdonald_bridge(n, lo, hi)),
        "dual-t0" => one(qtoda::verify_dual_t0(n, nonneg_hi)),
        "operator-identities" => one(qtoda::verify_operator_identities(n, 20, SEED)),
        "macdonald-spectrum" => {
            specs().iter().map(|(q, t)| macdonald::verify_spectrum(q, t, nonneg_hi + 2, n.min(3))).collect()
        }
        "macdonald-orthogonality" => {
            specs().iter().map(|(q, t)| macdonald::verify_orthogonality(q, t, nonneg_hi + 3)).collect()
        }
        "macdonald-norms" => specs().iter().map(|(q, t)| macdonald::verify_norms(q, t, nonneg_hi.min(4))).collect(),
        "self-duality" => [1, 2].iter().map(|&k| macdonald::verify_self_duality(n, k, nonneg_hi.min(3))).collect(),
        "demazure-character" => one(demazure::verify_demazure_whittaker(n, lo, hi)),
        "demazure-rank-one" => one(demazure::verify_rank_one_family(3).map(|(c, _)| c)),
        "demazure-opposite-sign" => one(demazure::verify_opposite_sign(&antidominant_box(n, lo, hi))),
        "demazure-laws" => {
            let rank = n.saturating_sub(1).max(1);
            let mut v = vec![
                demazure::verify_idempotence(rank, 50, SEED)?,
                demazure::verify_form_invariance(rank, 100, 8, SEED)?,
                demazure::verify_invariant_linearity(rank, 20, SEED)?,
            ];
            if rank >= 2 {
                v.push(demazure::verify_braid(rank, 20, SEED)?);
            }
            Ok(v)
        }
        "torus-matrix-element" => one(qtorus::verify_matrix_element(n, lo, hi)),
        "torus-algebra" => {
            let rank = n.saturating_sub(1).max(1);
            Ok(vec![
                qtorus::verify_q_binomial(6)?,
                qtorus::verify_proof_identity(rank.min(2), 3)?,
                qtorus::verify_associativity(rank, 100, SEED)?,
                qtorus::verify_vacuum(rank, 20, SEED)?,
                qtorus::verify_f_degrees(rank)?,
            ])
        }
        "constant-term" => {
            let l = n.saturating_sub(1).max(1);
            let top = if l == 1 { nonneg_hi.min(4) } else { nonneg_hi.min(3) };
            let mut out = CheckOutcome::new(format!("constant-term recursion ℓ={l} N={}", p.trunc));
            for lam in partitions_in_box(l, 0, top) {
                out.merge(cterm::check_t0_recursion(lam.parts(), p.trunc)?);
            }
            Ok(vec![out])
        }
        "constant-term-norms" => {
            let order = p.trunc.min(6);
            let mut out = CheckOutcome::new(format!("constant-term norms n={n} N={order}"));
            for lam in partitions_in_box(n, 0, nonneg_hi.min(2)) {
                let poly = macdonald::macdonald_t0(&lam, n)?;
                let s = cterm::TruncSeries::from_poly(&poly.poly, order)?;
                let ct = cterm::scalar_product_prime_t0(&s, &s, order);
                let closed = cterm::norm_prime_t0_series(lam.parts(), order)?;
                if ct == closed {
                    out.pass();
                } else {
                    out.fail(format!("λ={lam}"), format!("{ct:?}"), format!("{closed:?}"));
                }
            }
            Ok(vec![out])
        }
        _ => Err(Error::InvalidInput(format!("unknown suite {name:?}; known: all, {}", SUITES.join(", ")))),
    }
}

/// One suite's result as reported.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

/// Expands `all` and validates names.
pub fn resolve(names: &[String]) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for n in names {
        if n == "all" {
            out.extend(SUITES.iter().map(|s| s.to_string()));
        } else if SUITES.contains(&n.as_str()) {
            out.push(n.clone());
        } else {
            return Err(Error::InvalidInput(format!("unknown suite {n:?}; known: all, {}", SUITES.join(", "))));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Runs the suites concurrently; results come back sorted by suite name.
pub fn run_suites(names: &[String], p: &SuiteParams, timing: bool) -> Vec<SuiteResult> {
    let mut results: Vec<SuiteResult> = names
        .par_iter()
        .map(|name| {
            let start = Instant::now();
            let r = run_suite(name, p);
            let millis = timing.then(|| start.elapsed().as_millis());
            match r {
                Ok(checks) => SuiteResult {
                    suite: name.clone(),
                    passed: checks.iter().all(CheckOutcome::passed),
                    checks,
                    error: None,
                    millis,
                },
                Err(e) => SuiteResult {
                    suite: name.clone(),
                    passed: false,
                    checks: Vec::new(),
                    error: Some(e.to_string()),
                    millis,
                },
            }
        })
        .collect();
    results.sort_by(|a, b| a.suite.cmp(&b.suite));
    results
}
