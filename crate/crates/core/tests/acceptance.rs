//! Acceptance run: one line per criterion, PASS or FAIL, with the evidence.
//!
//! Runs without the libtest harness so the lines are always printed. The
//! process fails if any criterion changes from its recorded outcome. Two
//! criteria are recorded as failing: the Demazure prefactor as stated has
//! the wrong sign under these conventions (see `demazure::prefactor_check`),
//! which breaks criterion 6 and part (c) of criterion 1. Both are reported
//! as FAIL and the observed exponents are pinned below.

use std::process::ExitCode;
use std::time::Instant;

use qwhittaker::check::CheckOutcome;
use qwhittaker::corealg::{partitions_in_box, rat, Rational};
use qwhittaker::error::Result;
use qwhittaker::{cterm, demazure, macdonald, qtoda, qtorus};

struct Line {
    number: &'static str,
    passed: bool,
    detail: String,
}

fn summarize(outs: &[CheckOutcome]) -> String {
    let cases: usize = outs.iter().map(|o| o.cases).sum();
    let failures: usize = outs.iter().map(|o| o.failures).sum();
    let mut s = format!("{}/{cases} cases", cases - failures);
    for o in outs.iter().filter(|o| !o.passed()) {
        s.push_str(&format!("; {} fails {}/{}", o.name, o.failures, o.cases));
        if let Some(m) = o.examples.first() {
            s.push_str(&format!(" (first: {})", m.case));
        }
    }
    s
}

fn all_pass(outs: &[CheckOutcome]) -> bool {
    outs.iter().all(CheckOutcome::passed) && outs.iter().any(|o| o.cases > 0)
}

fn from_checks(number: &'static str, outs: Result<Vec<CheckOutcome>>) -> Line {
    match outs {
        Ok(o) => Line { number, passed: all_pass(&o), detail: summarize(&o) },
        Err(e) => Line { number, passed: false, detail: format!("error: {e}") },
    }
}

fn specs() -> [(Rational, Rational); 2] {
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

/// Four routes to `Ψ̃` on dominant points of `[0,4]^n`, `n = 2, 3`.
fn criterion_1() -> Result<(Line, Vec<Line>)> {
    let start = Instant::now();
    let mut bridge = Vec::new();
    let mut torus = Vec::new();
    let mut dem = Vec::new();
    let mut opposite = Vec::new();
    for n in [2, 3] {
        bridge.push(qtoda::verify_macdonald_bridge(n, 0, 4)?);
        torus.push(qtorus::verify_matrix_element(n, 0, 4)?);
        dem.push(demazure::verify_demazure_whittaker(n, 0, 4)?);
        opposite.push(demazure::verify_opposite_sign(&antidominant_box(n, 0, 4))?);
    }
    let secs = start.elapsed().as_secs_f64();
    let parts = vec![
        Line { number: "1(a=b)", passed: all_pass(&bridge), detail: summarize(&bridge) },
        Line {
            number: "1(a=c)",
            passed: all_pass(&dem),
            detail: format!("{}; with the prefactor exponent negated: {}", summarize(&dem), summarize(&opposite)),
        },
        Line { number: "1(a=d)", passed: all_pass(&torus), detail: summarize(&torus) },
    ];
    let passed = parts.iter().all(|l| l.passed) && secs < 120.0;
    let detail = format!(
        "{} in {secs:.1}s",
        parts
            .iter()
            .map(|l| format!("{} {}", l.number, if l.passed { "ok" } else { "fails" }))
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok((Line { number: "1", passed, detail }, parts))
}

fn criterion_6() -> Result<Line> {
    let (out, reports) = demazure::verify_rank_one_family(3)?;
    let detail = reports
        .iter()
        .map(|r| {
            let obs = r.observed_exponent.map_or("none".to_string(), |e| e.to_string());
            format!("λ={:?} stated q^{} observed q^{obs}", r.lambda, r.stated_exponent)
        })
        .collect::<Vec<_>>()
        .join("; ");
    Ok(Line { number: "6", passed: out.passed(), detail })
}

fn criterion_7() -> Result<Vec<CheckOutcome>> {
    let mut outs = Vec::new();
    for l1 in 0..=4 {
        outs.push(cterm::check_t0_recursion(&[l1], 8)?);
    }
    for lambda in [[2, 1], [3, 1]] {
        outs.push(cterm::check_t0_recursion(&lambda, 8)?);
    }
    Ok(outs)
}

fn main() -> ExitCode {
    let mut lines = Vec::new();

    let mut sub = Vec::new();
    match criterion_1() {
        Ok((l, parts)) => {
            lines.push(l);
            sub = parts;
        }
        Err(e) => lines.push(Line { number: "1", passed: false, detail: format!("error: {e}") }),
    }

    lines.push(from_checks("2", [2, 3].into_iter().map(|n| qtoda::verify_toda_eigen(n, -2, 4)).collect()));

    lines.push(from_checks(
        "3",
        (|| {
            let mut v = Vec::new();
            for n in [2, 3] {
                v.push(qtoda::verify_dual_t0(n, 4)?);
                v.push(qtoda::verify_operator_identities(n, 20, 20240601)?);
            }
            Ok(v)
        })(),
    ));

    lines.push(from_checks(
        "4",
        (|| {
            let mut v = Vec::new();
            for (q, t) in specs() {
                v.push(macdonald::verify_spectrum(&q, &t, 5, 3)?);
                v.push(macdonald::verify_orthogonality(&q, &t, 6)?);
            }
            Ok(v)
        })(),
    ));

    lines.push(from_checks(
        "5",
        (|| {
            let mut v = Vec::new();
            for n in [2, 3] {
                for k in [1, 2] {
                    v.push(macdonald::verify_self_duality(n, k, 3)?);
                }
            }
            Ok(v)
        })(),
    ));

    lines.push(criterion_6().unwrap_or_else(|e| Line { number: "6", passed: false, detail: format!("error: {e}") }));

    lines.push(from_checks("7", criterion_7()));

    lines.push(from_checks("8", specs().iter().map(|(q, t)| macdonald::verify_norms(q, t, 4)).collect()));

    lines.push(from_checks(
        "9",
        (|| {
            let mut v = vec![qtorus::verify_q_binomial(6)?];
            for n in [2, 3] {
                v.push(qtoda::verify_fundamental_characters(n, &[-1, 0, 2])?);
                v.push(qtoda::verify_symmetry(n, -2, 4)?);
                v.push(qtoda::verify_translation(n, -2, 4, &[-1, 0, 2])?);
            }
            Ok(v)
        })(),
    ));

    lines.push(from_checks(
        "10",
        (|| {
            let mut v = Vec::new();
            for rank in [1, 2, 3] {
                v.push(demazure::verify_idempotence(rank, 50, 20240601 + rank as u64)?);
            }
            v.push(demazure::verify_braid(2, 20, 20240601)?);
            Ok(v)
        })(),
    ));

    println!();
    for l in lines.iter().chain(&sub) {
        let status = if l.passed { "PASS" } else { "FAIL" };
        println!("criterion {:<7} {status}  {}", l.number, l.detail);
    }

    // Recorded outcome: everything passes except 1 (through its part c) and 6.
    let expected_fail = ["1", "1(a=c)", "6"];
    let mut unexpected = Vec::new();
    for l in lines.iter().chain(&sub) {
        if l.passed == expected_fail.contains(&l.number) {
            unexpected.push(l.number);
        }
    }
    // The failing parts must fail the recorded way: the observed exponent is
    // the negation of the stated one for the rank-one family.
    match demazure::verify_rank_one_family(3) {
        Ok((_, reports)) => {
            for r in reports {
                if r.stated_exponent != 0 && r.observed_exponent != Some(-r.stated_exponent) {
                    unexpected.push("6 (observed exponent)");
                }
            }
        }
        Err(_) => unexpected.push("6 (error)"),
    }

    if unexpected.is_empty() {
        println!("\nacceptance outcome matches the record: criteria 1 and 6 fail on the Demazure prefactor sign, all others pass");
        ExitCode::SUCCESS
    } else {
        println!("\nacceptance outcome differs from the record at: {}", unexpected.join(", "));
        ExitCode::FAILURE
    }
}
