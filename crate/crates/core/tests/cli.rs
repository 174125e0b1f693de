use std::process::Command;

use qwhittaker::cli::serial::parse;
use qwhittaker::corealg::{rat, LaurentPoly, QLaurent, QRatio, Rational, Ring};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qwhittaker")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn whittaker_rank_two() {
    let (code, out, _) = run(&["whittaker", "--rank", "2", "--point", "1,0"]);
    assert_eq!(code, 0);
    let z = LaurentPoly::from_terms(2, [(vec![1, 0], QRatio::one()), (vec![0, 1], QRatio::one())]);
    let expect = z.scale(&QRatio::one().div_exact(&QRatio::from(QLaurent::one_minus_q_pow(1))).unwrap());
    assert_eq!(parse::<QRatio>(&out).unwrap(), expect);
}

#[test]
fn normalized_whittaker_is_polynomial() {
    let (code, out, _) = run(&["whittaker", "--rank", "2", "--point", "2,0", "--normalized"]);
    assert_eq!(code, 0);
    let p = parse::<QLaurent>(&out).unwrap();
    assert_eq!(p.coeff(&[1, 1]), QLaurent::one().add(&QLaurent::q_pow(1)));
}

#[test]
fn macdonald_numeric() {
    let (code, out, _) = run(&["macdonald", "--rank", "2", "--lambda", "2,0", "--q", "1/2", "--t", "1/3"]);
    assert_eq!(code, 0);
    let p = parse::<Rational>(&out).unwrap();
    assert_eq!(p.coeff(&[2, 0]), rat(1, 1));
    assert_eq!(p.coeff(&[1, 1]), rat(6, 5));
    assert_eq!(p.len(), 3);
}

#[test]
fn torus_matches_normalized_whittaker() {
    let (_, a, _) = run(&["torus", "--rank", "3", "--point", "2,1,0"]);
    let (_, b, _) = run(&["whittaker", "--rank", "3", "--point", "2,1,0", "--normalized"]);
    assert_eq!(a, b);
}

#[test]
fn invalid_inputs_exit_two() {
    for args in [
        &["macdonald", "--rank", "2", "--lambda", "0,2"][..],
        &["whittaker", "--rank", "9", "--point", "1,0"],
        &["whittaker", "--rank", "2", "--point", "1,0,0"],
        &["frobnicate"],
        &["macdonald", "--rank", "2", "--lambda", "1", "--q", "1", "--t", "1"],
        &["verify", "--suite", "nope"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {out}{err}");
        assert!(err.starts_with("error:"), "{args:?}: {err}");
    }
}

#[test]
fn verify_reports_pass_and_fail() {
    let (code, out, _) = run(&["verify", "--rank", "2", "--box", "0..2", "--suite", "toda-eigen", "--suite", "x-form"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 2);

    let (code, out, _) = run(&["verify", "--rank", "2", "--suite", "demazure-rank-one"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "--rank",
        "3",
        "--box",
        "0..2",
        "--suite",
        "gz-recursion",
        "--suite",
        "symmetry",
        "--suite",
        "torus-algebra",
    ];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    let one = Command::new(env!("CARGO_BIN_EXE_qwhittaker")).args(args).env("RAYON_NUM_THREADS", "1").output().unwrap();
    assert_eq!(String::from_utf8(one.stdout).unwrap(), a);
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("qwhittaker-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("psi.json");
    let (code, out, _) = run(&["whittaker", "--rank", "2", "--point", "1,1", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(parse::<QRatio>(&text).unwrap().len(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
