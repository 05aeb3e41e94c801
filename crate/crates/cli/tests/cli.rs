use std::path::Path;
use std::process::Command;
use std::sync::Arc;

use ckq::suite::rtt_report;
use ckq::{emit, exit_code, Check, Format, Record, RunConfig, RunReport};
use ckq_core::freealg::NCPoly;
use ckq_core::funq::{build_fun, fun_alphabet, FunMode, Variant};
use ckq_core::scalar::{DualCoeff, JAssign, Series};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ckq"))
}

fn run_in(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let out = bin().current_dir(dir).args(args).env_remove("CKQ_STEP_BUDGET").output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn strip_times(mut r: RunReport) -> RunReport {
    for x in &mut r.runs {
        x.wall_time = 0.0;
    }
    r
}

#[test]
fn rtt_all_j_gives_four_cases() {
    let cfg = RunConfig::parse_args(["ckq", "verify", "rtt", "--j", "all", "--order", "8"]).unwrap();
    assert_eq!(cfg.js.len(), 4);
    assert_eq!(cfg.variants.len(), 3);
    assert_eq!(cfg.checks, vec![Check::Rtt]);
    assert_eq!(cfg.order, 8);
}

#[test]
fn defaults() {
    let cfg = RunConfig::parse_args(["ckq", "verify", "all", "--format", "json"]).unwrap();
    assert_eq!(cfg.checks.len(), 13);
    assert_eq!((cfg.order, cfg.maxlen), (8, 3));
    assert_eq!(cfg.format, Format::Json);
    assert_eq!(cfg.mode, None);
}

#[test]
fn iso_v01_is_a_usage_error() {
    assert!(RunConfig::parse_args(["ckq", "verify", "iso", "--variant", "v01"]).is_err());
    let dir = tempfile::tempdir().unwrap();
    let (code, _, err) = run_in(dir.path(), &["verify", "iso", "--variant", "v01"]);
    assert_eq!(code, 2);
    assert!(err.contains("v01"));
}

#[test]
fn bad_arguments_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["verify", "nonsense"][..],
        &["verify", "rtt", "--j", "2,2"],
        &["verify", "rtt", "--order", "1"],
        &["verify", "ideal", "--maxlen", "0"],
        &["verify", "rtt", "--variant", "v03"],
    ] {
        assert_eq!(run_in(dir.path(), args).0, 2, "{args:?}");
    }
}

#[test]
fn invalid_step_budget_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .current_dir(dir.path())
        .args(["verify", "rtt", "--variant", "v02", "--j", "1,1", "--order", "2"])
        .env("CKQ_STEP_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tiny_step_budget_surfaces_as_failure() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .current_dir(dir.path())
        .args(["verify", "hopf-su", "--variant", "v02", "--j", "1,1", "--order", "4", "--format", "json"])
        .env("CKQ_STEP_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let r: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.runs[0].status, "fail");
    assert!(!r.runs[0].notes.is_empty());
}

#[test]
fn rtt_suite_passes_with_twelve_records() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run_in(dir.path(), &["verify", "rtt", "--j", "all", "--order", "8", "--format", "json"]);
    assert_eq!(code, 0);
    let r: RunReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.schema_version, 1);
    assert_eq!(r.runs.len(), 12);
    assert!(r.runs.iter().all(|x| x.status == "pass" && x.residual.nonzero == 0 && x.order == 8));
    let saved = RunReport::load(&dir.path().join("ckq-report.json")).unwrap();
    assert_eq!(saved, r);
}

#[test]
fn pairing_v02_standard_is_all_zero() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) =
        run_in(dir.path(), &["verify", "pairing", "--variant", "v02", "--j", "1,1", "--order", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let r: RunReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.runs.len(), 1);
    assert_eq!(r.runs[0].residual.nonzero, 0);
    assert_eq!(r.runs[0].residual.first_order, None);
}

#[test]
fn report_replays_last_run() {
    let dir = tempfile::tempdir().unwrap();
    let (code, first, _) = run_in(dir.path(), &["verify", "ybe", "--variant", "v12", "--order", "4"]);
    assert_eq!(code, 0);
    let (code, replay, _) = run_in(dir.path(), &["report"]);
    assert_eq!(code, 0);
    assert_eq!(first, replay);
}

#[test]
fn report_without_file_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_in(dir.path(), &["report"]).0, 2);
}

#[test]
fn json_is_deterministic_modulo_time() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "contraction", "--j", "i1,i2", "--order", "4", "--format", "json"];
    let (_, a, _) = run_in(dir.path(), &args);
    let (_, b, _) = run_in(dir.path(), &args);
    let a = strip_times(serde_json::from_str(&a).unwrap());
    let b = strip_times(serde_json::from_str(&b).unwrap());
    assert_eq!(a, b);
    assert_eq!(a.runs.len(), 9);
    let keys: Vec<_> = a.runs.iter().map(|r| (r.check.clone(), r.family.clone(), r.variant.clone())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn iso_all_skips_v01() {
    let cfg = RunConfig::parse_args(["ckq", "verify", "iso", "--j", "1,1", "--order", "4"]).unwrap();
    let r = ckq::run_suite(&cfg);
    assert_eq!(r.runs.len(), 2);
    assert!(r.all_pass());
    assert!(r.runs.iter().all(|x| x.status == "pass-with-note"));
}

#[test]
fn special_cases_single_record() {
    let cfg = RunConfig::parse_args(["ckq", "verify", "special-cases", "--order", "4"]).unwrap();
    let r = ckq::run_suite(&cfg);
    assert_eq!(r.runs.len(), 1);
    assert_eq!(r.runs[0].j, "-");
    assert!(r.all_pass());
}

#[test]
fn empty_report_exits_zero() {
    let r = RunReport::new(vec![]);
    assert_eq!(exit_code(&r), 0);
    let text = emit(&r, Format::Text);
    assert!(text.starts_with("check"));
    assert!(text.contains("0/0 pass"));
}

#[test]
fn one_failure_exits_one() {
    let mut bad = Record::error("rtt", "fun", "v02", "1,1", 8, "boom".into());
    bad.wall_time = 0.5;
    let r = RunReport::new(vec![bad]);
    assert_eq!(exit_code(&r), 1);
}

#[test]
fn json_round_trip() {
    let cfg = RunConfig::parse_args(["ckq", "verify", "det", "--variant", "v12", "--order", "4"]).unwrap();
    let r = ckq::run_suite(&cfg);
    let back: RunReport = serde_json::from_str(&emit(&r, Format::Json)).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&emit(&r, Format::Json)).unwrap();
    let rec = &v["runs"][0];
    for key in ["check", "family", "variant", "j", "N", "status", "residual", "notes", "wall_time"] {
        assert!(rec.get(key).is_some(), "{key}");
    }
}

#[test]
fn corrupted_rule_names_first_nonzero_entry() {
    let al = fun_alphabet();
    let n = 5;
    let mut alg = build_fun(Variant::V02, &JAssign::STANDARD, n, FunMode::Bialgebra).unwrap();
    let mut rs = (*alg.system).clone();
    let lhs = al.parse_word("a2 b1").unwrap();
    let mut bump = NCPoly::zero(n);
    bump.add_term(al.parse_word("b1 a2").unwrap(), Series::monomial(DualCoeff::int(1), 2, n));
    assert!(rs.map_rule(&lhs, |p| p + &bump));
    alg.system = Arc::new(rs);
    let rep = rtt_report(&alg).unwrap();
    let rec = Record::from_report("rtt", "fun", "v02", "1,1", n, &rep);
    assert_eq!(rec.status, "fail");
    assert!(rec.residual.nonzero > 0);
    assert_eq!(rec.residual.first_order, Some(2));
    assert!(rec.notes[0].starts_with("entry("), "{:?}", rec.notes);
}

#[test]
fn sequential_and_parallel_runs_agree() {
    let cfg = RunConfig::parse_args(["ckq", "verify", "hopf-so", "--order", "4", "--j", "i1,1"]).unwrap();
    let par = strip_times(ckq::run_suite(&cfg));
    let seq = strip_times(ckq_core::exec::sequential(|| ckq::run_suite(&cfg)));
    assert_eq!(par, seq);
}
