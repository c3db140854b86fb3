//! End-to-end tests of the `mam` binary: exit codes, JSON envelopes, and
//! byte-level payload determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use mam::fixtures::emit_fixture_suite;
use serde_json::Value;
use tempfile::TempDir;

fn suite() -> (TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    emit_fixture_suite(dir.path()).unwrap();
    let root = dir.path().to_path_buf();
    (dir, root)
}

fn mam(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mam"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_exit_codes_and_reasons() {
    let (_keep, dir) = suite();
    let ok = mam(&["check", "pentagon.cfg"], &dir);
    assert_eq!(ok.status.code(), Some(0), "{ok:?}");

    let bad = mam(&["check", "negative_antipodal.cfg", "--json"], &dir);
    assert_eq!(bad.status.code(), Some(3));
    let v = stdout_json(&bad);
    assert_eq!(v["payload"]["witness"], serde_json::json!([1, 2]));
    assert_eq!(v["payload"]["reason"], serde_json::json!("weak_hyperbolicity"));

    let empty = mam(&["check", "negative_outside.cfg", "--json"], &dir);
    assert_eq!(empty.status.code(), Some(3));
    assert_eq!(stdout_json(&empty)["payload"]["reason"], serde_json::json!("empty_manifold"));
}

#[test]
fn usage_errors_exit_two() {
    let (_keep, dir) = suite();
    let missing = mam(&["check", "no_such_file.cfg"], &dir);
    assert_eq!(missing.status.code(), Some(2));

    let unknown = mam(&["frobnicate"], &dir);
    assert_eq!(unknown.status.code(), Some(2));

    let range = mam(&["openbook", "pentagon.cfg", "--index", "9"], &dir);
    assert_eq!(range.status.code(), Some(2));
}

#[test]
fn resource_caps_exit_four() {
    let (_keep, dir) = suite();
    let big = mam(&["homology", "heptagon.cfg", "--complex", "--oracle"], &dir);
    assert_eq!(big.status.code(), Some(4), "{big:?}");

    let capped = mam(&["homology", "heptagon.cfg", "--oracle", "--cap", "10"], &dir);
    assert_eq!(capped.status.code(), Some(4));
    let msg = String::from_utf8_lossy(&capped.stderr);
    assert!(msg.contains("too_large"), "{msg}");
}

#[test]
fn validation_failures_exit_three() {
    let (_keep, dir) = suite();
    let p = mam(&["partition", "simplex3.cfg", "--json"], &dir);
    assert_eq!(p.status.code(), Some(3));
    let v = stdout_json(&p);
    assert_eq!(v["error"]["kind"], serde_json::json!("validation"));

    let c = mam(&["classify", "negative_zero.cfg"], &dir);
    assert_eq!(c.status.code(), Some(3));
}

#[test]
fn classify_homology_and_openbook_golden_output() {
    let (_keep, dir) = suite();
    let cls = mam(&["classify", "pentagon.cfg", "--complex", "--json"], &dir);
    assert_eq!(cls.status.code(), Some(0));
    assert_eq!(
        stdout_json(&cls)["payload"]["expression"],
        serde_json::json!("#_5 (S^3 x S^4)")
    );

    let hom = mam(&["homology", "pentagon.cfg", "--oracle"], &dir);
    let text = String::from_utf8_lossy(&hom.stdout);
    assert!(text.contains("ranks: [1, 10, 1]"), "{text}");
    assert!(text.contains("formula == oracle: true"), "{text}");

    let ob = mam(&["openbook", "pentagon_second_tripled.cfg", "--complex", "--json"], &dir);
    let v = stdout_json(&ob);
    assert_eq!(v["payload"]["binding"], serde_json::json!("S^1 x S^3 x S^5"));
    assert_eq!(v["schema"], serde_json::json!(1));
}

#[test]
fn payloads_are_byte_identical_across_runs() {
    let (_keep, dir) = suite();
    let args = ["contact", "pentagon.cfg", "--s", "1", "--samples", "4", "--seed", "11", "--json"];
    let a = stdout_json(&mam(&args, &dir));
    let b = stdout_json(&mam(&args, &dir));
    assert_eq!(
        serde_json::to_vec(&a["payload"]).unwrap(),
        serde_json::to_vec(&b["payload"]).unwrap()
    );
    assert_eq!(a["input_digest"], b["input_digest"]);

    let args = ["homology", "heptagon.cfg", "--json"];
    let a = stdout_json(&mam(&args, &dir));
    let b = stdout_json(&mam(&args, &dir));
    assert_eq!(
        serde_json::to_vec(&a["payload"]).unwrap(),
        serde_json::to_vec(&b["payload"]).unwrap()
    );
}

#[test]
fn fixtures_subcommand_writes_a_usable_corpus() {
    let out_dir = tempfile::tempdir().unwrap();
    let target = out_dir.path().join("corpus");
    let emitted = mam(
        &["fixtures", "--out", target.to_str().unwrap(), "--json"],
        out_dir.path(),
    );
    assert_eq!(emitted.status.code(), Some(0));
    let v = stdout_json(&emitted);
    assert!(v["payload"]["count"].as_u64().unwrap() >= 13);

    let ok = mam(&["check", "corpus/quint_pairs.cfg"], out_dir.path());
    assert_eq!(ok.status.code(), Some(0));
    assert!(target.join("README.md").exists());
}
