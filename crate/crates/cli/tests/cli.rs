//! End-to-end tests of the `chevwidth` binary: exit codes, report shapes,
//! cache integrity, and byte-level determinism.

use serde_json::Value;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chevwidth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Fresh scratch directory per call; leaks on purpose, the OS temp dir
/// is cleaned by the host and tests must not race over shared paths.
fn scratch(tag: &str) -> PathBuf {
    static N: AtomicU32 = AtomicU32::new(0);
    let n = N.fetch_add(1, Ordering::Relaxed);
    let dir = std::env::temp_dir().join(format!(
        "chevwidth-test-{}-{tag}-{n}",
        std::process::id()
    ));
    std::fs::create_dir_all(&dir).expect("create scratch dir");
    dir
}

#[test]
fn roots_info_counts_and_weyl_order() {
    let out = run(&["roots", "info", "A3"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["roots_total"], 12);
    assert_eq!(v["positive"], 6);
    assert_eq!(v["weyl_order"], 24);
    assert_eq!(v["cartan"][0][1], -1);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
}

#[test]
fn usage_errors_exit_one_with_message() {
    let cases: &[&[&str]] = &[
        &["roots", "info", "Z9"],
        &["suite", "acceptance", "--criterion", "99"],
        &["tavgen", "--target", "A2", "--field", "3", "--N", "3"],
        &["factor", "--ring", "F5", "--system", "C2", "--random", "5"],
        &["factor", "--ring", "F5", "--system", "A1"],
        &["verify", "commutator", "--system", "E6", "--ring", "F2"],
        &["k2", "class", "--ring", "F5[t]", "--f", "t", "--g", "2"],
        &["nonsense"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(code(&out), 1, "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?} said nothing");
    }
}

#[test]
fn verify_commutator_passes_without_cache() {
    let out = run(&["verify", "commutator", "--system", "C2", "--ring", "F5"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let v = stdout_json(&out);
    assert_eq!(v["failures_total"], 0);
    assert_eq!(v["rep"], "sp");
}

#[test]
fn constants_cache_writes_then_reloads() {
    let dir = scratch("cache");
    let args = ["constants", "A2", "--cache-dir", dir.to_str().unwrap()];
    let first = run(&args);
    assert_eq!(code(&first), 0);
    assert!(stderr_str(&first).contains("wrote constants cache"));
    let second = run(&args);
    assert_eq!(code(&second), 0);
    assert!(stderr_str(&second).contains("loaded constants for A2 from cache"));
    let a = stdout_json(&first);
    let b = stdout_json(&second);
    assert_eq!(a["origin"], "created");
    assert_eq!(b["origin"], "cache");
    assert_eq!(a["pairs"], b["pairs"], "cache changed the table");
}

/// Rewrites one commutator coefficient inside the cached payload.
/// `rehash` decides whether the guard hash is fixed up to match.
fn tamper(path: &Path, rehash: bool) {
    let text = std::fs::read_to_string(path).expect("cache file");
    let mut outer: Value = serde_json::from_str(&text).expect("outer json");
    let mut payload: Value =
        serde_json::from_str(outer["payload"].as_str().expect("payload string")).expect("payload");
    let coeff = &mut payload["pairs"][0]["terms"][0][3];
    let flipped = -coeff.as_i64().expect("coefficient");
    *coeff = Value::from(flipped);
    let compact = serde_json::to_string(&payload).expect("serialize");
    if rehash {
        let mut h = Sha256::new();
        h.update(compact.as_bytes());
        let hex: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
        outer["sha256"] = Value::from(hex);
    }
    outer["payload"] = Value::from(compact);
    std::fs::write(path, serde_json::to_string_pretty(&outer).expect("outer")).expect("write");
}

#[test]
fn stale_hash_forces_recompute() {
    let dir = scratch("stale");
    let dirs = dir.to_str().unwrap();
    assert_eq!(code(&run(&["constants", "C2", "--cache-dir", dirs])), 0);
    tamper(&dir.join("constants-C2.json"), false);
    let out = run(&[
        "verify",
        "commutator",
        "--system",
        "C2",
        "--ring",
        "F5",
        "--cache-dir",
        dirs,
    ]);
    assert_eq!(code(&out), 0, "stale hash must not be trusted or fatal");
    assert!(stderr_str(&out).contains("hash mismatch; recomputing"));
    // the rewrite leaves a clean cache behind
    let again = run(&["constants", "C2", "--cache-dir", dirs]);
    assert!(stderr_str(&again).contains("loaded constants for C2 from cache"));
}

#[test]
fn corrupt_cache_with_valid_hash_fails_verification_naming_the_pair() {
    let dir = scratch("inject");
    let dirs = dir.to_str().unwrap();
    assert_eq!(code(&run(&["constants", "C2", "--cache-dir", dirs])), 0);
    tamper(&dir.join("constants-C2.json"), true);
    let out = run(&[
        "verify",
        "commutator",
        "--system",
        "C2",
        "--ring",
        "F5",
        "--cache-dir",
        dirs,
    ]);
    assert_eq!(code(&out), 2, "stderr: {}", stderr_str(&out));
    let v = stdout_json(&out);
    assert_eq!(v["invariant"], "commutator formula");
    assert!(v["failures_total"].as_u64().unwrap() > 0);
    let first = &v["failures"][0];
    assert_eq!(first["alpha"], 0, "failure must name the corrupted pair");
    assert_eq!(first["beta"], 1);
}

#[test]
fn unreadable_cache_recomputes() {
    let dir = scratch("garbage");
    let path = dir.join("constants-A2.json");
    std::fs::write(&path, "not json").unwrap();
    let out = run(&["constants", "A2", "--cache-dir", dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stderr_str(&out).contains("unreadable; recomputing"));
}

#[test]
fn fixed_seed_output_is_byte_identical() {
    let args = [
        "factor", "--ring", "F3[t]", "--system", "A1", "--random", "20", "--seed", "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&[
        "factor", "--ring", "F3[t]", "--system", "A1", "--random", "20", "--seed", "8",
    ]);
    assert_ne!(a.stdout, c.stdout, "seed must steer the sampler");
}

#[test]
fn suite_reports_ignore_the_cli_seed() {
    let a = run(&["suite", "acceptance", "--criterion", "7", "--seed", "1"]);
    let b = run(&["suite", "acceptance", "--criterion", "7", "--seed", "999"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout, "criteria pin their own seeds");
}

#[test]
fn config_file_is_read_and_flags_win() {
    let dir = scratch("config");
    std::fs::write(dir.join("chevwidth.toml"), "seed = 42\noutputFormat = \"csv\"\n").unwrap();
    let csv = bin()
        .current_dir(&dir)
        .args(["factor", "--ring", "F5", "--system", "A1", "--random", "5"])
        .output()
        .unwrap();
    assert_eq!(code(&csv), 0);
    assert!(
        String::from_utf8_lossy(&csv.stdout).starts_with("width,count"),
        "config format ignored"
    );
    let json = bin()
        .current_dir(&dir)
        .args([
            "factor", "--ring", "F5", "--system", "A1", "--random", "5", "--format", "json",
        ])
        .output()
        .unwrap();
    stdout_json(&json); // flag overrides the config format
}

#[test]
fn bad_config_key_is_a_usage_error() {
    let dir = scratch("badcfg");
    std::fs::write(dir.join("chevwidth.toml"), "bogus = 1\n").unwrap();
    let out = bin()
        .current_dir(&dir)
        .args(["roots", "info", "A1"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
    assert!(stderr_str(&out).contains("bogus"));
}

#[test]
fn steinberg_symbol_is_short_and_evaluates_to_identity() {
    let out = run(&[
        "steinberg", "symbol", "--system", "A2", "--ring", "F5", "--u", "2", "--v", "3",
    ]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert!(v["width"].as_u64().unwrap() <= 12);
    assert_eq!(v["identity_in_rep"], true);
    assert_eq!(v["verdict"], "in-k2");
}

#[test]
fn steinberg_eval_runs_a_word_file() {
    let dir = scratch("word");
    let path = dir.join("word.json");
    std::fs::write(
        &path,
        r#"[{"root":0,"param":{"ring":"F5","value":2}},
            {"root":0,"param":{"ring":"F5","value":3}}]"#,
    )
    .unwrap();
    let out = run(&["steinberg", "eval", "--system", "A2", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["identity"], true, "x(2)x(3) = x(0) over F5");
}

#[test]
fn k2_class_names_places_and_residues() {
    let out = run(&["k2", "class", "--ring", "F5(t)", "--f", "t", "--g", "2"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["trivial"], false);
    assert!(v["components"].get("t").is_some(), "missing place (t)");

    let trivial = run(&["k2", "class", "--ring", "F5(t)", "--f", "t", "--g", "1"]);
    let v = stdout_json(&trivial);
    assert_eq!(v["trivial"], true);
}

#[test]
fn k2_ring_reports_the_unit_group_order() {
    let out = run(&["k2", "ring", "--ring", "F5[t,t^-1]"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["order"], 4);
}

#[test]
fn factor_matrix_file_roundtrips_and_writes_out() {
    let dir = scratch("factor");
    let mat = dir.join("m.json");
    std::fs::write(
        &mat,
        r#"{"ring":"F3[t]","size":2,"entries":[
            [{"coeffs":[1,0,1]},{"coeffs":[0,1]}],
            [{"coeffs":[0,1]},{"coeffs":[1]}]]}"#,
    )
    .unwrap();
    let report = dir.join("letters.json");
    let out = run(&[
        "factor",
        "--ring",
        "F3[t]",
        "--system",
        "A1",
        "--matrix",
        mat.to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let v = stdout_json(&out);
    assert!(v["width"].as_u64().unwrap() >= 1);
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(saved["width"], v["width"]);
}

#[test]
fn tavgen_covers_sl3_f2_with_four_blocks() {
    let out = run(&["tavgen", "--target", "A2", "--field", "2"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let v = stdout_json(&out);
    assert_eq!(v["group_order"], 168);
    assert_eq!(v["covered"], 168);
}

#[test]
fn tavgen_rank_lift_uses_the_subsystem_oracles() {
    let out = run(&["tavgen", "--target", "A3", "--field", "2", "--subsystems", "A2,A2"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let v = stdout_json(&out);
    assert_eq!(v["cone_products"], 20160);
    assert_eq!(v["group_order"], 20160);
}

#[test]
fn groups_form_exists_only_in_type_c() {
    let out = run(&["groups", "form", "--system", "C2"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["form"]["entries"][0][3]["value"], "1");
    assert_eq!(v["form"]["entries"][3][0]["value"], "-1");

    assert_eq!(code(&run(&["groups", "form", "--system", "A2"])), 1);
}

#[test]
fn suite_single_criterion_reports_pass() {
    let out = run(&["suite", "acceptance", "--criterion", "2"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v[0]["id"], 2);
    assert_eq!(v[0]["passed"], true);
}
