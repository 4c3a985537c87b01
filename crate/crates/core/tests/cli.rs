//! End-to-end runs of the `negacyclic` binary and of `cli::run` in process.

use std::path::Path;
use std::process::Command;

use negacyclic::cli::{run, EXIT_BUDGET, EXIT_GOLDEN, EXIT_OK, EXIT_VALIDATION};

fn run_in_process(args: &[&str]) -> (i32, String) {
    let mut buf = Vec::new();
    let mut full = vec!["negacyclic"];
    full.extend_from_slice(args);
    let code = run(full, &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

fn bin(cache: &Path, args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_negacyclic"))
        .args(args)
        .env("NEGACYCLIC_CACHE_DIR", cache)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn construct_worked(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("worked.toml");
    let (code, _) = run_in_process(&[
        "construct",
        "--p",
        "3",
        "--n",
        "10",
        "--k",
        "2",
        "--g",
        "X^2+1",
        "--h",
        "X^4+(2e+1)X^2+1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    path
}

#[test]
fn factor_counts() {
    let (code, out) = run_in_process(&[
        "factor", "--p", "3", "--k", "1", "--n", "10", "--format", "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 4);
    assert!(out.contains("X^4+X^3+2*X+1"));

    let (_, out) = run_in_process(&[
        "factor", "--p", "3", "--k", "2", "--n", "10", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let degrees: Vec<u64> = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["degree"].as_u64().unwrap())
        .collect();
    assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 4);
    assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2);

    assert_eq!(
        run_in_process(&["factor", "--p", "3", "--n", "3"]).0,
        EXIT_VALIDATION
    );
}

#[test]
fn construct_reports_and_rejects() {
    let (code, out) = run_in_process(&[
        "construct",
        "--p",
        "3",
        "--n",
        "10",
        "--k",
        "2",
        "--g",
        "X^2+1",
        "--h",
        "X^4+(2e+1)X^2+1",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        (v["n"].as_u64(), v["k_dim"].as_u64(), v["d_bch"].as_u64()),
        (Some(10), Some(2), Some(3))
    );
    assert_eq!(v["linear"], true);

    // g(-X) != g(X): X^4+X^3+2X+1 maps to X^4+2X^3+X+1
    let (code, _) = run_in_process(&[
        "construct",
        "--p",
        "3",
        "--n",
        "10",
        "--k",
        "2",
        "--g",
        "X^4+X^3+2X+1",
        "--h",
        "1",
    ]);
    assert_eq!(code, EXIT_VALIDATION);
    // h = 1 keeps h(-X)=h(X) but misses the orbit factors
    let err = negacyclic::code::construct_code(
        negacyclic::PrimeModulus::new(3).unwrap(),
        10,
        2,
        1,
        &negacyclic::Poly::parse(
            &negacyclic::ExtField::prime(negacyclic::PrimeModulus::new(3).unwrap()),
            "X^2+1",
        )
        .unwrap(),
        &negacyclic::Poly::one(
            &negacyclic::ExtField::new(negacyclic::PrimeModulus::new(3).unwrap(), 2).unwrap(),
        ),
        2,
    )
    .unwrap_err();
    assert!(err.to_string().contains("orbit condition"), "{err}");
}

#[test]
fn verify_and_simulate_ledgers() {
    let dir = tempfile::tempdir().unwrap();
    let spec = construct_worked(dir.path());
    let s = spec.to_str().unwrap();
    let (code, out) = run_in_process(&["verify", s, "--format", "json"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["distance"]["true_distance"], 3);
    assert_eq!(
        run_in_process(&["verify", s, "--budget", "1000"]).0,
        EXIT_BUDGET
    );
    // 3^10 exceeds the default state space cap
    assert_eq!(run_in_process(&["simulate", s]).0, EXIT_BUDGET);

    // a spec file whose a breaks isotropy: refused, and a failing ledger when forced
    let text = std::fs::read_to_string(&spec).unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(
        &bad,
        text.replace("a = \"2*X^6+X^4+2\"", "a = \"2*X^6+X^4+X+2\""),
    )
    .unwrap();
    let b = bad.to_str().unwrap();
    assert_eq!(run_in_process(&["verify", b]).0, EXIT_VALIDATION);
    let (code, out) = run_in_process(&["verify", b, "--unchecked", "--format", "csv"]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(out.contains("FAIL"));
}

#[test]
fn simulate_small_spec() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("small.toml");
    std::fs::write(
        &path,
        "format_version = 1\np = 3\nn = 4\nk = 1\nm = 1\nalpha = 1\nmodulus = \"X\"\ng = \"1\"\nh = \"X^4+1\"\n",
    )
    .unwrap();
    let (code, out) = run_in_process(&["simulate", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((v["trace_re"].as_f64().unwrap() - 1.0).abs() < 1e-6);
}

#[test]
fn search_small_rows_only() {
    let (code, out) = run_in_process(&[
        "search",
        "--p",
        "3",
        "--n-max",
        "4",
        "--no-cache",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for row in v["rows"].as_array().unwrap() {
        assert!(row["d"].as_u64().unwrap() < 3, "{row}");
    }
}

#[test]
fn tables_exit_codes_and_cache_replay() {
    let cache = tempfile::tempdir().unwrap();
    let (code, first) = bin(cache.path(), &["tables", "--p", "3", "--format", "csv"]);
    assert_eq!(code, EXIT_OK, "{first}");
    let cache_file = cache.path().join("search.jsonl");
    let lines = std::fs::read_to_string(&cache_file)
        .unwrap()
        .lines()
        .count();
    assert_eq!(lines, 1);
    let (code, second) = bin(cache.path(), &["tables", "--p", "3", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(first, second);
    assert_eq!(
        std::fs::read_to_string(&cache_file)
            .unwrap()
            .lines()
            .count(),
        1
    );

    // stopping short of the longest reference length leaves rows missing
    let (code, out) = bin(cache.path(), &["tables", "--p", "3", "--n-max", "50"]);
    assert_eq!(code, EXIT_GOLDEN);
    assert!(out.contains("MISSING"));
    assert_eq!(
        std::fs::read_to_string(&cache_file)
            .unwrap()
            .lines()
            .count(),
        2
    );
}

#[test]
fn markdown_tables_mark_nonlinear_rows() {
    let (code, out) = run_in_process(&["search", "--p", "3", "--n-max", "28", "--no-cache"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("[[28,4,3]]_3 *"));
    assert!(out.contains("[[10,2,3]]_3 |"));
}
