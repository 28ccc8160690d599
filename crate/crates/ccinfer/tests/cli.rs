//! End-to-end tests of the `ccinfer` binary: JSON envelopes, exit
//! codes and reproducibility.

use std::path::Path;
use std::process::{Command, Output};

use ccinfer::data::{extract_complete_cases, load_csv, to_csv_string, MarDataset, MarRow};
use ccinfer::series::{choose_k, fit_series_ls};

fn ccinfer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccinfer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

fn write_fixture(dir: &Path, name: &str, data: &MarDataset) -> String {
    let path = dir.join(name);
    std::fs::write(&path, to_csv_string(data)).unwrap();
    path.to_str().unwrap().to_string()
}

/// Deterministic fixture: y = 2u + 0.5 with u on a grid, no noise,
/// every third row missing.
fn linear_fixture(n: usize) -> MarDataset {
    let rows: Vec<MarRow> = (0..n)
        .map(|i| {
            let u = -1.0 + 2.0 * i as f64 / (n - 1) as f64;
            let v = i as f64 / (n - 1) as f64;
            let y = 2.0 * u + 0.5;
            MarRow {
                u: vec![u],
                v,
                y: (i % 3 != 0).then_some(y),
            }
        })
        .collect();
    MarDataset::new(rows, 1).unwrap()
}

/// Noisy all-observed fixture with a deterministic pseudo-random
/// pattern (no RNG dependency in the test).
fn noisy_fixture(n: usize) -> MarDataset {
    let rows: Vec<MarRow> = (0..n)
        .map(|i| {
            let x = i as f64;
            let u = (x * 0.7).sin() * 2.0;
            let v = (x * 0.37).fract();
            let e = (x * 1.3).sin() * 0.8;
            MarRow {
                u: vec![u],
                v,
                y: Some(1.5 * u + (std::f64::consts::PI * v).cos() + e),
            }
        })
        .collect();
    MarDataset::new(rows, 1).unwrap()
}

#[test]
fn estimate_recovers_noise_free_truth() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "linear.csv", &linear_fixture(30));
    let out = ccinfer(&["estimate", "--input", &input]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json = stdout_json(&out);
    let theta = json["result"]["theta_hat"][0].as_f64().unwrap();
    let sigma = json["result"]["sigma_hat"].as_f64().unwrap();
    assert!((theta - 2.0).abs() < 1e-9, "theta_hat = {theta}");
    assert!(sigma < 1e-9, "sigma_hat = {sigma}");
    assert_eq!(json["command"], "estimate");
}

#[test]
fn estimate_matches_library_fit_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    let data = noisy_fixture(20);
    let input = write_fixture(dir.path(), "noisy.csv", &data);
    let out = ccinfer(&["estimate", "--input", &input]);
    assert!(out.status.success());
    let json = stdout_json(&out);

    let reloaded = load_csv(&input).unwrap();
    let cc = extract_complete_cases(&reloaded);
    let fit = fit_series_ls(&cc.pairs, &vec![1u8; cc.n()], choose_k(cc.n())).unwrap();
    assert_eq!(json["result"]["theta_hat"][0].as_f64().unwrap(), fit.theta_hat[0]);
    assert_eq!(json["result"]["sigma_hat"].as_f64().unwrap(), fit.sigma_hat);
    for (i, b) in fit.beta_hat.iter().enumerate() {
        assert_eq!(json["result"]["beta_hat"][i].as_f64().unwrap(), *b);
    }
}

#[test]
fn ingestion_error_exits_2_with_json_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, "a,b,c,d\n1,2,3,4\n").unwrap();
    let out = ccinfer(&["estimate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_json(&out);
    assert_eq!(err["error"], "MalformedHeader");
    assert!(out.stdout.is_empty());
}

#[test]
fn insufficient_data_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let rows: Vec<MarRow> = (0..3)
        .map(|i| MarRow {
            u: vec![i as f64],
            v: i as f64 / 3.0,
            y: Some(i as f64),
        })
        .collect();
    let data = MarDataset::new(rows, 1).unwrap();
    let input = write_fixture(dir.path(), "tiny.csv", &data);
    let out = ccinfer(&["test-normal", "--input", &input]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr_json(&out)["error"], "InsufficientData");
}

#[test]
fn test_normal_runs_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "noisy.csv", &noisy_fixture(200));
    let out = ccinfer(&["test-normal", "--input", &input]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    let stat = json["result"]["statistic"].as_f64().unwrap();
    assert!(stat > 0.0);
    // rejection either way is exit 0: rejection is data, not an error
    assert_eq!(json["result"]["alpha"], 0.05);
}

#[test]
fn alpha_flips_reject_across_the_statistic() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "noisy.csv", &noisy_fixture(200));
    let loose = ccinfer(&["test-normal", "--input", &input, "--alpha", "0.9999"]);
    let strict = ccinfer(&["test-normal", "--input", &input, "--alpha", "0.000001"]);
    assert!(loose.status.success() && strict.status.success());
    let r_loose = stdout_json(&loose)["result"]["reject"].as_bool().unwrap();
    let r_strict = stdout_json(&strict)["result"]["reject"].as_bool().unwrap();
    // alpha close to 1 -> tiny critical value -> reject; alpha close
    // to 0 -> huge critical value -> accept
    assert!(r_loose);
    assert!(!r_strict);
}

#[test]
fn test_linear_rejects_unknown_chi() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "noisy.csv", &noisy_fixture(60));
    let out = ccinfer(&["test-linear", "--input", &input, "--chi", "step"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr_json(&out)["error"], "NonConstantChiRequired");
}

#[test]
fn critical_values_table() {
    let out = ccinfer(&["critical-values", "--law", "bridge"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    let table = json["result"]["table"].as_array().unwrap();
    assert_eq!(table.len(), 3);
    let q95 = table[1]["critical_value"].as_f64().unwrap();
    assert!((q95 - 1.3581).abs() < 1e-3);

    let bad = ccinfer(&["critical-values", "--law", "bm", "--levels", "1.5"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "noisy.csv", &noisy_fixture(120));
    let a = ccinfer(&["test-normal", "--input", &input]);
    let b = ccinfer(&["test-normal", "--input", &input]);
    assert_eq!(a.stdout, b.stdout);

    let v1 = ccinfer(&["verify-lemma1", "--n-max", "3", "--draws", "5000"]);
    let v2 = ccinfer(&["verify-lemma1", "--n-max", "3", "--draws", "5000"]);
    assert!(v1.status.success());
    assert_eq!(v1.stdout, v2.stdout);
}

#[test]
fn simulate_single_rep_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = dir.path().join("scenario.txt");
    std::fs::write(
        &scenario,
        "n = 120\nm = 1\ntheta = 1.0\nrho = cospi\nerror = normal\nsigma = 1.0\npi = const:0.9\nseed = 33\n",
    )
    .unwrap();
    let out_dir = dir.path().join("out");
    let out = ccinfer(&[
        "simulate",
        "--scenario",
        scenario.to_str().unwrap(),
        "--reps",
        "1",
        "--analysis",
        "normal",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json = stdout_json(&out);
    assert_eq!(json["result"]["reps"], 1);

    // the single replication equals the direct library computation
    let config = ccinfer::sim::ScenarioConfig::from_file(&scenario).unwrap();
    let data = ccinfer::sim::generate_scenario(
        &config,
        &mut ccinfer::sim::replication_rng(config.seed, 0),
    )
    .unwrap();
    let report = ccinfer::normality::run_normality_test(&data, 0.05).unwrap();
    let q50 = json["result"]["statistic_quantiles"]["q50"].as_f64().unwrap();
    assert_eq!(q50, report.statistic);

    let csv = std::fs::read_to_string(out_dir.join("replications.csv")).unwrap();
    assert!(csv.starts_with("rep,statistic,p_value,reject\n"));
    assert_eq!(csv.lines().count(), 2);
    assert!(out_dir.join("summary.json").exists());
}

#[test]
fn simulate_rejects_bad_scenario() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = dir.path().join("bad.txt");
    std::fs::write(&scenario, "n = 100\nm = 1\ntheta = 1.0\nrho = cospi\nerror = normal\npi = const:0.0\nseed = 1\n").unwrap();
    let out = ccinfer(&[
        "simulate",
        "--scenario",
        scenario.to_str().unwrap(),
        "--reps",
        "5",
        "--analysis",
        "normal",
        "--out",
        dir.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], "InvalidConfig");
}

#[test]
fn verify_lemma1_reports_exactness() {
    let out = ccinfer(&["verify-lemma1", "--n-max", "4", "--draws", "20000"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["result"]["exact_ok"], true);
    assert_eq!(json["result"]["remark3"]["ok"], true);
}
