use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn xopkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xopkit"))
        .args(args)
        .env("XOPKIT_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

/// Sorted key paths of a JSON document, arrays collapsed to `[]`.
fn key_paths(v: &Value, prefix: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                let path = format!("{prefix}.{k}");
                out.push(path.clone());
                key_paths(child, &path, out);
            }
        }
        Value::Array(items) => {
            for item in items {
                key_paths(item, &format!("{prefix}[]"), out);
            }
        }
        _ => {}
    }
}

fn keys(text: &str) -> String {
    let v: Value = serde_json::from_str(text).unwrap();
    let mut out = Vec::new();
    key_paths(&v, "", &mut out);
    out.sort();
    out.dedup();
    out.join("\n") + "\n"
}

#[test]
fn gen_json_rows() {
    let o = xopkit(&[
        "gen", "--family", "L1", "--ell", "1", "--g", "2", "--n", "0..1", "--format", "json",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(keys(&text), golden("gen.keys"));
    let v: Value = serde_json::from_str(&text).unwrap();
    let c0 = &v["rows"][0]["coefficients"];
    assert_eq!(
        (c0[0]["num"].as_str(), c0[0]["den"].as_str()),
        (Some("7"), Some("2"))
    );
    assert_eq!(v["rows"][1]["degree"], 2);
}

#[test]
fn gen_csv_header() {
    let o = xopkit(&[
        "gen", "--family", "L1", "--ell", "1", "--g", "2", "--n", "0..1", "--format", "csv",
    ]);
    assert_eq!(first_line(&stdout(&o)), golden("gen.header").trim_end());
    assert_eq!(stdout(&o).lines().nth(1), Some("0,1,0,7,2,1,1,0,1"));
}

#[test]
fn invalid_parameters_exit_2() {
    let o = xopkit(&[
        "gen", "--family", "J1", "--ell", "1", "--g", "1", "--h", "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("requires g>h"), "{err}");
    assert_eq!(err.lines().count(), 1);
    let o = xopkit(&["gen", "--family", "L1", "--ell", "1", "--g", "x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_groundstate_only() {
    let o = xopkit(&[
        "check", "--suite", "sl", "--family", "L1", "--ell", "1", "--nmax", "0",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn check_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = xopkit(&[
        "check",
        "--suite",
        "bispectral",
        "--family",
        "J2",
        "--ell",
        "1",
        "--dim",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(keys(&text), golden("check.keys"));
}

#[test]
fn perturbed_sl_suite_fails() {
    let o = xopkit(&[
        "check",
        "--suite",
        "sl",
        "--family",
        "L1",
        "--ell",
        "1",
        "--nmax",
        "2",
        "--perturb",
        "sl",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL suite=sl family=L1 ell=1"));
}

#[test]
fn recur_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = xopkit(&[
        "recur", "--family", "L1", "--ell", "1", "--g", "2", "--N", "8", "--out", out,
    ]);
    assert!(o.status.success());
    for (name, band) in [("K.csv", 2), ("Xi.csv", 1), ("H.csv", 1)] {
        let text = std::fs::read_to_string(dir.path().join(name)).unwrap();
        assert_eq!(first_line(&text), "row,col,num,den");
        for line in text.lines().skip(1) {
            let f: Vec<i64> = line
                .split(',')
                .take(2)
                .map(|x| x.parse().unwrap())
                .collect();
            assert!((f[0] - f[1]).abs() <= band, "{name}: {line}");
        }
    }
    let meta = std::fs::read_to_string(dir.path().join("meta.json")).unwrap();
    assert_eq!(keys(&meta), golden("meta.keys"));
    let v: Value = serde_json::from_str(&meta).unwrap();
    assert_eq!(v["declared_bandwidth"]["K"], 2);
}

#[test]
fn recur_rejects_small_size() {
    let dir = tempfile::tempdir().unwrap();
    let o = xopkit(&[
        "recur",
        "--family",
        "L1",
        "--ell",
        "2",
        "--g",
        "2",
        "--N",
        "4",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spectrum_isospectral_csv() {
    let mut lists = Vec::new();
    for side in ["plus", "minus"] {
        let o = xopkit(&[
            "spectrum", "--family", "L1", "--ell", "1", "--g", "2", "--side", side, "--grid",
            "8000", "--levels", "4",
        ]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert_eq!(first_line(&text), golden("spectrum.header").trim_end());
        let values: Vec<f64> = text
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect();
        lists.push(values);
    }
    for (k, want) in [14.0, 18.0, 22.0, 26.0].iter().enumerate() {
        assert!((lists[0][k] - want).abs() / want < 1e-2);
        assert!((lists[1][k] - want).abs() / want < 1e-2);
    }
}

#[test]
fn spectrum_json_keys() {
    let o = xopkit(&[
        "spectrum", "--family", "J1", "--ell", "1", "--g", "3", "--h", "1", "--grid", "2000",
        "--format", "json",
    ]);
    assert!(o.status.success());
    assert_eq!(keys(&stdout(&o)), golden("spectrum.keys"));
}

#[test]
fn ortho_residuals() {
    let o = xopkit(&[
        "ortho", "--family", "J1", "--ell", "1", "--g", "3", "--h", "1", "--nmax", "6", "--order",
        "200",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(first_line(&text), golden("ortho.header").trim_end());
    let worst = text
        .lines()
        .skip(1)
        .filter_map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0] != f[1]).then(|| f[3].parse::<f64>().unwrap())
        })
        .fold(0.0, f64::max);
    assert!(worst < 1e-10, "{worst}");
    let o = xopkit(&[
        "ortho", "--family", "L2", "--ell", "2", "--g", "2", "--nmax", "2", "--order", "50",
        "--format", "json",
    ]);
    assert_eq!(keys(&stdout(&o)), golden("ortho.keys"));
}
