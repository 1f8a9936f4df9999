use std::process::{Command, Output};

use cube_sections_cli::record::OutputRecord;
use cube_sections_cli::{EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cube-sections"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(EXIT_OK), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> OutputRecord {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn csv_rows(args: &[&str]) -> Vec<csv::StringRecord> {
    let mut all = args.to_vec();
    all.extend(["--format", "csv"]);
    let text = stdout(&all);
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .collect::<Result<_, _>>()
        .unwrap()
}

#[test]
fn volume_examples() {
    let r = json(&["volume", "--d", "3", "--n", "3", "--t", "0"]);
    assert_eq!(format!("{:.6}", r.results["volume"].as_f64().unwrap()), "1.299038");
    let r = json(&["volume", "--d", "2", "--n", "2", "--t", "0"]);
    assert_eq!(format!("{:.6}", r.results["volume"].as_f64().unwrap()), "1.414214");
    let r = json(&["volume", "--d", "6", "--n", "6", "--t", "0.3", "--method", "both"]);
    let sum = r.results["sum"].as_f64().unwrap();
    let integral = r.results["integral"].as_f64().unwrap();
    assert!((sum - integral).abs() < 1e-8);
}

#[test]
fn volume_with_rational_z_reports_exact_value() {
    let r = json(&["volume", "--d", "4", "--n", "4", "--z", "2"]);
    assert_eq!(r.results["exact"], "4/3");
}

#[test]
fn classify_examples() {
    let r = json(&["classify", "--d", "4", "--n", "4", "--t", "0"]);
    assert_eq!(r.results["kind"], "StrictLocalMax");
    assert_eq!(r.results["z"], "2");

    let r = json(&["classify", "--d", "10", "--n", "4", "--z", "7/4"]);
    assert_eq!(r.results["kind"], "StrictLocalMax");
    assert_eq!(r.results["z"], "7/4");
    assert_eq!(r.results["s1_sign"], -1);
    assert_eq!(r.results["s2_sign"], -1);

    // t = 0.25 sits at z = 2 − 0.25·2 = 3/2
    let r = json(&["classify", "--d", "10", "--n", "4", "--t", "0.25"]);
    assert_eq!(r.results["z"], "3/2");
    assert_eq!(r.results["kind"], "NotExtremal");
    let r = json(&["classify", "--d", "10", "--n", "4", "--z", "3/2"]);
    assert_eq!(r.results["kind"], "NotExtremal");
    assert_eq!(r.results["s1_sign"], 1);
    assert_eq!(r.results["s2_sign"], -1);
}

#[test]
fn table_examples() {
    let text = stdout(&["table", "--dmin", "8", "--dmax", "8", "--format", "csv"]);
    assert_eq!(text.lines().collect::<Vec<_>>(), ["d,rho_minus,rho_circ,rho_plus", "8,3.38859,3.14086,2.13730"]);
    let text = stdout(&["table", "--dmin", "21", "--dmax", "21", "--format", "csv"]);
    assert!(text.lines().any(|l| l == "21,9.51608,9.15149,7.44025"));

    let pretty = stdout(&["table", "--dmin", "4", "--dmax", "5"]);
    let row5 = pretty.lines().find(|l| l.trim_start().starts_with('5')).unwrap();
    assert!(row5.contains("2 (exact)") && row5.contains("1 (exact)"), "{row5}");
    let r = json(&["table", "--dmin", "4", "--dmax", "5"]);
    let rows = r.results["rows"].as_array().unwrap();
    assert_eq!(rows[1]["exact"]["rho_plus"], "1");
    assert_eq!(rows[1]["exact"]["rho_minus"], "2");
}

#[test]
fn sweep_columns() {
    let rows = csv_rows(&["sweep", "--d", "4", "--n", "4", "--samples", "5"]);
    assert_eq!(rows.len(), 5);
    let v: Vec<f64> = rows.iter().map(|r| r[2].parse().unwrap()).collect();
    assert!(v.windows(2).all(|w| w[1] <= w[0]), "{v:?}");
    for n in 4..=12u32 {
        let ns = n.to_string();
        let rows = csv_rows(&["sweep", "--d", &ns, "--n", &ns]);
        let mut changes = 0;
        let mut last = 0.0f64;
        for r in &rows {
            let t: f64 = r[0].parse().unwrap();
            let z: f64 = r[1].parse().unwrap();
            assert!((z - (f64::from(n) / 2.0 - t * f64::from(n).sqrt())).abs() < 1e-12);
            let s1: f64 = r[3].parse().unwrap();
            if s1 != 0.0 {
                if last * s1 < 0.0 {
                    changes += 1;
                }
                last = s1;
            }
        }
        assert_eq!(changes, 2, "n = {n}");
    }
}

#[test]
fn roots_reports_pattern() {
    let r = json(&["roots", "--n", "6"]);
    assert_eq!(r.results["pattern_ok"], true);
    assert_eq!(r.results["rho_plus"]["rounded"], "1.39766");
    assert_eq!(r.results["rho_minus"]["rounded"], "2.46963");
}

#[test]
fn verify_suites_pass() {
    for suite in ["formulas", "props"] {
        let text = stdout(&["verify", "--suite", suite, "--samples", "40"]);
        assert!(text.trim_end().ends_with("0 failed"), "{text}");
    }
    let r = json(&["verify", "--suite", "rho", "--dmax", "35"]);
    assert_eq!(r.results["failed"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["volume", "--bogus"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(run(&["volume", "--d", "3", "--t", "0", "--z", "1"]).status.code(), Some(EXIT_USAGE));
    let out = run(&["volume", "--d", "3", "--n", "3", "--t", "5"]);
    assert_eq!(out.status.code(), Some(EXIT_DOMAIN));
    assert!(String::from_utf8_lossy(&out.stderr).contains("must be <"));
    assert_eq!(run(&["classify", "--d", "3", "--t", "0"]).status.code(), Some(EXIT_DOMAIN));
    assert_eq!(run(&["--help"]).status.code(), Some(EXIT_OK));
    let out = Command::new(env!("CARGO_BIN_EXE_cube-sections"))
        .args(["roots", "--n", "4"])
        .env(cube_sections_cli::THREADS_ENV, "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert_ne!(EXIT_VERIFY, EXIT_OK);
}

#[test]
fn out_flag_writes_file_and_reports_path() {
    let dir = std::env::temp_dir().join(format!("cube-sections-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let p = path.to_str().unwrap();
    let out = run(&["table", "--dmin", "8", "--dmax", "9", "--format", "csv", "--out", p]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("d,rho_minus,rho_circ,rho_plus\n8,3.38859"));
    std::fs::remove_dir_all(&dir).unwrap();

    let missing = dir.join("missing").join("x.csv");
    let out = run(&["table", "--dmin", "8", "--dmax", "8", "--out", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_DOMAIN));
    assert!(String::from_utf8_lossy(&out.stderr).contains(missing.to_str().unwrap()));
}

#[test]
fn output_is_deterministic_and_locale_free() {
    let args = ["sweep", "--d", "7", "--n", "5", "--samples", "33", "--format", "csv"];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
    for line in a.lines().skip(1) {
        assert_eq!(line.split(',').count(), 6, "{line}");
    }
    let v = ["verify", "--suite", "formulas", "--samples", "20", "--format", "json"];
    assert_eq!(stdout(&v), stdout(&v));
}
