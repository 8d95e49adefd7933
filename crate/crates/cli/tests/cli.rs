use std::process::{Command, Output};

use fiboper::render::parse_table_json;
use fiboper_core::{Family, PsiSequence};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fiboper"))
        .args(args)
        .env_remove("FIBOPER_PSI")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_plain_lines() {
    let o = run(&["table", "sheffer:bernoulli", "3", "plain"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("B_3 = x^3 + 2x^2 + x + 1/3"));
    let o = run(&["table", "basic:forward", "3"]);
    assert_eq!(stdout(&o).lines().last(), Some("q_3 = x^3 - 4x^2 + 3x"));
}

#[test]
fn table_json_schema() {
    let o = run(&["--format", "json", "table", "basic:abel:3/2", "4"]);
    let rows = parse_table_json(&stdout(&o)).unwrap();
    let seq = Family::Abel(fiboper_core::poly::ratio(3, 2)).sequence(&PsiSequence::fibonacci(), 4).unwrap();
    assert_eq!(rows.len(), 5);
    for row in &rows {
        assert_eq!(row.family, "basic:abel");
        assert_eq!(row.param.as_deref(), Some("3/2"));
        assert_eq!(row.order, "ascending");
        assert_eq!(row.polynomial().unwrap(), seq[row.n]);
    }
    let raw: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(raw[2]["coeffs"], serde_json::json!(["0", "-3/2", "1"]));
}

#[test]
fn latex_uses_frac() {
    let o = run(&["table", "sheffer:bernoulli", "2", "latex"]);
    assert!(stdout(&o).contains("B_{2}(x) &= x^{2} + x + \\frac{1}{2}"), "{}", stdout(&o));
}

#[test]
fn psi_flag_and_env() {
    let o = run(&["--psi", "natural", "table", "basic:forward", "3"]);
    assert_eq!(stdout(&o).lines().last(), Some("q_3 = x^3 - 3x^2 + 2x"));
    let o = Command::new(env!("CARGO_BIN_EXE_fiboper"))
        .args(["fib", "6", "3"])
        .env("FIBOPER_PSI", "natural")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "20\n");
    assert_eq!(stdout(&run(&["fib", "6", "3"])), "60\n");
}

#[test]
fn fib_forms() {
    assert_eq!(stdout(&run(&["fib", "50"])), "12586269025\n");
    assert_eq!(stdout(&run(&["fib", "5", "--factorial"])), "30\n");
    let o = run(&["fib", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], "55");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["table", "basic:nope", "3"][..],
        &["table", "basic:abel:1.5", "3"],
        &["table", "basic:delta", "17"],
        &["table", "basic:delta", "-1"],
        &["table", "basic:delta", "3", "yaml"],
        &["--trunc", "2", "table", "basic:delta", "5"],
        &["--psi", "lucas", "fib", "3"],
        &["bogus"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn max_n_is_configurable() {
    let o = run(&["--max-n", "18", "table", "basic:delta", "17"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 18);
}

#[test]
fn verify_reports_ledger() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("laguerre(alpha=-1) n=5 ERRATA_CONFIRMED x^2: printed 1280, derived 120; x^3: printed -905, derived -90"));
    assert!(out.contains("bernoulli n=8 ERRATA_CONFIRMED x^0: printed 1/36, derived 1/34"));
    assert!(out.contains("abel a=1 n=2 ERRATA_CONFIRMED x^1: printed a, derived -a"));
    assert!(!out.contains("MISMATCH\n") && !out.contains(" MISMATCH "));
    let json: serde_json::Value = serde_json::from_slice(&run(&["verify", "json"]).stdout).unwrap();
    assert_eq!(json["summary"]["mismatch"], 0);
}

#[test]
fn gram_and_spectral() {
    let o = run(&["gram", "sheffer:bernoulli", "4", "plain"]);
    assert!(stdout(&o).contains("diag(1,1,1,2,6)"));
    let o = run(&["spectral", "basic:delta", "4", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["all_match"], true);
    let u: Vec<&str> = v["coeffs"].as_array().unwrap().iter().map(|r| r["u"].as_str().unwrap()).collect();
    assert_eq!(u, ["0", "0", "0", "0"]);
    let o = run(&["spectral", "sheffer:hermite:1", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all_match: false"));
}
