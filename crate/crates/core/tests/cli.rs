use std::process::{Command, Output};

use qforms::registry;
use qforms::series::format_rational;
use serde_json::Value;

fn qforms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qforms"))
        .args(args)
        .env_remove("QFORMS_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn expand_json(expr: &str, order: i64) -> Value {
    let o = qforms(&["expand", "--expr", expr, "--order", &order.to_string(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{expr}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

/// Coefficients of `q^0..=q^order` as printed by `expand --format json`.
fn dense(v: &Value) -> Vec<String> {
    let min = v["min_exp"].as_i64().unwrap();
    let order = v["order"].as_i64().unwrap();
    let coeffs = v["coefficients"].as_array().unwrap();
    (0..=order)
        .map(|e| if e < min { "0".to_string() } else { coeffs[(e - min) as usize].as_str().unwrap().to_string() })
        .collect()
}

#[test]
fn expand_matches_catalog_builders() {
    const N: i64 = 96;
    let sides: &[(&str, bool, &str)] = &[
        ("rama.69", true, "(phi(q)*phi(q^27) - phi(-q)*phi(-q^27))/2 - 2*q^7*psi(q^2)*psi(q^54)"),
        ("rama.69", false, "2*q*E(q^6)*E(q^18)"),
        ("sum2sq.count", false, "QF(1, 0, 1)"),
        ("cor3.form223", true, "QF(2, 2, 3)"),
        ("eta.34", false, "E(q^2)*E(q^4)*E(q^5)*E(q^10)/(E(q)*E(q^20))"),
        ("eta.35", false, "q*E(q)*E(q^2)*E(q^10)*E(q^20)/(E(q^4)*E(q^5))"),
        ("thm7_1.e1", true, "phi(-q)*phi(-q^5)^3"),
        ("sec8.remarkable", true, "q*(QF(2, 0, 7) + QF(3, 2, 5))*E(q^2)^2*E(q^28)^2"),
        ("sec8.remarkable", false, "(QF(1, 0, 14) - QF(3, 2, 5))*E(q^4)^2*E(q^14)^2"),
        ("thm81.coeffs", false, "q*E(q^16)^4/(E(q^32)*E(q^8))"),
        ("sec8.hecke_t2", false, "E(q^6)^2*E(q^10)^2/(E(q^2)*E(q^30))"),
        ("sec8.phi5phi3", true, "phi(q)^5*phi(q^3)"),
    ];
    for &(id, left, expr) in sides {
        let entry = registry::lookup(id).unwrap();
        let built = if left { (entry.lhs)(N) } else { (entry.rhs)(N) }.unwrap();
        let expected: Vec<String> = (0..=N).map(|e| format_rational(&built.coeff(e).unwrap_or_default())).collect();
        assert_eq!(dense(&expand_json(expr, N)), expected, "{id}: {expr}");
    }
}

#[test]
fn expand_text_and_order_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_qforms"))
        .args(["expand", "--expr", "phi(q)", "--format", "json"])
        .env("QFORMS_ORDER", "9")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 9);
    assert_eq!(dense(&v), ["1", "2", "0", "0", "2", "0", "0", "0", "0", "2"]);

    let o = qforms(&["expand", "--expr", "E(q)", "--order", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("q^7"), "{}", stdout(&o));
}

#[test]
fn verify_writes_a_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = qforms(&["verify", "--id", "rama.69", "--order", "64", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["order"], 64);
    let r = &v["results"][0];
    for key in ["id", "paper_ref", "status", "first_mismatch", "lhs_coeff", "rhs_coeff", "elapsed_ms"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["id"], "rama.69");
    assert_eq!(r["status"], "pass");
    assert!(r["first_mismatch"].is_null());
}

#[test]
fn verify_all_passes_and_reports_every_entry() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("all.json");
    let o = qforms(&["verify", "--all", "--order", "128", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), registry::catalog().len());
    assert_eq!(v["order"], 128);
}

#[test]
fn exploratory_mismatch_does_not_fail_the_run() {
    let o = qforms(&["verify", "--id", "sec8.hecke_t2", "--order", "32"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("first mismatch"), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["expand", "--expr", "E(q"][..],
        &["expand", "--expr", "E(q)", "--order", "-1"],
        &["verify", "--id", "no.such.entry"],
        &["verify"],
        &["count", "--form", "1,0", "--upto", "5"],
        &["count", "--form", "1,3,1", "--upto", "5"],
        &["formula", "--name", "nope", "--n", "3"],
        &["factor", "0"],
        &["bogus"],
    ] {
        assert_eq!(qforms(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn count_formula_and_factor() {
    let o = qforms(&["count", "--form", "1,0,1", "--upto", "5", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(dense(&v), ["1", "4", "4", "0", "4", "8"]);

    let o = qforms(&["count", "--quat", "1,1,1,1", "--upto", "3"]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["0 1", "1 8", "2 24", "3 32"]);

    let o = qforms(&["formula", "--name", "r2", "--n", "25"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("= 12"), "{}", stdout(&o));

    let o = qforms(&["factor", "360"]);
    let text = stdout(&o);
    assert!(text.starts_with("360 = 2^3 * 3^2 * 5"), "{text}");
    assert!(text.contains("divisors: 1 2 3 4 5 6 8 9 10"), "{text}");
}
