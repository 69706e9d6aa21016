use qforms_wasm::{catalog_json, count_json, expand_json, verify_json, MAX_ORDER};

fn parse(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn expand_returns_coefficients() {
    let v = parse(&expand_json("phi(q)*phi(q^5)", 6).unwrap());
    assert_eq!(v["coefficients"], serde_json::json!(["1", "2", "0", "0", "2", "2", "4"]));
    assert_eq!(v["expr"], "phi(q) * phi(q^5)");
}

#[test]
fn expand_reports_parse_errors() {
    let e = expand_json("phi(q", 6).unwrap_err();
    assert!(e.contains("offset 5"), "{e}");
    assert!(expand_json("E(q)", MAX_ORDER + 1).is_err());
}

#[test]
fn count_matches_sum_of_two_squares() {
    let v = parse(&count_json(1, 0, 1, 5).unwrap());
    assert_eq!(v["counts"], serde_json::json!(["1", "4", "4", "0", "4", "8"]));
    assert!(count_json(1, 3, 1, 5).is_err());
}

#[test]
fn verify_passes_and_rejects_unknown() {
    let v = parse(&verify_json("jtp.phi", 128).unwrap());
    assert_eq!(v["status"], "pass");
    assert!(verify_json("nope", 10).is_err());
}

#[test]
fn catalog_lists_entries() {
    let v = parse(&catalog_json());
    assert!(v.as_array().unwrap().len() >= 45);
}
