//! Browser bindings: expand an expression, count representations by a binary
//! form, and verify a catalog identity. Every export returns a JSON string.

use serde_json::json;
use wasm_bindgen::prelude::*;

use qforms::expr::{eval_expr, parse_expr};
use qforms::registry;
use qforms::repcount::{bqf_theta, BinaryForm};
use qforms::series::format_rational;
use qforms::LaurentSeries;

/// Largest order accepted from the page, to keep the tab responsive.
pub const MAX_ORDER: i64 = 4096;

fn check_order(order: i64) -> Result<(), String> {
    if (0..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(format!("order must lie in 0..={MAX_ORDER}"))
    }
}

fn coefficients(s: &LaurentSeries) -> Vec<String> {
    (s.min_exp()..=s.order()).map(|e| format_rational(&s.coeff(e).expect("tracked"))).collect()
}

pub fn expand_json(expr: &str, order: i64) -> Result<String, String> {
    check_order(order)?;
    let ast = parse_expr(expr).map_err(|e| e.to_string())?;
    let s = eval_expr(&ast, order).map_err(|e| e.to_string())?;
    Ok(json!({
        "expr": ast.to_string(),
        "min_exp": s.min_exp(),
        "order": s.order(),
        "coefficients": coefficients(&s),
    })
    .to_string())
}

pub fn count_json(a: i64, b: i64, c: i64, upto: i64) -> Result<String, String> {
    check_order(upto)?;
    let form = BinaryForm::new(a, b, c).map_err(|e| e.to_string())?;
    let s = bqf_theta(form, upto);
    Ok(json!({ "form": [a, b, c], "counts": coefficients(&s) }).to_string())
}

pub fn verify_json(id: &str, order: i64) -> Result<String, String> {
    check_order(order)?;
    let r = registry::verify(id, Some(order)).map_err(|e| e.to_string())?;
    serde_json::to_string(&r).map_err(|e| e.to_string())
}

pub fn catalog_json() -> String {
    let ids: Vec<_> = registry::catalog()
        .iter()
        .map(|e| json!({ "id": e.id, "statement": e.paper_ref, "expectation": e.expectation }))
        .collect();
    serde_json::Value::from(ids).to_string()
}

#[wasm_bindgen]
pub fn expand(expr: &str, order: i32) -> Result<String, JsError> {
    expand_json(expr, order.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn count(a: i32, b: i32, c: i32, upto: i32) -> Result<String, JsError> {
    count_json(a.into(), b.into(), c.into(), upto.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(id: &str, order: i32) -> Result<String, JsError> {
    verify_json(id, order.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn catalog() -> String {
    catalog_json()
}
