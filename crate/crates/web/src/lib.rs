//! Browser demo: three operations of the engine behind wasm-bindgen.
//!
//! * [`verify`]: exact check of Eq. (MA*) for a typed polynomial;
//! * [`continue_n2`]: the n = 2 Taylor continuation from the Cauchy family;
//! * [`einstein_check`]: numeric fit of `Ric = λg` for `Φ = k·log|P|`.
//!
//! Each returns a JSON string. The logic lives in the `*_json` functions,
//! which are plain Rust and tested natively; the exported wrappers only turn
//! errors into JavaScript exceptions.

mod expr;

pub use expr::parse_poly;

use pke_core::algebra::{parse_rational, MultiPoly};
use pke_core::geometry::{einstein_fit_with_step, sample_points, ToricPotential, DEFAULT_STEP};
use pke_core::ma::{taylor_continue_n2, verify_ma_star, CauchyData, MAError};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest dimension the page accepts; determinants grow quickly beyond it.
pub const MAX_N: usize = 4;
/// Degree bound for the continuation, as in the CLI default.
pub const CONTINUE_DEGREE_BOUND: u32 = 10;
/// Upper bound on Einstein sample points, to keep the page responsive.
pub const MAX_POINTS: usize = 200;

fn sign_str(s: i8) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}

fn check_n(n: usize) -> Result<(), String> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(format!("n must be between 1 and {MAX_N}"))
    }
}

fn poly_value(p: &MultiPoly) -> Value {
    json!({"text": p.to_string(), "json": p})
}

/// Verifies Eq. (MA*) for `poly` (typed expression or canonical JSON) in `n`
/// variables. Result: `{is_solution, sign, poly, lhs}`.
pub fn verify_json(poly: &str, n: usize) -> Result<String, String> {
    check_n(n)?;
    let p = parse_poly(poly, n)?;
    let r = verify_ma_star(&p, n).map_err(|e| e.to_string())?;
    Ok(json!({
        "is_solution": r.is_solution,
        "sign": r.sign.map(sign_str),
        "poly": poly_value(&p),
        "lhs": poly_value(&r.witness),
    })
    .to_string())
}

/// Continues the Cauchy data `P(x₁, 0) = ε(1 + x₁/r)^k`, `∂₂P(x₁, 0) = σk/r
/// (1 + x₁/r)^{k−1}` to n = 2. Result: `{consistent, poly?, sign?, reason?}`.
pub fn continue_n2_json(epsilon: i32, sigma: i32, r: &str, k: u32) -> Result<String, String> {
    let sign = |v: i32| i8::try_from(v).map_err(|_| "ε and σ must be ±1".to_string());
    let r = parse_rational(r).map_err(|e| e.to_string())?;
    let cd = CauchyData::family(sign(epsilon)?, sign(sigma)?, r, k).map_err(|e| e.to_string())?;
    match taylor_continue_n2(&cd, CONTINUE_DEGREE_BOUND) {
        Ok(c) => Ok(json!({
            "consistent": true,
            "poly": poly_value(&c.poly),
            "sign": sign_str(c.sign),
        })
        .to_string()),
        Err(MAError::Inconsistent(reason)) => Ok(json!({"consistent": false, "reason": reason}).to_string()),
        Err(e) => Err(e.to_string()),
    }
}

/// Fits `Ric = λg` for `Φ = k·log|P|` at `points` seeded sample points.
/// Result: `{lambda, max_residual, points}`.
pub fn einstein_check_json(poly: &str, n: usize, k: &str, points: usize, seed: u32) -> Result<String, String> {
    check_n(n)?;
    if points > MAX_POINTS {
        return Err(format!("at most {MAX_POINTS} sample points"));
    }
    let p = parse_poly(poly, n)?;
    let k = parse_rational(k).map_err(|e| e.to_string())?;
    let pot = ToricPotential::log(p, k).map_err(|e| e.to_string())?;
    let pts = sample_points(n, points, u64::from(seed));
    let fit = einstein_fit_with_step(&pot, &pts, DEFAULT_STEP).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&fit).expect("fits serialize"))
}

#[wasm_bindgen]
pub fn verify(poly: &str, n: usize) -> Result<String, JsError> {
    verify_json(poly, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn continue_n2(epsilon: i32, sigma: i32, r: &str, k: u32) -> Result<String, JsError> {
    continue_n2_json(epsilon, sigma, r, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn einstein_check(poly: &str, n: usize, k: &str, points: usize, seed: u32) -> Result<String, JsError> {
    einstein_check_json(poly, n, k, points, seed).map_err(|e| JsError::new(&e))
}
