use pke_core::algebra::{rat, MultiPoly};
use pke_web::{continue_n2_json, einstein_check_json, parse_poly, verify_json};
use serde_json::Value;

fn x(n: usize, i: usize) -> MultiPoly {
    MultiPoly::var(n, i)
}

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn parser_handles_the_grammar() {
    let cube = (MultiPoly::one(2) + x(2, 0).scale(&rat(1, 3)) + x(2, 1).scale(&rat(1, 3))).pow(3);
    assert_eq!(parse_poly("(1 + x1/3 + x2/3)^3", 2).unwrap(), cube);
    assert_eq!(parse_poly("(3 + x_1 + x_2)^3 / 27", 2).unwrap(), cube);
    assert_eq!(
        parse_poly("1 - 2x1x2 + x2^2", 2).unwrap(),
        MultiPoly::one(2) - (x(2, 0) * x(2, 1)).scale(&rat(2, 1)) + x(2, 1).pow(2)
    );
    assert_eq!(parse_poly("-x1^2", 1).unwrap(), -&x(1, 0).pow(2));
    assert_eq!(parse_poly("1/2x1", 1).unwrap(), x(1, 0).scale(&rat(1, 2)));
    // The display form parses back.
    assert_eq!(parse_poly(&cube.to_string(), 2).unwrap(), cube);
    // Canonical JSON is accepted too.
    assert_eq!(parse_poly(&serde_json::to_string(&cube).unwrap(), 2).unwrap(), cube);
}

#[test]
fn parser_rejects_bad_input() {
    for (src, n) in [
        ("", 1),
        ("x0", 1),
        ("x3", 2),
        ("x1/x1", 1),
        ("1/0", 1),
        ("(1 + x1", 1),
        ("x1^x1", 1),
        ("x1^65", 1),
        ("1 $ 2", 1),
        ("1 +", 1),
        ("{\"nvars\":1,\"terms\":[]}", 2),
    ] {
        assert!(parse_poly(src, n).is_err(), "{src:?}");
    }
}

#[test]
fn verify_operation() {
    let v = parse(&verify_json("(1 + x1/2)^2", 1).unwrap());
    assert_eq!((v["is_solution"].as_bool(), v["sign"].as_str()), (Some(true), Some("+")));
    let v = parse(&verify_json("-(1 - x1/3 - x2/3)^3", 2).unwrap());
    assert_eq!(v["sign"], "-");
    let v = parse(&verify_json("(1 + x1/3 + x2/3)^3 + x1/100", 2).unwrap());
    assert_eq!(v["is_solution"], false);
    assert!(verify_json("1 + x1", 5).is_err());
}

#[test]
fn continuation_operation() {
    let v = parse(&continue_n2_json(1, 1, "3", 3).unwrap());
    assert_eq!(v["consistent"], true);
    let p: MultiPoly = serde_json::from_value(v["poly"]["json"].clone()).unwrap();
    assert_eq!(p, parse_poly("(1 + x1/3 + x2/3)^3", 2).unwrap());
    let v = parse(&continue_n2_json(1, 1, "2", 5).unwrap());
    assert_eq!(v["consistent"], false);
    assert!(continue_n2_json(2, 1, "2", 2).is_err());
    assert!(continue_n2_json(1, 1, "0", 2).is_err());
}

#[test]
fn einstein_operation() {
    let v = parse(&einstein_check_json("(1 + x1/3 + x2/3)^3", 2, "1", 5, 1).unwrap());
    assert!(v["max_residual"].as_f64().unwrap() < 1e-6);
    assert!(v["lambda"].as_f64().unwrap().is_finite());
    assert!(einstein_check_json("1 + x1", 1, "1", 1000, 1).is_err());
    assert!(einstein_check_json("x1", 1, "1", 5, 1).is_err());
}
