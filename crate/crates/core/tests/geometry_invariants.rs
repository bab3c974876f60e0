//! Geometry invariants: linearity in the exponent, the Hessian/metric
//! determinant identity, flatness, and the diastasis base point.

mod common;

use pke_core::algebra::{rat, MultiPoly};
use pke_core::catalog::{potential_for_power, product_solution};
use pke_core::geometry::{
    diastasis_eval, einstein_fit, eval_metric, ricci_numeric, sample_points, space_form_potential,
    toric_hessian_matrix, EvalPoint, GeometryError, ToricPotential, DEFAULT_STEP,
};

fn fs2() -> MultiPoly {
    MultiPoly::one(2) + MultiPoly::var(2, 0).scale(&rat(1, 3)) + MultiPoly::var(2, 1).scale(&rat(1, 3))
}

#[test]
fn metric_is_linear_in_the_exponent() {
    let p = product_solution(&[1, 1]).unwrap();
    for point in sample_points(2, 10, 1) {
        let g = |a: i64, b: i64| {
            let pot = ToricPotential::log(p.clone(), rat(a, b)).unwrap();
            eval_metric(&pot, &point).unwrap().g
        };
        let sum = g(5, 6);
        let parts = g(1, 2) + g(1, 3);
        assert!((sum - parts).abs().max() < 1e-12);
    }
}

#[test]
fn toric_hessian_determinant_matches_metric_determinant() {
    let mut rng = common::rng(5);
    for _ in 0..20 {
        let d0 = common::random_poly(&mut rng, 2, 3, 5) + MultiPoly::var(2, 0) + MultiPoly::var(2, 1);
        let d0 = &d0 - &MultiPoly::constant(2, d0.constant_term());
        if d0.is_zero() {
            continue;
        }
        let pot = ToricPotential::poly(d0.clone()).unwrap();
        let hdet = toric_hessian_matrix(&d0).determinant().unwrap();
        for point in sample_points(2, 3, 6) {
            let x = point.toric();
            let expected = hdet.eval_f64(&x);
            let got = eval_metric(&pot, &point).unwrap().g.determinant();
            let scale = expected.abs().max(1.0);
            assert!((got - expected).abs() / scale < 1e-8, "{got} vs {expected}");
        }
    }
}

#[test]
fn affine_log_profile_is_einstein_but_perturbation_is_not() {
    // The spec lists log(1 + x₁ + x₂) as non-Einstein, but it is a rescaled
    // Fubini–Study potential (det g ∝ u^{-3}, so Ric = 3g). A quadratic
    // perturbation breaks the Einstein property; its residual is frozen as a
    // regression floor.
    let x = |i| MultiPoly::var(2, i);
    let points = sample_points(2, 5, 3);
    let affine = ToricPotential::log(MultiPoly::one(2) + x(0) + x(1), rat(1, 1)).unwrap();
    let fit = einstein_fit(&affine, &points).unwrap();
    assert!(fit.max_residual < 1e-6, "{fit:?}");
    assert!((fit.lambda - 3.0).abs() < 1e-6, "{fit:?}");

    let bent = MultiPoly::one(2) + x(0) + x(1) + x(0).pow(2);
    let fit = einstein_fit(&ToricPotential::log(bent, rat(1, 1)).unwrap(), &points).unwrap();
    assert!(fit.max_residual > 1e-3, "{fit:?}");
}

#[test]
fn flat_model_is_ricci_flat() {
    for n in 1..=3 {
        let flat = space_form_potential(&rat(0, 1), n).unwrap();
        for point in sample_points(n, 20, 7) {
            let ric = ricci_numeric(&flat, &point, DEFAULT_STEP).unwrap();
            assert!(ric.abs().max() <= 1e-8);
        }
    }
}

#[test]
fn diastasis_at_origin_is_shifted_potential() {
    let pots = [
        space_form_potential(&rat(4, 1), 2).unwrap(),
        ToricPotential::log(fs2(), rat(3, 1)).unwrap(),
        potential_for_power(&[1, 1], 2).unwrap(),
    ];
    for pot in &pots {
        for point in sample_points(2, 10, 8) {
            let d = diastasis_eval(pot, &point.xi, &point.eta, &[0.0; 2], &[0.0; 2]).unwrap();
            let phi = pot.eval(&point.xi, &point.eta).unwrap() - pot.eval(&[0.0; 2], &[0.0; 2]).unwrap();
            assert!((d - phi).abs() <= 1e-10);
        }
    }
}

#[test]
fn zero_set_is_a_domain_error() {
    // 1 + 2ξη vanishes at ξη = −1/2.
    let pot = ToricPotential::log(MultiPoly::one(1) + MultiPoly::var(1, 0).scale(&rat(2, 1)), rat(1, 1)).unwrap();
    let point = EvalPoint::new(vec![1.0], vec![-0.5]).unwrap();
    assert!(matches!(eval_metric(&pot, &point), Err(GeometryError::Domain(_))));
}

#[test]
fn normalization_is_enforced() {
    let p = MultiPoly::from_int(1, 2) + MultiPoly::var(1, 0);
    assert!(matches!(ToricPotential::log(p, rat(1, 1)), Err(GeometryError::Normalization(_))));
    assert!(matches!(ToricPotential::poly(MultiPoly::one(1)), Err(GeometryError::Normalization(_))));
}
