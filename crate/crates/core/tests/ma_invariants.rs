//! Monge–Ampère engine invariants.

mod common;

use pke_core::algebra::{rat, ExactScalar, MultiPoly};
use pke_core::catalog::{canonicalize, compositions, product_solution, published_solutions};
use pke_core::ma::{
    axis_profile_check, classify_n1, default_r_grid, exponent_scan, ma_lhs_flat, ma_lhs_log,
    ma_lhs_log_direct, reduce_power, search_n2, taylor_continue_n2, verify_ma_star, CauchyData,
    MAError,
};
use rand::Rng;

#[test]
fn flat_operator_degree_bound() {
    let mut rng = common::rng(21);
    for _ in 0..100 {
        let n = rng.random_range(1..=3usize);
        let d0 = common::random_poly(&mut rng, n, 4, 6);
        let Some(d) = d0.degree().filter(|&d| d > 0) else { continue };
        if let Some(l) = ma_lhs_flat(&d0, n).unwrap().degree() {
            assert!(l as i64 <= (n as i64 + 1) * d as i64 - n as i64);
        }
    }
}

#[test]
fn sign_covariance_under_reflection() {
    let mut rng = common::rng(22);
    let mut polys: Vec<(MultiPoly, usize)> = published_solutions().into_iter().map(|s| (s.p, s.n)).collect();
    for _ in 0..40 {
        let n = rng.random_range(1..=3usize);
        polys.push((MultiPoly::one(n) + common::random_poly(&mut rng, n, 3, 4), n));
    }
    for (p, n) in polys {
        for i in 0..n {
            let mut flip = vec![ExactScalar::from_integer(1.into()); n];
            flip[i] = rat(-1, 1);
            let q = p.scale_vars(&flip).unwrap();
            assert_eq!(verify_ma_star(&p, n).unwrap().is_solution, verify_ma_star(&q, n).unwrap().is_solution);
        }
    }
}

#[test]
fn bordered_and_direct_lhs_agree_on_random_input() {
    let mut rng = common::rng(23);
    for _ in 0..30 {
        let n = rng.random_range(1..=3usize);
        let q = MultiPoly::one(n) + common::random_poly(&mut rng, n, 2, 4);
        assert_eq!(ma_lhs_log(&q, n).unwrap(), ma_lhs_log_direct(&q, n).unwrap());
    }
}

#[test]
fn reduce_then_verify_on_catalog() {
    for n in 1..=3 {
        for partition in compositions(n) {
            let p = product_solution(&partition).unwrap();
            for q in 1..=3u32 {
                let down = vec![rat(1, q.into()); n];
                let big_q = p.scale_vars(&down).unwrap().pow(q);
                let ratio = exponent_scan(&big_q, n).unwrap().expect("scan succeeds");
                assert_eq!(ratio.as_rational(), rat(1, q.into()), "{partition:?}, q={q}");
                let reduced = reduce_power(&big_q, ratio).unwrap();
                assert_eq!(reduced, p);
                assert!(verify_ma_star(&reduced, n).unwrap().is_solution);
            }
        }
    }
}

#[test]
fn axis_checks_on_catalog() {
    let mut checked = 0;
    for s in published_solutions().into_iter().filter(|s| s.n >= 2) {
        for axis in 0..s.n {
            let prof = axis_profile_check(&s.p, s.n, axis).unwrap_or_else(|e| panic!("{} axis {axis}: {e}", s.name));
            assert_eq!(prof.axis, axis);
            checked += 1;
        }
    }
    for partition in compositions(4) {
        let p = product_solution(&partition).unwrap();
        for axis in 0..4 {
            axis_profile_check(&p, 4, axis).unwrap();
        }
    }
    assert!(checked > 0);
}

#[test]
fn axis_check_rejects_non_binomial_restrictions() {
    let x = |i| MultiPoly::var(2, i);
    let p = MultiPoly::one(2) + x(0) + x(0).pow(2) + x(1);
    assert!(matches!(axis_profile_check(&p, 2, 0), Err(MAError::ProfileMismatch(_))));
}

#[test]
fn continuation_is_stable_and_verifies() {
    for r in default_r_grid() {
        for k in [2u32, 3] {
            for (eps, sigma) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
                let cd = CauchyData::family(eps, sigma, r.clone(), k).unwrap();
                let outs: Vec<MultiPoly> =
                    [6, 8, 10].iter().map(|&b| taylor_continue_n2(&cd, b).unwrap().poly).collect();
                assert!(outs.windows(2).all(|w| w[0] == w[1]));
                assert!(verify_ma_star(&outs[0], 2).unwrap().is_solution);
            }
        }
    }
}

#[test]
fn excluded_k_is_inconsistent() {
    for k in [1u32, 4, 5] {
        let cd = CauchyData::family(1, 1, rat(2, 1), k).unwrap();
        assert!(matches!(taylor_continue_n2(&cd, 10), Err(MAError::Inconsistent(_))));
    }
}

#[test]
fn search_outputs_verify_and_are_sorted() {
    let found = search_n2(&default_r_grid(), 8);
    assert!(!found.is_empty());
    assert!(found.windows(2).all(|w| w[0] < w[1]));
    for p in &found {
        assert!(verify_ma_star(p, 2).unwrap().is_solution);
    }
    for p in classify_n1(6, &default_r_grid()) {
        assert!(verify_ma_star(&p, 1).unwrap().is_solution);
    }
    // Canonical forms of the n=2 search collapse to the product solutions.
    let canon: std::collections::BTreeSet<MultiPoly> = found.iter().map(|p| canonicalize(p).unwrap()).collect();
    assert!(canon.contains(&product_solution(&[1, 1]).unwrap()));
    assert!(canon.contains(&product_solution(&[2]).unwrap()));
}
