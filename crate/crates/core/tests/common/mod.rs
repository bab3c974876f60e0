//! Shared oracles and random generators for the integration tests.
#![allow(dead_code)]

use pke_core::algebra::{rat, ExactScalar, MultiPoly, PolyMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small random rational `a/b` with `|a| ≤ num`, `1 ≤ b ≤ den`.
pub fn small_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> ExactScalar {
    rat(rng.random_range(-num..=num), rng.random_range(1..=den))
}

/// A random polynomial of total degree ≤ `deg` with at most `terms` terms.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, deg: u32, terms: usize) -> MultiPoly {
    let raw: Vec<(Vec<u32>, ExactScalar)> = (0..terms)
        .map(|_| {
            let mut exp = vec![0u32; nvars];
            let mut budget = rng.random_range(0..=deg);
            while budget > 0 && nvars > 0 {
                exp[rng.random_range(0..nvars)] += 1;
                budget -= 1;
            }
            (exp, small_rat(rng, 5, 4))
        })
        .collect();
    MultiPoly::from_terms(nvars, raw).expect("arity matches")
}

/// Determinant by cofactor expansion along the first row (the oracle).
pub fn cofactor_det(m: &PolyMatrix) -> MultiPoly {
    let n = m.rows();
    if n == 0 {
        return MultiPoly::one(m.nvars());
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = MultiPoly::zero(m.nvars());
    for j in 0..n {
        let minor = PolyMatrix::from_fn(n - 1, n - 1, m.nvars(), |r, c| {
            m.get(r + 1, if c < j { c } else { c + 1 }).clone()
        });
        let term = m.get(0, j) * &cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Product by expanding `a` term by term against all of `b`: an oracle for
/// the packed multiplication kernel.
pub fn naive_product(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut acc = MultiPoly::zero(a.nvars());
    for (m, c) in a.terms() {
        acc = acc + b.mul_monomial(m, c);
    }
    acc
}

/// Proptest strategy: polynomials in `nvars` variables, total degree ≤ `deg`.
pub fn poly_strategy(nvars: usize, deg: u32, max_terms: usize) -> impl proptest::strategy::Strategy<Value = MultiPoly> {
    use proptest::prelude::*;
    let term = (proptest::collection::vec(0..=deg, nvars), -6i64..=6, 1i64..=4);
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let terms = terms.into_iter().map(|(mut exp, a, b)| {
            // Clamp to the total-degree budget from the left.
            let mut budget = deg;
            for e in exp.iter_mut() {
                *e = (*e).min(budget);
                budget -= *e;
            }
            (exp, rat(a, b))
        });
        MultiPoly::from_terms(nvars, terms).expect("arity matches")
    })
}
