use std::collections::BTreeSet;

use num_traits::Zero;

use super::{verify_ma_star, MAError};
use crate::algebra::{binomial_power, rat, ExactScalar, MultiPoly};
use crate::par::par_filter_map;

/// Highest `x₂`-order computed by the feasibility scan (`P_0 … P_5`).
pub const FEASIBILITY_ORDER: u32 = 5;

/// Largest axis exponent `k` examined by [`search_n2`].
const SEARCH_K_MAX: u32 = 6;

/// Cauchy data on the `x₁` axis for `n = 2`, from the Cauchy-data Lemma:
/// `P(x₁, 0) = ε(1 + x₁/r)^k` and `∂P/∂x₂(x₁, 0) = σ(r/k)(1 + x₁/r)²`.
///
/// The Lemma only allows `k ∈ {2, 3}`; other `k` are accepted here so that
/// their exclusion can be demonstrated by the continuation itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyData {
    pub p0: MultiPoly,
    pub p1: MultiPoly,
    pub epsilon: i8,
    pub sigma: i8,
    pub r: ExactScalar,
    pub k: u32,
}

impl CauchyData {
    pub fn family(epsilon: i8, sigma: i8, r: ExactScalar, k: u32) -> Result<Self, MAError> {
        if epsilon.abs() != 1 || sigma.abs() != 1 {
            return Err(MAError::Precondition("ε and σ must be ±1".into()));
        }
        if r.is_zero() || k == 0 {
            return Err(MAError::Precondition("need r ≠ 0 and k ≥ 1".into()));
        }
        let p0 = binomial_power(1, 0, epsilon, &r, k);
        let scale = ExactScalar::from_integer(sigma.into()) * &r / ExactScalar::from_integer(k.into());
        let p1 = binomial_power(1, 0, 1, &r, 2).scale(&scale);
        Ok(CauchyData {
            p0,
            p1,
            epsilon,
            sigma,
            r,
            k,
        })
    }
}

/// A polynomial solution reconstructed from Cauchy data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Continuation {
    pub poly: MultiPoly,
    /// `P_h(x₁)` (univariate) with `P = Σ P_h(x₁) x₂^h`; trailing zeros dropped.
    pub coefficients: Vec<MultiPoly>,
    /// The sign `±` on the right of Eq. (MA*).
    pub sign: i8,
}

fn inconsistent(msg: impl Into<String>) -> MAError {
    MAError::Inconsistent(msg.into())
}

/// `Σ_{h ≤ len} P_h(x₁) x₂^h` in two variables.
fn assemble(coeffs: &[MultiPoly]) -> MultiPoly {
    let x2 = MultiPoly::var(2, 1);
    coeffs
        .iter()
        .enumerate()
        .fold(MultiPoly::zero(2), |acc, (h, c)| acc + c.embed(2, &[0]) * x2.pow(h as u32))
}

/// `LHS(P)` of Eq. (MA*) for `n = 2`, modulo `x₂^{h+1}`: the bordered
/// determinant of [`ma_lhs_log`](super::ma_lhs_log) expanded by cofactors with
/// every product truncated in `x₂`.
fn lhs_n2_truncated(p: &MultiPoly, h: u32) -> MultiPoly {
    let mul = |a: &MultiPoly, b: &MultiPoly| a.mul_truncated(b, 1, h);
    let x = |i| MultiPoly::var(2, i);
    let (p0, p1) = (p.d(0), p.d(1));
    let h00 = mul(&p0.d(0), &x(0)) + &p0;
    let h01 = mul(&p0.d(1), &x(0));
    let h10 = mul(&p1.d(0), &x(1));
    let h11 = mul(&p1.d(1), &x(1)) + &p1;
    let u0 = mul(&p0, &x(0));
    let u1 = mul(&p1, &x(1));
    let c0 = mul(&h11, p) - mul(&u1, &p1);
    let c1 = mul(&h10, p) - mul(&u1, &p0);
    let c2 = mul(&h10, &p1) - mul(&h11, &p0);
    (mul(&h00, &c0) - mul(&h01, &c1) + mul(&u0, &c2)).truncate_in(1, h)
}

/// Computes `P_0 … P_{max_h}` and the sign of the equation.
///
/// The order-0 part of `F = LHS(P) − s P²` reads `A P_1 − s P_0²` with
/// `A = (P_0 P_0″ − P_0′²) x₁ + P_0 P_0′`, which fixes `s`. At order `h ≥ 1`
/// the unknown `P_{h+1}` enters only through `(h+1)² A P_{h+1}`, so it equals
/// `−T_h / ((h+1)² A)` where `T_h` is the `x₂^h` coefficient of `F` evaluated
/// with `P` truncated after `P_h`. Each division must be exact.
fn series(cd: &CauchyData, max_h: u32) -> Result<(Vec<MultiPoly>, i8), MAError> {
    let (p0, p1) = (&cd.p0, &cd.p1);
    let d1 = p0.d(0);
    let a = (p0 * &d1.d(0) - d1.pow(2)) * MultiPoly::var(1, 0) + p0 * &d1;
    if a.is_zero() {
        return Err(inconsistent("A(x₁) vanishes identically"));
    }
    let lead = &a * p1;
    let p0sq = p0.pow(2);
    let sign: i8 = if lead == p0sq {
        1
    } else if lead == -&p0sq {
        -1
    } else {
        return Err(inconsistent("order 0: A·P₁ is not ±P₀²"));
    };
    let s = ExactScalar::from_integer(sign.into());
    let mut coeffs = vec![p0.clone(), p1.clone()];
    for h in 1..max_h {
        let p = assemble(&coeffs);
        let f = lhs_n2_truncated(&p, h) - p.mul_truncated(&p, 1, h).scale(&s);
        let t_h = f.coefficient_in(1, h).restrict_to_axis(0);
        let divisor = a.scale(&ExactScalar::from_integer(((h + 1) * (h + 1)).into()));
        let next = (-t_h)
            .exact_divide(&divisor)
            .map_err(|_| inconsistent(format!("order {h}: P_{} is not a polynomial", h + 1)))?;
        coeffs.push(next);
    }
    Ok((coeffs, sign))
}

/// Reconstructs the unique solution with the given Cauchy data, or reports
/// `Inconsistent` when the series does not terminate by `degree_bound`.
pub fn taylor_continue_n2(cd: &CauchyData, degree_bound: u32) -> Result<Continuation, MAError> {
    if degree_bound < cd.k {
        return Err(MAError::Precondition(format!(
            "degree bound {degree_bound} is below k = {}",
            cd.k
        )));
    }
    let (mut coeffs, sign) = series(cd, degree_bound + 1)?;
    if !coeffs.last().is_some_and(MultiPoly::is_zero) {
        return Err(inconsistent(format!(
            "series does not terminate by x₂^{degree_bound}"
        )));
    }
    while coeffs.last().is_some_and(MultiPoly::is_zero) {
        coeffs.pop();
    }
    let poly = assemble(&coeffs);
    let check = verify_ma_star(&poly, 2)?;
    if check.sign != Some(sign) {
        return Err(inconsistent("truncated series fails exact verification"));
    }
    Ok(Continuation {
        poly,
        coefficients: coeffs,
        sign,
    })
}

/// Whether Cauchy data of exponent `k` admits a consistent low-order
/// continuation: the series to order [`FEASIBILITY_ORDER`] must exist and its
/// restriction to the `x₂` axis must agree (to that order) with the binomial
/// profile `ε(1 + t/r₂)^k` the axis Lemma demands, `r₂ = εk / P_1(0)`.
fn feasible(cd: &CauchyData) -> bool {
    let Ok((coeffs, _)) = series(cd, FEASIBILITY_ORDER) else {
        return false;
    };
    let at0: Vec<ExactScalar> = coeffs.iter().map(MultiPoly::constant_term).collect();
    let r2 = ExactScalar::from_integer((i64::from(cd.epsilon) * i64::from(cd.k)).into()) / &at0[1];
    let profile = binomial_power(1, 0, cd.epsilon, &r2, cd.k);
    at0.iter()
        .enumerate()
        .all(|(h, c)| *c == profile.coeff(&[h as u32]))
}

fn sign_pairs() -> [(i8, i8); 4] {
    [(1, 1), (1, -1), (-1, 1), (-1, -1)]
}

/// The set of axis exponents `k ≤ k_max` for which some `(ε, σ, r)` with `r`
/// in the grid admits a consistent continuation. The paper's exclusion gives
/// `{2, 3}`, the integer roots of `k² − 5k + 6`.
pub fn feasible_k_scan_n2(k_max: u32, r_grid: &[ExactScalar]) -> BTreeSet<u32> {
    let jobs: Vec<(u32, ExactScalar, i8, i8)> = (1..=k_max)
        .flat_map(|k| {
            r_grid.iter().filter(|r| !r.is_zero()).flat_map(move |r| {
                sign_pairs().into_iter().map(move |(e, s)| (k, r.clone(), e, s))
            })
        })
        .collect();
    par_filter_map(jobs, |(k, r, e, s)| {
        let cd = CauchyData::family(e, s, r, k).ok()?;
        feasible(&cd).then_some(k)
    })
    .into_iter()
    .collect()
}

/// §4.2.1: all `ε(1 + x/r)^k` with `k ≤ k_max`, `r` in the grid, that solve
/// Eq. (MA*) for `n = 1`; sorted and without duplicates.
pub fn classify_n1(k_max: u32, r_grid: &[ExactScalar]) -> Vec<MultiPoly> {
    let jobs: Vec<(u32, ExactScalar, i8)> = (1..=k_max)
        .flat_map(|k| {
            r_grid
                .iter()
                .filter(|r| !r.is_zero())
                .flat_map(move |r| [1i8, -1].into_iter().map(move |e| (k, r.clone(), e)))
        })
        .collect();
    let mut found = par_filter_map(jobs, |(k, r, e)| {
        let p = binomial_power(1, 0, e, &r, k);
        verify_ma_star(&p, 1).ok()?.is_solution.then_some(p)
    });
    found.sort();
    found.dedup();
    found
}

/// Prop. (newmain): feasibility scan, continuation from every feasible Cauchy
/// datum on the grid, exact re-verification. All sign variants are kept;
/// canonical representatives are the catalog's business.
pub fn search_n2(r_grid: &[ExactScalar], degree_bound: u32) -> Vec<MultiPoly> {
    let ks = feasible_k_scan_n2(SEARCH_K_MAX, r_grid);
    let jobs: Vec<(u32, ExactScalar, i8, i8)> = ks
        .iter()
        .flat_map(|&k| {
            r_grid.iter().filter(|r| !r.is_zero()).flat_map(move |r| {
                sign_pairs().into_iter().map(move |(e, s)| (k, r.clone(), e, s))
            })
        })
        .collect();
    let mut found = par_filter_map(jobs, |(k, r, e, s)| {
        let cd = CauchyData::family(e, s, r, k).ok()?;
        let sol = taylor_continue_n2(&cd, degree_bound.max(k)).ok()?;
        verify_ma_star(&sol.poly, 2).ok()?.is_solution.then_some(sol.poly)
    });
    found.sort();
    found.dedup();
    found
}

/// The scan grid `{±1, ±2, ±3}` used by the paper-facing examples.
pub fn default_r_grid() -> Vec<ExactScalar> {
    [1, -1, 2, -2, 3, -3].iter().map(|&v| rat(v, 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(2, i)
    }

    fn t() -> MultiPoly {
        MultiPoly::var(1, 0)
    }

    #[test]
    fn truncated_lhs_matches_full() {
        let p = MultiPoly::one(2) + x(0) + x(1).pow(3) + x(0) * x(1).scale(&rat(2, 3));
        let full = crate::ma::ma_lhs_log(&p, 2).unwrap();
        for h in 0..4 {
            assert_eq!(lhs_n2_truncated(&p, h), full.truncate_in(1, h));
        }
    }

    #[test]
    fn continues_solution_one() {
        let cd = CauchyData::family(1, 1, rat(3, 1), 3).unwrap();
        let sol = taylor_continue_n2(&cd, 6).unwrap();
        let expected = (MultiPoly::one(2) + x(0).scale(&rat(1, 3)) + x(1).scale(&rat(1, 3))).pow(3);
        assert_eq!(sol.poly, expected);
        assert_eq!(
            sol.coefficients[2],
            (MultiPoly::one(1) + t().scale(&rat(1, 3))).scale(&rat(1, 3))
        );
        assert_eq!(sol.coefficients[3], MultiPoly::constant(1, rat(1, 27)));
        assert_eq!(sol.coefficients.len(), 4);
    }

    #[test]
    fn continues_solution_two() {
        let cd = CauchyData::family(1, 1, rat(2, 1), 2).unwrap();
        let sol = taylor_continue_n2(&cd, 6).unwrap();
        let f = |i| (MultiPoly::one(2) + x(i).scale(&rat(1, 2))).pow(2);
        assert_eq!(sol.poly, f(0) * f(1));
    }

    #[test]
    fn k_one_is_inconsistent() {
        let cd = CauchyData::family(1, 1, rat(2, 1), 1).unwrap();
        assert!(matches!(
            taylor_continue_n2(&cd, 6),
            Err(MAError::Inconsistent(_))
        ));
    }

    #[test]
    fn feasibility_scan() {
        let grid = default_r_grid();
        assert_eq!(
            feasible_k_scan_n2(6, &grid),
            BTreeSet::from([2, 3])
        );
        assert!(feasible_k_scan_n2(1, &grid).is_empty());
        assert!(!feasible(&CauchyData::family(1, 1, rat(2, 1), 4).unwrap()));
    }

    #[test]
    fn n1_classification() {
        let grid: Vec<ExactScalar> = [(1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1), (-3, 1), (1, 2), (-1, 2)]
            .iter()
            .map(|&(a, b)| rat(a, b))
            .collect();
        let sols = classify_n1(6, &grid);
        assert_eq!(sols.len(), 4);
        for s in &sols {
            assert_eq!(s.degree(), Some(2));
        }
        let no_two: Vec<ExactScalar> = [1, -1, 3, -3].iter().map(|&v| rat(v, 1)).collect();
        assert!(classify_n1(6, &no_two).is_empty());
    }

    #[test]
    fn empty_grid_finds_nothing() {
        assert!(search_n2(&[], 6).is_empty());
    }
}
