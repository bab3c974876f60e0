use num_traits::{One, Signed};
use serde::Serialize;

use super::{check_dim, MAError};
use crate::algebra::{AlgebraError, ExactScalar, MultiPoly, PolyMatrix};
use crate::geometry::toric_hessian_matrix;

/// Outcome of [`verify_ma_star`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MAResult {
    pub is_solution: bool,
    /// `Some(±1)` exactly when `is_solution`.
    pub sign: Option<i8>,
    /// The computed left-hand side, for audit.
    pub witness: MultiPoly,
}

/// `det[(∂²D₀/∂x_i∂x_j) x_i + (∂D₀/∂x_j) δ_ij]`, the left side of Eq. (lambda1)
/// with `λ = 0`.
pub fn ma_lhs_flat(d0: &MultiPoly, n: usize) -> Result<MultiPoly, MAError> {
    check_dim(d0, n)?;
    Ok(toric_hessian_matrix(d0).determinant_fast()?)
}

/// Theorem 1 classification of a flat potential `D₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlatClass {
    /// `D₀ = Σ k_i x_i` (plus a constant) with `∏ k_i = ±1`; the operator is ≡ ±1.
    Linear { coeffs: Vec<ExactScalar> },
    /// The operator is not identically ±1.
    NotSolution { lhs: MultiPoly },
    /// The operator is ≡ ±1 but `D₀` is not affine with `∏ k_i = ±1`. Theorem 1
    /// says this cannot happen; it is reported rather than asserted.
    Anomalous { lhs: MultiPoly },
}

impl FlatClass {
    pub fn is_solution(&self) -> bool {
        matches!(self, FlatClass::Linear { .. })
    }
}

pub fn classify_flat(d0: &MultiPoly, n: usize) -> Result<FlatClass, MAError> {
    check_dim(d0, n)?;
    if d0.is_constant() {
        // The Hessian matrix vanishes identically.
        return Ok(FlatClass::NotSolution {
            lhs: MultiPoly::zero(n),
        });
    }
    let lhs = ma_lhs_flat(d0, n)?;
    let unit = lhs.is_constant() && lhs.constant_term().abs().is_one();
    if !unit {
        return Ok(FlatClass::NotSolution { lhs });
    }
    let affine = d0.degree() == Some(1);
    let coeffs: Vec<ExactScalar> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            d0.coeff(&e)
        })
        .collect();
    let product = coeffs.iter().fold(ExactScalar::one(), |a, c| a * c);
    if affine && product.abs().is_one() {
        Ok(FlatClass::Linear { coeffs })
    } else {
        Ok(FlatClass::Anomalous { lhs })
    }
}

/// `det[(Q Q_αβ − Q_α Q_β) x_α + Q Q_α δ_αβ] / Q^{n−1}`, the left side of Eq. (MAeq).
///
/// Writing the matrix as `Q·H − u wᵀ` with `H` the toric Hessian matrix of
/// `Q`, `u_α = x_α Q_α` and `w_β = Q_β`, the matrix determinant lemma gives
/// `det / Q^{n−1} = Q det H − wᵀ adj(H) u`, which is the determinant of the
/// bordered matrix `[[H, u], [wᵀ, Q]]`. That form needs no division, so the
/// quotient is always a polynomial; [`ma_lhs_log_direct`] computes the same
/// value literally.
pub fn ma_lhs_log(q: &MultiPoly, n: usize) -> Result<MultiPoly, MAError> {
    check_dim(q, n)?;
    let h = toric_hessian_matrix(q);
    let grad: Vec<MultiPoly> = (0..n).map(|i| q.d(i)).collect();
    let bordered = PolyMatrix::from_fn(n + 1, n + 1, n, |i, j| match (i < n, j < n) {
        (true, true) => h.get(i, j).clone(),
        (true, false) => &grad[i] * &MultiPoly::var(n, i),
        (false, true) => grad[j].clone(),
        (false, false) => q.clone(),
    });
    Ok(bordered.determinant_fast()?)
}

/// Literal form of [`ma_lhs_log`]: assembles the `n×n` matrix, takes its
/// determinant and divides by `Q^{n−1}`.
pub fn ma_lhs_log_direct(q: &MultiPoly, n: usize) -> Result<MultiPoly, MAError> {
    check_dim(q, n)?;
    let grad: Vec<MultiPoly> = (0..n).map(|i| q.d(i)).collect();
    let m = PolyMatrix::from_fn(n, n, n, |a, b| {
        let mut e = (q * &grad[a].d(b) - &grad[a] * &grad[b]) * MultiPoly::var(n, a);
        if a == b {
            e = e + q * &grad[a];
        }
        e
    });
    let det = m.determinant_fast()?;
    if n <= 1 {
        return Ok(det);
    }
    let denom = q.pow(n as u32 - 1);
    if denom.is_zero() {
        return Err(AlgebraError::DivisionByZero.into());
    }
    Ok(det.exact_divide(&denom)?)
}

/// Checks Eq. (MA*): `LHS(P) = ±Pⁿ` exactly.
pub fn verify_ma_star(p: &MultiPoly, n: usize) -> Result<MAResult, MAError> {
    let witness = ma_lhs_log(p, n)?;
    let rhs = p.pow(n as u32);
    let sign = if witness == rhs {
        Some(1)
    } else if witness == -&rhs {
        Some(-1)
    } else {
        None
    };
    // The zero polynomial satisfies both signs trivially; it is not a solution
    // (the normalization P(0) = ±1 excludes it).
    let sign = if p.is_zero() { None } else { sign };
    Ok(MAResult {
        is_solution: sign.is_some(),
        sign,
        witness,
    })
}
