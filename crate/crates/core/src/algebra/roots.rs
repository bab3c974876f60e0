//! Exact roots of polynomials and binomial-power recognition.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, ExactScalar, Monomial, MultiPoly};

/// Rational `q`-th root of `c`, when one exists.
///
/// For even `q` the positive root is returned.
pub fn rational_root(c: &ExactScalar, q: u32) -> Option<ExactScalar> {
    if q == 0 {
        return None;
    }
    if c.is_zero() {
        return Some(ExactScalar::zero());
    }
    if c.is_negative() && q.is_multiple_of(2) {
        return None;
    }
    let int_root = |v: &BigInt| -> Option<BigInt> {
        let r = v.abs().nth_root(q);
        (num_traits::pow(r.clone(), q as usize) == v.abs()).then_some(r)
    };
    let n = int_root(c.numer())?;
    let d = int_root(c.denom())?;
    let root = ExactScalar::new(n, d);
    Some(if c.is_negative() { -root } else { root })
}

impl MultiPoly {
    /// Returns `R` with `R^q = self`, if such a polynomial with rational
    /// coefficients exists.
    ///
    /// The root is built term by term from the lowest graded-lex term upward:
    /// if `R = t_1 + t_2 + ...` in ascending order, the lowest term of
    /// `self - (t_1 + ... + t_j)^q` is `q t_1^{q-1} t_{j+1}`. For even `q` the
    /// lowest term of `R` gets a positive coefficient.
    pub fn nth_root(&self, q: u32) -> Result<MultiPoly, AlgebraError> {
        if q == 0 {
            return Err(AlgebraError::NoExactRoot(q));
        }
        if q == 1 || self.is_zero() {
            return Ok(self.clone());
        }
        let fail = || AlgebraError::NoExactRoot(q);
        let top = self.degree().unwrap_or(0);
        if !top.is_multiple_of(q) {
            return Err(fail());
        }
        let max_deg = top / q;

        let (m0, c0) = self.lowest_term().expect("nonzero");
        if m0.exponents().iter().any(|e| e % q != 0) {
            return Err(fail());
        }
        let base_m = Monomial::new(m0.exponents().iter().map(|e| e / q).collect());
        let base_c = rational_root(c0, q).ok_or_else(fail)?;
        // Linear coefficient of the next term: q * t_1^{q-1}.
        let lin_m = Monomial::new(base_m.exponents().iter().map(|e| e * (q - 1)).collect());
        let lin_c = ExactScalar::from_integer(q.into()) * super::poly::pow_scalar(&base_c, q - 1);

        let mut root = MultiPoly::monomial(base_m.clone(), base_c);
        let mut last = base_m;
        loop {
            let residual = self - &root.pow(q);
            let Some((m, c)) = residual.lowest_term() else {
                return Ok(root);
            };
            let next_m = m.div(&lin_m).ok_or_else(fail)?;
            if next_m <= last || next_m.degree() > max_deg {
                return Err(fail());
            }
            let next_c = c / &lin_c;
            root = root + MultiPoly::monomial(next_m.clone(), next_c);
            last = next_m;
        }
    }
}

/// `(ε, r, k)` with `p(t) = ε (1 + t/r)^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialProfile {
    pub epsilon: i8,
    pub r: ExactScalar,
    pub k: u32,
}

/// `ε (1 + x_var / r)^k` in a ring with `nvars` variables.
pub fn binomial_power(nvars: usize, var: usize, epsilon: i8, r: &ExactScalar, k: u32) -> MultiPoly {
    let base = MultiPoly::one(nvars) + MultiPoly::var(nvars, var).scale(&r.recip());
    let p = base.pow(k);
    if epsilon < 0 {
        -p
    } else {
        p
    }
}

/// Recognises a univariate polynomial of the form `ε (1 + t/r)^k`.
///
/// The constant term fixes `ε`, the degree fixes `k` and the linear
/// coefficient `εk/r` fixes `r`, which is therefore rational whenever the
/// form holds. The candidate is then confirmed by exact expansion; anything
/// else (several distinct roots, irrational or split-complex roots) is
/// reported as [`AlgebraError::NotBinomialPower`].
pub fn binomial_profile(p: &MultiPoly) -> Result<BinomialProfile, AlgebraError> {
    if p.nvars() != 1 {
        return Err(AlgebraError::NotUnivariate(p.nvars()));
    }
    let c0 = p.constant_term();
    let epsilon: i8 = if c0.is_one() {
        1
    } else if (-&c0).is_one() {
        -1
    } else {
        return Err(AlgebraError::NotBinomialPower);
    };
    let k = match p.degree() {
        Some(k) if k >= 1 => k,
        _ => return Err(AlgebraError::NotBinomialPower),
    };
    let a1 = p.coeff(&[1]);
    if a1.is_zero() {
        return Err(AlgebraError::NotBinomialPower);
    }
    let r = ExactScalar::from_integer((i64::from(epsilon) * i64::from(k)).into()) / a1;
    if binomial_power(1, 0, epsilon, &r, k) != *p {
        return Err(AlgebraError::NotBinomialPower);
    }
    Ok(BinomialProfile { epsilon, r, k })
}
