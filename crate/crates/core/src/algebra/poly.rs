//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{AlgebraError, ExactScalar};

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// `x1`, then `x2`, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. The derived total order (ring size, then term maps compared in
/// graded-lex order) is used only to sort result lists deterministically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, ExactScalar::one())
    }

    pub fn constant(nvars: usize, c: ExactScalar) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, ExactScalar::from_integer(c.into()))
    }

    /// The variable `x_{i+1}` (indices are zero-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), ExactScalar::one())
    }

    pub fn monomial(m: Monomial, c: ExactScalar) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, summing repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Vec<u32>, ExactScalar)>,
    {
        let mut out = MultiPoly::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(AlgebraError::ArityMismatch {
                    expected: nvars,
                    found: exp.len(),
                });
            }
            out.add_term(Monomial(exp), c);
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> ExactScalar {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn constant_term(&self) -> ExactScalar {
        self.terms
            .get(&Monomial::one(self.nvars))
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Lowest total degree among the terms; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &ExactScalar)> {
        self.terms.iter().next_back()
    }

    pub fn lowest_term(&self) -> Option<(&Monomial, &ExactScalar)> {
        self.terms.iter().next()
    }

    /// Whether variable `i` occurs in any term.
    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self += c * m * p`, in place.
    fn add_product_term(&mut self, p: &MultiPoly, m: &Monomial, c: &ExactScalar) {
        for (k, a) in &p.terms {
            self.add_term(k.mul(m), a * c);
        }
    }

    fn check_arity(&self, other: &MultiPoly) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials live in different rings"
        );
    }

    pub fn scale(&self, c: &ExactScalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &ExactScalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to `x_{i+1}`.
    pub fn partial_derivative(&self, i: usize) -> Result<MultiPoly, AlgebraError> {
        if i >= self.nvars {
            return Err(AlgebraError::IndexOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exp = m.0.clone();
            exp[i] -= 1;
            out.terms
                .insert(Monomial(exp), c * ExactScalar::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Panicking shorthand for [`partial_derivative`](Self::partial_derivative)
    /// when the index is known to be valid.
    pub fn d(&self, i: usize) -> MultiPoly {
        self.partial_derivative(i)
            .expect("derivative index within range")
    }

    /// Substitutes `x_i -> factors[i] * x_i`.
    pub fn scale_vars(&self, factors: &[ExactScalar]) -> Result<MultiPoly, AlgebraError> {
        if factors.len() != self.nvars {
            return Err(AlgebraError::ArityMismatch {
                expected: self.nvars,
                found: factors.len(),
            });
        }
        if let Some(i) = factors.iter().position(Zero::is_zero) {
            return Err(AlgebraError::ZeroFactor(i));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let scale = m
                    .0
                    .iter()
                    .zip(factors)
                    .fold(ExactScalar::one(), |acc, (&e, f)| acc * pow_scalar(f, e));
                (m.clone(), c * scale)
            })
            .collect();
        Ok(MultiPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Substitutes `x_i -> images[i]`; the result lives in the ring of the images.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly, AlgebraError> {
        if images.len() != self.nvars {
            return Err(AlgebraError::ArityMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = images.first().map_or(0, MultiPoly::nvars);
        if images.iter().any(|p| p.nvars != target) {
            return Err(AlgebraError::ArityMismatch {
                expected: target,
                found: images.iter().map(MultiPoly::nvars).find(|&n| n != target).unwrap_or(target),
            });
        }
        // Cache powers so repeated exponents are cheap.
        let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e));
                term = &term * &*p;
            }
            out = out + term;
        }
        Ok(out)
    }

    /// Re-embeds into a ring with `nvars` variables, sending `x_i` to `x_{map[i]}`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> MultiPoly {
        assert_eq!(map.len(), self.nvars);
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut exp = vec![0; nvars];
            for (i, &e) in m.0.iter().enumerate() {
                exp[map[i]] += e;
            }
            out.add_term(Monomial(exp), c.clone());
        }
        out
    }

    /// Restriction to the `i`-th coordinate axis, as a univariate polynomial in `t`.
    pub fn restrict_to_axis(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(1);
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().all(|(j, &e)| j == i || e == 0) {
                out.add_term(Monomial(vec![m.0[i]]), c.clone());
            }
        }
        out
    }

    /// Coefficient of `x_i^h`, as a polynomial in the remaining variables
    /// (kept in the same ring, with `x_i` absent).
    pub fn coefficient_in(&self, i: usize, h: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[i] == h {
                let mut exp = m.0.clone();
                exp[i] = 0;
                out.terms.insert(Monomial(exp), c.clone());
            }
        }
        out
    }

    pub fn eval(&self, point: &[ExactScalar]) -> ExactScalar {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * pow_scalar(x, e))
            })
            .fold(ExactScalar::zero(), |a, b| a + b)
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                m.0.iter()
                    .zip(point)
                    .fold(c, |acc, (&e, x)| acc * x.powi(e as i32))
            })
            .sum()
    }

    /// Exact quotient `self / divisor`, failing unless the division has no remainder.
    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        self.check_arity(divisor);
        let (lead_m, lead_c) = divisor.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let lead_m = lead_m.clone();
        let lead_inv = lead_c.recip();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let q_m = m.div(&lead_m).ok_or(AlgebraError::NotDivisible)?;
            let q_c = c * &lead_inv;
            rem.add_product_term(divisor, &q_m, &(-&q_c));
            quot.terms.insert(q_m, q_c);
        }
        Ok(quot)
    }

    /// Drops every term whose degree in `x_var` exceeds `max_deg`.
    pub fn truncate_in(&self, var: usize, max_deg: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[var] <= max_deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `self * other` with terms of degree above `max_deg` in `x_var` never formed.
    pub fn mul_truncated(&self, other: &MultiPoly, var: usize, max_deg: u32) -> MultiPoly {
        self.check_arity(other);
        let mut acc: HashMap<Monomial, ExactScalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.0[var] + mb.0[var] > max_deg {
                    continue;
                }
                let prod = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        MultiPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Returns `(c, p)` with `self = c * p`, where `p` has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn primitive_part(&self) -> (ExactScalar, MultiPoly) {
        use num_integer::Integer;
        if self.is_zero() {
            return (ExactScalar::one(), self.clone());
        }
        let lcm_den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd_num = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
        let mut content = ExactScalar::new(gcd_num, lcm_den);
        if self.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        let p = self.scale(&content.recip());
        (content, p)
    }
}

pub(crate) fn pow_scalar(x: &ExactScalar, e: u32) -> ExactScalar {
    num_traits::pow(x.clone(), e as usize)
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_arity(rhs);
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        // Large products go through the packed integer kernel; tiny ones are
        // cheaper without the lcm scaling.
        if self.len() * rhs.len() > 16 {
            if let Some(p) = super::packed::product_packed(self, rhs) {
                return p;
            }
        }
        product_generic(self, rhs)
    }
}

/// Term-by-term product over rational coefficients.
pub(crate) fn product_generic(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut acc: HashMap<Monomial, ExactScalar> = HashMap::with_capacity(a.len() * b.len());
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let prod = ca * cb;
            acc.entry(ma.mul(mb))
                .and_modify(|c| *c += &prod)
                .or_insert(prod);
        }
    }
    MultiPoly {
        nvars: a.nvars,
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Add<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: &MultiPoly) -> MultiPoly {
        self.check_arity(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
        self
    }
}

impl Sub<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: &MultiPoly) -> MultiPoly {
        self.check_arity(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
        self
    }
}

impl Add<MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        self + &rhs
    }
}

impl Sub<MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self - &rhs
    }
}

impl Add<MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        rhs + self
    }
}

impl Sub<MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self - &rhs
    }
}

impl Mul<MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Mul<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        &self * rhs
    }
}

impl Mul<MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    /// Human-readable form, highest degree last: `1 + x1 + 1/4*x1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    fn one_plus(n: usize, coeffs: &[(usize, ExactScalar)]) -> MultiPoly {
        coeffs
            .iter()
            .fold(MultiPoly::one(n), |acc, (i, c)| acc + x(n, *i).scale(c))
    }

    #[test]
    fn grlex_orders_by_degree_then_lex() {
        let a = Monomial::new(vec![0, 2]);
        let b = Monomial::new(vec![1, 0]);
        let c = Monomial::new(vec![1, 1]);
        assert!(b < a);
        assert!(a < c);
        assert!(Monomial::new(vec![0, 1]) < Monomial::new(vec![1, 0]));
    }

    #[test]
    fn derivative_of_binomial_square() {
        let p = one_plus(1, &[(0, rat(1, 2))]).pow(2);
        assert_eq!(p.d(0), one_plus(1, &[(0, rat(1, 2))]));
    }

    #[test]
    fn derivative_in_absent_variable_is_zero() {
        let p = one_plus(2, &[(0, rat(1, 1))]);
        assert!(p.d(1).is_zero());
    }

    #[test]
    fn derivative_index_checked() {
        let p = MultiPoly::one(2);
        assert!(matches!(
            p.partial_derivative(2),
            Err(AlgebraError::IndexOutOfRange { index: 2, nvars: 2 })
        ));
    }

    #[test]
    fn exact_divide_power_cancellation() {
        let b = one_plus(1, &[(0, rat(1, 2))]);
        let q = b.pow(4).exact_divide(&b.pow(2)).unwrap();
        assert_eq!(q, b.pow(2));
    }

    #[test]
    fn exact_divide_rejects_non_multiple() {
        let a = one_plus(2, &[(0, rat(1, 1)), (1, rat(1, 1))]);
        let b = one_plus(2, &[(0, rat(1, 1))]);
        assert_eq!(a.exact_divide(&b), Err(AlgebraError::NotDivisible));
    }

    #[test]
    fn exact_divide_zero_dividend_and_zero_divisor() {
        let b = one_plus(2, &[(0, rat(1, 1))]);
        assert!(MultiPoly::zero(2).exact_divide(&b).unwrap().is_zero());
        assert_eq!(
            b.exact_divide(&MultiPoly::zero(2)),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn scale_vars_examples() {
        let p = one_plus(1, &[(0, rat(1, 1))]);
        assert_eq!(p.scale_vars(&[rat(1, 1)]).unwrap(), p);

        let half = one_plus(1, &[(0, rat(1, 2))]).pow(2);
        assert_eq!(
            half.scale_vars(&[rat(2, 1)]).unwrap(),
            one_plus(1, &[(0, rat(1, 1))]).pow(2)
        );

        let q = one_plus(2, &[(0, rat(1, 1)), (1, rat(1, 1))]);
        assert_eq!(
            q.scale_vars(&[rat(-1, 1), rat(1, 1)]).unwrap(),
            one_plus(2, &[(0, rat(-1, 1)), (1, rat(1, 1))])
        );
        assert_eq!(
            q.scale_vars(&[rat(0, 1), rat(1, 1)]),
            Err(AlgebraError::ZeroFactor(0))
        );
    }

    #[test]
    fn restriction_and_coefficients() {
        // (1 + x1)(1 + x2 + x2^2)
        let p = one_plus(2, &[(0, rat(1, 1))]) * (one_plus(2, &[(1, rat(1, 1))]) + x(2, 1).pow(2));
        assert_eq!(
            p.restrict_to_axis(1),
            MultiPoly::from_terms(
                1,
                vec![(vec![0], rat(1, 1)), (vec![1], rat(1, 1)), (vec![2], rat(1, 1))]
            )
            .unwrap()
        );
        assert_eq!(p.coefficient_in(1, 2), one_plus(2, &[(0, rat(1, 1))]));
    }

    #[test]
    fn compose_substitutes_variables() {
        // p(x1, x2) = x1 * x2, substituted with (1 + y, y^2)
        let p = x(2, 0) * x(2, 1);
        let images = [one_plus(1, &[(0, rat(1, 1))]), x(1, 0).pow(2)];
        let got = p.compose(&images).unwrap();
        assert_eq!(got, x(1, 0).pow(2) + x(1, 0).pow(3));
    }

    #[test]
    fn display_is_readable() {
        let p = one_plus(1, &[(0, rat(1, 2))]).pow(2);
        assert_eq!(p.to_string(), "1 + x1 + 1/4*x1^2");
        assert_eq!((-p).to_string(), "-1 - x1 - 1/4*x1^2");
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(MultiPoly::zero(2).degree(), None);
        assert_eq!(MultiPoly::one(2).degree(), Some(0));
    }

    #[test]
    fn primitive_part_clears_denominators() {
        let p = one_plus(2, &[(0, rat(1, 2)), (1, rat(-3, 4))]);
        let (c, q) = p.primitive_part();
        assert_eq!(q.scale(&c), p);
        assert!(q.terms().all(|(_, c)| c.is_integer()));
    }
}
