//! Split-complex (para-complex) numbers and para-holomorphic polynomial maps.
//!
//! A para-complex number is `x + τy` with `τ² = 1`. In the null basis
//! `e = (1 - τ)/2`, `ē = (1 + τ)/2` it reads `u e + v ē` with `u = x - y` and
//! `v = x + y`; the basis elements are orthogonal idempotents, so products and
//! compositions act componentwise on `(u, v)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{rat, AlgebraError, ExactScalar, MultiPoly};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParaComplex {
    pub re: ExactScalar,
    pub im: ExactScalar,
}

impl ParaComplex {
    pub fn new(re: ExactScalar, im: ExactScalar) -> Self {
        ParaComplex { re, im }
    }

    pub fn real(re: ExactScalar) -> Self {
        ParaComplex::new(re, ExactScalar::zero())
    }

    pub fn one() -> Self {
        Self::real(ExactScalar::one())
    }

    pub fn tau() -> Self {
        ParaComplex::new(ExactScalar::zero(), ExactScalar::one())
    }

    /// `e = (1 - τ)/2`.
    pub fn e() -> Self {
        ParaComplex::new(rat(1, 2), rat(-1, 2))
    }

    /// `ē = (1 + τ)/2`.
    pub fn e_bar() -> Self {
        ParaComplex::new(rat(1, 2), rat(1, 2))
    }

    /// Null coordinates `(u, v)` with `z = u e + v ē`.
    pub fn to_null(&self) -> (ExactScalar, ExactScalar) {
        (&self.re - &self.im, &self.re + &self.im)
    }

    pub fn from_null(u: ExactScalar, v: ExactScalar) -> Self {
        let half = rat(1, 2);
        ParaComplex::new((&u + &v) * &half, (v - u) * half)
    }

    pub fn conj(&self) -> Self {
        ParaComplex::new(self.re.clone(), -&self.im)
    }

    /// `|z|² = z z̄ = x² - y²`; may be zero or negative.
    pub fn modulus_sq(&self) -> ExactScalar {
        &self.re * &self.re - &self.im * &self.im
    }
}

impl Add for &ParaComplex {
    type Output = ParaComplex;
    fn add(self, rhs: &ParaComplex) -> ParaComplex {
        ParaComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ParaComplex {
    type Output = ParaComplex;
    fn sub(self, rhs: &ParaComplex) -> ParaComplex {
        ParaComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ParaComplex {
    type Output = ParaComplex;
    fn mul(self, rhs: &ParaComplex) -> ParaComplex {
        ParaComplex::new(
            &self.re * &rhs.re + &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &ParaComplex {
    type Output = ParaComplex;
    fn neg(self) -> ParaComplex {
        ParaComplex::new(-&self.re, -&self.im)
    }
}

impl Add for ParaComplex {
    type Output = ParaComplex;
    fn add(self, rhs: ParaComplex) -> ParaComplex {
        &self + &rhs
    }
}

impl Sub for ParaComplex {
    type Output = ParaComplex;
    fn sub(self, rhs: ParaComplex) -> ParaComplex {
        &self - &rhs
    }
}

impl Mul for ParaComplex {
    type Output = ParaComplex;
    fn mul(self, rhs: ParaComplex) -> ParaComplex {
        &self * &rhs
    }
}

impl Neg for ParaComplex {
    type Output = ParaComplex;
    fn neg(self) -> ParaComplex {
        -&self
    }
}

/// Product in the null view: componentwise.
pub fn pc_mul(a: &ParaComplex, b: &ParaComplex) -> ParaComplex {
    a * b
}

pub fn modulus_sq(z: &ParaComplex) -> ExactScalar {
    z.modulus_sq()
}

impl fmt::Display for ParaComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}τ", self.re, self.im)
    }
}

/// A polynomial map `F: Dⁿ → D` written in null coordinates,
/// `F = u(ξ, η) e + v(ξ, η) ē`.
///
/// Both parts are polynomials in `2n` variables ordered `ξ_1..ξ_n, η_1..η_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParaMap {
    nvars: usize,
    e_part: MultiPoly,
    ebar_part: MultiPoly,
}

impl ParaMap {
    pub fn new(nvars: usize, e_part: MultiPoly, ebar_part: MultiPoly) -> Result<Self, AlgebraError> {
        for p in [&e_part, &ebar_part] {
            if p.nvars() != 2 * nvars {
                return Err(AlgebraError::ArityMismatch {
                    expected: 2 * nvars,
                    found: p.nvars(),
                });
            }
        }
        Ok(ParaMap {
            nvars,
            e_part,
            ebar_part,
        })
    }

    /// The coordinate function `z_i`, i.e. `ξ_i e + η_i ē`.
    pub fn coordinate(nvars: usize, i: usize) -> Self {
        ParaMap {
            nvars,
            e_part: MultiPoly::var(2 * nvars, i),
            ebar_part: MultiPoly::var(2 * nvars, nvars + i),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn e_part(&self) -> &MultiPoly {
        &self.e_part
    }

    pub fn ebar_part(&self) -> &MultiPoly {
        &self.ebar_part
    }

    /// Split Cauchy–Riemann test: the `e` part must not involve any `η` and the
    /// `ē` part must not involve any `ξ`.
    pub fn is_paraholomorphic(&self) -> bool {
        let n = self.nvars;
        (0..n).all(|i| !self.e_part.uses_var(n + i) && !self.ebar_part.uses_var(i))
    }

    /// `self ∘ inner`, where `inner` lists the `n` components of a map
    /// `Dᵐ → Dⁿ`. In null coordinates the composite substitutes the inner
    /// `e` parts for the `ξ` variables and the inner `ē` parts for the `η`.
    pub fn compose(&self, inner: &[ParaMap]) -> Result<ParaMap, AlgebraError> {
        if inner.len() != self.nvars {
            return Err(AlgebraError::ArityMismatch {
                expected: self.nvars,
                found: inner.len(),
            });
        }
        let m = inner.first().map_or(0, ParaMap::nvars);
        if let Some(bad) = inner.iter().find(|g| g.nvars != m) {
            return Err(AlgebraError::ArityMismatch {
                expected: m,
                found: bad.nvars,
            });
        }
        let images: Vec<MultiPoly> = inner
            .iter()
            .map(|g| g.e_part.clone())
            .chain(inner.iter().map(|g| g.ebar_part.clone()))
            .collect();
        Ok(ParaMap {
            nvars: m,
            e_part: self.e_part.compose(&images)?,
            ebar_part: self.ebar_part.compose(&images)?,
        })
    }

    /// Evaluates at null coordinates `(ξ, η)`, returning the para-complex value.
    pub fn eval(&self, xi: &[ExactScalar], eta: &[ExactScalar]) -> ParaComplex {
        let point: Vec<ExactScalar> = xi.iter().chain(eta).cloned().collect();
        ParaComplex::from_null(self.e_part.eval(&point), self.ebar_part.eval(&point))
    }
}

/// The para-holomorphic sign change `(ξ_i, η_i) -> (s_i^ξ ξ_i, s_i^η η_i)`,
/// returned as its `n` coordinate components.
pub fn sign_map(nvars: usize, xi_signs: &[i8], eta_signs: &[i8]) -> Vec<ParaMap> {
    (0..nvars)
        .map(|i| {
            let s = |v: i8| ExactScalar::from_integer(i64::from(v).into());
            ParaMap {
                nvars,
                e_part: MultiPoly::var(2 * nvars, i).scale(&s(xi_signs[i])),
                ebar_part: MultiPoly::var(2 * nvars, nvars + i).scale(&s(eta_signs[i])),
            }
        })
        .collect()
}
