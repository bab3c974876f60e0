use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::GeometryError;
use crate::algebra::{rat, ExactScalar, MultiPoly, PolyMatrix};

/// Values of `|P|` below this are treated as lying on the zero set of `P`.
pub const ZERO_SET_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PotentialKind {
    /// `Φ = k·P(x)`, target a flat space form.
    Poly,
    /// `Φ = k·log|P(x)|`, target a non-flat space form.
    Log,
}

/// A toric potential `Φ(ξ, η) = f(ξ_1η_1, …, ξ_nη_n)` with polynomial or
/// log-polynomial profile `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricPotential {
    kind: PotentialKind,
    p: MultiPoly,
    k: ExactScalar,
}

impl ToricPotential {
    /// `Φ = P(x)`; `P` must vanish at the origin.
    pub fn poly(p: MultiPoly) -> Result<Self, GeometryError> {
        if !p.constant_term().is_zero() {
            return Err(GeometryError::Normalization(
                "polynomial potential must vanish at the origin".into(),
            ));
        }
        Ok(ToricPotential {
            kind: PotentialKind::Poly,
            p,
            k: ExactScalar::one(),
        })
    }

    /// `Φ = k·log P(x)`; `P(0)` must be ±1 and `k` nonzero.
    pub fn log(p: MultiPoly, k: ExactScalar) -> Result<Self, GeometryError> {
        if !p.constant_term().abs().is_one() {
            return Err(GeometryError::Normalization(format!(
                "log potential needs P(0) = ±1, got {}",
                p.constant_term()
            )));
        }
        if k.is_zero() {
            return Err(GeometryError::Normalization("log exponent k is zero".into()));
        }
        Ok(ToricPotential {
            kind: PotentialKind::Log,
            p,
            k,
        })
    }

    pub fn kind(&self) -> PotentialKind {
        self.kind
    }

    pub fn polynomial(&self) -> &MultiPoly {
        &self.p
    }

    pub fn exponent(&self) -> &ExactScalar {
        &self.k
    }

    pub fn nvars(&self) -> usize {
        self.p.nvars()
    }

    /// The profile `f(x)` evaluated at `x = ξ∘η`.
    pub fn eval_profile(&self, x: &[f64]) -> Result<f64, GeometryError> {
        let k = self.k.to_f64().unwrap_or(f64::NAN);
        let value = self.p.eval_f64(x);
        match self.kind {
            PotentialKind::Poly => Ok(k * value),
            PotentialKind::Log => {
                if value.abs() < ZERO_SET_TOL {
                    return Err(GeometryError::Domain(format!(
                        "P vanishes at x = {x:?}"
                    )));
                }
                Ok(k * value.abs().ln())
            }
        }
    }

    /// `Φ(ξ, η)`.
    pub fn eval(&self, xi: &[f64], eta: &[f64]) -> Result<f64, GeometryError> {
        let x: Vec<f64> = xi.iter().zip(eta).map(|(a, b)| a * b).collect();
        self.eval_profile(&x)
    }
}

/// Potential of the `N`-dimensional space form of para-holomorphic sectional
/// curvature `c`: `4 Σ ξ_i η_i` when `c = 0`, else `(8/c) log(1 + 2 Σ ξ_i η_i)`.
pub fn space_form_potential(c: &ExactScalar, dim: usize) -> Result<ToricPotential, GeometryError> {
    if dim == 0 {
        return Err(GeometryError::Dimension("space form dimension must be positive".into()));
    }
    let sum = (0..dim).fold(MultiPoly::zero(dim), |acc, i| acc + MultiPoly::var(dim, i));
    if c.is_zero() {
        ToricPotential::poly(sum.scale(&rat(4, 1)))
    } else {
        let p = MultiPoly::one(dim) + sum.scale(&rat(2, 1));
        ToricPotential::log(p, rat(8, 1) / c)
    }
}

/// The `n×n` matrix `(∂²D/∂x_i∂x_j) x_i + (∂D/∂x_j) δ_ij` whose determinant is
/// the toric Monge-Ampère operator of `D`.
pub fn toric_hessian_matrix(d0: &MultiPoly) -> PolyMatrix {
    let n = d0.nvars();
    let grad: Vec<MultiPoly> = (0..n).map(|j| d0.d(j)).collect();
    PolyMatrix::from_fn(n, n, n, |i, j| {
        let mut entry = grad[i].d(j) * MultiPoly::var(n, i);
        if i == j {
            entry = entry + &grad[j];
        }
        entry
    })
}

#[derive(Serialize, Deserialize)]
struct PotentialJson {
    kind: PotentialKind,
    #[serde(rename = "P")]
    p: MultiPoly,
    k_num: String,
    k_den: String,
}

impl Serialize for ToricPotential {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PotentialJson {
            kind: self.kind,
            p: self.p.clone(),
            k_num: self.k.numer().to_string(),
            k_den: self.k.denom().to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ToricPotential {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PotentialJson::deserialize(deserializer)?;
        let num: BigInt = raw.k_num.trim().parse().map_err(D::Error::custom)?;
        let den: BigInt = raw.k_den.trim().parse().map_err(D::Error::custom)?;
        if !den.is_positive() {
            return Err(D::Error::custom("k_den must be positive"));
        }
        let k = ExactScalar::new(num, den);
        match raw.kind {
            PotentialKind::Poly => {
                let mut pot = ToricPotential::poly(raw.p).map_err(D::Error::custom)?;
                if k.is_zero() {
                    return Err(D::Error::custom("k must be nonzero"));
                }
                pot.k = k;
                Ok(pot)
            }
            PotentialKind::Log => ToricPotential::log(raw.p, k).map_err(D::Error::custom),
        }
    }
}

impl ToricPotential {
    /// Polynomial potential `k·P`.
    pub fn scaled_poly(p: MultiPoly, k: ExactScalar) -> Result<Self, GeometryError> {
        if k.is_zero() {
            return Err(GeometryError::Normalization("scale k is zero".into()));
        }
        let mut pot = ToricPotential::poly(p)?;
        pot.k = k;
        Ok(pot)
    }
}
