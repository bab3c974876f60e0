use num_traits::{One, Signed, ToPrimitive, Zero};

use super::potential::{PotentialKind, ToricPotential};
use super::GeometryError;
use crate::algebra::{ExactScalar, MultiPoly};

/// A potential in null coordinates, `Φ(ξ, η) = A(ξ, η) + k·log|B(ξ, η)|`,
/// with `A`, `B` polynomials in the `2n` variables `ξ_1..ξ_n, η_1..η_n`.
///
/// Unlike [`ToricPotential`] this admits non-toric gauge terms `f(ξ) + g(η)`,
/// which is what the diastasis is insensitive to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullPotential {
    n: usize,
    poly: MultiPoly,
    log: Option<(ExactScalar, MultiPoly)>,
}

/// Exact value of the diastasis,
/// `poly_part + log_coeff · log|log_ratio|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diastasis {
    pub poly_part: ExactScalar,
    pub log_coeff: ExactScalar,
    pub log_ratio: ExactScalar,
}

impl Diastasis {
    /// True when the value is exactly zero, i.e. the polynomial part vanishes
    /// and the log part is absent or has ratio of modulus one.
    pub fn is_zero(&self) -> bool {
        self.poly_part.is_zero() && (self.log_coeff.is_zero() || self.log_ratio.abs().is_one())
    }

    /// Exact equality of the real numbers represented (log ratios compared in
    /// absolute value, matching `log|·|`).
    pub fn same_value(&self, other: &Diastasis) -> bool {
        let norm = |d: &Diastasis| {
            if d.log_coeff.is_zero() || d.log_ratio.abs().is_one() {
                (ExactScalar::zero(), ExactScalar::one())
            } else {
                (d.log_coeff.clone(), d.log_ratio.abs())
            }
        };
        self.poly_part == other.poly_part && norm(self) == norm(other)
    }

    pub fn to_f64(&self) -> f64 {
        let poly = self.poly_part.to_f64().unwrap_or(f64::NAN);
        if self.log_coeff.is_zero() {
            return poly;
        }
        let ratio = self.log_ratio.abs().to_f64().unwrap_or(f64::NAN);
        poly + self.log_coeff.to_f64().unwrap_or(f64::NAN) * ratio.ln()
    }
}

impl NullPotential {
    /// Lifts `Φ = f(x)` by substituting `x_i = ξ_i η_i`.
    pub fn from_toric(potential: &ToricPotential) -> Result<Self, GeometryError> {
        let n = potential.nvars();
        let images: Vec<MultiPoly> = (0..n)
            .map(|i| MultiPoly::var(2 * n, i) * MultiPoly::var(2 * n, n + i))
            .collect();
        let lifted = potential.polynomial().compose(&images)?;
        Ok(match potential.kind() {
            PotentialKind::Poly => NullPotential {
                n,
                poly: lifted.scale(potential.exponent()),
                log: None,
            },
            PotentialKind::Log => NullPotential {
                n,
                poly: MultiPoly::zero(2 * n),
                log: Some((potential.exponent().clone(), lifted)),
            },
        })
    }

    /// A purely polynomial potential in `2n` variables.
    pub fn from_poly(n: usize, poly: MultiPoly) -> Result<Self, GeometryError> {
        if poly.nvars() != 2 * n {
            return Err(GeometryError::Dimension(format!(
                "expected {} null variables, found {}",
                2 * n,
                poly.nvars()
            )));
        }
        Ok(NullPotential { n, poly, log: None })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn poly_part(&self) -> &MultiPoly {
        &self.poly
    }

    /// `Φ + f(ξ) + g(η)` with `f`, `g` polynomials in `n` variables.
    pub fn add_separable(&self, f_xi: &MultiPoly, g_eta: &MultiPoly) -> Result<Self, GeometryError> {
        let n = self.n;
        for p in [f_xi, g_eta] {
            if p.nvars() != n {
                return Err(GeometryError::Dimension(format!(
                    "separable term must have {n} variables, found {}",
                    p.nvars()
                )));
            }
        }
        let xi_map: Vec<usize> = (0..n).collect();
        let eta_map: Vec<usize> = (n..2 * n).collect();
        Ok(NullPotential {
            n,
            poly: &self.poly + &f_xi.embed(2 * n, &xi_map) + g_eta.embed(2 * n, &eta_map),
            log: self.log.clone(),
        })
    }

    fn point<T: Clone>(&self, xi: &[T], eta: &[T]) -> Result<Vec<T>, GeometryError> {
        if xi.len() != self.n || eta.len() != self.n {
            return Err(GeometryError::Dimension(format!(
                "potential has {} variables, point has ({}, {})",
                self.n,
                xi.len(),
                eta.len()
            )));
        }
        Ok(xi.iter().chain(eta).cloned().collect())
    }

    pub fn eval_f64(&self, xi: &[f64], eta: &[f64]) -> Result<f64, GeometryError> {
        let pt = self.point(xi, eta)?;
        let mut value = self.poly.eval_f64(&pt);
        if let Some((k, b)) = &self.log {
            let v = b.eval_f64(&pt);
            if v.abs() < super::ZERO_SET_TOL {
                return Err(GeometryError::Domain(format!("log argument vanishes at {pt:?}")));
            }
            value += k.to_f64().unwrap_or(f64::NAN) * v.abs().ln();
        }
        Ok(value)
    }

    /// `D(ξ,η,ζ,λ) = Φ(ξ,η) − Φ(ζ,η) − Φ(ξ,λ) + Φ(ζ,λ)`, exactly.
    pub fn diastasis(
        &self,
        xi: &[ExactScalar],
        eta: &[ExactScalar],
        zeta: &[ExactScalar],
        lam: &[ExactScalar],
    ) -> Result<Diastasis, GeometryError> {
        let pts = [
            self.point(xi, eta)?,
            self.point(zeta, eta)?,
            self.point(xi, lam)?,
            self.point(zeta, lam)?,
        ];
        let a: Vec<ExactScalar> = pts.iter().map(|p| self.poly.eval(p)).collect();
        let poly_part = &a[0] - &a[1] - &a[2] + &a[3];
        let (log_coeff, log_ratio) = match &self.log {
            None => (ExactScalar::zero(), ExactScalar::one()),
            Some((k, b)) => {
                let v: Vec<ExactScalar> = pts.iter().map(|p| b.eval(p)).collect();
                if v.iter().any(Zero::is_zero) {
                    return Err(GeometryError::Domain("log argument vanishes".into()));
                }
                (k.clone(), (&v[0] * &v[3]) / (&v[1] * &v[2]))
            }
        };
        Ok(Diastasis {
            poly_part,
            log_coeff,
            log_ratio,
        })
    }

    /// Floating-point diastasis.
    pub fn diastasis_f64(
        &self,
        xi: &[f64],
        eta: &[f64],
        zeta: &[f64],
        lam: &[f64],
    ) -> Result<f64, GeometryError> {
        Ok(self.eval_f64(xi, eta)? - self.eval_f64(zeta, eta)? - self.eval_f64(xi, lam)?
            + self.eval_f64(zeta, lam)?)
    }
}

/// `D(ξ,η,ζ,λ) = Φ(ξ,η) − Φ(ζ,η) − Φ(ξ,λ) + Φ(ζ,λ)` for a toric potential.
pub fn diastasis_eval(
    potential: &ToricPotential,
    xi: &[f64],
    eta: &[f64],
    zeta: &[f64],
    lam: &[f64],
) -> Result<f64, GeometryError> {
    let n = potential.nvars();
    if [xi, eta, zeta, lam].iter().any(|v| v.len() != n) {
        return Err(GeometryError::Dimension(format!(
            "all four points need {n} coordinates"
        )));
    }
    Ok(potential.eval(xi, eta)? - potential.eval(zeta, eta)? - potential.eval(xi, lam)?
        + potential.eval(zeta, lam)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::geometry::space_form_potential;

    fn r(v: &[i64]) -> Vec<ExactScalar> {
        v.iter().map(|&x| rat(x, 7)).collect()
    }

    #[test]
    fn degenerate_slices_vanish() {
        let pot = space_form_potential(&rat(4, 1), 2).unwrap();
        let np = NullPotential::from_toric(&pot).unwrap();
        let (a, b, c) = (r(&[1, -2]), r(&[3, 1]), r(&[-1, 2]));
        assert!(np.diastasis(&a, &b, &a, &c).unwrap().is_zero());
        assert!(np.diastasis(&a, &b, &c, &b).unwrap().is_zero());
        assert!(!np.diastasis(&a, &b, &c, &a).unwrap().is_zero());
    }

    #[test]
    fn separable_terms_cancel() {
        let pot = space_form_potential(&rat(8, 3), 1).unwrap();
        let np = NullPotential::from_toric(&pot).unwrap();
        let t = MultiPoly::var(1, 0);
        let shifted = np
            .add_separable(&(t.pow(3) + MultiPoly::one(1)), &t.scale(&rat(5, 2)))
            .unwrap();
        let (a, b, c, d) = (r(&[1]), r(&[2]), r(&[-3]), r(&[1]));
        let d1 = np.diastasis(&a, &b, &c, &d).unwrap();
        let d2 = shifted.diastasis(&a, &b, &c, &d).unwrap();
        assert_eq!(d1, d2);
    }

    #[test]
    fn base_point_reduces_to_potential() {
        let pot = space_form_potential(&rat(8, 1), 2).unwrap();
        let (xi, eta) = ([0.03, -0.05], [0.02, 0.04]);
        let d = diastasis_eval(&pot, &xi, &eta, &[0.0; 2], &[0.0; 2]).unwrap();
        let phi = pot.eval(&xi, &eta).unwrap() - pot.eval(&[0.0; 2], &[0.0; 2]).unwrap();
        assert!((d - phi).abs() < 1e-12);
    }

    #[test]
    fn exact_and_float_agree() {
        let pot = space_form_potential(&rat(4, 1), 1).unwrap();
        let np = NullPotential::from_toric(&pot).unwrap();
        let exact = np.diastasis(&r(&[1]), &r(&[2]), &r(&[-1]), &r(&[3])).unwrap();
        let f = |v: i64| [v as f64 / 7.0];
        let float = diastasis_eval(&pot, &f(1), &f(2), &f(-1), &f(3)).unwrap();
        assert!((exact.to_f64() - float).abs() < 1e-12);
    }
}
