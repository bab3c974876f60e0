use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::potential::{PotentialKind, ToricPotential, ZERO_SET_TOL};
use super::GeometryError;
use crate::algebra::MultiPoly;

/// Default finite-difference step for [`ricci_numeric`].
pub const DEFAULT_STEP: f64 = 1e-3;

/// Sample points are drawn with `‖ξ‖, ‖η‖ ≤ SAMPLE_RADIUS`.
pub const SAMPLE_RADIUS: f64 = 0.1;

/// Fourth-order central first-derivative stencil: offsets and weights (÷12).
const STENCIL: [(f64, f64); 4] = [(-2.0, 1.0), (-1.0, -8.0), (1.0, 8.0), (2.0, -1.0)];

/// A point `(ξ, η)` in null coordinates.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalPoint {
    pub xi: Vec<f64>,
    pub eta: Vec<f64>,
}

impl EvalPoint {
    pub fn new(xi: Vec<f64>, eta: Vec<f64>) -> Result<Self, GeometryError> {
        if xi.len() != eta.len() {
            return Err(GeometryError::Dimension(format!(
                "ξ has {} entries, η has {}",
                xi.len(),
                eta.len()
            )));
        }
        if xi.iter().chain(&eta).any(|v| !v.is_finite()) {
            return Err(GeometryError::Domain("non-finite coordinate".into()));
        }
        Ok(EvalPoint { xi, eta })
    }

    pub fn origin(n: usize) -> Self {
        EvalPoint {
            xi: vec![0.0; n],
            eta: vec![0.0; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.xi.len()
    }

    /// Toric coordinates `x_i = ξ_i η_i`.
    pub fn toric(&self) -> Vec<f64> {
        self.xi.iter().zip(&self.eta).map(|(a, b)| a * b).collect()
    }
}

/// `g_ij = ∂²Φ/∂ξ_i∂η_j` at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricSample {
    pub g: DMatrix<f64>,
    pub point: EvalPoint,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EinsteinFit {
    pub lambda: f64,
    pub max_residual: f64,
    pub points: usize,
}

/// Polynomial with coefficients rounded to `f64`, for fast repeated evaluation.
#[derive(Clone, Debug)]
struct F64Poly(Vec<(Vec<i32>, f64)>);

impl F64Poly {
    fn new(p: &MultiPoly) -> Self {
        F64Poly(
            p.terms()
                .map(|(m, c)| {
                    (
                        m.exponents().iter().map(|&e| e as i32).collect(),
                        c.to_f64().unwrap_or(f64::NAN),
                    )
                })
                .collect(),
        )
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.0
            .iter()
            .map(|(e, c)| e.iter().zip(x).fold(*c, |acc, (&e, v)| acc * v.powi(e)))
            .sum()
    }
}

/// Exact symbolic derivatives of a potential's profile, evaluated numerically.
///
/// With `Φ = f(ξ∘η)` the metric is `g_ij = f_ij ξ_j η_i + f_j δ_ij`.
#[derive(Clone, Debug)]
pub struct MetricEvaluator {
    kind: PotentialKind,
    k: f64,
    n: usize,
    p: F64Poly,
    grad: Vec<F64Poly>,
    hess: Vec<F64Poly>,
}

impl MetricEvaluator {
    pub fn new(potential: &ToricPotential) -> Self {
        let p = potential.polynomial();
        let n = p.nvars();
        let grad: Vec<MultiPoly> = (0..n).map(|i| p.d(i)).collect();
        let hess = (0..n)
            .flat_map(|i| grad.iter().map(move |g| F64Poly::new(&g.d(i))))
            .collect();
        MetricEvaluator {
            kind: potential.kind(),
            k: potential.exponent().to_f64().unwrap_or(f64::NAN),
            n,
            p: F64Poly::new(p),
            grad: grad.iter().map(F64Poly::new).collect(),
            hess,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// First and second derivatives `(f_j, f_ij)` of the profile at `x`.
    fn profile_derivatives(&self, x: &[f64]) -> Result<(Vec<f64>, Vec<f64>), GeometryError> {
        let n = self.n;
        let grad: Vec<f64> = self.grad.iter().map(|g| g.eval(x)).collect();
        let hess: Vec<f64> = self.hess.iter().map(|h| h.eval(x)).collect();
        match self.kind {
            PotentialKind::Poly => Ok((
                grad.iter().map(|v| self.k * v).collect(),
                hess.iter().map(|v| self.k * v).collect(),
            )),
            PotentialKind::Log => {
                let p = self.p.eval(x);
                if p.abs() < ZERO_SET_TOL {
                    return Err(GeometryError::Domain(format!("P vanishes at x = {x:?}")));
                }
                let f1 = grad.iter().map(|v| self.k * v / p).collect();
                let mut f2 = vec![0.0; n * n];
                for i in 0..n {
                    for j in 0..n {
                        f2[i * n + j] =
                            self.k * (hess[i * n + j] / p - grad[i] * grad[j] / (p * p));
                    }
                }
                Ok((f1, f2))
            }
        }
    }

    pub fn metric(&self, xi: &[f64], eta: &[f64]) -> Result<DMatrix<f64>, GeometryError> {
        let n = self.n;
        if xi.len() != n || eta.len() != n {
            return Err(GeometryError::Dimension(format!(
                "potential has {n} variables, point has {}",
                xi.len()
            )));
        }
        let x: Vec<f64> = xi.iter().zip(eta).map(|(a, b)| a * b).collect();
        let (f1, f2) = self.profile_derivatives(&x)?;
        Ok(DMatrix::from_fn(n, n, |i, j| {
            let diag = if i == j { f1[j] } else { 0.0 };
            f2[i * n + j] * xi[j] * eta[i] + diag
        }))
    }

    /// `Ric_ij = −∂²(log|det g|)/∂ξ_i∂η_j` by a fourth-order tensor stencil.
    pub fn ricci(&self, point: &EvalPoint, step: f64) -> Result<DMatrix<f64>, GeometryError> {
        if !(step.is_finite() && step > 0.0) {
            return Err(GeometryError::Domain(format!("invalid step {step}")));
        }
        let n = self.n;
        let center = self.metric(&point.xi, &point.eta)?.determinant();
        if center == 0.0 || !center.is_finite() {
            return Err(GeometryError::Domain("det g vanishes at the point".into()));
        }
        let sign = center.signum();
        let log_det = |xi: &[f64], eta: &[f64]| -> Result<f64, GeometryError> {
            let d = self.metric(xi, eta)?.determinant();
            if d == 0.0 || d.signum() != sign || !d.is_finite() {
                return Err(GeometryError::Domain(
                    "det g vanishes or changes sign on the stencil".into(),
                ));
            }
            Ok(d.abs().ln())
        };
        let mut ric = DMatrix::zeros(n, n);
        let mut xi = point.xi.clone();
        let mut eta = point.eta.clone();
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for (a, wa) in STENCIL {
                    xi[i] = point.xi[i] + a * step;
                    for (b, wb) in STENCIL {
                        eta[j] = point.eta[j] + b * step;
                        acc += wa * wb * log_det(&xi, &eta)?;
                    }
                    eta[j] = point.eta[j];
                }
                xi[i] = point.xi[i];
                ric[(i, j)] = -acc / (144.0 * step * step);
            }
        }
        Ok(ric)
    }
}

pub fn eval_metric(potential: &ToricPotential, point: &EvalPoint) -> Result<MetricSample, GeometryError> {
    let g = MetricEvaluator::new(potential).metric(&point.xi, &point.eta)?;
    Ok(MetricSample {
        g,
        point: point.clone(),
    })
}

pub fn ricci_numeric(
    potential: &ToricPotential,
    point: &EvalPoint,
    step: f64,
) -> Result<DMatrix<f64>, GeometryError> {
    MetricEvaluator::new(potential).ricci(point, step)
}

/// [`einstein_fit_with_step`] with the default step.
pub fn einstein_fit(potential: &ToricPotential, points: &[EvalPoint]) -> Result<EinsteinFit, GeometryError> {
    einstein_fit_with_step(potential, points, DEFAULT_STEP)
}

/// Least-squares `λ = Σ Ric·g / Σ g·g` over all entries of all samples, and
/// the largest entrywise `|Ric − λg|`.
pub fn einstein_fit_with_step(
    potential: &ToricPotential,
    points: &[EvalPoint],
    step: f64,
) -> Result<EinsteinFit, GeometryError> {
    if points.len() < 3 {
        return Err(GeometryError::InsufficientPoints(points.len()));
    }
    let eval = MetricEvaluator::new(potential);
    let sample = |p: &EvalPoint| -> Result<(DMatrix<f64>, DMatrix<f64>), GeometryError> {
        Ok((eval.metric(&p.xi, &p.eta)?, eval.ricci(p, step)?))
    };
    #[cfg(feature = "parallel")]
    let samples: Vec<_> = {
        use rayon::prelude::*;
        points.par_iter().map(sample).collect::<Result<_, _>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let samples: Vec<_> = points.iter().map(sample).collect::<Result<_, _>>()?;

    // Sequential reductions keep the result independent of scheduling.
    let (mut num, mut den) = (0.0, 0.0);
    for (g, ric) in &samples {
        num += ric.component_mul(g).sum();
        den += g.component_mul(g).sum();
    }
    if den == 0.0 {
        return Err(GeometryError::Domain("metric vanishes at every sample point".into()));
    }
    let lambda = num / den;
    let max_residual = samples
        .iter()
        .flat_map(|(g, ric)| (ric - g * lambda).iter().map(|v| v.abs()).collect::<Vec<_>>())
        .fold(0.0, f64::max);
    Ok(EinsteinFit {
        lambda,
        max_residual,
        points: points.len(),
    })
}

/// `count` reproducible points with every coordinate uniform in
/// `[−R/√n, R/√n]`, so that `‖ξ‖, ‖η‖ ≤ R = SAMPLE_RADIUS`.
pub fn sample_points(n: usize, count: usize, seed: u64) -> Vec<EvalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = SAMPLE_RADIUS / (n.max(1) as f64).sqrt();
    (0..count)
        .map(|_| {
            let mut coords = || -> Vec<f64> { (0..n).map(|_| rng.random_range(-bound..=bound)).collect() };
            let xi = coords();
            let eta = coords();
            EvalPoint { xi, eta }
        })
        .collect()
}
