//! Potentials, metrics, numeric Ricci/Einstein checks, diastasis and the
//! space-form models.
//!
//! Symbolic data (potentials, their derivatives) stays exact; only the final
//! substitution of a sample point happens in `f64`.

mod diastasis;
mod metric;
mod potential;

pub use diastasis::{diastasis_eval, Diastasis, NullPotential};
pub use metric::{
    eval_metric, einstein_fit, einstein_fit_with_step, ricci_numeric, sample_points, EinsteinFit,
    EvalPoint, MetricEvaluator, MetricSample, DEFAULT_STEP, SAMPLE_RADIUS,
};
pub use potential::{
    space_form_potential, toric_hessian_matrix, PotentialKind, ToricPotential, ZERO_SET_TOL,
};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("potential normalization violated: {0}")]
    Normalization(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("einstein fit needs at least 3 sample points, got {0}")]
    InsufficientPoints(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
