//! Monge-Ampère operators, exact verifiers and the classification drivers of
//! the paper's §4.
//!
//! Variable indices in this API are 0-based.

mod axis;
mod continuation;
mod operators;
mod power;

pub use axis::{axis_profile_check, AxisProfile};
pub use continuation::{
    classify_n1, feasible_k_scan_n2, search_n2, taylor_continue_n2, CauchyData, Continuation,
    default_r_grid, FEASIBILITY_ORDER,
};
pub use operators::{
    classify_flat, ma_lhs_flat, ma_lhs_log, ma_lhs_log_direct, verify_ma_star, FlatClass, MAResult,
};
pub use power::{exponent_scan, reduce_power, ExponentRatio};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MAError {
    #[error("polynomial has {found} variables but n = {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("axis profile mismatch: {0}")]
    ProfileMismatch(String),
    #[error("continuation inconsistent: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub(crate) fn check_dim(p: &crate::algebra::MultiPoly, n: usize) -> Result<(), MAError> {
    if p.nvars() != n {
        return Err(MAError::Dimension {
            expected: n,
            found: p.nvars(),
        });
    }
    Ok(())
}
