use serde::Serialize;

use super::{check_dim, MAError};
use crate::algebra::{binomial_power, binomial_profile, ExactScalar, MultiPoly};

/// Axis data `p(t) = ε(1 + t/r)^k` from the axis-restriction Lemma, plus the
/// sign found for the companion `q(t)` of Eq. (q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisProfile {
    pub axis: usize,
    pub epsilon: i8,
    pub r: ExactScalar,
    pub k: u32,
    /// `±1` with `q(t) = q_sign · ε^{n−2} (r/k)(1 + t/r)^{k(n−2)+2}`.
    pub q_sign: i8,
}

impl Serialize for AxisProfile {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serde_json::json!({
            "axis": self.axis,
            "epsilon": self.epsilon,
            "r": self.r.to_string(),
            "k": self.k,
            "q_sign": self.q_sign,
        })
        .serialize(serializer)
    }
}

/// Restricts `P` to axis `i`, recognises the binomial profile and checks the
/// companion identity Eq. (q):
/// `∏_{j≠i} ∂P/∂x_j |_{axis} = ±ε^{n−2} (r/k)(1 + t/r)^{k(n−2)+2}`.
pub fn axis_profile_check(p: &MultiPoly, n: usize, axis: usize) -> Result<AxisProfile, MAError> {
    check_dim(p, n)?;
    if axis >= n {
        return Err(MAError::Precondition(format!(
            "axis {axis} out of range for {n} variables"
        )));
    }
    let restricted = p.restrict_to_axis(axis);
    let prof = binomial_profile(&restricted)
        .map_err(|e| MAError::ProfileMismatch(format!("p(t) = {restricted}: {e}")))?;

    let exponent = i64::from(prof.k) * (n as i64 - 2) + 2;
    if exponent < 0 {
        return Err(MAError::ProfileMismatch(format!(
            "Eq. (q) exponent k(n−2)+2 = {exponent} is negative"
        )));
    }
    let q = (0..n)
        .filter(|&j| j != axis)
        .fold(MultiPoly::one(n), |acc, j| acc * p.d(j))
        .restrict_to_axis(axis);

    // ε^{n−2} = ε for odd n − 2 (including n = 1, where ε^{−1} = ε).
    let eps_pow: i64 = if n.is_multiple_of(2) { 1 } else { i64::from(prof.epsilon) };
    let scale = ExactScalar::from_integer(eps_pow.into()) * &prof.r
        / ExactScalar::from_integer(prof.k.into());
    let expected = binomial_power(1, 0, 1, &prof.r, exponent as u32).scale(&scale);
    let q_sign = if q == expected {
        1
    } else if q == -&expected {
        -1
    } else {
        return Err(MAError::ProfileMismatch(format!(
            "q(t) = {q} differs from ±{expected}"
        )));
    };
    Ok(AxisProfile {
        axis,
        epsilon: prof.epsilon,
        r: prof.r,
        k: prof.k,
        q_sign,
    })
}
