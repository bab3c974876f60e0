use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::{check_dim, ma_lhs_log, MAError};
use crate::algebra::{ExactScalar, MultiPoly};

/// `4λ/c = s/q` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentRatio {
    pub s: u32,
    pub q: u32,
}

impl ExponentRatio {
    pub fn new(s: u32, q: u32) -> Result<Self, MAError> {
        if s == 0 || q == 0 {
            return Err(MAError::Precondition("exponent ratio must be positive".into()));
        }
        let g = s.gcd(&q);
        Ok(ExponentRatio { s: s / g, q: q / g })
    }

    pub fn as_rational(&self) -> ExactScalar {
        ExactScalar::new(self.s.into(), self.q.into())
    }
}

/// Finds the ratio `4λ/c` for which `Q` solves Eq. (MAeq).
///
/// The left side must equal `±Q^t`; comparing degrees forces
/// `t = deg LHS / deg Q = a/b`, and when `b > 1` the power is read as
/// `(Q^{1/b})^a`, so `Q` must be an exact `b`-th power. Returns
/// `4λ/c = n + 1 − t` when positive, otherwise `None`. Also `None` when
/// `Q(0) ≠ 1`, `Q` is constant or the left side vanishes.
pub fn exponent_scan(q: &MultiPoly, n: usize) -> Result<Option<ExponentRatio>, MAError> {
    check_dim(q, n)?;
    if !q.constant_term().is_one() || q.is_constant() {
        return Ok(None);
    }
    let lhs = ma_lhs_log(q, n)?;
    let Some(dl) = lhs.degree() else {
        return Ok(None);
    };
    let dq = q.degree().expect("non-constant");
    let g = dl.gcd(&dq);
    let (a, b) = (dl / g, dq / g);
    let root = match q.nth_root(b) {
        Ok(r) => r,
        Err(_) => return Ok(None),
    };
    let power = root.pow(a);
    if lhs != power && lhs != -&power {
        return Ok(None);
    }
    // 4λ/c = n + 1 − a/b = ((n + 1) b − a) / b.
    let num = (n as i64 + 1) * i64::from(b) - i64::from(a);
    if num <= 0 {
        return Ok(None);
    }
    Ok(Some(ExponentRatio::new(num as u32, b)?))
}

/// The reduction of Remark (l1): with `Q(x) = R(x/q)^q`, returns `P = R(x/s)^s`.
pub fn reduce_power(q: &MultiPoly, ratio: ExponentRatio) -> Result<MultiPoly, MAError> {
    if !q.constant_term().is_one() {
        return Err(MAError::Precondition("reduce_power needs Q(0) = 1".into()));
    }
    let n = q.nvars();
    let up = vec![ExactScalar::from_integer(ratio.q.into()); n];
    let r = q.scale_vars(&up)?.nth_root(ratio.q)?;
    let down = vec![ExactScalar::new(1.into(), ratio.s.into()); n];
    let p = r.scale_vars(&down)?.pow(ratio.s);
    debug_assert!(!p.is_zero());
    Ok(p)
}
