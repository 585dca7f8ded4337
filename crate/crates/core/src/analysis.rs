//! Shape checks on the full dense coefficient vector `a_0, …, a_b`, internal
//! zeros included.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::DomPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Oscillation {
    pub inc_runs: usize,
    pub dec_runs: usize,
    pub direction_changes: usize,
    /// `max(inc_runs, dec_runs)`
    pub eta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub unimodal: bool,
    pub mode_index: Option<usize>,
    pub logconcave: bool,
    pub logconcave_witness: Option<usize>,
    /// Every `j` with `a_j² < a_{j−1} a_{j+1}`.
    pub logconcave_violations: Vec<usize>,
    pub newton: bool,
    pub newton_witness: Option<usize>,
    pub newton_violations: Vec<usize>,
    pub inc_runs: usize,
    pub dec_runs: usize,
    pub direction_changes: usize,
    pub eta: usize,
    pub has_internal_zeros: bool,
}

fn nonzero(p: &DomPolynomial) -> Result<&[BigUint]> {
    if p.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(p.coeffs())
    }
}

/// `(unimodal, mode)`; the mode is the smallest valid peak index.
pub fn is_unimodal(p: &DomPolynomial) -> Result<(bool, Option<usize>)> {
    let a = nonzero(p)?;
    let mut fallen = false;
    for w in a.windows(2) {
        if w[1] < w[0] {
            fallen = true;
        } else if w[1] > w[0] && fallen {
            return Ok((false, None));
        }
    }
    let max = a.iter().max().expect("nonempty");
    Ok((true, a.iter().position(|c| c == max)))
}

/// `(log-concave, smallest j with a_j² < a_{j−1} a_{j+1})`.
pub fn is_log_concave(p: &DomPolynomial) -> Result<(bool, Option<usize>)> {
    let first = log_concave_violations(p)?.first().copied();
    Ok((first.is_none(), first))
}

pub fn log_concave_violations(p: &DomPolynomial) -> Result<Vec<usize>> {
    let a = nonzero(p)?;
    Ok((1..a.len().saturating_sub(1))
        .filter(|&j| &a[j] * &a[j] < &a[j - 1] * &a[j + 1])
        .collect())
}

/// `a_t² ≥ a_{t−1} a_{t+1} (1 + 1/t)(1 + 1/(b−t))` for `t = 1..b−1`.
///
/// Cleared of denominators: `a_t² · t · (b−t) ≥ a_{t−1} a_{t+1} (t+1)(b−t+1)`,
/// which is the rational inequality multiplied by the positive `t(b−t)`.
/// Degrees below 2 hold vacuously.
pub fn newton_check(p: &DomPolynomial) -> Result<(bool, Option<usize>)> {
    let first = newton_violations(p)?.first().copied();
    Ok((first.is_none(), first))
}

pub fn newton_violations(p: &DomPolynomial) -> Result<Vec<usize>> {
    let a = nonzero(p)?;
    let b = a.len() - 1;
    Ok((1..b)
        .filter(|&t| {
            let lhs = &a[t] * &a[t] * BigUint::from(t) * BigUint::from(b - t);
            let rhs = &a[t - 1] * &a[t + 1] * BigUint::from(t + 1) * BigUint::from(b - t + 1);
            lhs < rhs
        })
        .collect())
}

/// Runs of strict rises and falls; equal neighbors neither end nor start a run.
pub fn oscillation_metrics(p: &DomPolynomial) -> Result<Oscillation> {
    let a = nonzero(p)?;
    let signs = a.windows(2).filter_map(|w| match w[1].cmp(&w[0]) {
        std::cmp::Ordering::Greater => Some(true),
        std::cmp::Ordering::Less => Some(false),
        std::cmp::Ordering::Equal => None,
    });
    let (mut inc_runs, mut dec_runs, mut changes) = (0, 0, 0);
    let mut last: Option<bool> = None;
    for rising in signs {
        if last != Some(rising) {
            if last.is_some() {
                changes += 1;
            }
            if rising {
                inc_runs += 1;
            } else {
                dec_runs += 1;
            }
            last = Some(rising);
        }
    }
    Ok(Oscillation {
        inc_runs,
        dec_runs,
        direction_changes: changes,
        eta: inc_runs.max(dec_runs),
    })
}

pub fn has_internal_zeros(p: &DomPolynomial) -> bool {
    let a = p.coeffs();
    match (a.iter().position(|c| !c.is_zero()), a.len().checked_sub(1)) {
        (Some(lo), Some(hi)) => a[lo..hi].iter().any(Zero::is_zero),
        _ => false,
    }
}

pub fn analyze(p: &DomPolynomial) -> Result<PropertyReport> {
    let (unimodal, mode_index) = is_unimodal(p)?;
    let logconcave_violations = log_concave_violations(p)?;
    let newton_violations = newton_violations(p)?;
    let osc = oscillation_metrics(p)?;
    Ok(PropertyReport {
        unimodal,
        mode_index,
        logconcave: logconcave_violations.is_empty(),
        logconcave_witness: logconcave_violations.first().copied(),
        logconcave_violations,
        newton: newton_violations.is_empty(),
        newton_witness: newton_violations.first().copied(),
        newton_violations,
        inc_runs: osc.inc_runs,
        dec_runs: osc.dec_runs,
        direction_changes: osc.direction_changes,
        eta: osc.eta,
        has_internal_zeros: has_internal_zeros(p),
    })
}
