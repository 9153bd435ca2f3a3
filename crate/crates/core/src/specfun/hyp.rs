//! Gauss hypergeometric series on `0 <= z < 1`.

use super::SeriesControl;
use crate::error::{domain, Error, Result};

/// Parameters within this distance of a non-positive integer are treated as
/// that integer, so `m - (m + k)` computed in floating point still terminates.
const INTEGER_SNAP: f64 = 1e-10;

/// Returns `Some(K)` when `p` is (numerically) the non-positive integer `-K`.
pub(crate) fn non_positive_integer(p: f64) -> Option<u64> {
    let r = p.round();
    if r <= 0.0 && (p - r).abs() <= INTEGER_SNAP * p.abs().max(1.0) {
        Some((-r) as u64)
    } else {
        None
    }
}

/// `₂F₁(a, b; c; z)` by direct summation.
///
/// When `a` or `b` is a non-positive integer `-K` the series is a polynomial of
/// degree `K` and is summed exactly to that degree, independent of the
/// tolerance. Otherwise terms are accumulated until they fall below
/// `ctrl.tolerance` relative to the running sum.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64, ctrl: SeriesControl) -> Result<f64> {
    if !(0.0..1.0).contains(&z) {
        return Err(domain("hyp2f1", format!("z = {z} outside [0, 1)")));
    }
    let degree = match (non_positive_integer(a), non_positive_integer(b)) {
        (Some(ka), Some(kb)) => Some(ka.min(kb)),
        (Some(k), None) | (None, Some(k)) => Some(k),
        (None, None) => None,
    };
    let (a, b) = match degree {
        Some(k) => {
            // Snap the terminating parameter to its exact integer value.
            let exact = -(k as f64);
            if non_positive_integer(a) == Some(k) {
                (exact, b)
            } else {
                (a, exact)
            }
        }
        None => (a, b),
    };

    if let Some(kc) = non_positive_integer(c) {
        let fine = matches!(degree, Some(k) if k < kc);
        if !fine {
            return Err(domain(
                "hyp2f1",
                format!("c = {c} is a non-positive integer and the series does not terminate first"),
            ));
        }
    }

    let mut sum = 1.0;
    let mut term = 1.0;
    if let Some(k) = degree {
        for n in 0..k {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
            sum += term;
        }
        return Ok(sum);
    }

    for n in 0..ctrl.max_terms {
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        term *= ratio;
        sum += term;
        // Stop only once the terms are shrinking, so a transiently small
        // term near a sign change of (a+n) or (b+n) cannot end the sum early.
        let next_ratio = (a + nf + 1.0) * (b + nf + 1.0) / ((c + nf + 1.0) * (nf + 2.0)) * z;
        if term.abs() <= ctrl.tolerance * sum.abs() && next_ratio.abs() < 1.0 {
            return Ok(sum);
        }
        if !sum.is_finite() {
            break;
        }
    }
    Err(Error::Convergence {
        terms: ctrl.max_terms,
        partial_sum: sum,
        last_term: term.abs(),
    })
}
