//! Length of the circular arc bounding a given area over a chord.

use crate::error::{Error, Result};
use crate::geom::x_minus_sin;
use std::f64::consts::PI;

/// Area of the circular segment over a unit chord with half-angle `phi`.
fn segment_area(phi: f64) -> f64 {
    let s = phi.sin();
    x_minus_sin(2.0 * phi) / (8.0 * s * s)
}

/// Half-angle `φ ∈ [0, π)` of the arc over a unit chord enclosing area `a`.
pub fn arc_half_angle(a: f64) -> Result<f64> {
    if !(a >= 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("arc needs a finite area a >= 0, got {a}")));
    }
    if a == 0.0 {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0, PI);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if segment_area(mid) < a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `arc(a)`: length of the circular arc over a unit chord enclosing area `a`.
pub fn arc(a: f64) -> Result<f64> {
    Ok(1.0 + arc_minus_one(a)?)
}

/// `arc(a) − 1` without cancellation for small `a`.
pub fn arc_minus_one(a: f64) -> Result<f64> {
    let phi = arc_half_angle(a)?;
    if phi == 0.0 {
        return Ok(0.0);
    }
    Ok(x_minus_sin(phi) / phi.sin())
}

/// `arc_t(a) = t · arc(a / t²)`: the same for a chord of length `t`.
pub fn arc_t(a: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("chord length must be positive, got {t}")));
    }
    Ok(t * arc(a / (t * t))?)
}

/// Largest `η` on a grid of `samples` points with `arc(a) ≥ 1 + η a²` on `(0, a_max]`.
pub fn arc_coercivity(a_max: f64, samples: usize) -> Result<f64> {
    if !(a_max > 0.0) || samples == 0 {
        return Err(Error::Domain("coercivity needs a_max > 0 and at least one sample".into()));
    }
    let mut eta = f64::INFINITY;
    for i in 1..=samples {
        let a = a_max * i as f64 / samples as f64;
        eta = eta.min(arc_minus_one(a)? / (a * a));
    }
    Ok(eta)
}
