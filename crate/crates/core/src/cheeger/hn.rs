use super::convex::{h_ratio, hexagon_cheeger};
use crate::error::{Error, Result};
use crate::geom::{Point2, Region};
use crate::hex::{classify, generate_plane_with_origin, side_for_area};
use crate::report::BoundReport;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

/// Grid of α values scanned before refinement.
const ALPHA_STEPS: usize = 48;
/// Tiling offsets per lattice direction.
const OFFSET_STEPS: usize = 6;

/// Lower and upper estimates of `H_N(Ω)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HNSandwich {
    pub n: usize,
    pub lower: f64,
    /// `N h(H)/√δ`, when `N` interior cells of area `δ` were found.
    pub upper: Option<f64>,
    /// `Σ P/|·|` over the `N` interior cells themselves.
    pub raw: Option<f64>,
    pub alpha: Option<f64>,
    pub delta: Option<f64>,
    /// Interior cell count at the chosen `δ`.
    pub k: Option<usize>,
    pub origin: Option<Point2>,
}

impl HNSandwich {
    pub fn feasible(&self) -> bool {
        self.upper.is_some()
    }
}

/// `2√π N^{3/2} / √|Ω|`.
pub fn hn_lower(area: f64, n: usize) -> f64 {
    2.0 * PI.sqrt() * (n as f64).powf(1.5) / area.sqrt()
}

fn best_interior(omega: &Region, delta: f64) -> Result<(usize, Point2)> {
    let s = side_for_area(delta);
    let a = Point2::new(3f64.sqrt() * s, 0.0);
    let b = Point2::new(3f64.sqrt() * s / 2.0, 1.5 * s);
    let origins: Vec<Point2> = (0..OFFSET_STEPS * OFFSET_STEPS)
        .map(|i| {
            let u = (i / OFFSET_STEPS) as f64 / OFFSET_STEPS as f64;
            let v = (i % OFFSET_STEPS) as f64 / OFFSET_STEPS as f64;
            a * u + b * v
        })
        .collect();
    let counts = origins
        .par_iter()
        .map(|o| {
            let t = generate_plane_with_origin(delta, omega, *o)?;
            Ok((classify(&t, omega)?.k(), *o))
        })
        .collect::<Result<Vec<_>>>()?;
    // first origin wins ties
    let mut best = counts[0];
    for c in &counts[1..] {
        if c.0 > best.0 {
            best = *c;
        }
    }
    Ok(best)
}

/// Sandwich for `H_N(Ω)`: the lower bound from the Cheeger inequality and the
/// upper bound from `N` compactly contained cells of area
/// `δ(N) = |Ω|/N - |Ω|/N^α`, with the largest workable `α ∈ (1+ε, 3/2)`.
pub fn hn_sandwich(omega: &Region, n: usize, eps: f64) -> Result<HNSandwich> {
    if n == 0 {
        return Err(Error::Domain("N must be positive".into()));
    }
    if !(0.0..0.5).contains(&eps) {
        return Err(Error::Domain(format!("exponent margin must lie in [0, 1/2), got {eps}")));
    }
    if !omega.is_polygonal() {
        return Err(Error::Unsupported("sandwich accepts polygonal regions only".into()));
    }
    let area = omega.area();
    if !(area > 0.0) {
        return Err(Error::Domain("region has no area".into()));
    }
    let lower = hn_lower(area, n);
    let mut out = HNSandwich { n, lower, upper: None, raw: None, alpha: None, delta: None, k: None, origin: None };
    let nf = n as f64;
    let delta_of = |alpha: f64| area / nf - area / nf.powf(alpha);
    if n == 1 {
        // δ(1) = 0 for every α
        return Ok(out);
    }
    let a0 = 1.0 + eps;
    let a1 = 1.5;
    let grid: Vec<f64> = (0..ALPHA_STEPS).map(|i| a1 - (a1 - a0) * (i as f64 + 0.5) / ALPHA_STEPS as f64).collect();
    let mut found: Option<(f64, usize, Point2, f64)> = None;
    for (i, &alpha) in grid.iter().enumerate() {
        let (k, o) = best_interior(omega, delta_of(alpha))?;
        if k >= n {
            let mut lo = (alpha, k, o);
            let mut hi = if i == 0 { a1 } else { grid[i - 1] };
            for _ in 0..24 {
                let mid = 0.5 * (lo.0 + hi);
                let (km, om) = best_interior(omega, delta_of(mid))?;
                if km >= n {
                    lo = (mid, km, om);
                } else {
                    hi = mid;
                }
            }
            found = Some((lo.0, lo.1, lo.2, delta_of(lo.0)));
            break;
        }
    }
    let Some((alpha, k, origin, delta)) = found else {
        return Ok(out);
    };
    let t = generate_plane_with_origin(delta, omega, origin)?;
    let cls = classify(&t, omega)?;
    let raw: f64 = cls.interior[..n].iter().map(|idx| h_ratio(&t.cell(*idx).unwrap())).collect::<Result<Vec<_>>>()?.iter().sum();
    out.upper = Some(nf * hexagon_cheeger() / delta.sqrt());
    out.raw = Some(raw);
    out.alpha = Some(alpha);
    out.delta = Some(delta);
    out.k = Some(k);
    out.origin = Some(origin);
    Ok(out)
}

/// Step inequality `H_{N+1} ≥ H_N + 2√π √(N+1)/√|Ω|` on consecutive entries:
/// once on the lower curve, and once with the upper estimate at `N+1` against
/// the lower curve at `N`.
pub fn hn_monotonicity(seq: &[HNSandwich], area: f64) -> Result<Vec<BoundReport>> {
    let c = 2.0 * PI.sqrt() / area.sqrt();
    let mut out = Vec::new();
    for w in seq.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if b.n != a.n + 1 {
            return Err(Error::Domain(format!("entries N = {} and N = {} are not consecutive", a.n, b.n)));
        }
        let step = c * (b.n as f64).sqrt();
        out.push(BoundReport::new("hn_step_lower", b.lower, a.lower + step, format!("N={}", a.n)));
        if let Some(u) = b.upper {
            out.push(BoundReport::new("hn_step_upper", u, a.lower + step, format!("N={}", a.n)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> Region {
        Region::rect(Point2::ORIGIN, Point2::new(1.0, 1.0))
    }

    #[test]
    fn four_cells() {
        let s = hn_sandwich(&unit(), 4, 0.0).unwrap();
        assert!((s.lower - 16.0 * PI.sqrt()).abs() < 1e-12);
        let u = s.upper.expect("four cells fit in the unit square");
        assert!(s.lower <= u);
        assert!(s.k.unwrap() >= 4);
        assert!(s.raw.unwrap() > u);
    }

    #[test]
    fn single_chamber_lower() {
        let s = hn_sandwich(&unit(), 1, 0.0).unwrap();
        assert!((s.lower - 2.0 * PI.sqrt()).abs() < 1e-15);
        assert!(!s.feasible());
    }

    #[test]
    fn bad_margin() {
        assert!(hn_sandwich(&unit(), 4, 0.5).is_err());
        assert!(hn_sandwich(&unit(), 4, -0.1).is_err());
    }

    #[test]
    fn monotonicity_flags_injected_violation() {
        let a = hn_sandwich(&unit(), 16, 0.0).unwrap();
        let mut b = hn_sandwich(&unit(), 17, 0.0).unwrap();
        let reps = hn_monotonicity(&[a.clone(), b.clone()], 1.0).unwrap();
        assert!(reps.iter().all(|r| r.satisfied()));
        b.upper = Some(a.lower);
        let reps = hn_monotonicity(&[a.clone(), b], 1.0).unwrap();
        assert!(!reps[1].satisfied());
        assert!(hn_monotonicity(&[a.clone(), a], 1.0).is_err());
    }
}
