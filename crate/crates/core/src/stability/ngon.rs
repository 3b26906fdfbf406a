//! Fitting regular n-gons to convex polygons.

use super::chordal::convex_ccw;
use crate::error::{Error, Result};
use crate::geom::{hausdorff_with_resolution, Edge, Point2, RigidMotion};
use crate::report::BoundReport;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::Serialize;
use std::f64::consts::{PI, TAU};

/// Reference ceiling for the fitted n-gon variance constant.
pub const NGON_C_CEILING: f64 = 10.0;

pub(crate) fn polygon_area(v: &[Point2]) -> f64 {
    let n = v.len();
    0.5 * (0..n).map(|i| v[i].cross(v[(i + 1) % n])).sum::<f64>()
}

pub(crate) fn polygon_centroid(v: &[Point2]) -> Point2 {
    let n = v.len();
    let mut a = 0.0;
    let mut c = Point2::ORIGIN;
    for i in 0..n {
        let w = v[i].cross(v[(i + 1) % n]);
        a += w;
        c = c + (v[i] + v[(i + 1) % n]) * w;
    }
    c / (3.0 * a)
}

/// Side of the unit-area regular n-gon.
pub fn regular_side(n: usize) -> f64 {
    (4.0 * (PI / n as f64).tan() / n as f64).sqrt()
}

/// Vertices of the unit-area regular n-gon centred at the origin, first vertex at angle `theta`.
pub fn regular_ngon(n: usize, theta: f64) -> Vec<Point2> {
    let r = regular_side(n) / (2.0 * (PI / n as f64).sin());
    (0..n).map(|i| Point2::polar(theta + TAU * i as f64 / n as f64) * r).collect()
}

fn chain(v: &[Point2]) -> Vec<Edge> {
    (0..v.len()).map(|i| Edge::seg(v[i], v[(i + 1) % v.len()])).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NgonFit {
    pub n: usize,
    pub polygon: Vec<Point2>,
    /// Rotation angle and translation taking the reference n-gon to the fit.
    pub theta: f64,
    pub translation: Point2,
    pub hd: f64,
    /// `P(Π)² − (n ℓ_n)²`.
    pub deficit: f64,
    /// `hd² / deficit` when the deficit is positive.
    pub ratio: Option<f64>,
}

impl NgonFit {
    pub fn motion(&self) -> RigidMotion {
        RigidMotion { theta: self.theta, t: self.translation }
    }
}

fn validated(pi: &[Point2], n: usize) -> Result<Vec<Point2>> {
    if pi.len() != n {
        return Err(Error::Domain(format!("expected {n} vertices, got {}", pi.len())));
    }
    let v = convex_ccw(pi).ok_or_else(|| Error::Domain("polygon is not strictly convex".into()))?;
    let a = polygon_area(&v);
    if (a - 1.0).abs() > 1e-9 {
        return Err(Error::Domain(format!("polygon must have unit area, got {a}")));
    }
    Ok(v)
}

fn deficit(v: &[Point2], n: usize) -> f64 {
    let p: f64 = (0..v.len()).map(|i| v[i].dist(v[(i + 1) % v.len()])).sum();
    p * p - (n as f64 * regular_side(n)).powi(2)
}

/// Regular unit-area n-gon closest to `pi` in Hausdorff distance among those
/// sharing its barycenter.
pub fn fit_regular_ngon(pi: &[Point2], n: usize) -> Result<NgonFit> {
    let v = validated(pi, n)?;
    let c = polygon_centroid(&v);
    let target = chain(&v);
    let hd_at = |theta: f64, res: f64| {
        let reg: Vec<Point2> = regular_ngon(n, theta).into_iter().map(|p| p + c).collect();
        hausdorff_with_resolution(&target, &chain(&reg), res).unwrap()
    };
    let period = TAU / n as f64;
    let samples = 240;
    let step = period / samples as f64;
    let vals: Vec<f64> = (0..samples).map(|i| hd_at(i as f64 * step, 2e-3)).collect();
    let mut order: Vec<usize> = (0..samples).collect();
    order.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap());
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut best = (f64::INFINITY, 0.0);
    for &i in order.iter().take(3) {
        let (mut lo, mut hi) = ((i as f64 - 1.0) * step, (i as f64 + 1.0) * step);
        let mut x1 = hi - g * (hi - lo);
        let mut x2 = lo + g * (hi - lo);
        let mut f1 = hd_at(x1, 1e-4);
        let mut f2 = hd_at(x2, 1e-4);
        while hi - lo > 1e-10 {
            if f1 < f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = hd_at(x1, 1e-4);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = hd_at(x2, 1e-4);
            }
        }
        let theta = 0.5 * (lo + hi);
        let h = hd_at(theta, 1e-4);
        if h < best.0 {
            best = (h, theta);
        }
    }
    let (hd, theta) = best;
    let def = deficit(&v, n);
    Ok(NgonFit {
        n,
        polygon: v,
        theta: theta.rem_euclid(period),
        translation: c,
        hd,
        deficit: def,
        ratio: if def > 1e-13 { Some(hd * hd / def) } else { None },
    })
}

/// `C(n) (P(Π)² − (nℓ)²) ≥ Σ(r_i − r̄)² + Σ(ℓ_i − ℓ̄)²` with radii measured from
/// the barycenter; reported at the recorded ceiling with the fitted `C(n)`.
pub fn ngon_variance_bound(pi: &[Point2]) -> Result<BoundReport> {
    let n = pi.len();
    let v = validated(pi, n)?;
    let c = polygon_centroid(&v);
    let r: Vec<f64> = v.iter().map(|p| p.dist(c)).collect();
    let l: Vec<f64> = (0..n).map(|i| v[i].dist(v[(i + 1) % n])).collect();
    let var = |x: &[f64]| {
        let m = x.iter().sum::<f64>() / x.len() as f64;
        x.iter().map(|y| (y - m).powi(2)).sum::<f64>()
    };
    let variance = var(&r) + var(&l);
    let def = deficit(&v, n);
    let fitted = if def > 1e-13 { Some(variance / def) } else { None };
    Ok(BoundReport::new("ngon_variance", NGON_C_CEILING * def, variance, format!("n={n}")).with_fitted(fitted))
}

/// Convex unit-area n-gons obtained from the regular one by Gaussian vertex
/// noise, a random rigid motion and area renormalization; samples that are
/// not convex or whose deficit exceeds `max_deficit` are redrawn.
pub fn ngon_corpus(n: usize, count: usize, sigma: f64, max_deficit: f64, seed: u64) -> Result<Vec<Vec<Point2>>> {
    if !(sigma >= 0.0) {
        return Err(Error::Domain("noise level must be non-negative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, sigma).map_err(|e| Error::Domain(e.to_string()))?;
    let mut out = Vec::with_capacity(count);
    let mut tries = 0usize;
    while out.len() < count {
        tries += 1;
        if tries > 1000 * count.max(1) {
            return Err(Error::Domain("corpus generation rejected too many samples".into()));
        }
        let theta: f64 = rand::Rng::gen_range(&mut rng, 0.0..TAU);
        let shift = Point2::new(rand::Rng::gen_range(&mut rng, -1.0..1.0), rand::Rng::gen_range(&mut rng, -1.0..1.0));
        let raw: Vec<Point2> = regular_ngon(n, theta)
            .into_iter()
            .map(|p| p + Point2::new(noise.sample(&mut rng), noise.sample(&mut rng)))
            .collect();
        let Some(v) = convex_ccw(&raw) else { continue };
        let c = polygon_centroid(&v);
        let s = polygon_area(&v).sqrt();
        let v: Vec<Point2> = v.iter().map(|p| (*p - c) / s + shift).collect();
        let d = deficit(&v, n);
        if d <= max_deficit && convex_ccw(&v).is_some() {
            out.push(v);
        }
    }
    Ok(out)
}
