//! Hausdorff distance between boundary chains.

use super::edge::Edge;
use crate::error::{Error, Result};

fn dist_to_chain(p: super::Point2, b: &[Edge]) -> f64 {
    b.iter().map(|e| e.distance_to(p)).fold(f64::INFINITY, f64::min)
}

fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..80 {
        if hi - lo < 1e-15 {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
    }
    f1.max(f2)
}

fn directed(a: &[Edge], b: &[Edge], spacing: f64) -> f64 {
    let mut best: f64 = 0.0;
    let mut cands: Vec<(usize, f64, f64, f64)> = Vec::new(); // edge, lo, hi, value
    for (k, e) in a.iter().enumerate() {
        let n = ((e.length() / spacing).ceil() as usize).max(2);
        let vals: Vec<f64> = (0..=n).map(|i| dist_to_chain(e.point_at(i as f64 / n as f64), b)).collect();
        for i in 0..=n {
            let v = vals[i];
            best = best.max(v);
            let left = if i > 0 { vals[i - 1] } else { f64::NEG_INFINITY };
            let right = if i < n { vals[i + 1] } else { f64::NEG_INFINITY };
            if v >= left && v >= right {
                let lo = if i > 0 { (i - 1) as f64 / n as f64 } else { 0.0 };
                let hi = if i < n { (i + 1) as f64 / n as f64 } else { 1.0 };
                cands.push((k, lo, hi, v));
            }
        }
    }
    for (k, lo, hi, v) in cands {
        // the distance is 1-Lipschitz along the edge
        let step = a[k].length() * (hi - lo);
        if v + step < best {
            continue;
        }
        let e = &a[k];
        best = best.max(golden_max(|t| dist_to_chain(e.point_at(t), b), lo, hi));
    }
    best
}

/// Hausdorff distance between two boundary chains. Segment chains are handled
/// exactly; chains with arcs are sampled with spacing at most `1e-4` of the
/// total chain length and refined at local maxima.
pub fn hausdorff_distance(a: &[Edge], b: &[Edge]) -> Result<f64> {
    hausdorff_with_resolution(a, b, 1e-4)
}

/// As [`hausdorff_distance`] with the sample spacing given relative to the
/// total length.
pub fn hausdorff_with_resolution(a: &[Edge], b: &[Edge], rel_spacing: f64) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Domain("Hausdorff distance of an empty chain".into()));
    }
    if a.iter().chain(b.iter()).all(|e| !e.is_arc()) {
        return Ok(directed_polygonal(a, b).max(directed_polygonal(b, a)));
    }
    let total: f64 = a.iter().chain(b.iter()).map(|e| e.length()).sum();
    let spacing = (rel_spacing * total).max(1e-300);
    Ok(directed(a, b, spacing).max(directed(b, a, spacing)))
}

/// Roots in `[0, 1]` of `q2 t² + q1 t + q0`.
fn push_roots(q2: f64, q1: f64, q0: f64, out: &mut Vec<f64>) {
    let scale = q2.abs().max(q1.abs()).max(q0.abs());
    if scale == 0.0 {
        return;
    }
    let mut roots = [f64::NAN; 2];
    if q2.abs() <= 1e-14 * scale {
        if q1 != 0.0 {
            roots[0] = -q0 / q1;
        }
    } else {
        let disc = q1 * q1 - 4.0 * q2 * q0;
        if disc >= 0.0 {
            let s = disc.sqrt();
            let q = -0.5 * (q1 + q1.signum() * s);
            roots[0] = q / q2;
            if q != 0.0 {
                roots[1] = q0 / q;
            }
        }
    }
    out.extend(roots.into_iter().filter(|t| (0.0..=1.0).contains(t)));
}

/// Exact directed distance between segment chains. Along a segment the
/// distance to `b` is the lower envelope of the distances to the vertices and
/// supporting lines of `b`, so its maximum sits at an endpoint or where two of
/// these features are equidistant.
fn directed_polygonal(a: &[Edge], b: &[Edge]) -> f64 {
    let mut pts: Vec<super::Point2> = b.iter().map(|e| e.start()).collect();
    let last = b[b.len() - 1].end();
    if last != pts[0] {
        pts.push(last);
    }
    let lines: Vec<(super::Point2, f64)> = b
        .iter()
        .filter(|e| e.length() > 0.0)
        .map(|e| {
            let n = (e.end() - e.start()).perp().normalized();
            (n, n.dot(e.start()))
        })
        .collect();
    let mut best: f64 = 0.0;
    let mut ts = Vec::new();
    for e in a {
        let p0 = e.start();
        let d = e.end() - p0;
        ts.clear();
        ts.extend([0.0, 1.0]);
        for (i, &p) in pts.iter().enumerate() {
            for &q in &pts[i + 1..] {
                // |x - p|² = |x - q|²
                push_roots(0.0, 2.0 * d.dot(q - p), 2.0 * p0.dot(q - p) - q.norm2() + p.norm2(), &mut ts);
            }
            for &(n, c) in &lines {
                // |x - p|² = (n·x - c)²
                let w = p0 - p;
                let (a0, a1) = (n.dot(p0) - c, n.dot(d));
                push_roots(d.norm2() - a1 * a1, 2.0 * (w.dot(d) - a0 * a1), w.norm2() - a0 * a0, &mut ts);
            }
        }
        for (i, &(n1, c1)) in lines.iter().enumerate() {
            for &(n2, c2) in &lines[i + 1..] {
                for s in [1.0, -1.0] {
                    push_roots(0.0, n1.dot(d) - s * n2.dot(d), n1.dot(p0) - c1 - s * (n2.dot(p0) - c2), &mut ts);
                }
            }
        }
        for &t in &ts {
            best = best.max(dist_to_chain(p0 + d * t, b));
        }
    }
    best
}

fn closest_on(e: &Edge, p: super::Point2) -> super::Point2 {
    match *e {
        Edge::Segment { from, to } => {
            let d = to - from;
            let l2 = d.norm2();
            if l2 == 0.0 {
                return from;
            }
            from + d * ((p - from).dot(d) / l2).clamp(0.0, 1.0)
        }
        Edge::Arc { center, from, to, .. } => {
            let v = p - center;
            let q = center + v.normalized() * e.radius();
            if v.norm() > 0.0 && e.distance_to(q) < 1e-12 * e.radius() {
                q
            } else if p.dist(from) <= p.dist(to) {
                from
            } else {
                to
            }
        }
    }
}

fn edge_distance(a: &Edge, b: &Edge) -> f64 {
    if !super::edge::edge_intersections(a, b, 0.0).is_empty() {
        return 0.0;
    }
    let mut best = [a.start(), a.end()].iter().map(|p| b.distance_to(*p)).fold(f64::INFINITY, f64::min);
    best = [b.start(), b.end()].iter().map(|p| a.distance_to(*p)).fold(best, f64::min);
    // interior minima of an arc lie on the normal through the nearest point of the other edge
    for (e, f) in [(a, b), (b, a)] {
        if let Edge::Arc { center, .. } = *e {
            let anchor = match *f {
                Edge::Arc { center: c2, .. } => c2,
                _ => closest_on(f, center),
            };
            for q in [closest_on(e, anchor), closest_on(e, center * 2.0 - anchor)] {
                best = best.min(f.distance_to(q));
            }
        }
    }
    best
}

/// Smallest distance between the boundaries of two regions (0 if they meet).
pub fn boundary_distance(a: &super::Region, b: &super::Region) -> f64 {
    let mut best = f64::INFINITY;
    for e in a.edges() {
        for f in b.edges() {
            best = best.min(edge_distance(e, f));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Point2, Region};

    #[test]
    fn concentric_squares() {
        let eps = 0.01;
        let a = Region::square(Point2::ORIGIN, 1.0);
        let b = Region::square(Point2::ORIGIN, 1.0 + 2.0 * eps);
        let h = hausdorff_distance(&a.boundary(), &b.boundary()).unwrap();
        assert!((h - eps * 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn identical_is_zero() {
        let a = Region::disk(Point2::new(1.0, 2.0), 0.7);
        assert!(hausdorff_distance(&a.boundary(), &a.boundary()).unwrap() < 1e-15);
    }

    #[test]
    fn nested_boundary_distance() {
        let a = Region::square(Point2::ORIGIN, 4.0);
        let b = Region::square(Point2::new(0.5, 0.0), 1.0);
        assert!((boundary_distance(&a, &b) - 1.0).abs() < 1e-15);
        let d = Region::disk(Point2::ORIGIN, 1.5);
        assert!((boundary_distance(&a, &d) - 0.5).abs() < 1e-15);
        assert_eq!(boundary_distance(&a, &Region::square(Point2::new(2.0, 0.0), 1.0)), 0.0);
    }

    #[test]
    fn empty_chain_is_error() {
        let a = Region::square(Point2::ORIGIN, 1.0);
        assert!(hausdorff_distance(&a.boundary(), &[]).is_err());
    }

    #[test]
    fn polygonal_matches_dense_sampling() {
        let a = Region::polygon(&[Point2::new(0.0, 0.0), Point2::new(2.0, 0.1), Point2::new(1.7, 1.3), Point2::new(0.2, 0.9)]).unwrap();
        let b = Region::regular_polygon(7, Point2::new(0.9, 0.6), 0.8, 0.3);
        let (ea, eb) = (a.boundary(), b.boundary());
        let exact = hausdorff_distance(&ea, &eb).unwrap();
        let mut brute: f64 = 0.0;
        for (x, y) in [(&ea, &eb), (&eb, &ea)] {
            for e in x.iter() {
                for i in 0..=20_000 {
                    brute = brute.max(dist_to_chain(e.point_at(i as f64 / 20_000.0), y));
                }
            }
        }
        assert!(exact >= brute - 1e-15 && exact - brute < 1e-7, "{exact} {brute}");
    }
}
