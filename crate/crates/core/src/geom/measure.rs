//! Length of unions of boundary pieces and clipping to open windows.

use super::edge::{edge_intersections, norm_angle, split_at, Edge};
use super::point::Point2;
use super::region::Region;
use std::f64::consts::TAU;

/// Open window for relative perimeters.
#[derive(Debug, Clone, PartialEq)]
pub enum Window {
    /// Interior of the region.
    Inside(Region),
    /// Complement of the closed region.
    Outside(Region),
}

impl Window {
    pub fn region(&self) -> &Region {
        match self {
            Window::Inside(r) | Window::Outside(r) => r,
        }
    }

    /// Membership of a point, with points within `tol` of the window boundary excluded.
    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        let r = self.region();
        if r.distance_to_boundary(p) <= tol {
            return false;
        }
        match self {
            Window::Inside(r) => r.contains(p),
            Window::Outside(r) => !r.contains(p),
        }
    }
}

/// Pieces of `edges` lying in the open window.
pub fn clip_to_window(edges: &[Edge], w: &Window, tol: f64) -> Vec<Edge> {
    let wb = w.region().boundary();
    let wbox = w.region().bbox().expanded(tol);
    let mut out = Vec::new();
    for e in edges {
        let mut ts: Vec<f64> = Vec::new();
        if e.bbox().overlaps(&wbox) {
            for f in &wb {
                if !e.bbox().expanded(tol).overlaps(&f.bbox()) {
                    continue;
                }
                for p in edge_intersections(e, f, tol) {
                    let t = e.param_of(p);
                    if t > 1e-14 && t < 1.0 - 1e-14 {
                        ts.push(t);
                    }
                }
            }
        }
        ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ts.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
        for piece in split_at(e, &ts) {
            if piece.length() <= tol {
                continue;
            }
            if w.contains(piece.midpoint(), tol) {
                out.push(piece);
            }
        }
    }
    out
}

fn cluster_sorted<T>(items: &mut [T], key: impl Fn(&T) -> f64, tol: f64) -> Vec<std::ops::Range<usize>> {
    items.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
    let mut groups = Vec::new();
    let mut s = 0;
    for i in 1..=items.len() {
        if i == items.len() || key(&items[i]) - key(&items[i - 1]) > tol {
            groups.push(s..i);
            s = i;
        }
    }
    groups
}

fn interval_union(iv: &mut [(f64, f64)], tol: f64) -> f64 {
    iv.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut total = 0.0;
    let mut cur: Option<(f64, f64)> = None;
    for &(a, b) in iv.iter() {
        match cur {
            Some((ca, cb)) if a <= cb + tol => cur = Some((ca, cb.max(b))),
            Some((ca, cb)) => {
                total += cb - ca;
                cur = Some((a, b));
            }
            None => cur = Some((a, b)),
        }
    }
    if let Some((ca, cb)) = cur {
        total += cb - ca;
    }
    total
}

/// One-dimensional measure of the union of the given pieces; overlapping
/// pieces on a common line or circle are counted once.
pub fn union_length(edges: &[Edge], tol: f64) -> f64 {
    const PHI0: f64 = -1.0;
    let mut lines: Vec<(f64, f64, f64, f64)> = Vec::new(); // (phi, c, t0, t1)
    let mut arcs: Vec<(f64, f64, f64, f64, f64)> = Vec::new(); // (cx, cy, r, a0, a1)
    for e in edges {
        match *e {
            Edge::Segment { from, to } => {
                let v = to - from;
                if v.norm() <= tol {
                    continue;
                }
                let mut phi = v.angle();
                while phi < PHI0 {
                    phi += std::f64::consts::PI;
                }
                while phi >= PHI0 + std::f64::consts::PI {
                    phi -= std::f64::consts::PI;
                }
                let d = Point2::polar(phi);
                let n = d.perp();
                let c = 0.5 * (n.dot(from) + n.dot(to));
                let (t0, t1) = {
                    let a = d.dot(from);
                    let b = d.dot(to);
                    (a.min(b), a.max(b))
                };
                lines.push((phi, c, t0, t1));
            }
            Edge::Arc { center, sweep, .. } => {
                let e = if sweep < 0.0 { e.reversed() } else { *e };
                let r = e.radius();
                let a0 = norm_angle((e.start() - center).angle());
                let s = sweep.abs();
                arcs.push((center.x, center.y, r, a0, a0 + s));
            }
        }
    }
    let mut total = 0.0;
    let ang_tol = 1e-9;
    for g in cluster_sorted(&mut lines, |x| x.0, ang_tol) {
        let sub = &mut lines[g];
        for h in cluster_sorted(sub, |x| x.1, tol.max(1e-12)) {
            let mut iv: Vec<(f64, f64)> = sub[h].iter().map(|x| (x.2, x.3)).collect();
            total += interval_union(&mut iv, tol);
        }
    }
    for g in cluster_sorted(&mut arcs, |x| x.0, tol.max(1e-12)) {
        let sub = &mut arcs[g];
        for h in cluster_sorted(sub, |x| x.1, tol.max(1e-12)) {
            let sub2 = &mut sub[h];
            for k in cluster_sorted(sub2, |x| x.2, tol.max(1e-12)) {
                let r = sub2[k.clone()].iter().map(|x| x.2).sum::<f64>() / k.len() as f64;
                let mut iv = Vec::new();
                for x in &sub2[k] {
                    if x.4 > TAU {
                        iv.push((x.3, TAU));
                        iv.push((0.0, x.4 - TAU));
                    } else {
                        iv.push((x.3, x.4));
                    }
                }
                total += r * interval_union(&mut iv, tol / r.max(1e-300));
            }
        }
    }
    total
}
