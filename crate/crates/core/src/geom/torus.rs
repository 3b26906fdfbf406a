//! The flat torus `T(v_β, w_α)` built on the unit-area honeycomb.

use super::edge::{line_params, Edge};
use super::measure::union_length;
use super::overlay::intersection_area;
use super::point::{BBox, Point2};
use super::region::Region;
use crate::consts::hex_side;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Torus spanned by `v = (√3 β ℓ, 0)` and `w = (0, 3/2 α ℓ)`; it carries
/// `α β` unit-area hexagons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusSpec {
    pub alpha: usize,
    pub beta: usize,
}

impl TorusSpec {
    pub fn new(alpha: usize, beta: usize) -> Result<Self> {
        if alpha < 2 || alpha % 2 != 0 {
            return Err(Error::Domain(format!("alpha must be even and at least 2, got {alpha}")));
        }
        if beta < 2 {
            return Err(Error::Domain(format!("beta must be at least 2, got {beta}")));
        }
        Ok(TorusSpec { alpha, beta })
    }

    pub fn cells(&self) -> usize {
        self.alpha * self.beta
    }

    pub fn v(&self) -> Point2 {
        Point2::new(3f64.sqrt() * self.beta as f64 * hex_side(), 0.0)
    }

    pub fn w(&self) -> Point2 {
        Point2::new(0.0, 1.5 * self.alpha as f64 * hex_side())
    }

    pub fn area(&self) -> f64 {
        self.v().x * self.w().y
    }

    /// Fundamental domain `[0, |v|] × [0, |w|]` as a region.
    pub fn domain(&self) -> Region {
        Region::rect(Point2::ORIGIN, Point2::new(self.v().x, self.w().y))
    }

    /// Representative in `(0, |v|] × (0, |w|]`.
    pub fn canonicalize(&self, p: Point2) -> Point2 {
        let vx = self.v().x;
        let wy = self.w().y;
        Point2::new(p.x - vx * ((p.x / vx).ceil() - 1.0), p.y - wy * ((p.y / wy).ceil() - 1.0))
    }

    pub fn shift(&self, i: i64, j: i64) -> Point2 {
        Point2::new(self.v().x * i as f64, self.w().y * j as f64)
    }

    /// Lattice shifts `g` for which `b + g` may meet `a`.
    pub fn shifts_between(&self, a: &BBox, b: &BBox) -> Vec<Point2> {
        let vx = self.v().x;
        let wy = self.w().y;
        let i0 = ((a.min.x - b.max.x) / vx).floor() as i64;
        let i1 = ((a.max.x - b.min.x) / vx).ceil() as i64;
        let j0 = ((a.min.y - b.max.y) / wy).floor() as i64;
        let j1 = ((a.max.y - b.min.y) / wy).ceil() as i64;
        let mut out = Vec::new();
        for i in i0..=i1 {
            for j in j0..=j1 {
                let g = self.shift(i, j);
                if a.overlaps(&b.translated(g)) {
                    out.push(g);
                }
            }
        }
        out
    }

    /// `|a ∩ b|` on the torus, with `a`, `b` given by planar lifts.
    pub fn intersection_area(&self, a: &Region, b: &Region) -> f64 {
        self.shifts_between(&a.bbox(), &b.bbox())
            .into_iter()
            .map(|g| intersection_area(a, &b.translated(g)))
            .sum()
    }

    /// Boundary pieces cut at the fundamental-domain lines and moved into it.
    pub fn wrap_edges(&self, edges: &[Edge], tol: f64) -> Vec<Edge> {
        let vx = self.v().x;
        let wy = self.w().y;
        let mut out = Vec::new();
        for e in edges {
            let mut pieces = vec![*e];
            for (n, period) in [(Point2::new(1.0, 0.0), vx), (Point2::new(0.0, 1.0), wy)] {
                let mut next = Vec::new();
                for p in pieces {
                    let b = p.bbox();
                    let (lo, hi) = if n.x > 0.0 { (b.min.x, b.max.x) } else { (b.min.y, b.max.y) };
                    let mut ts = Vec::new();
                    let k0 = (lo / period).floor() as i64;
                    let k1 = (hi / period).ceil() as i64;
                    for k in k0..=k1 {
                        ts.extend(line_params(&p, n, k as f64 * period));
                    }
                    ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
                    next.extend(super::edge::split_at(&p, &ts));
                }
                pieces = next;
            }
            for p in pieces {
                let m = p.midpoint();
                let mut i = (m.x / vx).floor();
                let mut j = (m.y / wy).floor();
                if m.x - i * vx > vx - tol {
                    i += 1.0;
                }
                if m.y - j * wy > wy - tol {
                    j += 1.0;
                }
                out.push(p.translated(Point2::new(-i * vx, -j * wy)));
            }
        }
        out
    }

    /// Length of the union of the projected boundaries.
    pub fn boundary_length(&self, edges: &[Edge], tol: f64) -> f64 {
        union_length(&self.wrap_edges(edges, tol), tol)
    }
}
