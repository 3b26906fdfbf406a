//! Chordal isoperimetric inequality and the quantitative hexagon inequality
//! for chambers that perturb a convex polygon with the same corners.

use super::arc::{arc, arc_half_angle, arc_t};
use super::ngon::{fit_regular_ngon, polygon_area, polygon_centroid};
use crate::consts::hex_perimeter;
use crate::error::{Error, Result};
use crate::geom::{overlay, x_minus_sin, BoolOp, Edge, Loop, Point2, Region};
use crate::report::BoundReport;
use std::f64::consts::PI;

/// Circular arc from `p` to `q` bounding area `|area|` with the chord; positive
/// areas bulge to the right of `p → q` (outwards for counterclockwise loops).
pub fn bulge_edge(p: Point2, q: Point2, area: f64) -> Result<Edge> {
    let l = p.dist(q);
    if area.abs() <= 1e-12 * l * l {
        return Ok(Edge::seg(p, q));
    }
    let phi = arc_half_angle(area.abs() / (l * l))?;
    let r = l / (2.0 * phi.sin());
    if r > 1e6 * l {
        // the centre would carry less precision than the endpoints
        return Err(Error::Domain(format!("bulge area {area} is too small to draw as an arc over a chord of length {l}")));
    }
    let mid = (p + q) * 0.5;
    let left = (q - p).perp().normalized();
    let sign = area.signum();
    let center = mid + left * (sign * r * phi.cos());
    Ok(Edge::arc(p, q, center, sign * 2.0 * phi))
}

/// Counterclockwise polygon with side `i` (from vertex `i` to `i+1`) replaced
/// by a circular arc enclosing signed area `areas[i]`.
pub fn bulged_polygon(vertices: &[Point2], areas: &[f64]) -> Result<Region> {
    let n = vertices.len();
    if areas.len() != n || n < 3 {
        return Err(Error::Domain("one area per side of a polygon is required".into()));
    }
    let edges = (0..n)
        .map(|i| bulge_edge(vertices[i], vertices[(i + 1) % n], areas[i]))
        .collect::<Result<Vec<_>>>()?;
    Region::new(vec![Loop::new(edges)])
}

/// Counterclockwise copy of a strictly convex polygon, or `None`.
pub(crate) fn convex_ccw(vs: &[Point2]) -> Option<Vec<Point2>> {
    let n = vs.len();
    if n < 3 {
        return None;
    }
    let mut v = vs.to_vec();
    if polygon_area(&v) < 0.0 {
        v.reverse();
    }
    let scale = v.iter().map(|p| p.norm()).fold(1.0, f64::max);
    for i in 0..n {
        let a = v[i];
        let b = v[(i + 1) % n];
        let c = v[(i + 2) % n];
        if (b - a).cross(c - b) <= 1e-14 * scale * scale {
            return None;
        }
    }
    Some(v)
}

/// Side lengths `ℓ_i` of Π and areas `a_i` between side `i` of Π and the
/// corresponding boundary arc of `E`.
#[derive(Debug, Clone, PartialEq)]
pub struct SideDecomposition {
    pub vertices: Vec<Point2>,
    pub lengths: Vec<f64>,
    pub areas: Vec<f64>,
}

impl SideDecomposition {
    pub fn sym_diff(&self) -> f64 {
        self.areas.iter().sum()
    }

    pub fn perimeter(&self) -> f64 {
        self.lengths.iter().sum()
    }
}

/// Areas read directly off the edges when each side of Π is spanned by
/// exactly one edge of `E`, as for bulged polygons.
fn edgewise_areas(e: &Region, v: &[Point2], tol: f64) -> Option<Vec<f64>> {
    let [l] = e.loops() else { return None };
    let n = v.len();
    if l.edges.len() != n {
        return None;
    }
    let k = l.edges.iter().position(|x| x.start().dist(v[0]) <= tol)?;
    let mut areas = Vec::with_capacity(n);
    for i in 0..n {
        let ed = &l.edges[(k + i) % n];
        if ed.start().dist(v[i]) > tol || ed.end().dist(v[(i + 1) % n]) > tol {
            return None;
        }
        areas.push(match *ed {
            Edge::Segment { .. } => 0.0,
            Edge::Arc { sweep, .. } => 0.5 * ed.radius().powi(2) * x_minus_sin(sweep.abs()),
        });
    }
    Some(areas)
}

pub fn side_decomposition(e: &Region, pi: &[Point2]) -> Result<SideDecomposition> {
    let v = convex_ccw(pi).ok_or_else(|| Error::Domain("polygon is not strictly convex".into()))?;
    let n = v.len();
    let scale = e.bbox().diagonal().max(1e-300);
    for (i, p) in v.iter().enumerate() {
        if e.distance_to_boundary(*p) > 1e-9 * scale {
            return Err(Error::Domain(format!("vertex {} of the polygon is not on the chamber boundary", i + 1)));
        }
    }
    let lengths: Vec<f64> = (0..n).map(|i| v[i].dist(v[(i + 1) % n])).collect();
    if let Some(areas) = edgewise_areas(e, &v, 1e-12 * scale) {
        return Ok(SideDecomposition { vertices: v, lengths, areas });
    }
    let piv = Region::polygon(&v)?;
    let diff = overlay(e, &piv, BoolOp::SymmetricDifference);
    let c = polygon_centroid(&v);
    let k = 10.0 * (scale + e.bbox().center().dist(c)) / v.iter().map(|p| p.dist(c)).fold(f64::INFINITY, f64::min);
    let mut areas = Vec::with_capacity(n);
    for i in 0..n {
        let a = v[i];
        let b = v[(i + 1) % n];
        let wedge = Region::from_loops_unchecked(vec![Loop::polygon(&[c, c + (a - c) * k, c + (b - c) * k])]);
        areas.push(if diff.is_empty() { 0.0 } else { overlay(&diff, &wedge, BoolOp::Intersection).area() });
    }
    Ok(SideDecomposition { vertices: v, lengths, areas })
}

fn check_small(d: &SideDecomposition, unit_sides: bool) -> Result<()> {
    for (i, (&l, &a)) in d.lengths.iter().zip(&d.areas).enumerate() {
        if unit_sides && l > 1.0 + 1e-12 {
            return Err(Error::pre("l_i <= 1", format!("side {} has length {l}", i + 1)));
        }
        if a / (l * l) > PI / 8.0 {
            return Err(Error::pre("a_i/l_i^2 <= pi/8", format!("side {}: a_i/l_i^2 = {}", i + 1, a / (l * l))));
        }
    }
    Ok(())
}

/// `P(E) ≥ P(Π) · arc(|E Δ Π| / P(Π))`.
pub fn chordal_check(e: &Region, pi: &[Point2]) -> Result<BoundReport> {
    let d = side_decomposition(e, pi)?;
    check_small(&d, true)?;
    let p = d.perimeter();
    let rhs = p * arc(d.sym_diff() / p)?;
    Ok(BoundReport::new("chordal", e.perimeter(), rhs, format!("n={};symdiff={:.6e}", d.lengths.len(), d.sym_diff())))
}

/// `P(E) ≥ Σ arc_{ℓ_i}(a_i)` (side-by-side Dido bound); equality when every
/// side of `E` is a circular arc.
pub fn dido_check(e: &Region, pi: &[Point2]) -> Result<BoundReport> {
    let d = side_decomposition(e, pi)?;
    check_small(&d, true)?;
    let mut rhs = 0.0;
    for (&l, &a) in d.lengths.iter().zip(&d.areas) {
        rhs += arc_t(a, l)?;
    }
    Ok(BoundReport::new("dido", e.perimeter(), rhs, format!("n={};symdiff={:.6e}", d.lengths.len(), d.sym_diff())))
}

/// `P(E) ≥ P(H) + P(H)/2 (|Π| − |E|) + c₁ (|E Δ Π|² + hd(∂Π, ∂H_*)²)` for a
/// unit-area chamber; the report is taken at `c₁ = 0` and carries the fitted `c₁`.
pub fn hexagon_unit_inequality(e: &Region, pi: &[Point2]) -> Result<BoundReport> {
    let ae = e.area();
    if (ae - 1.0).abs() > 1e-9 {
        return Err(Error::pre("|E| = 1", format!("chamber area {ae}")));
    }
    let d = side_decomposition(e, pi)?;
    if d.lengths.len() != 6 {
        return Err(Error::Domain("Π must be a hexagon".into()));
    }
    check_small(&d, false)?;
    let ph = hex_perimeter();
    for (i, &l) in d.lengths.iter().enumerate() {
        if (l - ph / 6.0).abs() > 0.1 {
            return Err(Error::pre("|l_i - P(H)/6| <= 0.1", format!("side {} has length {l}", i + 1)));
        }
    }
    let api = polygon_area(&d.vertices);
    let c = polygon_centroid(&d.vertices);
    let s = api.sqrt();
    let unit: Vec<Point2> = d.vertices.iter().map(|p| c + (*p - c) / s).collect();
    let fit = fit_regular_ngon(&unit, 6)?;
    let hd = fit.hd * s;
    let base = ph + ph / 2.0 * (api - ae);
    let pe = e.perimeter();
    let extra = d.sym_diff().powi(2) + hd * hd;
    let c1 = if extra > 1e-20 { Some((pe - base) / extra) } else { None };
    Ok(BoundReport::new("hexagon_unit", pe, base, format!("area_pi={api:.12e};symdiff={:.6e};hd={hd:.6e}", d.sym_diff()))
        .with_fitted(c1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::hex_side;
    use crate::geom::Point2;

    fn unit_hex() -> Vec<Point2> {
        Region::regular_polygon(6, Point2::ORIGIN, hex_side(), PI / 6.0).polygon_vertices().unwrap()
    }

    #[test]
    fn bulge_has_requested_area() {
        let v = unit_hex();
        let r = bulged_polygon(&v, &[0.01, 0.0, -0.02, 0.0, 0.0, 0.0]).unwrap();
        assert!((r.area() - (1.0 + 0.01 - 0.02)).abs() < 1e-13);
        let d = side_decomposition(&r, &v).unwrap();
        assert!((d.areas[0] - 0.01).abs() < 1e-13);
        assert!((d.areas[2] - 0.02).abs() < 1e-13);
        assert!(d.areas[1].abs() < 1e-15);
    }

    #[test]
    fn polygon_itself_is_tight() {
        let v = unit_hex();
        let e = Region::polygon(&v).unwrap();
        let r = chordal_check(&e, &v).unwrap();
        assert!(r.slack.abs() < 1e-12);
        let h = hexagon_unit_inequality(&e, &v).unwrap();
        assert!(h.slack.abs() < 1e-12 && h.fitted_constant.is_none());
    }

    #[test]
    fn single_bulge_is_dido_tight() {
        let v = unit_hex();
        let e = bulged_polygon(&v, &[1e-2, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let r = dido_check(&e, &v).unwrap();
        assert!(r.slack.abs() < 1e-8 * r.lhs);
        assert!(chordal_check(&e, &v).unwrap().strictly_satisfied());
    }

    #[test]
    fn non_convex_rejected() {
        let v = vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.2, 0.2), Point2::new(0.0, 1.0)];
        let e = Region::polygon(&v).unwrap();
        assert!(matches!(chordal_check(&e, &v), Err(Error::Domain(_))));
    }
}
