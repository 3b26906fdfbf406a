//! Equal-area partition of a set lying in a square frame: radial sectors from
//! the common centre, each cut into chambers by circular arcs about the centre.

use crate::consts::AREA_TOL;
use crate::error::{Error, Result};
use crate::geom::{intersection_area, norm_angle, overlay, Ambient, BoolOp, Cluster, Edge, Loop, Point2, Region, Square};
use crate::report::BoundReport;
use rayon::prelude::*;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, TAU};

/// Reference ceiling for the surgery constant used in the report inequality.
pub const SURGERY_C_CEILING: f64 = 10.0;

#[derive(Debug, Clone, PartialEq)]
pub struct SurgeryPlan {
    pub center: Point2,
    /// Half the difference of the frame sides.
    pub d: f64,
    /// Chambers per full sector.
    pub s: usize,
    /// Number of full sectors.
    pub k: usize,
    /// Chambers in the remainder sector.
    pub r: usize,
    /// Sector boundary angles, starting at 0 and ending at 2π.
    pub angles: Vec<f64>,
    /// Interior arc radii of each sector.
    pub radii: Vec<Vec<f64>>,
    /// Largest ratio of an arc length to its radial projection on the outer square.
    pub max_arc_projection_ratio: f64,
}

/// Area of the triangle `(0, a, b)` (counterclockwise) inside the disk of radius `rho`.
fn tri_disk(a: Point2, b: Point2, rho: f64) -> f64 {
    let d = b - a;
    let qa = d.norm2();
    let qb = 2.0 * a.dot(d);
    let qc = a.norm2() - rho * rho;
    let mut ts = vec![0.0];
    let disc = qb * qb - 4.0 * qa * qc;
    if disc > 0.0 && qa > 0.0 {
        let sq = disc.sqrt();
        for t in [(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)] {
            if t > 0.0 && t < 1.0 {
                ts.push(t);
            }
        }
    }
    ts.push(1.0);
    ts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut area = 0.0;
    for w in ts.windows(2) {
        let u = a + d * w[0];
        let v = a + d * w[1];
        let m = a + d * (0.5 * (w[0] + w[1]));
        if m.norm2() <= rho * rho {
            area += 0.5 * u.cross(v);
        } else {
            area += 0.5 * rho * rho * u.cross(v).atan2(u.dot(v));
        }
    }
    area
}

fn ray_hit(p: Point2, q: Point2, phi: f64) -> Point2 {
    let dir = Point2::polar(phi);
    let t = -dir.cross(p) / dir.cross(q - p);
    p + (q - p) * t
}

/// Signed area of `tri(0, p, q) ∩ W ∩ D` with `W` the wedge `[θa, θa + Δ]`.
fn tri_wedge_disk(p: Point2, q: Point2, theta_a: f64, delta: f64, rho: f64) -> f64 {
    let cr = p.cross(q);
    if cr.abs() <= 1e-300 {
        return 0.0;
    }
    let (p1, q1, sign) = if cr > 0.0 { (p, q, 1.0) } else { (q, p, -1.0) };
    let w = p1.cross(q1).atan2(p1.dot(q1));
    let a = norm_angle(p1.angle() - theta_a);
    let mut area = 0.0;
    for (lo, hi) in [(a.max(0.0), (a + w).min(delta)), (a.max(TAU), (a + w).min(TAU + delta))] {
        if hi > lo {
            let s1 = if lo == a { p1 } else { ray_hit(p1, q1, theta_a + lo) };
            let s2 = if hi == a + w { q1 } else { ray_hit(p1, q1, theta_a + hi) };
            area += tri_disk(s1, s2, rho);
        }
    }
    sign * area
}

/// `|A ∩ wedge(θa, θa+Δ) ∩ disk(O, ρ)|` for polygonal `A`.
fn wedge_disk_area(edges: &[(Point2, Point2)], theta_a: f64, delta: f64, rho: f64) -> f64 {
    edges.iter().map(|(p, q)| tri_wedge_disk(*p, *q, theta_a, delta, rho)).sum()
}

fn bisect(mut lo: f64, mut hi: f64, target: f64, f: impl Fn(f64) -> f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (f(lo) - target).abs() <= (f(hi) - target).abs() {
        lo
    } else {
        hi
    }
}

/// Region `{O + ρ u(θ) : θ ∈ [θa, θb], ρ ∈ [ρ0, ρ1]}`.
pub(crate) fn annular_sector(o: Point2, ta: f64, tb: f64, r0: f64, r1: f64) -> Region {
    let delta = tb - ta;
    if delta >= TAU - 1e-12 {
        let mut loops = vec![Loop::new(vec![Edge::arc_polar(o, r1, ta, TAU / 2.0), Edge::arc_polar(o, r1, ta + TAU / 2.0, TAU / 2.0)])];
        if r0 > 0.0 {
            loops.push(Loop::new(vec![Edge::arc_polar(o, r0, ta, -TAU / 2.0), Edge::arc_polar(o, r0, ta - TAU / 2.0, -TAU / 2.0)]));
        }
        return Region::from_loops_unchecked(loops);
    }
    let p2 = o + Point2::polar(ta) * r1;
    let p3 = o + Point2::polar(tb) * r1;
    let outer = Edge::arc(p2, p3, o, delta);
    let edges = if r0 > 0.0 {
        let p1 = o + Point2::polar(ta) * r0;
        let p4 = o + Point2::polar(tb) * r0;
        vec![Edge::seg(p1, p2), outer, Edge::seg(p3, p4), Edge::arc(p4, p1, o, -delta)]
    } else {
        vec![Edge::seg(o, p2), outer, Edge::seg(p3, o)]
    };
    Region::from_loops_unchecked(vec![Loop::new(edges)])
}

/// Length of the part of the boundary of the square (centre `o`, half side `h`)
/// hit by rays from `o` with angles in `[t0, t1]`.
pub(crate) fn radial_projection_length(h: f64, t0: f64, t1: f64) -> f64 {
    // breakpoints at the corner directions
    let mut pts = vec![t0];
    let mut c = ((t0 - FRAC_PI_4) / FRAC_PI_2).floor() * FRAC_PI_2 + FRAC_PI_4;
    while c < t1 {
        if c > t0 {
            pts.push(c);
        }
        c += FRAC_PI_2;
    }
    pts.push(t1);
    let mut len = 0.0;
    for w in pts.windows(2) {
        let mid = 0.5 * (w[0] + w[1]);
        let side = ((mid + FRAC_PI_4) / FRAC_PI_2).floor() * FRAC_PI_2;
        len += h * ((w[1] - side).tan() - (w[0] - side).tan()).abs();
    }
    len
}

/// Partition of `A ⊆ Q1 ∖ Q0` into `m` chambers of area `|A|/m`.
pub fn surgery_partition(q0: &Square, q1: &Square, a: &Region, m: usize) -> Result<(Cluster, SurgeryPlan, BoundReport)> {
    let area_a = a.area();
    if !(area_a > 0.0) {
        return Err(Error::Domain("surgery needs a set of positive area".into()));
    }
    if m == 0 {
        return Err(Error::Domain("surgery needs at least one chamber".into()));
    }
    if !a.is_polygonal() {
        return Err(Error::Unsupported("surgery accepts polygonal sets only".into()));
    }
    let scale = q1.side.max(1.0);
    if q0.center.dist(q1.center) > 1e-12 * scale || !(q0.side < q1.side) || !(q0.side >= 0.0) {
        return Err(Error::pre("frame", "Q0 must be compactly contained in a concentric Q1"));
    }
    let in_q0 = if q0.side > 0.0 { intersection_area(a, &q0.region()) } else { 0.0 };
    let in_q1 = intersection_area(a, &q1.region());
    if in_q0 > AREA_TOL * area_a || area_a - in_q1 > AREA_TOL * area_a {
        return Err(Error::pre("frame", "A must lie in Q1 minus Q0"));
    }
    let o = q1.center;
    let d = 0.5 * (q1.area().sqrt() - q0.area().sqrt());
    let s = ((d * (m as f64).sqrt() / area_a.sqrt()).ceil() as usize).max(1);
    let k = m / s;
    let r = m % s;
    let cell = area_a / m as f64;
    let edges: Vec<(Point2, Point2)> = a.edges().map(|e| (e.start() - o, e.end() - o)).collect();
    let rho_max = a.vertices().iter().map(|p| p.dist(o)).fold(0.0, f64::max) * 1.01 + 1e-9 * scale;
    let wedge_area = |t0: f64, t1: f64, rho: f64| wedge_disk_area(&edges, t0, t1 - t0, rho);

    let mut angles = vec![0.0];
    for i in 1..=k {
        if i == k && r == 0 {
            angles.push(TAU);
            break;
        }
        let target = (i * s) as f64 * cell;
        let prev = *angles.last().unwrap();
        angles.push(bisect(prev, TAU, target, |t| wedge_area(0.0, t, rho_max)));
    }
    if r > 0 {
        angles.push(TAU);
    }
    let counts: Vec<usize> = (0..angles.len() - 1).map(|i| if i < k { s } else { r }).collect();
    let radii: Vec<Vec<f64>> = (0..counts.len())
        .into_par_iter()
        .map(|i| {
            let (t0, t1) = (angles[i], angles[i + 1]);
            let mut rs: Vec<f64> = Vec::new();
            for j in 1..counts[i] {
                let lo = rs.last().copied().unwrap_or(0.0);
                rs.push(bisect(lo, rho_max, j as f64 * cell, |rho| wedge_area(t0, t1, rho)));
            }
            rs
        })
        .collect();
    let chambers: Vec<Region> = (0..counts.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut bounds = vec![0.0];
            bounds.extend(radii[i].iter().copied());
            bounds.push(rho_max);
            let (t0, t1) = (angles[i], angles[i + 1]);
            (0..bounds.len() - 1)
                .map(|j| overlay(a, &annular_sector(o, t0, t1, bounds[j], bounds[j + 1]), BoolOp::Intersection))
                .collect::<Vec<_>>()
        })
        .collect();
    let h1 = q1.side / 2.0;
    let mut max_ratio: f64 = 0.0;
    for c in &chambers {
        for e in c.edges() {
            if let Edge::Arc { from, sweep, .. } = *e {
                let a0 = (from - o).angle();
                let (t0, t1) = if sweep >= 0.0 { (a0, a0 + sweep) } else { (a0 + sweep, a0) };
                let proj = radial_projection_length(h1, t0, t1);
                max_ratio = max_ratio.max(e.length() / proj);
            }
        }
    }
    let cluster = Cluster::new(chambers, Ambient::Region(a.clone()))?;
    let plan = SurgeryPlan { center: o, d, s, k, r, angles, radii, max_arc_projection_ratio: max_ratio };
    let per = cluster.perimeter(None)?;
    let frame = q1.area() - q0.area();
    let scale_term = frame * (m as f64 / area_a).sqrt();
    let fitted = (per - a.perimeter()) / scale_term;
    let report = BoundReport::new("surgery", SURGERY_C_CEILING * scale_term + a.perimeter(), per, format!("q0={};q1={};M={m};area_A={area_a:.12e}", q0.side, q1.side))
        .with_fitted(Some(fitted));
    Ok((cluster, plan, report))
}

/// The full frame `Q1 ∖ Q0`.
pub fn frame(q0: &Square, q1: &Square) -> Region {
    let mut loops = q1.region().into_loops();
    loops.push(q0.region().into_loops().remove(0).reversed());
    Region::from_loops_unchecked(loops)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(side: f64) -> Square {
        Square::new(Point2::ORIGIN, side)
    }

    #[test]
    fn wedge_area_of_square() {
        let s = Region::square(Point2::ORIGIN, 2.0);
        let e: Vec<(Point2, Point2)> = s.edges().map(|e| (e.start(), e.end())).collect();
        assert!((wedge_disk_area(&e, 0.0, TAU, 10.0) - 4.0).abs() < 1e-14);
        assert!((wedge_disk_area(&e, 0.0, FRAC_PI_4, 10.0) - 0.5).abs() < 1e-14);
        assert!((wedge_disk_area(&e, 0.3, TAU, 0.5) - std::f64::consts::PI * 0.25).abs() < 1e-14);
        // wrap-around wedge
        assert!((wedge_disk_area(&e, TAU - FRAC_PI_4, FRAC_PI_2, 10.0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn projection_of_full_turn_is_perimeter() {
        assert!((radial_projection_length(1.0, 0.0, TAU) - 8.0).abs() < 1e-12);
        assert!((radial_projection_length(1.0, -FRAC_PI_4, FRAC_PI_4) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn single_chamber() {
        let a = frame(&sq(1.0), &sq(3.0));
        let (c, plan, rep) = surgery_partition(&sq(1.0), &sq(3.0), &a, 1).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(plan.s, 1);
        assert!((c.chambers()[0].area() - 8.0).abs() < 1e-12);
        assert!(rep.fitted_constant.unwrap().abs() < 1e-9);
    }

    #[test]
    fn hundred_chambers() {
        let a = frame(&sq(1.0), &sq(3.0));
        let (c, plan, rep) = surgery_partition(&sq(1.0), &sq(3.0), &a, 100).unwrap();
        assert_eq!(plan.s, 4);
        assert_eq!(c.len(), 100);
        for x in c.areas() {
            assert!((x - 0.08).abs() < 1e-9 * 0.08, "{x}");
        }
        assert!(rep.satisfied());
        assert!(plan.max_arc_projection_ratio <= 1.0 + 1e-12);
    }

    #[test]
    fn eight_chambers_sector_bound() {
        let a = frame(&sq(1.0), &sq(3.0));
        let (_, plan, _) = surgery_partition(&sq(1.0), &sq(3.0), &a, 8).unwrap();
        assert!(plan.k as f64 <= (8.0f64 * 8.0).sqrt() / plan.d + 1e-12);
        assert_eq!(plan.k * plan.s + plan.r, 8);
    }

    #[test]
    fn errors() {
        let a = frame(&sq(1.0), &sq(3.0));
        assert!(surgery_partition(&sq(1.0), &sq(3.0), &a, 0).is_err());
        assert!(surgery_partition(&sq(1.0), &sq(3.0), &Region::empty(), 3).is_err());
    }
}
