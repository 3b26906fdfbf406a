use super::point::{BBox, Point2};
use std::f64::consts::{PI, TAU};

/// A boundary piece: straight segment or circular arc.
///
/// Arcs run from `from` to `to` around `center`; positive `sweep` is counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Edge {
    Segment { from: Point2, to: Point2 },
    Arc { from: Point2, to: Point2, center: Point2, sweep: f64 },
}

/// `x - sin x`, accurate for small arguments.
pub(crate) fn x_minus_sin(x: f64) -> f64 {
    if x.abs() < 1e-2 {
        let x2 = x * x;
        x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)))
    } else {
        x - x.sin()
    }
}

/// Angle in `[0, 2π)`.
pub(crate) fn norm_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

impl Edge {
    pub fn seg(from: Point2, to: Point2) -> Edge {
        Edge::Segment { from, to }
    }

    pub fn arc(from: Point2, to: Point2, center: Point2, sweep: f64) -> Edge {
        Edge::Arc { from, to, center, sweep }
    }

    /// Arc around `center` starting at angle `a0` with radius `r`.
    pub fn arc_polar(center: Point2, r: f64, a0: f64, sweep: f64) -> Edge {
        Edge::Arc {
            from: center + Point2::polar(a0) * r,
            to: center + Point2::polar(a0 + sweep) * r,
            center,
            sweep,
        }
    }

    pub fn start(&self) -> Point2 {
        match *self {
            Edge::Segment { from, .. } | Edge::Arc { from, .. } => from,
        }
    }

    pub fn end(&self) -> Point2 {
        match *self {
            Edge::Segment { to, .. } | Edge::Arc { to, .. } => to,
        }
    }

    pub fn is_arc(&self) -> bool {
        matches!(self, Edge::Arc { .. })
    }

    pub fn radius(&self) -> f64 {
        match *self {
            Edge::Segment { .. } => f64::INFINITY,
            Edge::Arc { from, center, .. } => from.dist(center),
        }
    }

    fn start_angle(&self) -> f64 {
        match *self {
            Edge::Arc { from, center, .. } => (from - center).angle(),
            _ => 0.0,
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            Edge::Segment { from, to } => from.dist(to),
            Edge::Arc { sweep, .. } => self.radius() * sweep.abs(),
        }
    }

    /// Contribution of the edge to `½∮(x dy - y dx)`.
    pub fn area_term(&self) -> f64 {
        self.area_term_about(Point2::ORIGIN)
    }

    /// Same as [`Edge::area_term`] with `o` as origin.
    pub fn area_term_about(&self, o: Point2) -> f64 {
        match *self {
            Edge::Segment { from, to } => 0.5 * (from - o).cross(to - o),
            Edge::Arc { from, to, sweep, .. } => {
                let r = self.radius();
                0.5 * (from - o).cross(to - o) + 0.5 * r * r * x_minus_sin(sweep)
            }
        }
    }

    pub fn point_at(&self, t: f64) -> Point2 {
        if t <= 0.0 {
            return self.start();
        }
        if t >= 1.0 {
            return self.end();
        }
        match *self {
            Edge::Segment { from, to } => from.lerp(to, t),
            Edge::Arc { center, sweep, .. } => {
                center + Point2::polar(self.start_angle() + t * sweep) * self.radius()
            }
        }
    }

    pub fn midpoint(&self) -> Point2 {
        self.point_at(0.5)
    }

    /// Unit tangent in the direction of travel.
    pub fn tangent_at(&self, t: f64) -> Point2 {
        match *self {
            Edge::Segment { from, to } => (to - from).normalized(),
            Edge::Arc { center, sweep, .. } => {
                let p = Point2::polar(self.start_angle() + t.clamp(0.0, 1.0) * sweep);
                let _ = center;
                if sweep >= 0.0 {
                    p.perp()
                } else {
                    -p.perp()
                }
            }
        }
    }

    pub fn reversed(&self) -> Edge {
        match *self {
            Edge::Segment { from, to } => Edge::Segment { from: to, to: from },
            Edge::Arc { from, to, center, sweep } => Edge::Arc { from: to, to: from, center, sweep: -sweep },
        }
    }

    pub fn map_points(&self, f: impl Fn(Point2) -> Point2) -> Edge {
        match *self {
            Edge::Segment { from, to } => Edge::Segment { from: f(from), to: f(to) },
            Edge::Arc { from, to, center, sweep } => Edge::Arc { from: f(from), to: f(to), center: f(center), sweep },
        }
    }

    pub fn translated(&self, v: Point2) -> Edge {
        self.map_points(|p| p + v)
    }

    pub fn bbox(&self) -> BBox {
        let mut b = BBox::empty();
        b.include(self.start());
        b.include(self.end());
        if let Edge::Arc { center, sweep, .. } = *self {
            let r = self.radius();
            let a0 = self.start_angle();
            for k in 0..4 {
                let ang = k as f64 * PI / 2.0;
                if self.angle_in_sweep(a0, sweep, ang, 0.0).is_some() {
                    b.include(center + Point2::polar(ang) * r);
                }
            }
        }
        b
    }

    /// Fraction along the sweep at which direction `ang` is reached, if within it.
    fn angle_in_sweep(&self, a0: f64, sweep: f64, ang: f64, tol_ang: f64) -> Option<f64> {
        let d = if sweep >= 0.0 {
            norm_angle(ang - a0)
        } else {
            norm_angle(a0 - ang)
        };
        let s = sweep.abs();
        if d <= s + tol_ang {
            Some((d / s).min(1.0))
        } else if TAU - d <= tol_ang {
            Some(0.0)
        } else {
            None
        }
    }

    /// Parameter of a point assumed to lie on the edge.
    pub fn param_of(&self, p: Point2) -> f64 {
        match *self {
            Edge::Segment { from, to } => {
                let d = to - from;
                ((p - from).dot(d) / d.norm2()).clamp(0.0, 1.0)
            }
            Edge::Arc { center, sweep, .. } => {
                let a0 = self.start_angle();
                let ang = (p - center).angle();
                let d = if sweep >= 0.0 { norm_angle(ang - a0) } else { norm_angle(a0 - ang) };
                let s = sweep.abs();
                if d <= s {
                    d / s
                } else if TAU - d < d - s {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }

    /// Sub-edge between parameters `t0 < t1` with explicit endpoints.
    pub(crate) fn sub_edge(&self, t0: f64, t1: f64, p0: Point2, p1: Point2) -> Edge {
        match *self {
            Edge::Segment { .. } => Edge::Segment { from: p0, to: p1 },
            Edge::Arc { center, sweep, .. } => Edge::Arc { from: p0, to: p1, center, sweep: (t1 - t0) * sweep },
        }
    }

    /// Closest point on the edge to `p` and its distance.
    pub fn distance_to(&self, p: Point2) -> f64 {
        match *self {
            Edge::Segment { from, to } => {
                let d = to - from;
                let l2 = d.norm2();
                if l2 == 0.0 {
                    return p.dist(from);
                }
                let t = ((p - from).dot(d) / l2).clamp(0.0, 1.0);
                p.dist(from + d * t)
            }
            Edge::Arc { center, sweep, from, to } => {
                let r = self.radius();
                let v = p - center;
                if v.norm() > 0.0 && self.angle_in_sweep(self.start_angle(), sweep, v.angle(), 0.0).is_some() {
                    (v.norm() - r).abs()
                } else {
                    p.dist(from).min(p.dist(to))
                }
            }
        }
    }

    /// Angle swept by the edge as seen from `p`, with the circular-segment correction
    /// for arcs so that loop sums give winding numbers.
    pub(crate) fn winding_angle(&self, p: Point2) -> f64 {
        let a = self.start() - p;
        let b = self.end() - p;
        let chord = a.cross(b).atan2(a.dot(b));
        match *self {
            Edge::Segment { .. } => chord,
            Edge::Arc { center, sweep, from, to } => {
                let r = self.radius();
                if p.dist(center) >= r {
                    return chord;
                }
                let m = self.midpoint();
                let c = to - from;
                let side_p = c.cross(p - from);
                let side_m = c.cross(m - from);
                if side_p.abs() <= 1e-12 * c.norm2() {
                    // p on the chord: the chord angle is ±π with an unreliable sign
                    let h = m - p;
                    a.cross(h).atan2(a.dot(h)) + h.cross(b).atan2(h.dot(b))
                } else if side_p * side_m > 0.0 {
                    chord + TAU * sweep.signum()
                } else {
                    chord
                }
            }
        }
    }
}

/// Intersection points of two edges, including endpoints of collinear or
/// co-circular overlaps. Points may be returned near endpoints; callers snap.
pub(crate) fn edge_intersections(e1: &Edge, e2: &Edge, tol: f64) -> Vec<Point2> {
    let mut out = Vec::new();
    match (e1, e2) {
        (Edge::Segment { from: a, to: b }, Edge::Segment { from: c, to: d }) => {
            seg_seg(*a, *b, *c, *d, tol, &mut out);
        }
        (Edge::Segment { from, to }, arc @ Edge::Arc { .. }) | (arc @ Edge::Arc { .. }, Edge::Segment { from, to }) => {
            seg_arc(*from, *to, arc, tol, &mut out);
        }
        (Edge::Arc { .. }, Edge::Arc { .. }) => arc_arc(e1, e2, tol, &mut out),
    }
    out
}

fn on_segment(p: Point2, a: Point2, b: Point2, tol: f64) -> bool {
    Edge::seg(a, b).distance_to(p) <= tol
}

fn seg_seg(a: Point2, b: Point2, c: Point2, d: Point2, tol: f64, out: &mut Vec<Point2>) {
    let r = b - a;
    let s = d - c;
    let rl = r.norm();
    let sl = s.norm();
    if rl == 0.0 || sl == 0.0 {
        return;
    }
    let denom = r.cross(s);
    let qp = c - a;
    // Near-parallel: report endpoint contacts only.
    if denom.abs() <= 1e-12 * rl * sl {
        for p in [c, d] {
            if on_segment(p, a, b, tol) {
                out.push(p);
            }
        }
        for p in [a, b] {
            if on_segment(p, c, d, tol) {
                out.push(p);
            }
        }
        return;
    }
    let t = qp.cross(s) / denom;
    let u = qp.cross(r) / denom;
    let tt = tol / rl;
    let tu = tol / sl;
    if t >= -tt && t <= 1.0 + tt && u >= -tu && u <= 1.0 + tu {
        // Prefer exact endpoints when contact is at an endpoint.
        let p = if t.abs() <= tt {
            a
        } else if (1.0 - t).abs() <= tt {
            b
        } else if u.abs() <= tu {
            c
        } else if (1.0 - u).abs() <= tu {
            d
        } else {
            a + r * t
        };
        out.push(p);
    }
    for p in [a, b] {
        if on_segment(p, c, d, tol) {
            out.push(p);
        }
    }
    for p in [c, d] {
        if on_segment(p, a, b, tol) {
            out.push(p);
        }
    }
}

fn on_arc(arc: &Edge, p: Point2, tol: f64) -> bool {
    arc.distance_to(p) <= tol
}

fn seg_arc(a: Point2, b: Point2, arc: &Edge, tol: f64, out: &mut Vec<Point2>) {
    let (center, r) = match *arc {
        Edge::Arc { center, .. } => (center, arc.radius()),
        _ => unreachable!(),
    };
    let d = b - a;
    let l = d.norm();
    if l == 0.0 {
        return;
    }
    let u = d / l;
    let f = a - center;
    let proj = f.dot(u);
    let perp2 = f.norm2() - proj * proj;
    let disc = r * r - perp2;
    let mut cand = Vec::new();
    if disc >= 0.0 {
        let h = disc.sqrt();
        cand.push(-proj - h);
        if h > 0.0 {
            cand.push(-proj + h);
        }
    } else if (perp2.sqrt() - r).abs() <= tol {
        cand.push(-proj);
    }
    for t in cand {
        if t >= -tol && t <= l + tol {
            let p = a + u * t.clamp(0.0, l);
            if on_arc(arc, p, tol) {
                out.push(p);
            }
        }
    }
    for p in [a, b] {
        if on_arc(arc, p, tol) {
            out.push(p);
        }
    }
    for p in [arc.start(), arc.end()] {
        if on_segment(p, a, b, tol) {
            out.push(p);
        }
    }
}

fn arc_arc(e1: &Edge, e2: &Edge, tol: f64, out: &mut Vec<Point2>) {
    let (c1, c2) = match (e1, e2) {
        (Edge::Arc { center: c1, .. }, Edge::Arc { center: c2, .. }) => (*c1, *c2),
        _ => unreachable!(),
    };
    let r1 = e1.radius();
    let r2 = e2.radius();
    let dvec = c2 - c1;
    let d = dvec.norm();
    if d > tol || (r1 - r2).abs() > tol {
        if d > r1 + r2 + tol || d < (r1 - r2).abs() - tol || d == 0.0 {
            // no crossing of the full circles
        } else {
            let a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
            let h2 = r1 * r1 - a * a;
            let h = if h2 > 0.0 { h2.sqrt() } else { 0.0 };
            let base = c1 + dvec * (a / d);
            let n = dvec.perp() / d;
            let pts = if h > 0.0 { vec![base + n * h, base - n * h] } else { vec![base] };
            for p in pts {
                if on_arc(e1, p, tol) && on_arc(e2, p, tol) {
                    out.push(p);
                }
            }
        }
    }
    for p in [e1.start(), e1.end()] {
        if on_arc(e2, p, tol) {
            out.push(p);
        }
    }
    for p in [e2.start(), e2.end()] {
        if on_arc(e1, p, tol) {
            out.push(p);
        }
    }
}

/// Intersections of an edge with the infinite line `{p : n·p = c}` (`n` unit).
pub(crate) fn line_params(e: &Edge, n: Point2, c: f64) -> Vec<f64> {
    let mut ts = Vec::new();
    match *e {
        Edge::Segment { from, to } => {
            let fa = n.dot(from) - c;
            let fb = n.dot(to) - c;
            if (fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0) {
                ts.push(fa / (fa - fb));
            }
        }
        Edge::Arc { center, .. } => {
            let r = e.radius();
            let dc = n.dot(center) - c;
            if dc.abs() < r {
                let h = (r * r - dc * dc).sqrt();
                let foot = center - n * dc;
                let dir = n.perp();
                for p in [foot + dir * h, foot - dir * h] {
                    if e.distance_to(p) <= 1e-12 * r.max(1.0) {
                        let t = e.param_of(p);
                        if t > 0.0 && t < 1.0 {
                            ts.push(t);
                        }
                    }
                }
            }
        }
    }
    ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ts
}

/// Splits an edge into pieces at the given sorted interior parameters.
pub(crate) fn split_at(e: &Edge, ts: &[f64]) -> Vec<Edge> {
    let mut out = Vec::with_capacity(ts.len() + 1);
    let mut t0 = 0.0;
    let mut p0 = e.start();
    for &t in ts.iter().chain(std::iter::once(&1.0)) {
        if t <= t0 {
            continue;
        }
        let p1 = e.point_at(t);
        out.push(e.sub_edge(t0, t, p0, p1));
        t0 = t;
        p0 = p1;
    }
    out
}
