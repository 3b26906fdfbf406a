use crate::error::{Error, Result};
use crate::geom::{Edge, Loop, Point2, Region};
use crate::stability::{convex_ccw, polygon_area};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Cheeger constant of a convex polygon together with its Cheeger set.
#[derive(Debug, Clone, PartialEq)]
pub struct CheegerResult {
    pub h: f64,
    /// Radius of the corner arcs, `1/h`.
    pub r: f64,
    /// Inner parallel polygon `K_{-r}`.
    pub inner: Vec<Point2>,
    /// `K_{-r} ⊕ B_r`.
    pub set: Region,
}

/// `P(r)/|r|`.
pub fn h_ratio(r: &Region) -> Result<f64> {
    let a = r.area();
    if !(a > 0.0) {
        return Err(Error::Domain(format!("ratio needs positive area, got {a}")));
    }
    Ok(r.perimeter() / a)
}

#[derive(Clone, Copy)]
struct Line {
    p: Point2,
    d: Point2,
    angle: f64,
}

impl Line {
    fn side(&self, x: Point2) -> f64 {
        self.d.cross(x - self.p)
    }
}

fn meet(a: &Line, b: &Line) -> Option<Point2> {
    let den = a.d.cross(b.d);
    if den.abs() <= 1e-300 {
        return None;
    }
    let t = (b.p - a.p).cross(b.d) / den;
    Some(a.p + a.d * t)
}

/// Intersection of the left half-planes of `lines`, assumed bounded.
fn halfplane_intersection(mut lines: Vec<Line>, eps: f64) -> Vec<Point2> {
    lines.sort_by(|a, b| a.angle.partial_cmp(&b.angle).unwrap());
    // keep the innermost of parallel lines
    let mut uniq: Vec<Line> = Vec::with_capacity(lines.len());
    for l in lines {
        if let Some(last) = uniq.last_mut() {
            if (l.angle - last.angle).abs() <= 1e-15 {
                if last.side(l.p) > 0.0 {
                    *last = l;
                }
                continue;
            }
        }
        uniq.push(l);
    }
    let mut dq: std::collections::VecDeque<Line> = std::collections::VecDeque::new();
    let out = |l: &Line, a: &Line, b: &Line| meet(a, b).map_or(true, |x| l.side(x) <= eps * l.d.norm());
    for l in uniq {
        while dq.len() >= 2 && out(&l, &dq[dq.len() - 2], &dq[dq.len() - 1]) {
            dq.pop_back();
        }
        while dq.len() >= 2 && out(&l, &dq[0], &dq[1]) {
            dq.pop_front();
        }
        dq.push_back(l);
    }
    while dq.len() >= 3 && out(&dq[0], &dq[dq.len() - 2], &dq[dq.len() - 1]) {
        dq.pop_back();
    }
    while dq.len() >= 3 && out(&dq[dq.len() - 1], &dq[0], &dq[1]) {
        dq.pop_front();
    }
    if dq.len() < 3 {
        return Vec::new();
    }
    let n = dq.len();
    let mut v = Vec::with_capacity(n);
    for i in 0..n {
        match meet(&dq[i], &dq[(i + 1) % n]) {
            Some(x) => v.push(x),
            None => return Vec::new(),
        }
    }
    v
}

/// Vertices of `K_{-r}` for a counterclockwise convex polygon, empty when the
/// offset has no interior.
pub fn inner_parallel(k: &[Point2], r: f64) -> Vec<Point2> {
    let n = k.len();
    let scale = k.iter().map(|p| p.norm()).fold(1.0, f64::max);
    let lines: Vec<Line> = (0..n)
        .map(|i| {
            let d = k[(i + 1) % n] - k[i];
            let inward = d.perp().normalized();
            Line { p: k[i] + inward * r, d, angle: d.angle() }
        })
        .collect();
    let v = halfplane_intersection(lines.clone(), 1e-14 * scale);
    if v.len() < 3 || polygon_area(&v) <= 0.0 {
        return Vec::new();
    }
    // every constraint must hold at the support vertex of its normal
    let tol = 1e-10 * scale;
    let m = v.len();
    let mut sorted = lines;
    sorted.sort_by(|a, b| a.angle.partial_cmp(&b.angle).unwrap());
    let depth = |l: &Line, x: Point2| -l.side(x) / l.d.norm();
    let mut j = (0..m).max_by(|&a, &b| depth(&sorted[0], v[a]).partial_cmp(&depth(&sorted[0], v[b])).unwrap()).unwrap();
    for l in &sorted {
        let mut steps = 0;
        while steps < m && depth(l, v[(j + 1) % m]) >= depth(l, v[j]) {
            j = (j + 1) % m;
            steps += 1;
        }
        if depth(l, v[j]) > tol {
            return Vec::new();
        }
    }
    dedup(v, 1e-13 * scale)
}

fn dedup(v: Vec<Point2>, tol: f64) -> Vec<Point2> {
    let mut out: Vec<Point2> = Vec::with_capacity(v.len());
    for p in v {
        if out.last().map_or(true, |q| q.dist(p) > tol) {
            out.push(p);
        }
    }
    while out.len() > 1 && out[0].dist(*out.last().unwrap()) <= tol {
        out.pop();
    }
    out
}

/// Boundary of `inner ⊕ B_r`: inner edges pushed out by `r`, joined by arcs
/// of radius `r` about the inner vertices.
fn rounded(inner: &[Point2], r: f64) -> Result<Region> {
    let m = inner.len();
    let normal = |j: usize| -> Point2 { -(inner[(j + 1) % m] - inner[j]).perp().normalized() };
    let mut edges = Vec::with_capacity(2 * m);
    for j in 0..m {
        let w = inner[j];
        let n_in = normal((j + m - 1) % m);
        let n_out = normal(j);
        let sweep = n_in.cross(n_out).atan2(n_in.dot(n_out));
        if sweep > 1e-12 {
            edges.push(Edge::arc(w + n_in * r, w + n_out * r, w, sweep));
        }
        edges.push(Edge::seg(w + n_out * r, inner[(j + 1) % m] + n_out * r));
    }
    // close small gaps left by skipped arcs
    let k = edges.len();
    for i in 0..k {
        let end = edges[i].end();
        let next = edges[(i + 1) % k];
        if let Edge::Segment { to, .. } = next {
            if end.dist(next.start()) > 0.0 {
                edges[(i + 1) % k] = Edge::seg(end, to);
            }
        }
    }
    Region::new(vec![Loop::new(edges)])
}

/// Cheeger constant of a convex polygon, from `|K_{-r}| = π r²`.
pub fn cheeger_convex(k: &Region) -> Result<CheegerResult> {
    let verts = k
        .polygon_vertices()
        .ok_or_else(|| Error::Domain("Cheeger constant needs a single polygonal loop".into()))?;
    let verts = convex_ccw(&verts).ok_or_else(|| Error::Domain("polygon is not strictly convex".into()))?;
    let area = polygon_area(&verts);
    if !(area > 0.0) {
        return Err(Error::Domain("polygon has no interior".into()));
    }
    let f = |r: f64| -> f64 {
        let inner = inner_parallel(&verts, r);
        let a = if inner.len() < 3 { 0.0 } else { polygon_area(&inner) };
        a - PI * r * r
    };
    let mut lo = 0.0;
    let mut hi = (area / PI).sqrt();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r = lo;
    let inner = inner_parallel(&verts, r);
    if inner.len() < 3 {
        return Err(Error::Domain("inner parallel set collapsed".into()));
    }
    let set = rounded(&inner, r)?;
    Ok(CheegerResult { h: 1.0 / r, r, inner, set })
}

static HEX_CHEEGER: OnceLock<f64> = OnceLock::new();

/// `h(H)` of the unit-area regular hexagon, computed once.
pub fn hexagon_cheeger() -> f64 {
    *HEX_CHEEGER.get_or_init(|| {
        let h = Region::regular_polygon(6, Point2::ORIGIN, crate::consts::hex_side(), PI / 6.0);
        cheeger_convex(&h).expect("regular hexagon is convex").h
    })
}
