use super::edge::{edge_intersections, Edge};
use super::motion::RigidMotion;
use super::point::{BBox, Point2};
use crate::error::{Error, Result};
use std::f64::consts::{PI, TAU};

/// A closed boundary loop.
#[derive(Debug, Clone, PartialEq)]
pub struct Loop {
    pub edges: Vec<Edge>,
}

impl Loop {
    pub fn new(edges: Vec<Edge>) -> Self {
        Loop { edges }
    }

    pub fn polygon(pts: &[Point2]) -> Self {
        let n = pts.len();
        Loop {
            edges: (0..n).map(|i| Edge::seg(pts[i], pts[(i + 1) % n])).collect(),
        }
    }

    pub fn signed_area(&self) -> f64 {
        // centre the computation for accuracy
        let o = self.edges.first().map(|e| e.start()).unwrap_or_default();
        self.edges.iter().map(|e| e.area_term_about(o)).sum()
    }

    pub fn length(&self) -> f64 {
        self.edges.iter().map(|e| e.length()).sum()
    }

    pub fn reversed(&self) -> Loop {
        Loop {
            edges: self.edges.iter().rev().map(|e| e.reversed()).collect(),
        }
    }

    pub fn winding(&self, p: Point2) -> f64 {
        self.edges.iter().map(|e| e.winding_angle(p)).sum::<f64>() / TAU
    }

    pub fn vertices(&self) -> Vec<Point2> {
        self.edges.iter().map(|e| e.start()).collect()
    }
}

/// A bounded planar set whose boundary is a finite union of closed loops of
/// segments and circular arcs. Outer loops are counterclockwise, holes clockwise.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Region {
    loops: Vec<Loop>,
}

impl Region {
    pub fn empty() -> Self {
        Region { loops: Vec::new() }
    }

    /// Validating constructor. Orientation is normalised by nesting depth.
    pub fn new(loops: Vec<Loop>) -> Result<Self> {
        let r = Region { loops };
        r.validate()?;
        Ok(r.normalize_orientation())
    }

    /// Trusted constructor for loops produced internally.
    pub fn from_loops_unchecked(loops: Vec<Loop>) -> Self {
        Region { loops }
    }

    pub fn polygon(pts: &[Point2]) -> Result<Self> {
        if pts.len() < 3 {
            return Err(Error::Validation(format!("polygon needs at least 3 vertices, got {}", pts.len())));
        }
        Region::new(vec![Loop::polygon(pts)])
    }

    pub fn rect(min: Point2, max: Point2) -> Self {
        Region {
            loops: vec![Loop::polygon(&[min, Point2::new(max.x, min.y), max, Point2::new(min.x, max.y)])],
        }
    }

    pub fn square(center: Point2, side: f64) -> Self {
        let h = side / 2.0;
        Region::rect(center - Point2::new(h, h), center + Point2::new(h, h))
    }

    /// Regular polygon with `n` vertices, first vertex at angle `phase`.
    pub fn regular_polygon(n: usize, center: Point2, circumradius: f64, phase: f64) -> Self {
        let pts: Vec<Point2> = (0..n)
            .map(|k| center + Point2::polar(phase + TAU * k as f64 / n as f64) * circumradius)
            .collect();
        Region { loops: vec![Loop::polygon(&pts)] }
    }

    pub fn disk(center: Point2, r: f64) -> Self {
        Region {
            loops: vec![Loop::new(vec![Edge::arc_polar(center, r, 0.0, PI), Edge::arc_polar(center, r, PI, PI)])],
        }
    }

    pub fn loops(&self) -> &[Loop] {
        &self.loops
    }

    pub fn into_loops(self) -> Vec<Loop> {
        self.loops
    }

    pub fn is_empty(&self) -> bool {
        self.loops.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.loops.iter().flat_map(|l| l.edges.iter())
    }

    pub fn boundary(&self) -> Vec<Edge> {
        self.edges().copied().collect()
    }

    pub fn is_polygonal(&self) -> bool {
        self.edges().all(|e| !e.is_arc())
    }

    pub fn area(&self) -> f64 {
        self.loops.iter().map(|l| l.signed_area()).sum()
    }

    pub fn perimeter(&self) -> f64 {
        self.loops.iter().map(|l| l.length()).sum()
    }

    pub fn bbox(&self) -> BBox {
        let mut b = BBox::empty();
        for e in self.edges() {
            b = b.union(&e.bbox());
        }
        b
    }

    /// Winding number of the boundary about `p`, rounded.
    pub fn winding(&self, p: Point2) -> i32 {
        self.loops.iter().map(|l| l.winding(p)).sum::<f64>().round() as i32
    }

    pub fn contains(&self, p: Point2) -> bool {
        self.winding(p) != 0
    }

    pub fn distance_to_boundary(&self, p: Point2) -> f64 {
        self.edges().map(|e| e.distance_to(p)).fold(f64::INFINITY, f64::min)
    }

    pub fn vertices(&self) -> Vec<Point2> {
        self.loops.iter().flat_map(|l| l.vertices()).collect()
    }

    /// Vertex list of a single-loop polygon.
    pub fn polygon_vertices(&self) -> Option<Vec<Point2>> {
        if self.loops.len() != 1 || !self.is_polygonal() {
            return None;
        }
        Some(self.loops[0].vertices())
    }

    pub fn map_points(&self, f: impl Fn(Point2) -> Point2 + Copy) -> Region {
        Region {
            loops: self
                .loops
                .iter()
                .map(|l| Loop::new(l.edges.iter().map(|e| e.map_points(f)).collect()))
                .collect(),
        }
    }

    pub fn translated(&self, v: Point2) -> Region {
        self.map_points(|p| p + v)
    }

    /// Homothety with ratio `s > 0` about `about`.
    pub fn scaled(&self, s: f64, about: Point2) -> Region {
        self.map_points(|p| about + (p - about) * s)
    }

    pub fn transformed(&self, m: &RigidMotion) -> Region {
        self.map_points(|p| m.apply(p))
    }

    /// Area barycenter. Arcs are integrated with a fine polyline.
    pub fn centroid(&self) -> Point2 {
        let mut a = 0.0;
        let mut cx = 0.0;
        let mut cy = 0.0;
        let o = self.edges().next().map(|e| e.start()).unwrap_or_default();
        let mut acc = |p: Point2, q: Point2| {
            let p = p - o;
            let q = q - o;
            let c = p.cross(q);
            a += c;
            cx += (p.x + q.x) * c;
            cy += (p.y + q.y) * c;
        };
        for e in self.edges() {
            match e {
                Edge::Segment { from, to } => acc(*from, *to),
                Edge::Arc { .. } => {
                    let n = 512;
                    for k in 0..n {
                        acc(e.point_at(k as f64 / n as f64), e.point_at((k + 1) as f64 / n as f64));
                    }
                }
            }
        }
        o + Point2::new(cx / (3.0 * a), cy / (3.0 * a))
    }

    /// Diameter, from vertices, arc midpoints and arc extreme points plus
    /// a light sampling of arcs.
    pub fn diameter(&self) -> f64 {
        let mut pts = Vec::new();
        for e in self.edges() {
            pts.push(e.start());
            if e.is_arc() {
                let n = 16;
                for k in 1..n {
                    pts.push(e.point_at(k as f64 / n as f64));
                }
                let b = e.bbox();
                for p in [b.min, b.max, Point2::new(b.min.x, b.max.y), Point2::new(b.max.x, b.min.y)] {
                    if e.distance_to(p) < 1e-12 * (1.0 + e.radius()) {
                        pts.push(p);
                    }
                }
            }
        }
        let mut d: f64 = 0.0;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                d = d.max(pts[i].dist(pts[j]));
            }
        }
        // arcs: refine against each arc exactly along the far direction
        for e in self.edges() {
            if let Edge::Arc { center, .. } = e {
                let r = e.radius();
                for &p in &pts {
                    let v = *center - p;
                    if v.norm() > 0.0 {
                        let far = *center + v.normalized() * r;
                        if e.distance_to(far) < 1e-12 * (1.0 + r) {
                            d = d.max(p.dist(far));
                        }
                    }
                }
            }
        }
        d
    }

    fn scale_hint(&self) -> f64 {
        let b = self.bbox();
        if b.is_empty() {
            1.0
        } else {
            b.diagonal().max(1e-300)
        }
    }

    /// Structural checks: closed loops, consistent arcs, no crossings.
    pub fn validate(&self) -> Result<()> {
        let scale = self.scale_hint();
        let tol = 1e-12 * scale.max(1.0);
        for (li, l) in self.loops.iter().enumerate() {
            if l.edges.is_empty() {
                return Err(Error::Validation(format!("loop {li} is empty")));
            }
            let n = l.edges.len();
            for (ei, e) in l.edges.iter().enumerate() {
                if !e.start().is_finite() || !e.end().is_finite() {
                    return Err(Error::Validation(format!("loop {li} edge {ei} has non-finite coordinates")));
                }
                let next = &l.edges[(ei + 1) % n];
                if e.end().dist(next.start()) > 1e-9 * scale.max(1.0) {
                    return Err(Error::Validation(format!("loop {li} is not closed at edge {ei}")));
                }
                match *e {
                    Edge::Segment { from, to } => {
                        if from.dist(to) <= tol {
                            return Err(Error::Validation(format!("loop {li} edge {ei} is degenerate")));
                        }
                    }
                    Edge::Arc { to, center, sweep, .. } => {
                        let r = e.radius();
                        if !(r > 0.0) || !sweep.is_finite() || sweep == 0.0 || sweep.abs() >= TAU {
                            return Err(Error::Validation(format!("loop {li} edge {ei}: bad arc radius or sweep")));
                        }
                        if (to.dist(center) - r).abs() > 1e-9 * r.max(1.0) {
                            return Err(Error::Validation(format!("loop {li} edge {ei}: arc endpoints not equidistant from centre")));
                        }
                        let a_to = (to - center).angle();
                        let a_exp = ((e.start() - center).angle() + sweep).rem_euclid(TAU);
                        let diff = (a_to.rem_euclid(TAU) - a_exp).abs();
                        if diff.min(TAU - diff) * r > 1e-9 * scale.max(1.0) {
                            return Err(Error::Validation(format!("loop {li} edge {ei}: arc sweep inconsistent with endpoints")));
                        }
                    }
                }
            }
            if n < 2 || (n == 2 && l.edges.iter().all(|e| !e.is_arc())) {
                return Err(Error::Validation(format!("loop {li} encloses no area")));
            }
        }
        // crossings
        let all: Vec<(usize, usize, Edge, BBox)> = self
            .loops
            .iter()
            .enumerate()
            .flat_map(|(li, l)| l.edges.iter().enumerate().map(move |(ei, e)| (li, ei, *e, e.bbox())))
            .collect();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let (li, ei, e1, b1) = &all[i];
                let (lj, ej, e2, b2) = &all[j];
                if !b1.expanded(tol).overlaps(b2) {
                    continue;
                }
                let pts = edge_intersections(e1, e2, tol);
                let n = self.loops[*li].edges.len();
                let adjacent = li == lj && ((ei + 1) % n == *ej || (ej + 1) % n == *ei);
                for p in pts {
                    if adjacent {
                        let shared = if (ei + 1) % n == *ej { e1.end() } else { e1.start() };
                        if p.dist(shared) <= 1e-9 * scale.max(1.0) {
                            continue;
                        }
                        if n == 2 && (p.dist(e1.start()) <= tol || p.dist(e1.end()) <= tol) {
                            continue;
                        }
                    }
                    return Err(Error::Validation(format!(
                        "boundary self-intersection between loop {li} edge {ei} and loop {lj} edge {ej} near ({:.6}, {:.6})",
                        p.x, p.y
                    )));
                }
            }
        }
        Ok(())
    }

    /// Reorients loops by nesting depth without further checks.
    pub fn normalized(self) -> Self {
        self.normalize_orientation()
    }

    fn normalize_orientation(mut self) -> Self {
        let probes: Vec<Point2> = self.loops.iter().map(|l| interior_probe(l)).collect();
        for i in 0..self.loops.len() {
            let depth = (0..self.loops.len())
                .filter(|&j| j != i && self.loops[j].winding(probes[i]).abs() > 0.5)
                .count();
            let ccw = self.loops[i].signed_area() > 0.0;
            let want_ccw = depth % 2 == 0;
            if ccw != want_ccw {
                self.loops[i] = self.loops[i].reversed();
            }
        }
        self
    }
}

/// A point on the loop itself; nesting of non-crossing loops is decided by it.
fn interior_probe(l: &Loop) -> Point2 {
    l.edges[0].midpoint()
}
