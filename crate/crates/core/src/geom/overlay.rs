//! Boolean operations on regions bounded by segments and circular arcs.
//!
//! Both boundaries are split at every mutual contact, each piece is classified
//! against the other operand (inside, outside, or shared with the same or the
//! opposite orientation), the pieces required by the operation are kept, and
//! the kept pieces are stitched back into loops.

use super::edge::{edge_intersections, Edge};
use super::point::{BBox, Point2};
use super::region::{Loop, Region};
use crate::error::{Error, Result};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    Intersection,
    Union,
    Difference,
    SymmetricDifference,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    Inside,
    Outside,
    SharedSame,
    SharedOpposite,
}

struct Pool {
    pts: Vec<Point2>,
    grid: HashMap<(i64, i64), Vec<usize>>,
    tol: f64,
}

impl Pool {
    fn new(tol: f64) -> Self {
        Pool { pts: Vec::new(), grid: HashMap::new(), tol }
    }

    fn key(&self, p: Point2) -> (i64, i64) {
        let c = 4.0 * self.tol;
        ((p.x / c).floor() as i64, (p.y / c).floor() as i64)
    }

    fn insert(&mut self, p: Point2) -> usize {
        let (kx, ky) = self.key(p);
        let mut best: Option<(usize, f64)> = None;
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.grid.get(&(kx + dx, ky + dy)) {
                    for &id in ids {
                        let d = self.pts[id].dist(p);
                        if d <= self.tol && best.map_or(true, |(_, bd)| d < bd) {
                            best = Some((id, d));
                        }
                    }
                }
            }
        }
        if let Some((id, _)) = best {
            return id;
        }
        let id = self.pts.len();
        self.pts.push(p);
        self.grid.entry((kx, ky)).or_default().push(id);
        id
    }
}

#[derive(Clone, Copy, Debug)]
struct Sub {
    from: usize,
    to: usize,
    edge: Edge,
}

fn tolerance(a: &Region, b: &Region) -> f64 {
    let bb = a.bbox().union(&b.bbox());
    if bb.is_empty() {
        return 1e-12;
    }
    let m = bb.min.x.abs().max(bb.min.y.abs()).max(bb.max.x.abs()).max(bb.max.y.abs()).max(bb.diagonal());
    1e-12 * m.max(1e-9)
}

fn split(a: &Region, b: &Region, tol: f64) -> (Vec<Sub>, Vec<Sub>, Pool) {
    let mut pool = Pool::new(tol);
    let ea: Vec<Edge> = a.boundary();
    let eb: Vec<Edge> = b.boundary();
    let ends = |pool: &mut Pool, es: &[Edge]| -> Vec<(usize, usize)> {
        es.iter().map(|e| (pool.insert(e.start()), pool.insert(e.end()))).collect()
    };
    let ida = ends(&mut pool, &ea);
    let idb = ends(&mut pool, &eb);
    let ba: Vec<BBox> = ea.iter().map(|e| e.bbox().expanded(tol)).collect();
    let bbs: Vec<BBox> = eb.iter().map(|e| e.bbox().expanded(tol)).collect();
    let mut sa: Vec<Vec<(f64, usize)>> = vec![Vec::new(); ea.len()];
    let mut sb: Vec<Vec<(f64, usize)>> = vec![Vec::new(); eb.len()];
    // sweep over x to prune pairs
    let mut order_b: Vec<usize> = (0..eb.len()).collect();
    order_b.sort_by(|&i, &j| bbs[i].min.x.partial_cmp(&bbs[j].min.x).unwrap());
    let minx_b: Vec<f64> = order_b.iter().map(|&i| bbs[i].min.x).collect();
    for i in 0..ea.len() {
        let hi = minx_b.partition_point(|&x| x <= ba[i].max.x);
        for &j in &order_b[..hi] {
            if !ba[i].overlaps(&bbs[j]) {
                continue;
            }
            for p in edge_intersections(&ea[i], &eb[j], tol) {
                let id = pool.insert(p);
                let q = pool.pts[id];
                if id != ida[i].0 && id != ida[i].1 {
                    sa[i].push((ea[i].param_of(q), id));
                }
                if id != idb[j].0 && id != idb[j].1 {
                    sb[j].push((eb[j].param_of(q), id));
                }
            }
        }
    }
    let build = |es: &[Edge], ids: &[(usize, usize)], splits: &mut [Vec<(f64, usize)>], pool: &Pool| -> Vec<Sub> {
        let mut out = Vec::new();
        for (k, e) in es.iter().enumerate() {
            let s = &mut splits[k];
            s.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
            s.dedup_by_key(|x| x.1);
            let mut seq: Vec<(f64, usize)> = vec![(0.0, ids[k].0)];
            for &(t, id) in s.iter() {
                if seq.iter().any(|x| x.1 == id) {
                    continue;
                }
                seq.push((t, id));
            }
            seq.push((1.0, ids[k].1));
            for w in seq.windows(2) {
                let (t0, i0) = w[0];
                let (t1, i1) = w[1];
                if i0 == i1 {
                    continue;
                }
                out.push(Sub { from: i0, to: i1, edge: e.sub_edge(t0, t1, pool.pts[i0], pool.pts[i1]) });
            }
        }
        out
    };
    let suba = build(&ea, &ida, &mut sa, &pool);
    let subb = build(&eb, &idb, &mut sb, &pool);
    (suba, subb, pool)
}

fn same_geometry(x: &Edge, y: &Edge, tol: f64) -> bool {
    match (x, y) {
        (Edge::Segment { .. }, Edge::Segment { .. }) => true,
        (Edge::Arc { .. }, Edge::Arc { .. }) => x.midpoint().dist(y.midpoint()) <= 1e3 * tol,
        _ => false,
    }
}

fn classify(subs: &[Sub], other_subs: &[Sub], other: &Region, tol: f64) -> Vec<Status> {
    let mut map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (k, s) in other_subs.iter().enumerate() {
        map.entry((s.from.min(s.to), s.from.max(s.to))).or_default().push(k);
    }
    subs.iter()
        .map(|s| {
            if let Some(c) = map.get(&(s.from.min(s.to), s.from.max(s.to))) {
                for &k in c {
                    let o = &other_subs[k];
                    if same_geometry(&s.edge, &o.edge, tol) {
                        return if o.from == s.from { Status::SharedSame } else { Status::SharedOpposite };
                    }
                }
            }
            if other.contains(s.edge.midpoint()) {
                Status::Inside
            } else {
                Status::Outside
            }
        })
        .collect()
}

/// Selected directed pieces of the result boundary.
struct Selection {
    subs: Vec<Sub>,
    pool: Pool,
    tol: f64,
}

fn select(a: &Region, b: &Region, op: BoolOp) -> Selection {
    let tol = tolerance(a, b);
    let (suba, subb, pool) = split(a, b, tol);
    let st_a = classify(&suba, &subb, b, tol);
    let st_b = classify(&subb, &suba, a, tol);
    let mut out = Vec::new();
    let rev = |s: &Sub| Sub { from: s.to, to: s.from, edge: s.edge.reversed() };
    for (s, st) in suba.iter().zip(&st_a) {
        use BoolOp::*;
        use Status::*;
        match (op, st) {
            (Intersection, Inside) | (Intersection, SharedSame) => out.push(*s),
            (Union, Outside) | (Union, SharedSame) => out.push(*s),
            (Difference, Outside) | (Difference, SharedOpposite) => out.push(*s),
            (SymmetricDifference, Outside) => out.push(*s),
            (SymmetricDifference, Inside) => out.push(rev(s)),
            _ => {}
        }
    }
    for (s, st) in subb.iter().zip(&st_b) {
        use BoolOp::*;
        use Status::*;
        match (op, st) {
            (Intersection, Inside) => out.push(*s),
            (Union, Outside) => out.push(*s),
            (Difference, Inside) => out.push(rev(s)),
            (SymmetricDifference, Outside) => out.push(*s),
            (SymmetricDifference, Inside) => out.push(rev(s)),
            _ => {}
        }
    }
    Selection { subs: out, pool, tol }
}

fn turn(a: Point2, b: Point2) -> f64 {
    a.cross(b).atan2(a.dot(b))
}

fn stitch(sel: Selection) -> Region {
    let Selection { subs, pool, tol } = sel;
    let mut outgoing: HashMap<usize, Vec<usize>> = HashMap::new();
    for (k, s) in subs.iter().enumerate() {
        outgoing.entry(s.from).or_default().push(k);
    }
    let mut used = vec![false; subs.len()];
    let mut loops = Vec::new();
    for start in 0..subs.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let mut chain = vec![start];
        let origin = subs[start].from;
        let mut cur = subs[start].to;
        let mut closed = false;
        while cur != origin || chain.is_empty() {
            let last = subs[*chain.last().unwrap()].edge;
            let tin = last.tangent_at(1.0);
            let cand = outgoing.get(&cur).map(|v| v.iter().copied().filter(|&k| !used[k]).collect::<Vec<_>>()).unwrap_or_default();
            if cand.is_empty() {
                break;
            }
            let next = *cand
                .iter()
                .max_by(|&&x, &&y| {
                    let tx = turn(tin, subs[x].edge.tangent_at(0.0));
                    let ty = turn(tin, subs[y].edge.tangent_at(0.0));
                    tx.partial_cmp(&ty).unwrap()
                })
                .unwrap();
            used[next] = true;
            chain.push(next);
            cur = subs[next].to;
        }
        if cur == origin {
            closed = true;
        }
        if !closed {
            continue;
        }
        let edges: Vec<Edge> = chain.iter().map(|&k| subs[k].edge).collect();
        let l = simplify(Loop::new(edges), tol);
        if l.length() > 100.0 * tol && l.signed_area().abs() > tol * tol {
            loops.push(l);
        }
    }
    let _ = pool;
    Region::from_loops_unchecked(loops)
}

/// Merges consecutive collinear segments and consecutive co-circular arcs.
fn simplify(l: Loop, tol: f64) -> Loop {
    let mut es = l.edges;
    if es.len() < 3 {
        return Loop::new(es);
    }
    let mergeable = |x: &Edge, y: &Edge| -> Option<Edge> {
        match (x, y) {
            (Edge::Segment { from, to }, Edge::Segment { to: to2, .. }) => {
                let d1 = *to - *from;
                let d2 = *to2 - *to;
                let c = d1.cross(d2);
                if d1.dot(d2) > 0.0 && c.abs() <= tol * (d1.norm() + d2.norm()) * 1e-2 {
                    Some(Edge::seg(*from, *to2))
                } else {
                    None
                }
            }
            (Edge::Arc { from, center: c1, sweep: s1, .. }, Edge::Arc { to: to2, center: c2, sweep: s2, .. }) => {
                if c1.dist(*c2) <= tol && (x.radius() - y.radius()).abs() <= tol && s1 * s2 > 0.0 && (s1 + s2).abs() < std::f64::consts::TAU - 1e-9 {
                    Some(Edge::arc(*from, *to2, *c1, s1 + s2))
                } else {
                    None
                }
            }
            _ => None,
        }
    };
    let mut changed = true;
    while changed && es.len() > 2 {
        changed = false;
        let n = es.len();
        for i in 0..n {
            let j = (i + 1) % n;
            if let Some(m) = mergeable(&es[i], &es[j]) {
                if es.len() <= 3 && m.is_arc() {
                    // keep at least two arcs on a full circle
                    continue;
                }
                es[i] = m;
                es.remove(j);
                changed = true;
                break;
            }
        }
    }
    Loop::new(es)
}

/// Result of a boolean operation; arcs are allowed.
pub(crate) fn overlay(a: &Region, b: &Region, op: BoolOp) -> Region {
    if b.is_empty() {
        return match op {
            BoolOp::Intersection => Region::empty(),
            _ => a.clone(),
        };
    }
    if a.is_empty() {
        return match op {
            BoolOp::Intersection | BoolOp::Difference => Region::empty(),
            _ => b.clone(),
        };
    }
    if !a.bbox().overlaps(&b.bbox()) {
        return match op {
            BoolOp::Intersection => Region::empty(),
            BoolOp::Difference => a.clone(),
            _ => {
                let mut l = a.clone().into_loops();
                l.extend(b.clone().into_loops());
                Region::from_loops_unchecked(l)
            }
        };
    }
    stitch(select(a, b, op))
}

/// Boolean operation on polygonal regions.
pub fn boolean(a: &Region, b: &Region, op: BoolOp) -> Result<Region> {
    if !a.is_polygonal() || !b.is_polygonal() {
        return Err(Error::Unsupported("boolean operations accept polygonal regions only".into()));
    }
    Ok(overlay(a, b, op))
}

/// `|a ∩ b|` without building the result loops. Arcs are allowed.
pub fn intersection_area(a: &Region, b: &Region) -> f64 {
    if a.is_empty() || b.is_empty() || !a.bbox().overlaps(&b.bbox()) {
        return 0.0;
    }
    let sel = select(a, b, BoolOp::Intersection);
    let o = a.bbox().center();
    sel.subs.iter().map(|s| s.edge.area_term_about(o)).sum::<f64>().max(0.0)
}

/// Union of many regions by balanced pairwise merging.
pub(crate) fn union_all(regions: &[Region]) -> Region {
    match regions.len() {
        0 => Region::empty(),
        1 => regions[0].clone(),
        n => {
            let (l, r) = regions.split_at(n / 2);
            overlay(&union_all(l), &union_all(r), BoolOp::Union)
        }
    }
}
