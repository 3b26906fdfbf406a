//! Asymmetry of unit-area torus tilings with respect to the honeycomb.

use crate::consts::hex_side;
use crate::error::{Error, Result};
use crate::geom::{Ambient, BBox, Cluster, Point2, Region, TorusSpec};
use crate::hex::honeycomb;
use rayon::prelude::*;
use serde::Serialize;

/// Minimum-cost perfect matching on a square matrix: returns `σ` with row `i`
/// assigned to column `σ[i]`, and the total cost.
pub fn hungarian(cost: &[Vec<f64>]) -> (Vec<usize>, f64) {
    let n = cost.len();
    let inf = f64::INFINITY;
    // 1-based potentials, column 0 is a sentinel
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut sigma = vec![0; n];
    for j in 1..=n {
        if p[j] > 0 {
            sigma[p[j] - 1] = j - 1;
        }
    }
    let total = (0..n).map(|i| cost[i][sigma[i]]).sum();
    (sigma, total)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymmetryResult {
    pub alpha: f64,
    /// Optimal translation `v = t·(√3ℓ, 0) + s·(√3ℓ/2, 3ℓ/2)`.
    pub v: Point2,
    pub s: f64,
    pub t: f64,
    /// `permutation[h]` is the chamber of `E` matched with `H(h+1)`.
    pub permutation: Vec<usize>,
}

/// Basis of the honeycomb translation lattice.
fn lattice() -> (Point2, Point2) {
    let l = hex_side();
    (Point2::new(3f64.sqrt() * l, 0.0), Point2::new(3f64.sqrt() * l / 2.0, 1.5 * l))
}

struct Problem {
    torus: TorusSpec,
    chambers: Vec<Region>,
    areas: Vec<f64>,
    boxes: Vec<BBox>,
    reference: Vec<Region>,
}

impl Problem {
    /// Matching cost matrix and `d(Ê, v + H)` at the optimal relabeling.
    fn eval(&self, s: f64, t: f64) -> (f64, Vec<usize>) {
        let (l1, l2) = lattice();
        let v = l1 * t + l2 * s;
        let n = self.chambers.len();
        let mut cost = vec![vec![0.0; n]; n];
        for (h, refc) in self.reference.iter().enumerate() {
            let r = refc.translated(v);
            let rb = r.bbox();
            let ra = refc.area();
            let mut covered = 0.0;
            for j in 0..n {
                let inter = if self.torus.shifts_between(&rb, &self.boxes[j]).is_empty() {
                    0.0
                } else {
                    self.torus.intersection_area(&r, &self.chambers[j])
                };
                covered += inter;
                cost[h][j] = self.areas[j] + ra - 2.0 * inter;
            }
            // the chambers tile, so a cell is covered exactly once; otherwise
            // the overlay met edges closer than its tolerance and `v` is skipped
            if (covered - ra).abs() > 1e-9 * ra {
                return (f64::INFINITY, (0..n).collect());
            }
        }
        let (sigma, total) = hungarian(&cost);
        (0.5 * total.max(0.0), sigma)
    }
}

/// `α(E) = inf d(Ê, v + H)` over translations `v` and relabelings `Ê` of `E`.
///
/// Translations range over one cell of the honeycomb lattice; a 64×64 grid is
/// refined by pattern search around its best points.
pub fn alpha_asymmetry(e: &Cluster) -> Result<AsymmetryResult> {
    let torus = match e.ambient() {
        Ambient::Torus(t) => *t,
        _ => return Err(Error::Domain("asymmetry needs a torus tiling".into())),
    };
    if e.len() != torus.cells() {
        return Err(Error::Domain(format!("tiling has {} chambers, torus has {} cells", e.len(), torus.cells())));
    }
    let ext = e.exterior_area().unwrap_or(0.0);
    if ext.abs() > 1e-9 * torus.area() {
        return Err(Error::Domain(format!("not a tiling: exterior area {ext:.3e}")));
    }
    let reference = honeycomb(torus)?.into_chambers();
    let prob = Problem {
        torus,
        chambers: e.chambers().to_vec(),
        areas: e.areas(),
        boxes: e.chambers().iter().map(|c| c.bbox()).collect(),
        reference,
    };
    let g = 64usize;
    let grid: Vec<(f64, f64, f64)> = (0..g * g)
        .into_par_iter()
        .map(|k| {
            let s = (k / g) as f64 / g as f64;
            let t = (k % g) as f64 / g as f64;
            (prob.eval(s, t).0, s, t)
        })
        .collect();
    let mut starts = grid.clone();
    starts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    starts.truncate(4);
    let refined: Vec<(f64, f64, f64)> = starts
        .into_par_iter()
        .map(|(mut f, mut s, mut t)| {
            let mut h = 1.0 / g as f64;
            while h > 1e-12 {
                let mut moved = false;
                for (ds, dt) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0)] {
                    let (s2, t2) = (s + ds * h, t + dt * h);
                    let f2 = prob.eval(s2, t2).0;
                    if f2 < f {
                        f = f2;
                        s = s2;
                        t = t2;
                        moved = true;
                        break;
                    }
                }
                if !moved {
                    h *= 0.5;
                }
            }
            (f, s, t)
        })
        .collect();
    let best = refined.into_iter().fold((f64::INFINITY, 0.0, 0.0), |a, b| if b.0 < a.0 { b } else { a });
    let (mut s, mut t) = (best.1.rem_euclid(1.0), best.2.rem_euclid(1.0));
    let (mut alpha, mut sigma) = prob.eval(s, t);
    if !alpha.is_finite() {
        (s, t) = (best.1, best.2);
        (alpha, sigma) = prob.eval(s, t);
    }
    if !alpha.is_finite() {
        return Err(Error::Domain("no translation passed the coverage check".into()));
    }
    let (l1, l2) = lattice();
    Ok(AsymmetryResult { alpha, v: l1 * t + l2 * s, s, t, permutation: sigma })
}

/// Unit-area tiling obtained from the honeycomb by moving the top vertex of
/// `H(1)` by `eps` in direction `angle` and bending the three edges at that
/// vertex so that every chamber keeps area one.
pub fn three_edge_perturbation(torus: TorusSpec, eps: f64, angle: f64) -> Result<Cluster> {
    let hc = honeycomb(torus)?;
    let mut verts: Vec<Vec<Point2>> = hc.chambers().iter().map(|c| c.polygon_vertices().unwrap()).collect();
    let junction = Point2::new(0.0, hex_side());
    let (vx, wy) = (torus.v().x, torus.w().y);
    let tol = 1e-9;
    let same = |a: Point2, b: Point2| {
        let d = a - b;
        let dx = d.x - vx * (d.x / vx).round();
        let dy = d.y - wy * (d.y / wy).round();
        dx.hypot(dy) < tol
    };
    // (chamber, vertex index)
    let hits: Vec<(usize, usize)> = verts
        .iter()
        .enumerate()
        .flat_map(|(c, vs)| vs.iter().enumerate().filter(|(_, p)| same(**p, junction)).map(move |(i, _)| (c, i)).collect::<Vec<_>>())
        .collect();
    if hits.len() != 3 {
        return Err(Error::Domain(format!("junction shared by {} chambers", hits.len())));
    }
    let mut dirs: Vec<Point2> = Vec::new();
    let mut key = |d: Point2| -> usize {
        if let Some(k) = dirs.iter().position(|e| (*e - d).norm() < tol) {
            k
        } else {
            dirs.push(d);
            dirs.len() - 1
        }
    };
    // per hit: (prev edge key, next edge key)
    let mut keys = Vec::new();
    for &(c, i) in &hits {
        let n = verts[c].len();
        let p = verts[c][i];
        let kp = key(verts[c][(i + n - 1) % n] - p);
        let kn = key(verts[c][(i + 1) % n] - p);
        keys.push((kp, kn));
    }
    if dirs.len() != 3 {
        return Err(Error::Domain("junction is not a triple point".into()));
    }
    let delta = Point2::polar(angle) * eps;
    let build = |h: [f64; 3], c: usize, i: usize, kp: usize, kn: usize| -> Vec<Point2> {
        let p = verts[c][i];
        let mid = |k: usize| {
            let e = dirs[k] - delta;
            p + delta + e * 0.5 + e.perp().normalized() * h[k]
        };
        let n = verts[c].len();
        let mut out = Vec::with_capacity(n + 2);
        for j in 0..n {
            if j == i {
                out.push(mid(kp));
                out.push(p + delta);
                out.push(mid(kn));
            } else {
                out.push(verts[c][j]);
            }
        }
        out
    };
    let area = |v: &[Point2]| super::ngon::polygon_area(v);
    let base: Vec<f64> = hits.iter().zip(&keys).map(|(&(c, i), &(kp, kn))| area(&build([0.0; 3], c, i, kp, kn))).collect();
    let mut m = [[0.0; 3]; 3];
    for k in 0..3 {
        let mut h = [0.0; 3];
        h[k] = 1.0;
        for (r, (&(c, i), &(kp, kn))) in hits.iter().zip(&keys).enumerate() {
            m[r][k] = area(&build(h, c, i, kp, kn)) - base[r];
        }
    }
    let b: Vec<f64> = hits.iter().zip(&base).map(|(&(c, _), a)| hc.chambers()[c].area() - a).collect();
    // minimum-norm solution h = Mᵀy of the rank-two system M Mᵀ y = b, with y₃ = 0
    let mmt = |r: usize, s: usize| (0..3).map(|k| m[r][k] * m[s][k]).sum::<f64>();
    let det = mmt(0, 0) * mmt(1, 1) - mmt(0, 1) * mmt(1, 0);
    if det.abs() < 1e-300 {
        return Err(Error::Domain("degenerate area compensation".into()));
    }
    let y0 = (b[0] * mmt(1, 1) - b[1] * mmt(0, 1)) / det;
    let y1 = (mmt(0, 0) * b[1] - mmt(1, 0) * b[0]) / det;
    let h = [0, 1, 2].map(|k| m[0][k] * y0 + m[1][k] * y1);
    let updated: Vec<(usize, Vec<Point2>)> = hits.iter().zip(&keys).map(|(&(c, i), &(kp, kn))| (c, build(h, c, i, kp, kn))).collect();
    for (c, v) in updated {
        verts[c] = v;
    }
    let chambers = verts.iter().map(|v| Region::polygon(v)).collect::<Result<Vec<_>>>()?;
    Cluster::new(chambers, Ambient::Torus(torus))
}

/// `(P(E) − P(H)) / (P(H) α(E)²)` for one tiling.
pub fn kappa_ratio(e: &Cluster) -> Result<(f64, AsymmetryResult)> {
    let torus = match e.ambient() {
        Ambient::Torus(t) => *t,
        _ => return Err(Error::Domain("kappa needs a torus tiling".into())),
    };
    let a = alpha_asymmetry(e)?;
    if a.alpha <= 1e-9 {
        return Err(Error::Domain(format!("member has asymmetry {:.3e}; it is a translated honeycomb", a.alpha)));
    }
    let ph = honeycomb(torus)?.perimeter(None)?;
    let p = e.perimeter(None)?;
    Ok(((p - ph) / (ph * a.alpha * a.alpha), a))
}

/// Empirical `κ`: the smallest ratio over the family.
pub fn kappa_estimate(family: &[Cluster]) -> Result<f64> {
    if family.is_empty() {
        return Err(Error::Domain("empty family".into()));
    }
    let ratios = family.iter().map(|e| kappa_ratio(e).map(|r| r.0)).collect::<Result<Vec<_>>>()?;
    Ok(ratios.into_iter().fold(f64::INFINITY, f64::min))
}
