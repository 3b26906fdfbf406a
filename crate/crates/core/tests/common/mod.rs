#![allow(dead_code)]

use isoclus_core::geom::{Ambient, Cluster, Point2, Region};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Star-shaped polygon about `c` with the given radii at jittered, increasing angles.
pub fn star(c: Point2, radii: &[f64], phase: f64) -> Region {
    let n = radii.len();
    let pts: Vec<Point2> = radii
        .iter()
        .enumerate()
        .map(|(k, r)| c + Point2::polar(phase + TAU * k as f64 / n as f64) * *r)
        .collect();
    Region::polygon(&pts).unwrap()
}

pub fn random_star(rng: &mut impl Rng) -> Region {
    let n = rng.gen_range(5..14);
    let radii: Vec<f64> = (0..n).map(|_| rng.gen_range(0.3..1.2)).collect();
    let c = Point2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
    star(c, &radii, rng.gen_range(0.0..TAU))
}

/// Vertices on a rotated ellipse at well separated angles: strictly convex.
pub fn convex_vertices(gaps: &[f64], a: f64, b: f64, rot: f64, c: Point2) -> Vec<Point2> {
    let total: f64 = gaps.iter().sum();
    let mut t = 0.0f64;
    gaps.iter()
        .map(|g| {
            let p = Point2::new(a * t.cos(), b * t.sin()).rotate(rot) + c;
            t += TAU * g / total;
            p
        })
        .collect()
}

pub fn random_convex(rng: &mut impl Rng) -> Region {
    let n = rng.gen_range(3..12);
    let gaps: Vec<f64> = (0..n).map(|_| rng.gen_range(0.3..1.0)).collect();
    let v = convex_vertices(
        &gaps,
        rng.gen_range(0.5..2.0),
        rng.gen_range(0.5..2.0),
        rng.gen_range(0.0..TAU),
        Point2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
    );
    Region::polygon(&v).unwrap()
}

/// Unit square cut into vertical strips at the sorted positions `cuts`.
pub fn strips(cuts: &[f64]) -> Cluster {
    let mut xs = vec![0.0];
    let mut c = cuts.to_vec();
    c.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.extend(c);
    xs.push(1.0);
    let chambers = xs.windows(2).map(|w| Region::rect(Point2::new(w[0], 0.0), Point2::new(w[1], 1.0))).collect();
    let omega = Region::rect(Point2::ORIGIN, Point2::new(1.0, 1.0));
    Cluster::new(chambers, Ambient::Region(omega)).unwrap()
}

/// Pixel estimate of `|r|` on an `n × n` grid over `[x0, x1] × [y0, y1]`.
pub fn pixel_area(contains: impl Fn(Point2) -> bool, x0: f64, x1: f64, y0: f64, y1: f64, n: usize) -> f64 {
    let dx = (x1 - x0) / n as f64;
    let dy = (y1 - y0) / n as f64;
    let mut hits = 0usize;
    for i in 0..n {
        for j in 0..n {
            if contains(Point2::new(x0 + (i as f64 + 0.5) * dx, y0 + (j as f64 + 0.5) * dy)) {
                hits += 1;
            }
        }
    }
    hits as f64 * dx * dy
}
