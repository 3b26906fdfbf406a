use crate::error::{Error, Result};
use crate::geom::{Point2, Region};

/// Skeleton grid of `m` cells of area `δ` in a horizontal strip: `o` full
/// columns of `v` cells and a last column of `r` cells.
#[derive(Debug, Clone, PartialEq)]
pub struct SkeletonGrid {
    pub v: usize,
    pub o: usize,
    pub r: usize,
    pub cells: Vec<Region>,
    pub squares: Vec<Region>,
}

/// Places `areas.len()` axis-aligned squares in the strip `[min, max]`, square
/// `j` centred in cell `j` of the skeleton grid (columns filled bottom-up,
/// left to right).
pub fn skeleton_grid_place(min: Point2, max: Point2, delta: f64, areas: &[f64]) -> Result<SkeletonGrid> {
    if !(delta > 0.0) {
        return Err(Error::Domain(format!("cell area must be positive, got {delta}")));
    }
    let m = areas.len();
    if m == 0 {
        return Err(Error::Domain("no squares to place".into()));
    }
    let length = max.x - min.x;
    let height = max.y - min.y;
    let side = delta.sqrt();
    // v√δ ≤ d/2 < (v+1)√δ, with a relative slack for exact fits
    let v = (height / side * (1.0 + 1e-12)).floor() as usize;
    if v == 0 {
        return Err(Error::pre("v*sqrt(delta) <= d/2 with v >= 1", format!("strip height {height} below cell side {side}")));
    }
    let o = m / v;
    let r = m % v;
    if (o as f64 + 1.0) * side > length * (1.0 + 1e-12) {
        return Err(Error::pre(
            "(o+1)*sqrt(delta) <= l - d/2",
            format!("(o+1)√δ = {} exceeds the strip length {length}", (o as f64 + 1.0) * side),
        ));
    }
    let mut cells = Vec::with_capacity(m);
    let mut squares = Vec::with_capacity(m);
    for (j, &a) in areas.iter().enumerate() {
        if !(a >= 0.0) || a > delta * (1.0 + 1e-12) {
            return Err(Error::Domain(format!("square area {a} not in [0, δ]")));
        }
        let lo = min + Point2::new((j / v) as f64 * side, (j % v) as f64 * side);
        let c = lo + Point2::new(side / 2.0, side / 2.0);
        cells.push(Region::rect(lo, lo + Point2::new(side, side)));
        squares.push(Region::square(c, a.min(delta).sqrt()));
    }
    Ok(SkeletonGrid { v, o, r, cells, squares })
}
