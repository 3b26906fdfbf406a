use crate::error::{Error, Result};
use crate::geom::{line_params, overlay, split_at, BoolOp, Point2, Region};

/// `|r ∩ {p : u·p ≤ c}|` for a unit vector `u`.
///
/// Green's theorem is taken about a point of the cutting line, so the pieces of
/// the line that close the clipped boundary contribute nothing.
pub fn halfplane_area(r: &Region, u: Point2, c: f64) -> f64 {
    let o = u * c;
    let mut a = 0.0;
    for e in r.edges() {
        let ts = line_params(e, u, c);
        for piece in split_at(e, &ts) {
            if u.dot(piece.midpoint()) <= c {
                a += piece.area_term_about(o);
            }
        }
    }
    a
}

fn halfplane_box(r: &Region, u: Point2, c: f64) -> Region {
    let b = r.bbox();
    let bc = b.center();
    let p0 = bc + u * (c - u.dot(bc));
    let t = u.perp();
    let big = 2.0 * b.diagonal() + 1.0;
    Region::from_loops_unchecked(vec![crate::geom::Loop::polygon(&[
        p0 - t * big,
        p0 + t * big,
        p0 + t * big - u * (2.0 * big),
        p0 - t * big - u * (2.0 * big),
    ])])
    .normalized()
}

/// Position `c` of the line `u·p = c` cutting off area `target` on the `u·p ≤ c` side.
pub fn cut_position(r: &Region, target: f64, direction: f64) -> Result<f64> {
    let total = r.area();
    if !(target > 0.0 && target < total) {
        return Err(Error::Domain(format!("cut target {target} outside (0, {total})")));
    }
    let u = Point2::polar(direction);
    let b = r.bbox();
    let corners = [b.min, b.max, Point2::new(b.min.x, b.max.y), Point2::new(b.max.x, b.min.y)];
    let mut lo = corners.iter().map(|p| u.dot(*p)).fold(f64::INFINITY, f64::min);
    let mut hi = corners.iter().map(|p| u.dot(*p)).fold(f64::NEG_INFINITY, f64::max);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if halfplane_area(r, u, mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let fl = (halfplane_area(r, u, lo) - target).abs();
    let fh = (halfplane_area(r, u, hi) - target).abs();
    Ok(if fl <= fh { lo } else { hi })
}

/// Splits `r` by a line perpendicular to `direction` so that the first part
/// (on the low side) has area `target`.
pub fn equal_area_cut(r: &Region, target: f64, direction: f64) -> Result<(Region, Region)> {
    let c = cut_position(r, target, direction)?;
    let u = Point2::polar(direction);
    let hb = halfplane_box(r, u, c);
    let first = overlay(r, &hb, BoolOp::Intersection);
    let second = overlay(r, &hb, BoolOp::Difference);
    Ok((first, second))
}
