//! Isoperimetric-type inequalities for a single planar region.

use super::region::Region;
use crate::report::BoundReport;
use std::f64::consts::PI;

/// Isoperimetric `P ≥ 2√(π|E|)`, Cheeger-ratio `P/|E| ≥ 2√π/√|E|`, and
/// `P ≥ 2 diam` when the region has a single boundary loop.
pub fn classic_inequality_checks(r: &Region) -> Vec<BoundReport> {
    let a = r.area();
    let p = r.perimeter();
    let inputs = format!("area={a:.12e};perimeter={p:.12e}");
    let mut out = vec![
        BoundReport::new("isoperimetric", p, 2.0 * (PI * a).sqrt(), inputs.clone()),
        BoundReport::new("cheeger_ratio", p / a, 2.0 * PI.sqrt() / a.sqrt(), inputs.clone()),
    ];
    if r.loops().len() == 1 {
        out.push(BoundReport::new("perimeter_diameter", p, 2.0 * r.diameter(), inputs));
    }
    out
}

/// `|E| ≤ π (diam/2)²`, the planar isodiametric inequality.
pub fn isodiametric_check(r: &Region) -> BoundReport {
    let d = r.diameter();
    BoundReport::new("isodiametric", PI * d * d / 4.0, r.area(), format!("diam={d:.12e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;

    #[test]
    fn unit_disk_is_extremal() {
        let rs = classic_inequality_checks(&Region::disk(Point2::ORIGIN, 1.0));
        assert!(rs[0].slack.abs() < 1e-12);
        assert!(rs[1].slack.abs() < 1e-12);
        assert!((rs[2].lhs - 2.0 * PI).abs() < 1e-12);
        assert!((rs[2].rhs - 4.0).abs() < 1e-12);
        assert!(isodiametric_check(&Region::disk(Point2::ORIGIN, 1.0)).slack.abs() < 1e-12);
    }

    #[test]
    fn unit_square_isoperimetric_slack() {
        let rs = classic_inequality_checks(&Region::rect(Point2::ORIGIN, Point2::new(1.0, 1.0)));
        // oracle: 4 - 2√π
        assert!((rs[0].slack - 0.455_092_298_188_968_24).abs() < 1e-12);
    }

    #[test]
    fn thin_rectangle_diameter_slack() {
        let rs = classic_inequality_checks(&Region::rect(Point2::ORIGIN, Point2::new(10.0, 0.1)));
        let expect = 20.2 - 2.0 * 100.01f64.sqrt();
        assert!((rs[2].slack - expect).abs() < 1e-12);
        assert!(rs.iter().all(|r| r.satisfied()));
    }
}
