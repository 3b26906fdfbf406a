use isoclus_core::bounds::{hales_plane, hales_torus, local_lower_bound, scale_cluster};
use isoclus_core::consts::hex_side;
use isoclus_core::geom::{Ambient, Cluster, Point2, Region, TorusSpec};
use isoclus_core::hex::{generate_plane, honeycomb};
use isoclus_core::partition::boundary_reassembly_partition;
use proptest::prelude::*;

#[test]
fn torus_honeycomb_is_equality() {
    for (a, b) in [(2, 2), (4, 4), (2, 6), (6, 2)] {
        let c = honeycomb(TorusSpec::new(a, b).unwrap()).unwrap();
        let r = hales_torus(&c).unwrap();
        assert!(r.equality() && r.slack.abs() < 1e-9, "{r:?}");
    }
}

fn hex_patch(delta: f64, w: f64) -> Cluster {
    let box_ = Region::rect(Point2::ORIGIN, Point2::new(w, w));
    let t = generate_plane(delta, &box_).unwrap();
    let cells = t.indices().map(|i| t.cell(i).unwrap()).collect();
    Cluster::new(cells, Ambient::Plane).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn plane_flags_scale_consistently(delta in 0.2..1.0f64, w in 0.5..3.0f64, lambda in 0.3..1.0f64) {
        let c = hex_patch(delta, w);
        let r = hales_plane(&c).unwrap();
        prop_assert!(r.strictly_satisfied(), "{:?}", r);
        let s = hales_plane(&scale_cluster(&c, lambda)).unwrap();
        prop_assert_eq!(r.satisfied(), s.satisfied());
        prop_assert_eq!(r.strictly_satisfied(), s.strictly_satisfied());
    }

    #[test]
    fn local_bound_monotone_in_window(n in prop::sample::select(vec![64usize, 144, 256]), s in 0.2..0.6f64) {
        let omega = Region::square(Point2::ORIGIN, 1.0);
        let (e, _, _) = boundary_reassembly_partition(&omega, n).unwrap();
        let layer = 3.0f64.sqrt() * hex_side() / (n as f64).sqrt();
        let mut prev = None;
        let mut side = s;
        while side < 0.95 {
            let r = local_lower_bound(&e, &Region::square(Point2::ORIGIN, side)).unwrap();
            if prev == Some(true) {
                prop_assert!(r.satisfied(), "violated after enlarging to side {}: {:?}", side, r);
            }
            prev = Some(r.satisfied());
            side += 2.0 * layer;
        }
    }
}
