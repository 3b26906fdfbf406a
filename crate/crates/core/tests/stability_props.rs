use isoclus_core::consts::hex_side;
use isoclus_core::geom::{Point2, Region, RigidMotion, TorusSpec};
use isoclus_core::stability::{
    alpha_asymmetry, arc, arc_t, bulge_edge, bulged_polygon, fit_regular_ngon, hexagon_unit_inequality, ngon_corpus,
    three_edge_perturbation,
};
use proptest::prelude::*;
use std::f64::consts::{PI, TAU};

#[test]
fn arc_monotone_and_convex() {
    let mut prev = arc(0.0).unwrap();
    for i in 1..=10_000 {
        let v = arc(i as f64 * 1e-3).unwrap();
        assert!(v >= prev, "arc decreases at {}", i as f64 * 1e-3);
        prev = v;
    }
    let h = 1e-3;
    let n = (PI / 8.0 / h) as usize;
    for i in 1..n {
        let a = i as f64 * h;
        let d2 = arc(a - h).unwrap() - 2.0 * arc(a).unwrap() + arc(a + h).unwrap();
        assert!(d2 >= -1e-12, "second difference {d2} at {a}");
    }
}

#[test]
fn alpha_lattice_translation() {
    let spec = TorusSpec::new(2, 2).unwrap();
    let c = three_edge_perturbation(spec, 0.02, 0.3).unwrap();
    let base = alpha_asymmetry(&c).unwrap().alpha;
    let l = hex_side();
    for v in [Point2::new(3f64.sqrt() * l / 2.0, 1.5 * l), spec.w()] {
        let moved = c.map_chambers(|r| r.translated(v));
        let a = alpha_asymmetry(&moved).unwrap().alpha;
        assert!((a - base).abs() < 1e-6, "{a} vs {base}");
    }
}

#[test]
fn hexagon_unit_slack_on_corpus() {
    let corpus = ngon_corpus(6, 60, 0.02, 1e-2, 7).unwrap();
    let mut g = 0u64;
    for pi in &corpus {
        let area = Region::polygon(pi).unwrap().area();
        for k in 0..3 {
            g = g.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let mut b: Vec<f64> = (0..6).map(|i| 4e-3 * (((g >> (8 * i)) & 0xff) as f64 / 255.0 - 0.5) * k as f64).collect();
            let shift = (1.0 - area - b.iter().sum::<f64>()) / 6.0;
            b.iter_mut().for_each(|x| *x += shift);
            let e = bulged_polygon(pi, &b).unwrap();
            let r = hexagon_unit_inequality(&e, pi).unwrap();
            assert!(r.satisfied(), "{r:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arc_t_matches_bulge_length(a in 1e-6..0.3f64, t in prop::sample::select(vec![0.5, 2.0])) {
        let e = bulge_edge(Point2::ORIGIN, Point2::new(t, 0.0), a * t * t).unwrap();
        let v = arc_t(a * t * t, t).unwrap();
        prop_assert!((v - t * arc(a).unwrap()).abs() < 1e-12 * v);
        prop_assert!((e.length() - v).abs() < 1e-10 * v, "{} {}", e.length(), v);
    }

    #[test]
    fn ngon_fit_rigid_invariant(seed in 0u64..1000, th in 0.0..TAU, x in -5.0..5.0f64, y in -5.0..5.0f64) {
        let pi = ngon_corpus(6, 1, 0.03, 1.0, seed).unwrap().remove(0);
        let m = RigidMotion::rotation(th).compose(&RigidMotion::translation(Point2::new(x, y)));
        let moved: Vec<Point2> = pi.iter().map(|p| m.apply(*p)).collect();
        let f0 = fit_regular_ngon(&pi, 6).unwrap();
        let f1 = fit_regular_ngon(&moved, 6).unwrap();
        prop_assert!((f0.hd - f1.hd).abs() < 1e-8, "{} {}", f0.hd, f1.hd);
        prop_assert!((f0.deficit - f1.deficit).abs() < 1e-8);
    }
}
