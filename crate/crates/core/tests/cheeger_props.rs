mod common;

use common::*;
use isoclus_core::cheeger::{cheeger_convex, curvature_constants, h_ratio, hn_sandwich};
use isoclus_core::geom::{Point2, Region};
use proptest::prelude::*;
use std::f64::consts::PI;

#[test]
fn fixed_point_on_random_convex() {
    let mut g = rng(2024);
    for _ in 0..50 {
        let k = random_convex(&mut g);
        let c = cheeger_convex(&k).unwrap();
        let ratio = c.set.perimeter() / c.set.area();
        assert!((ratio - c.h).abs() < 1e-8 * c.h, "{ratio} vs {}", c.h);
        assert!((h_ratio(&c.set).unwrap() - c.h).abs() < 1e-8 * c.h);
        assert!(c.h >= 2.0 * PI.sqrt() / k.area().sqrt() * (1.0 - 1e-12));
        assert!(c.h <= k.perimeter() / k.area() * (1.0 + 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn scaling_law(seed in any::<u64>(), lambda in prop::sample::select(vec![0.5, 3.0])) {
        let k = random_convex(&mut rng(seed));
        let h = cheeger_convex(&k).unwrap().h;
        let hs = cheeger_convex(&k.scaled(lambda, Point2::new(0.2, 0.1))).unwrap().h;
        prop_assert!((hs - h / lambda).abs() < 1e-8 * h / lambda);
    }

    #[test]
    fn curvature_antisymmetry(h in prop::collection::vec(2.0..20.0f64, 2..8), seed in any::<u64>()) {
        let n = h.len();
        let areas: Vec<f64> = (0..n).map(|i| 0.1 + ((seed >> (i * 4)) & 0xf) as f64 / 16.0).collect();
        let c = curvature_constants(&h, &areas).unwrap();
        for j in 0..n {
            prop_assert_eq!(c[j][0], h[j]);
            for k in 0..n {
                prop_assert_eq!(c[j][k + 1], -c[k][j + 1]);
            }
        }
    }
}

#[test]
fn sandwich_ordered() {
    let omega = Region::rect(Point2::ORIGIN, Point2::new(2.0, 0.5));
    for n in [4, 9, 30, 100, 400] {
        let s = hn_sandwich(&omega, n, 0.0).unwrap();
        if let Some(u) = s.upper {
            assert!(s.lower <= u, "N={n}: {} > {u}", s.lower);
        }
    }
    assert!(hn_sandwich(&omega, 400, 0.0).unwrap().feasible());
}

#[test]
fn near_disk_approaches_the_bound() {
    let k = Region::regular_polygon(400, Point2::ORIGIN, 1.0, 0.0);
    let c = cheeger_convex(&k).unwrap();
    let floor = 2.0 * PI.sqrt() / k.area().sqrt();
    assert!(c.h >= floor && c.h / floor < 1.0 + 1e-3, "{} {floor}", c.h);
}
