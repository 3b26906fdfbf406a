use isoclus_core::consts::{hex_perimeter, hex_side};
use isoclus_core::geom::{intersection_area, Point2, Region, TorusSpec};
use isoclus_core::hex::{classify, generate_plane, generate_torus, honeycomb};
use proptest::prelude::*;

#[test]
fn interior_fraction_grows_to_one() {
    let omega = Region::rect(Point2::ORIGIN, Point2::new(1.0, 1.0));
    let mut last = 0.0;
    for j in 1..=7 {
        let delta = 0.25f64.powi(j);
        let t = generate_plane(delta, &omega).unwrap();
        let c = classify(&t, &omega).unwrap();
        let fill = c.k() as f64 * delta;
        let edge = c.h() as f64 * delta.sqrt();
        assert!(fill <= 1.0 + 1e-12);
        assert!(fill >= last, "k delta fell from {last} to {fill} at delta = {delta}");
        assert!(edge < 8.0, "h sqrt(delta) = {edge}");
        last = fill;
    }
    assert!(last > 0.97, "{last}");
}

#[test]
fn torus_cells_tile() {
    for (a, b) in [(2, 2), (4, 4), (2, 6), (4, 3)] {
        let spec = TorusSpec::new(a, b).unwrap();
        let c = honeycomb(spec).unwrap();
        assert_eq!(c.len(), a * b);
        assert!((c.total_area() - spec.area()).abs() < 1e-9 * spec.area());
        assert!(c.exterior_area().unwrap().abs() < 1e-9);
        let t = generate_torus(spec).unwrap();
        let mut labels: Vec<usize> = t.indices().map(|i| t.label(i).unwrap()).collect();
        labels.sort();
        assert_eq!(labels, (1..=a * b).collect::<Vec<_>>());
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                let o = spec.intersection_area(&c.chambers()[i], &c.chambers()[j]);
                assert!(o < 1e-9, "cells {i} and {j} overlap by {o}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn cells_congruent(delta in 0.01..4.0f64, x in -3.0..3.0f64, y in -3.0..3.0f64) {
        let bbox = Region::rect(Point2::new(x, y), Point2::new(x + 3.0, y + 2.0));
        let t = generate_plane(delta, &bbox).unwrap();
        prop_assert!(!t.is_empty());
        for idx in t.indices() {
            let c = t.cell(idx).unwrap();
            prop_assert!((c.area() - delta).abs() < 1e-12 * delta);
            prop_assert!((c.perimeter() - hex_perimeter() * delta.sqrt()).abs() < 1e-12 * c.perimeter());
            prop_assert!(c.bbox().overlaps(&bbox.bbox()));
        }
        prop_assert!((t.side() - hex_side() * delta.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn classification_disjoint(delta in 0.02..1.0f64, w in 0.5..4.0f64, h in 0.5..4.0f64) {
        let omega = Region::rect(Point2::ORIGIN, Point2::new(w, h));
        let t = generate_plane(delta, &omega).unwrap();
        let c = classify(&t, &omega).unwrap();
        prop_assert!(c.k() as f64 * delta <= omega.area() * (1.0 + 1e-12));
        for i in &c.interior {
            prop_assert!(!c.boundary.contains(i));
        }
        for idx in t.indices() {
            let inter = intersection_area(&t.cell(idx).unwrap(), &omega);
            if inter > 1e-9 * delta {
                prop_assert!(c.interior.contains(&idx) || c.boundary.contains(&idx));
            }
        }
    }
}
