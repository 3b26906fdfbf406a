mod common;

use common::*;
use isoclus_core::geom::{boolean, hausdorff_distance, Ambient, BoolOp, Cluster, Point2, Region, RigidMotion};
use proptest::prelude::*;
use std::f64::consts::TAU;

fn motion() -> impl Strategy<Value = RigidMotion> {
    (0.0..TAU, -50.0..50.0f64, -50.0..50.0f64)
        .prop_map(|(th, x, y)| RigidMotion::rotation(th).compose(&RigidMotion::translation(Point2::new(x, y))))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn arc_region() -> Region {
    isoclus_core::stability::bulged_polygon(&isoclus_core::stability::regular_ngon(6, 0.3), &[0.02, -0.01, 0.0, 0.03, 0.0, -0.02])
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn motion_invariance(seed in any::<u64>(), m in motion()) {
        let r = random_star(&mut rng(seed));
        let t = r.transformed(&m);
        prop_assert!(rel(t.area(), r.area()) < 1e-12);
        prop_assert!(rel(t.perimeter(), r.perimeter()) < 1e-12);
        let a = arc_region();
        let ta = a.transformed(&m);
        prop_assert!(rel(ta.area(), a.area()) < 1e-12);
        prop_assert!(rel(ta.perimeter(), a.perimeter()) < 1e-12);
    }

    #[test]
    fn scaling(seed in any::<u64>(), lambda in prop::sample::select(vec![0.5, 2.0, 7.0])) {
        let r = random_star(&mut rng(seed));
        let c = Point2::new(0.3, -1.1);
        let s = r.scaled(lambda, c);
        prop_assert!(rel(s.area(), lambda * lambda * r.area()) < 1e-12);
        prop_assert!(rel(s.perimeter(), lambda * r.perimeter()) < 1e-12);
        let a = arc_region();
        prop_assert!(rel(a.scaled(lambda, c).area(), lambda * lambda * a.area()) < 1e-12);
    }

    #[test]
    fn inclusion_exclusion(seed in any::<u64>()) {
        let mut g = rng(seed);
        let a = random_star(&mut g);
        let b = if seed % 2 == 0 { random_star(&mut g) } else { random_convex(&mut g) };
        let u = boolean(&a, &b, BoolOp::Union).unwrap().area();
        let i = boolean(&a, &b, BoolOp::Intersection).unwrap().area();
        prop_assert!((u + i - a.area() - b.area()).abs() < 1e-9 * (a.area() + b.area()), "{u} {i}");
        let d = boolean(&a, &b, BoolOp::Difference).unwrap().area();
        prop_assert!((d + i - a.area()).abs() < 1e-9 * a.area());
    }

    #[test]
    fn single_chamber_perimeter(seed in any::<u64>()) {
        let r = random_star(&mut rng(seed));
        let c = Cluster::new(vec![r.clone()], Ambient::Plane).unwrap();
        prop_assert!(rel(c.perimeter(None).unwrap(), r.perimeter()) < 1e-9);
    }

    #[test]
    fn distance_triangle(a in prop::collection::vec(0.05..0.95f64, 3),
                         b in prop::collection::vec(0.05..0.95f64, 3),
                         c in prop::collection::vec(0.05..0.95f64, 3)) {
        let (e, f, g) = (strips(&a), strips(&b), strips(&c));
        let ef = e.distance(&f).unwrap();
        let fg = f.distance(&g).unwrap();
        let eg = e.distance(&g).unwrap();
        prop_assert!(eg <= ef + fg + 1e-9, "{eg} > {ef} + {fg}");
        prop_assert!((ef - f.distance(&e).unwrap()).abs() < 1e-12);
        prop_assert!(e.distance(&e).unwrap().abs() < 1e-12);
    }

    #[test]
    fn hausdorff_laws(seed in any::<u64>(), m in motion()) {
        let mut g = rng(seed);
        let a = random_star(&mut g);
        let b = random_convex(&mut g);
        let ab = hausdorff_distance(&a.boundary(), &b.boundary()).unwrap();
        let ba = hausdorff_distance(&b.boundary(), &a.boundary()).unwrap();
        let scale = a.perimeter().max(b.perimeter());
        prop_assert!((ab - ba).abs() < 1e-3 * scale);
        prop_assert!(hausdorff_distance(&a.boundary(), &a.boundary()).unwrap() < 1e-4 * a.perimeter());
        let mab = hausdorff_distance(&a.transformed(&m).boundary(), &b.transformed(&m).boundary()).unwrap();
        prop_assert!((mab - ab).abs() < 1e-3 * scale);
    }
}
