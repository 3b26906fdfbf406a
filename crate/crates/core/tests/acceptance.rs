//! Acceptance criteria. Each criterion prints one PASS or FAIL line with its
//! runtime; the process exits non-zero if any criterion fails.

mod common;

use common::*;
use isoclus_core::bounds::hales_torus;
use isoclus_core::cheeger::{cheeger_convex, curvature_constants, hn_lower, hn_monotonicity, hn_sandwich, p_eigen_lower, p_partition_lower};
use isoclus_core::consts::{hex_perimeter, hex_side};
use isoclus_core::geom::{boolean, classic_inequality_checks, BoolOp, Point2, Region, RigidMotion, TorusSpec};
use isoclus_core::hex::{hexagon, honeycomb};
use isoclus_core::partition::{boundary_reassembly_partition, frame, surgery_partition};
use isoclus_core::geom::Square;
use isoclus_core::stability::{
    alpha_asymmetry, arc, arc_coercivity, arc_t, bulged_polygon, chordal_check, dido_check, fit_regular_ngon, kappa_ratio,
    ngon_corpus, regular_ngon, three_edge_perturbation,
};
use rand::Rng;
use std::f64::consts::PI;
use std::time::Instant;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn spread(v: &[f64]) -> f64 {
    let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    hi / lo
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn hexagon_constants() -> Outcome {
    let h = hexagon(Point2::new(0.3, -0.7), hex_side());
    let p = 2.0 * 12f64.powf(0.25);
    ensure!((h.area() - 1.0).abs() < 1e-9, "area {}", h.area());
    ensure!((h.perimeter() - p).abs() < 1e-9, "perimeter {}", h.perimeter());
    ensure!((hex_perimeter() - p).abs() < 1e-12, "constant {}", hex_perimeter());
    Ok(format!("|H| = {:.12}, P(H) = {:.12}", h.area(), h.perimeter()))
}

fn surgery() -> Outcome {
    let q0 = Square::new(Point2::ORIGIN, 1.0);
    let q1 = Square::new(Point2::ORIGIN, 3.0);
    let a = frame(&q0, &q1);
    let mut cs = Vec::new();
    for m in [10, 100, 1000] {
        let (c, _, rep) = e(surgery_partition(&q0, &q1, &a, m))?;
        let target = a.area() / m as f64;
        ensure!(c.len() == m, "M = {m}: {} chambers", c.len());
        for x in c.areas() {
            ensure!((x - target).abs() <= 1e-9 * target, "M = {m}: chamber area {x} vs {target}");
        }
        let k = rep.fitted_constant.unwrap_or(f64::NAN);
        ensure!(k > 0.0 && k <= 10.0, "M = {m}: fitted C = {k}");
        cs.push(k);
    }
    ensure!(spread(&cs) <= 4.0, "C spread {:?}", cs);
    Ok(format!("C = {cs:.3?}"))
}

fn reassembly() -> Outcome {
    let omega = Region::rect(Point2::ORIGIN, Point2::new(1.0, 1.0));
    let mut cs = Vec::new();
    for n in [16, 64, 256, 1024] {
        let (c, _, rep) = e(boundary_reassembly_partition(&omega, n))?;
        ensure!(c.len() == n, "N = {n}: {} chambers", c.len());
        let ext = e(c.exterior_area().ok_or("no exterior"))?;
        ensure!(ext.abs() <= 1e-9, "N = {n}: exterior {ext}");
        let delta = 1.0 / n as f64;
        for a in c.areas() {
            ensure!((a - delta).abs() <= 1e-9 * delta, "N = {n}: area {a}");
        }
        let p = e(c.perimeter(None))?;
        let lower = hex_perimeter() / 2.0 * (n as f64).sqrt();
        ensure!(p >= lower, "N = {n}: perimeter {p} below {lower}");
        let c0 = rep.fitted_constant.unwrap_or(f64::NAN);
        ensure!(c0 > 0.0, "N = {n}: C0 = {c0}");
        cs.push(c0);
    }
    ensure!(spread(&cs) <= 4.0, "C0 spread {:?}", cs);
    Ok(format!("C0 = {cs:.3?}"))
}

fn hales_equality() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut min_pert = f64::INFINITY;
    for (a, b) in [(2, 2), (4, 4), (2, 6)] {
        let spec = e(TorusSpec::new(a, b))?;
        let r = e(hales_torus(&e(honeycomb(spec))?))?;
        ensure!(r.slack.abs() <= 1e-9, "T({a},{b}): slack {}", r.slack);
        worst = worst.max(r.slack.abs());
        for eps in [1e-3, 1e-2, 5e-2] {
            let p = e(hales_torus(&e(three_edge_perturbation(spec, eps, 0.3))?))?;
            ensure!(p.slack > 0.0, "T({a},{b}) eps {eps}: slack {}", p.slack);
            min_pert = min_pert.min(p.slack);
        }
    }
    Ok(format!("max |slack| {worst:.2e}, smallest perturbed slack {min_pert:.3e}"))
}

fn arc_function() -> Outcome {
    ensure!(e(arc(0.0))? == 1.0, "arc(0) = {}", e(arc(0.0))?);
    let half = e(arc(PI / 8.0))?;
    ensure!((half - PI / 2.0).abs() < 1e-10, "arc(pi/8) = {half}");
    let h = PI / 8.0 / 199.0;
    let v: Vec<f64> = (0..200).map(|i| arc(i as f64 * h)).collect::<Result<_, _>>().map_err(|x| x.to_string())?;
    let worst = v.windows(3).map(|w| w[0] - 2.0 * w[1] + w[2]).fold(f64::INFINITY, f64::min);
    ensure!(worst >= -1e-10, "second difference {worst}");
    let eta = e(arc_coercivity(0.05, 500))?;
    ensure!(eta > 0.0, "eta = {eta}");
    Ok(format!("eta = {eta:.6}, min second difference {worst:.3e}"))
}

fn chordal_equality() -> Outcome {
    let v = regular_ngon(6, 0.0);
    let l = v[0].dist(v[1]);
    let mut msg = Vec::new();
    for a in [1e-3, 1e-2] {
        let mut areas = [0.0; 6];
        areas[2] = a;
        let body = e(bulged_polygon(&v, &areas))?;
        let expected = 5.0 * l + e(arc_t(a, l))?;
        let rel = (body.perimeter() - expected).abs() / expected;
        ensure!(rel < 1e-8, "a = {a}: perimeter {} vs {expected}", body.perimeter());
        let r = e(dido_check(&body, &v))?;
        ensure!(r.slack.abs() <= 1e-8 * r.rhs, "a = {a}: dido slack {}", r.slack);
        msg.push(format!("a={a}: rel {rel:.1e}"));
    }
    let two = e(bulged_polygon(&v, &[1e-2, 0.0, 0.0, 5e-3, 0.0, 0.0]))?;
    let r = e(chordal_check(&two, &v))?;
    ensure!(r.slack > 0.0, "two bulges: slack {}", r.slack);
    msg.push(format!("two-bulge slack {:.3e}", r.slack));
    Ok(msg.join(", "))
}

fn hexagon_stability() -> Outcome {
    let mut maxima = Vec::new();
    for seed in [11, 12] {
        let corpus = e(ngon_corpus(6, 500, 0.02, 1e-2, seed))?;
        let mut worst: f64 = 0.0;
        for pi in &corpus {
            let f = e(fit_regular_ngon(pi, 6))?;
            ensure!(f.deficit <= 1e-2, "deficit {}", f.deficit);
            let r = f.ratio.filter(|r| r.is_finite()).ok_or_else(|| format!("seed {seed}: ratio {:?}", f.ratio))?;
            worst = worst.max(r);
        }
        maxima.push(worst);
    }
    ensure!(spread(&maxima) <= 2.0, "C(6) by seed {:?}", maxima);
    Ok(format!("empirical C(6) = {maxima:.4?}"))
}

fn asymmetry() -> Outcome {
    let spec = e(TorusSpec::new(2, 2))?;
    let h = e(honeycomb(spec))?;
    let a0 = e(alpha_asymmetry(&h))?.alpha;
    ensure!(a0.abs() <= 1e-9, "alpha(H) = {a0}");
    let l = hex_side();
    let lattice = [Point2::new(3f64.sqrt() * l, 0.0), Point2::new(3f64.sqrt() * l / 2.0, 1.5 * l)];
    let pert = e(three_edge_perturbation(spec, 1e-2, 0.3))?;
    let base = e(alpha_asymmetry(&pert))?.alpha;
    for v in lattice {
        let moved = e(alpha_asymmetry(&h.map_chambers(|r| r.translated(v))))?.alpha;
        ensure!(moved.abs() <= 1e-6, "translated honeycomb alpha {moved}");
        let pm = e(alpha_asymmetry(&pert.map_chambers(|r| r.translated(v))))?.alpha;
        ensure!((pm - base).abs() <= 1e-6, "translated perturbation alpha {pm} vs {base}");
    }
    let mut ks = Vec::new();
    for eps in [1e-3, 1e-2, 5e-2] {
        let (k, _) = e(kappa_ratio(&e(three_edge_perturbation(spec, eps, 0.3))?))?;
        ensure!(k > 0.0, "eps {eps}: kappa {k}");
        ks.push(k);
    }
    ensure!(spread(&ks) <= 5.0, "kappa spread {:?}", ks);
    Ok(format!("kappa = {ks:.4?}, min {:.4}", ks.iter().cloned().fold(f64::INFINITY, f64::min)))
}

fn cheeger_constants() -> Outcome {
    // P/A over squares with corners rounded by r: (4 − (8 − 2π) r) / (1 − (4 − π) r²)
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let f = |r: f64| (4.0 - (8.0 - 2.0 * PI) * r) / (1.0 - (4.0 - PI) * r * r);
    let (mut lo, mut hi) = (0.0, 0.5);
    while hi - lo > 1e-13 {
        let (x1, x2) = (hi - g * (hi - lo), lo + g * (hi - lo));
        if f(x1) < f(x2) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    let oracle = f(0.5 * (lo + hi));
    let sq = e(cheeger_convex(&Region::square(Point2::ORIGIN, 1.0)))?.h;
    ensure!((sq - oracle).abs() < 1e-8, "square h {sq} vs oracle {oracle}");
    ensure!((sq - 2.0 - PI.sqrt()).abs() < 1e-8, "square h {sq}");
    let disk = e(cheeger_convex(&Region::regular_polygon(10_000, Point2::ORIGIN, 1.0, 0.0)))?.h;
    ensure!((disk - 2.0).abs() < 1e-3, "10^4-gon h {disk}");
    let mut g = rng(17);
    for _ in 0..5 {
        let k = random_convex(&mut g);
        let h = e(cheeger_convex(&k))?.h;
        for lambda in [0.5, 3.0] {
            let hs = e(cheeger_convex(&k.scaled(lambda, Point2::ORIGIN)))?.h;
            ensure!((hs - h / lambda).abs() < 1e-8 * h / lambda, "scaling {lambda}: {hs} vs {}", h / lambda);
        }
    }
    Ok(format!("square {sq:.10}, disk {disk:.8}"))
}

fn hn_sweep() -> Outcome {
    let omega = Region::rect(Point2::ORIGIN, Point2::new(1.0, 1.0));
    let mut norm = Vec::new();
    for j in 4..=10 {
        let n = 1usize << j;
        let s = e(hn_sandwich(&omega, n, 0.0))?;
        let expect = 2.0 * PI.sqrt() * (n as f64).powf(1.5);
        ensure!((s.lower - expect).abs() <= 1e-12 * expect, "N = {n}: lower {}", s.lower);
        let u = s.upper.ok_or_else(|| format!("N = {n} infeasible"))?;
        ensure!(s.lower <= u, "N = {n}: lower {} > upper {u}", s.lower);
        norm.push(u / (n as f64).powf(1.5));
    }
    let tail = &norm[norm.len() - 4..];
    ensure!(tail.windows(2).all(|w| w[1] <= w[0]), "tail not non-increasing: {norm:?}");
    let last = *norm.last().unwrap();
    let hh = isoclus_core::cheeger::hexagon_cheeger();
    ensure!(last >= 2.0 * PI.sqrt() && last <= hh + 0.2, "upper/N^1.5 = {last} outside [{}, {}]", 2.0 * PI.sqrt(), hh + 0.2);
    let c = 2.0 * PI.sqrt();
    for n in 16..1024usize {
        let (a, b) = (hn_lower(1.0, n), hn_lower(1.0, n + 1));
        let step = c * ((n + 1) as f64).sqrt();
        ensure!(b - a >= step * (1.0 - 1e-12), "lower step at N = {n}: {} < {step}", b - a);
    }
    let seq = (16..=40).map(|n| hn_sandwich(&omega, n, 0.0)).collect::<Result<Vec<_>, _>>().map_err(|x| x.to_string())?;
    for r in e(hn_monotonicity(&seq, 1.0))?.iter().filter(|r| r.name == "hn_step_lower") {
        ensure!(r.slack >= -1e-12 * r.rhs, "{}: slack {}", r.inputs, r.slack);
    }
    Ok(format!("upper/N^1.5 = {norm:.3?}"))
}

fn curvature() -> Outcome {
    let h = [4.0, 3.0, 5.5, 2.5];
    let areas = [1.0, 2.0, 0.7, 1.3];
    let c = e(curvature_constants(&h, &areas))?;
    for j in 0..4 {
        ensure!(c[j][0] == h[j], "C_{j},0 = {}", c[j][0]);
        for k in 0..4 {
            ensure!(c[j][k + 1] == -c[k][j + 1], "C_{j},{k} = {} vs {}", c[j][k + 1], c[k][j + 1]);
        }
    }
    let same = e(curvature_constants(&[3.7; 5], &[0.2; 5]))?;
    ensure!(same.iter().all(|row| row[1..].iter().all(|&x| x == 0.0)), "congruent chambers give nonzero constants");
    Ok(format!("C_1,2 = {:.6}", c[0][2]))
}

fn p_limits() -> Outcome {
    let p = 1.0 + 1e-8;
    for h in [2.0, 2.0 + PI.sqrt(), 10.0] {
        let v = e(p_eigen_lower(h, p))?;
        ensure!((v - h).abs() <= 1e-6 * h, "h = {h}: {v}");
    }
    for n in [1, 16, 1024] {
        let hn = hn_lower(1.0, n);
        let v = e(p_partition_lower(hn, p, n))?;
        ensure!((v - hn).abs() <= 1e-6 * hn, "N = {n}: {v} vs {hn}");
    }
    Ok("relative gaps below 1e-6".into())
}

fn kernel_suite() -> Outcome {
    let mut g = rng(2025);
    let mut violations = Vec::new();
    let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(1e-300);
    for i in 0..200 {
        let r = if i % 2 == 0 { random_star(&mut g) } else { random_convex(&mut g) };
        let m = RigidMotion::rotation(g.gen_range(0.0..6.3)).compose(&RigidMotion::translation(Point2::new(g.gen_range(-9.0..9.0), g.gen_range(-9.0..9.0))));
        let t = r.transformed(&m);
        if rel(t.area(), r.area()) > 1e-12 || rel(t.perimeter(), r.perimeter()) > 1e-12 {
            violations.push(format!("region {i}: motion"));
        }
        for lambda in [0.5, 2.0, 7.0] {
            let s = r.scaled(lambda, Point2::new(0.1, 0.2));
            if rel(s.area(), lambda * lambda * r.area()) > 1e-12 || rel(s.perimeter(), lambda * r.perimeter()) > 1e-12 {
                violations.push(format!("region {i}: scaling {lambda}"));
            }
        }
        for c in classic_inequality_checks(&r) {
            if !c.satisfied() {
                violations.push(format!("region {i}: {} slack {}", c.name, c.slack));
            }
        }
        let other = random_star(&mut g);
        let u = e(boolean(&r, &other, BoolOp::Union))?.area();
        let x = e(boolean(&r, &other, BoolOp::Intersection))?.area();
        if (u + x - r.area() - other.area()).abs() > 1e-9 * (r.area() + other.area()) {
            violations.push(format!("region {i}: inclusion-exclusion"));
        }
        if i % 4 == 0 {
            let cuts = |g: &mut rand_chacha::ChaCha8Rng| -> Vec<f64> { (0..3).map(|_| g.gen_range(0.05..0.95)).collect() };
            let (a, b, c) = (strips(&cuts(&mut g)), strips(&cuts(&mut g)), strips(&cuts(&mut g)));
            let (ab, bc, ac) = (e(a.distance(&b))?, e(b.distance(&c))?, e(a.distance(&c))?);
            if ac > ab + bc + 1e-9 {
                violations.push(format!("triple {i}: triangle inequality"));
            }
        }
    }
    ensure!(violations.is_empty(), "{} violations: {:?}", violations.len(), &violations[..violations.len().min(5)]);
    Ok("200 regions, 0 violations".into())
}

fn main() {
    let criteria: [(&str, f64, fn() -> Outcome); 13] = [
        ("hexagon constants", 1.0, hexagon_constants),
        ("surgery partition", 10.0, surgery),
        ("boundary reassembly", 60.0, reassembly),
        ("torus honeycomb equality", 10.0, hales_equality),
        ("arc function", 1.0, arc_function),
        ("chordal equality case", 5.0, chordal_equality),
        ("hexagon stability", 120.0, hexagon_stability),
        ("honeycomb asymmetry", 120.0, asymmetry),
        ("Cheeger constants", 30.0, cheeger_constants),
        ("H_N sandwich", 60.0, hn_sweep),
        ("curvature constants", 1.0, curvature),
        ("p -> 1 limits", 1.0, p_limits),
        ("kernel property suite", 60.0, kernel_suite),
    ];
    let only: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        if only.is_some_and(|k| k != i + 1) {
            continue;
        }
        let t = Instant::now();
        let out = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        let out = match out {
            Ok(msg) if secs > *limit => Err(format!("{msg}; took {secs:.2} s, limit {limit} s")),
            o => o,
        };
        match out {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} ({secs:.2} s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} ({secs:.2} s)", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
