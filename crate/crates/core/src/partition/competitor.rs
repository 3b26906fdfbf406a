use super::surgery::surgery_partition;
use crate::consts::{hex_diameter, hex_perimeter};
use crate::error::{Error, Result};
use crate::geom::{boundary_distance, intersection_area, overlay, union_all, Ambient, BoolOp, Cluster, Region, Square, Window};
use crate::hex::generate_plane;
use crate::report::BoundReport;
use rayon::prelude::*;

/// Reference ceiling for the fitted competitor constant.
pub const COMPETITOR_C0_CEILING: f64 = 5.0;

/// `diam(E(i)) ≤ μ √(|Ω|/N)` for every chamber.
pub fn is_mu_bounded(e: &Cluster, omega_area: f64, mu: f64) -> bool {
    let bound = mu * (omega_area / e.len() as f64).sqrt();
    e.chambers().iter().all(|c| c.diameter() <= bound * (1.0 + 1e-12))
}

fn strictly_inside_square(r: &Region, q: &Square, margin: f64) -> bool {
    let b = r.bbox();
    let h = q.side / 2.0;
    b.min.x > q.center.x - h + margin
        && b.max.x < q.center.x + h - margin
        && b.min.y > q.center.y - h + margin
        && b.max.y < q.center.y + h - margin
}

/// Replaces the chambers of `e` compactly contained in the enlarged cube
/// `Q_{l+d}` by a hexagonal cover of `q_l` and an equal-area surgery of the
/// remaining frame. Chambers kept from `e` keep their labels.
pub fn competitor_build(omega: &Region, e: &Cluster, q_l: &Square, n: usize, mu: f64) -> Result<(Cluster, BoundReport)> {
    if n == 0 || e.len() != n {
        return Err(Error::Domain(format!("cluster has {} chambers, expected N = {n}", e.len())));
    }
    let area = omega.area();
    if !(area > 0.0) {
        return Err(Error::Domain("region has no area".into()));
    }
    let a = (area / n as f64).sqrt();
    let l = q_l.side;
    if !(mu >= hex_diameter()) {
        return Err(Error::pre("mu >= diam(H)", format!("mu = {mu}, diam(H) = {}", hex_diameter())));
    }
    if !(l >= 6.0 * mu * a) {
        return Err(Error::pre("l >= 6 mu sqrt(|Omega|/N)", format!("l = {l}, 6 mu sqrt(|Omega|/N) = {}", 6.0 * mu * a)));
    }
    let ql_region = q_l.region();
    let inside = intersection_area(&ql_region, omega);
    let gap = boundary_distance(&ql_region, omega);
    if inside < q_l.area() * (1.0 - 1e-9) || !(gap > 4.0 * mu * a) {
        return Err(Error::pre(
            "d(dQ_l, dOmega) > 4 mu sqrt(|Omega|/N)",
            format!("distance {gap}, required {}", 4.0 * mu * a),
        ));
    }
    let d = 2.0 * mu * a;
    let q_big = q_l.enlarged(d);
    let margin = 1e-9 * a;
    // only chambers meeting Q_{l+d} take part in the construction
    let q_big_region = q_big.region();
    let near: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&i| {
            let c = &e.chambers()[i];
            c.bbox().overlaps(&q_big_region.bbox()) && intersection_area(c, &q_big_region) > 0.0
        })
        .collect();
    let bound = mu * a * (1.0 + 1e-12);
    if let Some(&i) = near.iter().find(|&&i| e.chambers()[i].diameter() > bound) {
        return Err(Error::pre(
            "diam(E(i)) <= mu sqrt(|Omega|/N)",
            format!("chamber {} has diameter {}", i + 1, e.chambers()[i].diameter()),
        ));
    }
    let dropped: Vec<usize> = near.iter().copied().filter(|&i| strictly_inside_square(&e.chambers()[i], &q_big, margin)).collect();
    let is_dropped = {
        let mut v = vec![false; n];
        for &i in &dropped {
            v[i] = true;
        }
        v
    };

    let delta = area / n as f64;
    let tiling = generate_plane(delta, &ql_region)?;
    let cells: Vec<Region> = tiling.indices().map(|idx| tiling.cell(idx).unwrap()).collect();
    let hexes: Vec<Region> = cells
        .into_par_iter()
        .filter(|c| intersection_area(c, &ql_region) > 1e-12 * delta)
        .collect();
    let kept_near: Vec<&Region> = near.iter().filter(|&&i| !is_dropped[i]).map(|&i| &e.chambers()[i]).collect();
    for hx in &hexes {
        for c in &kept_near {
            if c.bbox().overlaps(&hx.bbox()) && intersection_area(hx, c) > 1e-9 * delta {
                return Err(Error::pre("mu >= diam(H)", "hexagonal cover overlaps a kept chamber"));
            }
        }
    }
    let k = dropped.len();
    let h = hexes.len();
    if h > k {
        return Err(Error::pre("k(l,d) >= h", format!("{h} hexagons needed but only {k} chambers removed")));
    }
    let removed: Vec<Region> = dropped.iter().map(|&i| e.chambers()[i].clone()).collect();
    let residual = overlay(&union_all(&removed), &union_all(&hexes), BoolOp::Difference);
    let mut fill: Vec<Region> = hexes;
    if k > h {
        let (s, _, _) = surgery_partition(q_l, &q_big, &residual, k - h)?;
        fill.extend(s.into_chambers());
    }
    let mut fill = fill.into_iter();
    let chambers: Vec<Region> = (0..n)
        .map(|i| if is_dropped[i] { fill.next().unwrap() } else { e.chambers()[i].clone() })
        .collect();
    let f = Cluster::new_unchecked(chambers, Ambient::Region(omega.clone()));
    let e_amb = Cluster::new_unchecked(e.chambers().to_vec(), Ambient::Region(omega.clone()));
    let pf = f.perimeter(None)?;
    let outside = e_amb.perimeter(Some(&Window::Outside(ql_region)))?;
    let main = q_l.area() * hex_perimeter() / 2.0 * (n as f64 / area).sqrt();
    let scale = q_l.perimeter() * mu;
    let c0 = (pf - main - outside) / scale;
    let report = BoundReport::new(
        "competitor",
        main + outside + COMPETITOR_C0_CEILING * scale,
        pf,
        format!("N={n};l={l};mu={mu};k={k};h={h}"),
    )
    .with_fitted(Some(c0));
    Ok((f, report))
}
