//! Honeycomb lower bounds and localized energy residuals.

use crate::consts::hex_perimeter;
use crate::error::{Error, Result};
use crate::geom::{boundary_distance, intersection_area, Ambient, Cluster, Point2, Region, Square, Window};
use crate::report::BoundReport;

/// `√(N/|Ω|)`: the factor taking chambers of area `|Ω|/N` to unit area.
pub fn unit_scale(omega_area: f64, n: usize) -> f64 {
    (n as f64 / omega_area).sqrt()
}

/// Scales every chamber (and a bounded ambient) by `lambda` about the origin.
pub fn scale_cluster(c: &Cluster, lambda: f64) -> Cluster {
    let ambient = match c.ambient() {
        Ambient::Region(r) => Ambient::Region(r.scaled(lambda, Point2::ORIGIN)),
        a => a.clone(),
    };
    Cluster::new_unchecked(c.chambers().iter().map(|r| r.scaled(lambda, Point2::ORIGIN)).collect(), ambient)
}

fn check_unit_areas(c: &Cluster) -> Result<()> {
    for (i, a) in c.areas().into_iter().enumerate() {
        if a > 1.0 + 1e-12 {
            return Err(Error::pre("|E(i)| <= 1", format!("chamber {} has area {a}", i + 1)));
        }
    }
    Ok(())
}

/// `P(E) ≥ P(H)/2 · (min{|E(0)|, 1} + Σ|E(i)|)` on a flat torus.
pub fn hales_torus(c: &Cluster) -> Result<BoundReport> {
    let t = match c.ambient() {
        Ambient::Torus(t) => *t,
        _ => return Err(Error::Domain("hales_torus needs a torus cluster".into())),
    };
    check_unit_areas(c)?;
    let total = c.total_area();
    let ext = (t.area() - total).max(0.0);
    let p = c.perimeter(None)?;
    let rhs = hex_perimeter() / 2.0 * (ext.min(1.0) + total);
    Ok(BoundReport::new("hales_torus", p, rhs, format!("N={};alpha={};beta={}", c.len(), t.alpha, t.beta)))
}

/// `P(E) > P(H)/2 · Σ|E(i)|` for a bounded planar cluster; the inequality is strict.
pub fn hales_plane(c: &Cluster) -> Result<BoundReport> {
    if matches!(c.ambient(), Ambient::Torus(_)) {
        return Err(Error::Domain("hales_plane needs a planar cluster".into()));
    }
    check_unit_areas(c)?;
    let p = c.perimeter(None)?;
    let rhs = hex_perimeter() / 2.0 * c.total_area();
    Ok(BoundReport::new("hales_plane", p, rhs, format!("N={}", c.len())))
}

fn ambient_region(c: &Cluster) -> Result<&Region> {
    match c.ambient() {
        Ambient::Region(r) => Ok(r),
        _ => Err(Error::Domain("a bounded ambient region is required".into())),
    }
}

fn check_compact(o: &Region, omega: &Region, what: &str) -> Result<()> {
    let a = o.area();
    let inside = intersection_area(o, omega);
    if a - inside > 1e-9 * a.max(1e-300) || boundary_distance(o, omega) <= 0.0 {
        return Err(Error::Domain(format!("{what} is not compactly contained in the ambient region")));
    }
    Ok(())
}

/// `P(E; O) ≥ |O| P(H)/2 √(N/|Ω|) − P(O)` for an open `O ⊂⊂ Ω`.
pub fn local_lower_bound(e: &Cluster, o: &Region) -> Result<BoundReport> {
    let omega = ambient_region(e)?;
    check_compact(o, omega, "O")?;
    let n = e.len();
    let area = omega.area();
    let cell = area / n as f64;
    if let Some((i, a)) = e.areas().into_iter().enumerate().find(|(_, a)| *a > cell * (1.0 + 1e-9)) {
        return Err(Error::pre("|E(i)| <= |Omega|/N", format!("chamber {} has area {a} > {cell}", i + 1)));
    }
    let lhs = e.perimeter(Some(&Window::Inside(o.clone())))?;
    let rhs = o.area() * hex_perimeter() / 2.0 * unit_scale(area, n) - o.perimeter();
    Ok(BoundReport::new("local_lower_bound", lhs, rhs, format!("N={n};area_O={:.12e}", o.area())))
}

/// Localized energy residual `r = P(E; Q_l) − |Q_l| P(H)/2 √(N/|Ω|)` with its
/// two normalizations: `r / P(Q_l)` and `r / (P(Q_l)^{3/2} (N/|Ω|)^{1/4})`.
pub fn equidistribution_residual(e: &Cluster, q_l: &Square, n: usize, omega: &Region) -> Result<(f64, BoundReport, BoundReport)> {
    if n == 0 {
        return Err(Error::Domain("N must be positive".into()));
    }
    let q = q_l.region();
    check_compact(&q, omega, "Q_l")?;
    let k = unit_scale(omega.area(), n);
    let p = e.perimeter(Some(&Window::Inside(q)))?;
    let main = q_l.area() * hex_perimeter() / 2.0 * k;
    let r = p - main;
    let pq = q_l.perimeter();
    let inputs = format!("N={n};l={}", q_l.side);
    let dia = BoundReport::new("equi_dia", p, main, inputs.clone()).with_residual(Some(r / pq));
    let indeco = BoundReport::new("equi_indeco", p, main, inputs).with_residual(Some(r / (pq.powf(1.5) * k.sqrt())));
    Ok((r, dia, indeco))
}
