use super::cut::{cut_position, equal_area_cut};
use crate::consts::hex_perimeter;
use crate::error::{Error, Result};
use crate::geom::{overlay, union_all, Ambient, BoolOp, Cluster, Point2, Region};
use crate::hex::{classify, generate_plane};
use crate::report::BoundReport;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::FRAC_PI_2;

/// Reference ceiling for the fitted reassembly constant.
pub const REASSEMBLY_C0_CEILING: f64 = 3.0;

/// One boundary piece `H_δ(i) ∩ Ω`, in the unit-area normalization.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Piece {
    pub cell: (i64, i64),
    pub area: f64,
}

/// A straight cut through a boundary piece.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cut {
    /// Index into `pieces`.
    pub piece: usize,
    /// Cut direction (0 = vertical line).
    pub direction: f64,
    /// Line position `u·p = c` in the unit-area normalization.
    pub position: f64,
    /// Area of the part closing the current chamber.
    pub first_area: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReassemblyLedger {
    pub n: usize,
    pub delta: f64,
    /// Interior cell count `k`.
    pub interior: usize,
    /// Boundary pieces ascending by area, ties by cell index.
    pub pieces: Vec<Piece>,
    pub cuts: Vec<Cut>,
    /// Piece indices making up each boundary chamber.
    pub compositions: Vec<Vec<usize>>,
    /// Scale applied to Ω before building (`1/√|Ω|`).
    pub scale: f64,
}

/// Partition of `omega` into `n` chambers of area `|Ω|/n` built from a
/// hexagonal tiling: interior cells are kept, boundary pieces are merged.
pub fn boundary_reassembly_partition(omega: &Region, n: usize) -> Result<(Cluster, ReassemblyLedger, BoundReport)> {
    if n == 0 {
        return Err(Error::Domain("reassembly needs at least one chamber".into()));
    }
    if !omega.is_polygonal() {
        return Err(Error::Unsupported("reassembly accepts polygonal regions only".into()));
    }
    let area = omega.area();
    if !(area > 0.0) {
        return Err(Error::Domain("region has no area".into()));
    }
    let scale = 1.0 / area.sqrt();
    let w = omega.scaled(scale, Point2::ORIGIN);
    let delta = 1.0 / n as f64;
    let tiling = generate_plane(delta, &w)?;
    let cls = classify(&tiling, &w)?;
    let k = cls.k();

    let raw: Vec<((i64, i64), Region)> = cls
        .boundary
        .par_iter()
        .map(|idx| (*idx, overlay(&tiling.cell(*idx).unwrap(), &w, BoolOp::Intersection)))
        .collect();
    let mut raw: Vec<((i64, i64), Region, f64)> =
        raw.into_iter().map(|(i, r)| { let a = r.area(); (i, r, a) }).filter(|(_, _, a)| *a > 1e-14 * delta).collect();
    raw.sort_by(|a, b| a.2.partial_cmp(&b.2).unwrap().then(a.0.cmp(&b.0)));

    let target_count = n - k;
    let tol = 1e-12 * delta;
    let mut chambers_b: Vec<Vec<Region>> = Vec::new();
    let mut compositions: Vec<Vec<usize>> = Vec::new();
    let mut cuts = Vec::new();
    let mut cur: Vec<Region> = Vec::new();
    let mut cur_ids: Vec<usize> = Vec::new();
    let mut acc = 0.0;
    for (pi, (_, piece, a)) in raw.iter().enumerate() {
        let mut piece = piece.clone();
        let mut a = *a;
        loop {
            let last = chambers_b.len() + 1 == target_count;
            if last || acc + a <= delta + tol {
                cur.push(piece);
                cur_ids.push(pi);
                acc += a;
                if !last && acc >= delta - tol {
                    chambers_b.push(std::mem::take(&mut cur));
                    compositions.push(std::mem::take(&mut cur_ids));
                    acc = 0.0;
                }
                break;
            }
            let need = delta - acc;
            let b = piece.bbox();
            let direction = if b.width() > 1e-9 * delta.sqrt() { 0.0 } else { FRAC_PI_2 };
            let position = cut_position(&piece, need, direction)?;
            let (first, rest) = equal_area_cut(&piece, need, direction)?;
            cuts.push(Cut { piece: pi, direction, position, first_area: first.area() });
            cur.push(first);
            cur_ids.push(pi);
            chambers_b.push(std::mem::take(&mut cur));
            compositions.push(std::mem::take(&mut cur_ids));
            acc = 0.0;
            a = rest.area();
            piece = rest;
            if a <= tol {
                break;
            }
        }
    }
    if !cur.is_empty() {
        if chambers_b.len() < target_count {
            chambers_b.push(cur);
            compositions.push(cur_ids);
        } else if let (Some(c), Some(ids)) = (chambers_b.last_mut(), compositions.last_mut()) {
            // rounding leftovers
            c.extend(cur);
            ids.extend(cur_ids);
        }
    }
    if chambers_b.len() != target_count {
        return Err(Error::Domain(format!(
            "reassembly produced {} boundary chambers instead of {target_count}",
            chambers_b.len()
        )));
    }
    let unscale = 1.0 / scale;
    let mut chambers: Vec<Region> = cls.interior.iter().map(|idx| tiling.cell(*idx).unwrap()).collect();
    chambers.extend(chambers_b.par_iter().map(|parts| union_all(parts)).collect::<Vec<_>>());
    let chambers: Vec<Region> = chambers.into_iter().map(|c| c.scaled(unscale, Point2::ORIGIN)).collect();
    let cluster = Cluster::new_unchecked(chambers, Ambient::Region(omega.clone()));
    let total = cluster.perimeter(None)?;
    let lower = hex_perimeter() / 2.0 * (n as f64 * area).sqrt();
    let c0 = (total - lower) / omega.perimeter();
    let report = BoundReport::new("reassembly", total, lower, format!("N={n};area={area:.12e}")).with_fitted(Some(c0));
    let ledger = ReassemblyLedger {
        n,
        delta,
        interior: k,
        pieces: raw.iter().map(|(c, _, a)| Piece { cell: *c, area: *a }).collect(),
        cuts,
        compositions,
        scale,
    };
    Ok((cluster, ledger, report))
}
