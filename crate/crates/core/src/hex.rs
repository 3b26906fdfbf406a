//! Honeycomb tilings: planar tilings `H_δ` and the reference tiling of the torus.
//!
//! Cells are regular hexagons with a vertex pointing up. Row `k` sits at height
//! `3/2 s k` and odd rows are shifted right by `√3 s / 2`, where `s` is the side.

use crate::consts::hex_side;
use crate::error::{Error, Result};
use crate::geom::{Ambient, BBox, Cluster, Point2, Region, TorusSpec};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Regular hexagon with the given centre and side, vertex up.
pub fn hexagon(center: Point2, side: f64) -> Region {
    Region::regular_polygon(6, center, side, PI / 6.0)
}

/// Side of the regular hexagon of area `delta`.
pub fn side_for_area(delta: f64) -> f64 {
    delta.sqrt() * hex_side()
}

#[derive(Debug, Clone, PartialEq)]
pub struct HexTiling {
    delta: f64,
    origin: Point2,
    cells: BTreeMap<(i64, i64), Point2>,
    covered: BBox,
    torus: Option<TorusSpec>,
}

/// Centre of cell `(row, col)` for side `s` and origin `o`.
pub fn cell_center(row: i64, col: i64, s: f64, o: Point2) -> Point2 {
    let sx = 3f64.sqrt() * s;
    let shift = if row.rem_euclid(2) == 1 { 0.5 } else { 0.0 };
    o + Point2::new(sx * (col as f64 + shift), 1.5 * s * row as f64)
}

impl HexTiling {
    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn side(&self) -> f64 {
        side_for_area(self.delta)
    }

    pub fn origin(&self) -> Point2 {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn torus(&self) -> Option<TorusSpec> {
        self.torus
    }

    pub fn indices(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.cells.keys().copied()
    }

    pub fn center(&self, idx: (i64, i64)) -> Option<Point2> {
        self.cells.get(&idx).copied()
    }

    pub fn cell(&self, idx: (i64, i64)) -> Option<Region> {
        self.cells.get(&idx).map(|c| hexagon(*c, self.side()))
    }

    /// Torus label `1 + kβ + h` of cell `(k, h)`.
    pub fn label(&self, idx: (i64, i64)) -> Option<usize> {
        let t = self.torus?;
        let (k, h) = idx;
        if k < 0 || h < 0 || k as usize >= t.alpha || h as usize >= t.beta {
            return None;
        }
        Some(1 + k as usize * t.beta + h as usize)
    }

    /// Cells as a cluster: torus ambient for torus tilings, plane otherwise.
    /// Chamber `i` is the cell with label `i + 1` on the torus.
    pub fn to_cluster(&self) -> Cluster {
        let chambers: Vec<Region> = self.cells.values().map(|c| hexagon(*c, self.side())).collect();
        let ambient = match self.torus {
            Some(t) => Ambient::Torus(t),
            None => Ambient::Plane,
        };
        Cluster::new_unchecked(chambers, ambient)
    }
}

/// All cells of area `delta` meeting `bbox`, grid anchored at the origin.
pub fn generate_plane(delta: f64, bbox: &Region) -> Result<HexTiling> {
    generate_plane_with_origin(delta, bbox, Point2::ORIGIN)
}

pub fn generate_plane_with_origin(delta: f64, bbox: &Region, origin: Point2) -> Result<HexTiling> {
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::Domain(format!("cell area must be positive, got {delta}")));
    }
    if bbox.is_empty() {
        return Err(Error::Domain("empty region for tiling".into()));
    }
    let b = bbox.bbox();
    let s = side_for_area(delta);
    let sx = 3f64.sqrt() * s;
    let k0 = ((b.min.y - origin.y - s) / (1.5 * s)).floor() as i64;
    let k1 = ((b.max.y - origin.y + s) / (1.5 * s)).ceil() as i64;
    let h0 = ((b.min.x - origin.x - sx) / sx).floor() as i64 - 1;
    let h1 = ((b.max.x - origin.x + sx) / sx).ceil() as i64 + 1;
    let mut cells = BTreeMap::new();
    for k in k0..=k1 {
        for h in h0..=h1 {
            let c = cell_center(k, h, s, origin);
            if hexagon(c, s).bbox().overlaps(&b) {
                cells.insert((k, h), c);
            }
        }
    }
    // every cell meeting the box was generated
    let covered = b;
    Ok(HexTiling { delta, origin, cells, covered, torus: None })
}

/// Unit-area reference tiling of the torus, `H(1)` centred at the origin.
pub fn generate_torus(t: TorusSpec) -> Result<HexTiling> {
    let t = TorusSpec::new(t.alpha, t.beta)?;
    let s = hex_side();
    let mut cells = BTreeMap::new();
    let mut covered = BBox::empty();
    for k in 0..t.alpha as i64 {
        for h in 0..t.beta as i64 {
            let c = cell_center(k, h, s, Point2::ORIGIN);
            covered = covered.union(&hexagon(c, s).bbox());
            cells.insert((k, h), c);
        }
    }
    Ok(HexTiling { delta: 1.0, origin: Point2::ORIGIN, cells, covered, torus: Some(t) })
}

/// The reference honeycomb of the torus as a cluster, chamber `i` labelled `i + 1`.
pub fn honeycomb(t: TorusSpec) -> Result<Cluster> {
    Ok(generate_torus(t)?.to_cluster())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellClass {
    Interior,
    Boundary,
    Outside,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HexClassification {
    /// Cells compactly contained in Ω.
    pub interior: Vec<(i64, i64)>,
    /// Cells meeting ∂Ω.
    pub boundary: Vec<(i64, i64)>,
}

impl HexClassification {
    pub fn k(&self) -> usize {
        self.interior.len()
    }

    pub fn h(&self) -> usize {
        self.boundary.len()
    }
}

/// Clearance used for compact containment.
pub const CLEARANCE: f64 = 1e-9;

fn classify_cell(c: Point2, s: f64, omega: &Region, omega_edges: &[crate::geom::Edge]) -> CellClass {
    let apothem = 3f64.sqrt() / 2.0 * s;
    let d = omega_edges.iter().map(|e| e.distance_to(c)).fold(f64::INFINITY, f64::min);
    let inside_c = omega.contains(c);
    if d > s + CLEARANCE {
        return if inside_c { CellClass::Interior } else { CellClass::Outside };
    }
    if d < apothem {
        return CellClass::Boundary;
    }
    // exact test: does ∂Ω meet the closed cell (within clearance)?
    let cell = hexagon(c, s);
    let cell_edges = cell.boundary();
    let touches = omega_edges.iter().any(|oe| {
        cell_edges.iter().any(|ce| {
            !crate::geom::edge_intersections(ce, oe, CLEARANCE).is_empty()
                || ce.distance_to(oe.start()) <= CLEARANCE
                || oe.distance_to(ce.start()) <= CLEARANCE
        }) || cell.contains(oe.start())
    });
    if touches {
        CellClass::Boundary
    } else if inside_c {
        CellClass::Interior
    } else {
        CellClass::Outside
    }
}

/// Splits the cells meeting Ω into compactly contained ones and those meeting ∂Ω.
pub fn classify(tiling: &HexTiling, omega: &Region) -> Result<HexClassification> {
    if tiling.torus.is_some() {
        return Err(Error::Domain("classification needs a planar tiling".into()));
    }
    let ob = omega.bbox();
    if !tiling.covered.expanded(1e-12 * ob.diagonal().max(1.0)).contains_box(&ob) {
        return Err(Error::Domain("tiling does not cover the bounding box of the region".into()));
    }
    let s = tiling.side();
    let oe = omega.boundary();
    let cells: Vec<((i64, i64), Point2)> = tiling.cells.iter().map(|(k, v)| (*k, *v)).collect();
    let classes: Vec<CellClass> = cells.par_iter().map(|(_, c)| classify_cell(*c, s, omega, &oe)).collect();
    let mut out = HexClassification { interior: Vec::new(), boundary: Vec::new() };
    for ((idx, _), cl) in cells.iter().zip(classes) {
        match cl {
            CellClass::Interior => out.interior.push(*idx),
            CellClass::Boundary => out.boundary.push(*idx),
            CellClass::Outside => {}
        }
    }
    Ok(out)
}

/// Tiling export entry.
#[derive(Debug, Clone, Serialize)]
pub struct TaggedCell {
    pub row: i64,
    pub col: i64,
    pub class: CellClass,
    pub region: crate::geom::json::RegionDoc,
}

/// Geometry JSON list of the cells with their class against Ω.
pub fn export_tiling(tiling: &HexTiling, cls: Option<&HexClassification>) -> String {
    let mut out = Vec::new();
    for idx in tiling.indices() {
        let class = match cls {
            Some(c) if c.interior.contains(&idx) => CellClass::Interior,
            Some(c) if c.boundary.contains(&idx) => CellClass::Boundary,
            Some(_) => CellClass::Outside,
            None => CellClass::Interior,
        };
        let region = tiling.cell(idx).unwrap();
        out.push(TaggedCell { row: idx.0, col: idx.1, class, region: (&region).into() });
    }
    serde_json::to_string(&out).expect("tiling serialises")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::hex_perimeter;

    #[test]
    fn unit_cell_measures() {
        let h = hexagon(Point2::ORIGIN, hex_side());
        assert!((h.area() - 1.0).abs() < 1e-14);
        assert!((h.perimeter() - hex_perimeter()).abs() < 1e-14);
        assert!((h.diameter() - 2.0 * hex_side()).abs() < 1e-14);
    }

    #[test]
    fn quarter_area_halves_side() {
        assert!((side_for_area(0.25) - hex_side() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn torus_labels_bottom_row_first() {
        let t = generate_torus(TorusSpec::new(4, 4).unwrap()).unwrap();
        assert_eq!(t.label((0, 0)), Some(1));
        assert_eq!(t.label((0, 3)), Some(4));
        assert_eq!(t.label((1, 0)), Some(5));
        assert_eq!(t.label((3, 3)), Some(16));
    }

    #[test]
    fn torus_honeycomb_perimeter() {
        for (a, b) in [(2, 2), (4, 4), (2, 6)] {
            let c = honeycomb(TorusSpec::new(a, b).unwrap()).unwrap();
            let n = (a * b) as f64;
            assert!((c.perimeter(None).unwrap() - n * 3.0 * hex_side()).abs() < 1e-11);
            assert!((c.total_area() - n).abs() < 1e-12);
            c.validate().unwrap();
        }
    }

    #[test]
    fn single_cell_omega() {
        let s = hex_side();
        let omega = hexagon(Point2::ORIGIN, s);
        let t = generate_plane(1.0, &omega).unwrap();
        let c = classify(&t, &omega).unwrap();
        assert!(c.k() as f64 <= omega.area() + 1e-12);
        assert!(c.boundary.contains(&(0, 0)));
    }

    #[test]
    fn tiny_omega_has_no_interior() {
        let omega = Region::square(Point2::new(0.1, 0.1), 0.2);
        let t = generate_plane(1.0, &omega).unwrap();
        assert_eq!(classify(&t, &omega).unwrap().k(), 0);
    }

    #[test]
    fn classify_needs_cover() {
        let omega = Region::square(Point2::ORIGIN, 10.0);
        let small = Region::square(Point2::ORIGIN, 1.0);
        let t = generate_plane(1.0, &small).unwrap();
        assert!(classify(&t, &omega).is_err());
    }

    #[test]
    fn negative_delta_rejected() {
        assert!(generate_plane(-1.0, &Region::square(Point2::ORIGIN, 1.0)).is_err());
    }
}
