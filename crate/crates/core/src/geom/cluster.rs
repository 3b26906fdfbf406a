use super::measure::{clip_to_window, union_length, Window};
use super::overlay::{intersection_area, overlay, union_all, BoolOp};
use super::point::BBox;
use super::region::Region;
use super::torus::TorusSpec;
use crate::consts::AREA_TOL;
use crate::error::{Error, Result};

/// Space the chambers live in.
#[derive(Debug, Clone, PartialEq)]
pub enum Ambient {
    /// The whole plane; the exterior chamber is unbounded.
    Plane,
    /// A bounded planar region.
    Region(Region),
    /// A flat torus; chambers are given by planar lifts.
    Torus(TorusSpec),
}

/// An N-cluster: chambers `E(1), …, E(N)` stored 0-based. The exterior chamber
/// `E(0)` is the complement of their union and is recomputed on demand.
#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    chambers: Vec<Region>,
    ambient: Ambient,
}

/// Absolute tolerance adapted to coordinate magnitude.
pub(crate) fn abs_tol(b: &BBox) -> f64 {
    if b.is_empty() {
        return 1e-12;
    }
    let m = b.min.x.abs().max(b.min.y.abs()).max(b.max.x.abs()).max(b.max.y.abs()).max(b.diagonal());
    1e-12 * m.max(1e-6)
}

fn pairs_by_bbox(a: &[BBox], b: &[BBox], mut f: impl FnMut(usize, usize)) {
    let mut order: Vec<usize> = (0..b.len()).collect();
    order.sort_by(|&i, &j| b[i].min.x.partial_cmp(&b[j].min.x).unwrap());
    let minx: Vec<f64> = order.iter().map(|&i| b[i].min.x).collect();
    for (i, ba) in a.iter().enumerate() {
        let hi = minx.partition_point(|&x| x <= ba.max.x);
        for &j in &order[..hi] {
            if ba.overlaps(&b[j]) {
                f(i, j);
            }
        }
    }
}

impl Cluster {
    /// Validating constructor: positive chamber areas, negligible pairwise
    /// overlaps, chambers inside the ambient.
    pub fn new(chambers: Vec<Region>, ambient: Ambient) -> Result<Self> {
        let c = Cluster { chambers, ambient };
        c.validate()?;
        Ok(c)
    }

    pub fn new_unchecked(chambers: Vec<Region>, ambient: Ambient) -> Self {
        Cluster { chambers, ambient }
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn chambers(&self) -> &[Region] {
        &self.chambers
    }

    pub fn into_chambers(self) -> Vec<Region> {
        self.chambers
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn areas(&self) -> Vec<f64> {
        self.chambers.iter().map(|c| c.area()).collect()
    }

    pub fn total_area(&self) -> f64 {
        self.chambers.iter().map(|c| c.area()).sum()
    }

    pub fn bbox(&self) -> BBox {
        let mut b = BBox::empty();
        for c in &self.chambers {
            b = b.union(&c.bbox());
        }
        if let Ambient::Region(r) = &self.ambient {
            b = b.union(&r.bbox());
        }
        b
    }

    pub(crate) fn tol(&self) -> f64 {
        abs_tol(&self.bbox())
    }

    /// `|E(0)|`; `None` in the plane.
    pub fn exterior_area(&self) -> Option<f64> {
        match &self.ambient {
            Ambient::Plane => None,
            Ambient::Region(r) => Some(r.area() - self.total_area()),
            Ambient::Torus(t) => Some(t.area() - self.total_area()),
        }
    }

    /// Exterior chamber inside a bounded planar ambient.
    pub fn exterior(&self) -> Result<Region> {
        match &self.ambient {
            Ambient::Region(r) => Ok(overlay(r, &union_all(&self.chambers), BoolOp::Difference)),
            _ => Err(Error::Unsupported("exterior region is only built for bounded planar ambients".into())),
        }
    }

    /// Pairwise overlaps `|E(i) ∩ E(j)|` for `i < j`.
    fn overlaps(&self) -> Vec<(usize, usize, f64)> {
        let boxes: Vec<BBox> = self.chambers.iter().map(|c| c.bbox()).collect();
        let mut out = Vec::new();
        match &self.ambient {
            Ambient::Torus(t) => {
                for i in 0..self.len() {
                    for j in i + 1..self.len() {
                        let a = t.intersection_area(&self.chambers[i], &self.chambers[j]);
                        out.push((i, j, a));
                    }
                }
            }
            _ => pairs_by_bbox(&boxes, &boxes, |i, j| {
                if i < j {
                    out.push((i, j, intersection_area(&self.chambers[i], &self.chambers[j])));
                }
            }),
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let areas = self.areas();
        for (i, a) in areas.iter().enumerate() {
            if !(*a > 0.0) {
                return Err(Error::Validation(format!("chamber {} has non-positive area {a}", i + 1)));
            }
        }
        for (i, j, a) in self.overlaps() {
            if a > AREA_TOL * areas[i].min(areas[j]) {
                return Err(Error::Validation(format!("chambers {} and {} overlap in area {a:.3e}", i + 1, j + 1)));
            }
        }
        match &self.ambient {
            Ambient::Region(r) => {
                for (i, c) in self.chambers.iter().enumerate() {
                    let inside = intersection_area(c, r);
                    if areas[i] - inside > AREA_TOL * areas[i] {
                        return Err(Error::Validation(format!(
                            "chamber {} leaves the ambient by area {:.3e}",
                            i + 1,
                            areas[i] - inside
                        )));
                    }
                }
            }
            Ambient::Torus(t) => {
                if self.total_area() > t.area() * (1.0 + AREA_TOL) {
                    return Err(Error::Validation("chambers exceed the torus area".into()));
                }
            }
            Ambient::Plane => {}
        }
        Ok(())
    }

    fn check_window(&self, w: &Window) -> Result<()> {
        if let (Ambient::Region(amb), Window::Inside(r)) = (&self.ambient, w) {
            let a = r.area();
            if a - intersection_area(r, amb) > AREA_TOL * a.max(1.0) {
                return Err(Error::Domain("window is not contained in the ambient".into()));
            }
        }
        Ok(())
    }

    /// Cluster perimeter `Σ_{h<k} H¹(∂E(h) ∩ ∂E(k) ∩ F)` over the open window `F`
    /// (the whole ambient when `None`). Every boundary point of a chamber is
    /// counted once.
    pub fn perimeter(&self, window: Option<&Window>) -> Result<f64> {
        if let Some(w) = window {
            self.check_window(w)?;
        }
        let tol = self.tol();
        let edges: Vec<_> = self.chambers.iter().flat_map(|c| c.edges().copied()).collect();
        let pieces = match &self.ambient {
            Ambient::Torus(t) => t.wrap_edges(&edges, tol),
            _ => edges,
        };
        let pieces = match window {
            Some(w) => clip_to_window(&pieces, w, tol),
            None => pieces,
        };
        Ok(union_length(&pieces, tol))
    }

    /// `d(E, F) = ½ Σ_{i=0}^{N} |E(i) Δ F(i)|`.
    pub fn distance(&self, other: &Cluster) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::Domain(format!("clusters have {} and {} chambers", self.len(), other.len())));
        }
        let torus = match (&self.ambient, &other.ambient) {
            (Ambient::Torus(a), Ambient::Torus(b)) if a == b => Some(*a),
            (Ambient::Torus(_), _) | (_, Ambient::Torus(_)) => {
                return Err(Error::Domain("clusters live in different ambients".into()))
            }
            _ => None,
        };
        let n = self.len();
        let inter = |a: &Region, b: &Region| match &torus {
            Some(t) => t.intersection_area(a, b),
            None => intersection_area(a, b),
        };
        let ba: Vec<BBox> = self.chambers.iter().map(|c| c.bbox()).collect();
        let bb: Vec<BBox> = other.chambers.iter().map(|c| c.bbox()).collect();
        let mut diag = vec![0.0; n];
        let mut cross_total = 0.0;
        if torus.is_some() {
            for i in 0..n {
                for j in 0..n {
                    let x = inter(&self.chambers[i], &other.chambers[j]);
                    if i == j {
                        diag[i] = x;
                    }
                    cross_total += x;
                }
            }
        } else {
            pairs_by_bbox(&ba, &bb, |i, j| {
                let x = inter(&self.chambers[i], &other.chambers[j]);
                if i == j {
                    diag[i] = x;
                }
                cross_total += x;
            });
        }
        let sa = self.total_area();
        let sb = other.total_area();
        let mut sum = (sa + sb - 2.0 * cross_total).max(0.0);
        for i in 0..n {
            sum += (self.chambers[i].area() + other.chambers[i].area() - 2.0 * diag[i]).max(0.0);
        }
        Ok(0.5 * sum)
    }

    pub fn map_chambers(&self, f: impl Fn(&Region) -> Region) -> Cluster {
        Cluster {
            chambers: self.chambers.iter().map(f).collect(),
            ambient: self.ambient.clone(),
        }
    }
}

/// Total chamber area and cluster perimeter of a torus cluster.
pub fn torus_measures(c: &Cluster) -> Result<(f64, f64)> {
    match c.ambient() {
        Ambient::Torus(_) => Ok((c.total_area(), c.perimeter(None)?)),
        _ => Err(Error::Domain("torus_measures needs a torus ambient".into())),
    }
}
