//! Geometry JSON documents.
//!
//! ```text
//! region:  {"loops":[{"edges":[{"seg":[[x,y],[x,y]]},
//!                             {"arc":{"from":[x,y],"to":[x,y],"center":[x,y],"sweep":θ}}]}]}
//! cluster: {"ambient":<region>, "chambers":[<region>...]}
//!          {"torus":{"alpha":a,"beta":b}, "chambers":[...]}
//!          {"chambers":[...]}                       (plane)
//! ```

use super::cluster::{Ambient, Cluster};
use super::edge::Edge;
use super::point::Point2;
use super::region::{Loop, Region};
use super::torus::TorusSpec;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionDoc {
    pub loops: Vec<LoopDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopDoc {
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeDoc {
    Seg([[f64; 2]; 2]),
    Arc(ArcDoc),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcDoc {
    pub from: [f64; 2],
    pub to: [f64; 2],
    pub center: [f64; 2],
    pub sweep: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClusterDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<RegionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<TorusSpec>,
    pub chambers: Vec<RegionDoc>,
}

fn p(a: [f64; 2]) -> Point2 {
    Point2::new(a[0], a[1])
}

fn a(p: Point2) -> [f64; 2] {
    [p.x, p.y]
}

impl From<&Region> for RegionDoc {
    fn from(r: &Region) -> Self {
        RegionDoc {
            loops: r
                .loops()
                .iter()
                .map(|l| LoopDoc {
                    edges: l
                        .edges
                        .iter()
                        .map(|e| match *e {
                            Edge::Segment { from, to } => EdgeDoc::Seg([a(from), a(to)]),
                            Edge::Arc { from, to, center, sweep } => EdgeDoc::Arc(ArcDoc { from: a(from), to: a(to), center: a(center), sweep }),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl RegionDoc {
    pub fn to_region(&self) -> Result<Region> {
        let loops = self
            .loops
            .iter()
            .map(|l| {
                Loop::new(
                    l.edges
                        .iter()
                        .map(|e| match e {
                            EdgeDoc::Seg([f, t]) => Edge::seg(p(*f), p(*t)),
                            EdgeDoc::Arc(x) => Edge::arc(p(x.from), p(x.to), p(x.center), x.sweep),
                        })
                        .collect(),
                )
            })
            .collect();
        Region::new(loops)
    }
}

impl From<&Cluster> for ClusterDoc {
    fn from(c: &Cluster) -> Self {
        let (ambient, torus) = match c.ambient() {
            Ambient::Plane => (None, None),
            Ambient::Region(r) => (Some(r.into()), None),
            Ambient::Torus(t) => (None, Some(*t)),
        };
        ClusterDoc { ambient, torus, chambers: c.chambers().iter().map(|r| r.into()).collect() }
    }
}

impl ClusterDoc {
    pub fn to_cluster(&self) -> Result<Cluster> {
        let ambient = match (&self.ambient, &self.torus) {
            (Some(_), Some(_)) => return Err(Error::Parse { location: "ambient/torus".into(), message: "give either an ambient region or a torus, not both".into() }),
            (Some(r), None) => Ambient::Region(r.to_region().map_err(|e| wrap("ambient", e))?),
            (None, Some(t)) => Ambient::Torus(TorusSpec::new(t.alpha, t.beta)?),
            (None, None) => Ambient::Plane,
        };
        let mut chambers = Vec::with_capacity(self.chambers.len());
        for (i, r) in self.chambers.iter().enumerate() {
            chambers.push(r.to_region().map_err(|e| wrap(&format!("chambers[{i}]"), e))?);
        }
        Cluster::new(chambers, ambient)
    }
}

fn wrap(loc: &str, e: Error) -> Error {
    match e {
        Error::Validation(m) => Error::Validation(format!("{loc}: {m}")),
        other => other,
    }
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse { location: format!("line {} column {}", e.line(), e.column()), message: e.to_string() }
}

pub fn region_from_json(s: &str) -> Result<Region> {
    let doc: RegionDoc = serde_json::from_str(s).map_err(parse_err)?;
    doc.to_region()
}

pub fn region_to_json(r: &Region) -> String {
    serde_json::to_string(&RegionDoc::from(r)).expect("region serialises")
}

pub fn cluster_from_json(s: &str) -> Result<Cluster> {
    let doc: ClusterDoc = serde_json::from_str(s).map_err(parse_err)?;
    doc.to_cluster()
}

pub fn cluster_to_json(c: &Cluster) -> String {
    serde_json::to_string(&ClusterDoc::from(c)).expect("cluster serialises")
}
