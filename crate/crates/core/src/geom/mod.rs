//! Geometry kernel: points, edges, regions, boolean overlay, clusters, flat tori.

mod classic;
mod cluster;
mod edge;
mod hausdorff;
pub mod json;
mod measure;
mod motion;
mod overlay;
mod point;
mod region;
mod square;
mod torus;

pub use classic::{classic_inequality_checks, isodiametric_check};
pub use cluster::{torus_measures, Ambient, Cluster};
pub use edge::Edge;
pub(crate) use edge::{edge_intersections, line_params, norm_angle, split_at, x_minus_sin};
pub use hausdorff::{boundary_distance, hausdorff_distance, hausdorff_with_resolution};
pub use measure::{clip_to_window, union_length, Window};
pub use motion::RigidMotion;
pub use overlay::{boolean, intersection_area, BoolOp};
pub(crate) use overlay::{overlay, union_all};
pub use point::{BBox, Point2};
pub use region::{Loop, Region};
pub use torus::TorusSpec;
pub use square::Square;
