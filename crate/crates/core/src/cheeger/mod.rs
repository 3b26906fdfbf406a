//! Cheeger constants of convex polygons and bounds on the N-Cheeger constant.

mod convex;
mod formulas;
mod hn;

pub use convex::{cheeger_convex, h_ratio, hexagon_cheeger, inner_parallel, CheegerResult};
pub use formulas::{chamber_volume_floor, curvature_constants, p_eigen_lower, p_partition_lower};
pub use hn::{hn_lower, hn_monotonicity, hn_sandwich, HNSandwich};
