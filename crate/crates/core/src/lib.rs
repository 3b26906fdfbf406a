//! Planar clusters, hexagonal tilings and numerical checks for the
//! isoperimetric partition problem.
//!
//! The crate is organised bottom-up:
//!
//! * [`geom`] holds points, arc/segment regions, boolean overlay, clusters and the flat torus.
//! * [`hex`] generates and classifies honeycomb tilings.
//! * [`partition`] builds explicit partitions (annular surgery, boundary reassembly,
//!   hexagonal competitors, skeleton grids).
//! * [`bounds`] evaluates perimeter inequalities on concrete clusters.
//! * [`stability`] covers the arc function, polygon stability and torus asymmetry.
//! * [`cheeger`] computes Cheeger constants of convex sets and the N-cluster sandwich.

pub mod bounds;
pub mod cheeger;
pub mod consts;
pub mod error;
pub mod geom;
pub mod hex;
pub mod partition;
pub mod report;
pub mod stability;

pub use error::{Error, Result};
pub use report::BoundReport;
