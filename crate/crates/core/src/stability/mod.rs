//! Quantitative stability of the hexagonal honeycomb.

mod arc;
mod asymmetry;
mod chordal;
mod ngon;

pub use arc::{arc, arc_coercivity, arc_half_angle, arc_minus_one, arc_t};
pub use asymmetry::{alpha_asymmetry, hungarian, kappa_estimate, kappa_ratio, three_edge_perturbation, AsymmetryResult};
pub use chordal::{
    bulge_edge, bulged_polygon, chordal_check, dido_check, hexagon_unit_inequality, side_decomposition, SideDecomposition,
};
pub use ngon::{fit_regular_ngon, ngon_corpus, ngon_variance_bound, regular_ngon, regular_side, NgonFit, NGON_C_CEILING};
pub(crate) use chordal::convex_ccw;
pub(crate) use ngon::polygon_area;
