//! Constructive equal-area partitions.

mod competitor;
mod cut;
mod reassembly;
mod skeleton;
mod surgery;

pub use competitor::{competitor_build, is_mu_bounded, COMPETITOR_C0_CEILING};
pub use cut::{cut_position, equal_area_cut, halfplane_area};
pub use reassembly::{boundary_reassembly_partition, ReassemblyLedger, REASSEMBLY_C0_CEILING};
pub use skeleton::{skeleton_grid_place, SkeletonGrid};
pub use surgery::{frame, surgery_partition, SurgeryPlan, SURGERY_C_CEILING};
