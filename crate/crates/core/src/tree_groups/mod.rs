//! Tree groups, the framing quotient, bracket kernels, and the maps between them.

pub mod eta;
pub mod groups;
pub mod snake;
pub mod sums;
pub mod top;

pub use eta::{bracket_map, d_group, d_group_quasi, eta, eta_hom, eta_quasi, DGroup, QuasiTensor, TensorElement};
pub use groups::{
    boundary_twist, compare_presentations, delta, framed_infty, framed_quotient, ihx_relators, tree_group,
    untwist, ComparisonReport, InftyOptions, TreeGroup, TreeGroupKind,
};
pub use snake::{half_eta_doubled, sl_map};
pub use sums::TreeSum;
pub use top::{verify_top_sequence, TopSequenceReport};
