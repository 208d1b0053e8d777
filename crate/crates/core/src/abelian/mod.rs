//! Exact linear algebra over the integers.

pub mod group;
pub mod hom;
pub mod lattice;
pub mod matrix;
pub mod smith;

pub use group::{GroupReport, PresentedGroup, SparseVec};
pub use hom::{verify_exact, verify_short_exact, Certificate, ExactnessReport, GroupHom, MapReport, Subgroup};
pub use lattice::Echelon;
pub use matrix::IntMatrix;
pub use smith::{invariant_factors, smith_normal_form, Smith};
