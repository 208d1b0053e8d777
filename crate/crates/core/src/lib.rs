//! Exact computations with free Lie and quasi-Lie algebras, unitrivalent tree
//! groups, and the Artin representation of string links on free nilpotent
//! quotients.

pub mod abelian;
pub mod error;
pub mod lie;
pub mod nilpotent;
pub mod suites;
pub mod tree_groups;
pub mod trees;

pub use error::{Error, Result};
