//! Free Lie and quasi-Lie algebras over the integers.

pub mod free;
pub mod lyndon;
pub mod maps;
pub mod quasi;

pub use free::{FreeLie, LieElement, Poly};
pub use lyndon::{is_lyndon, lyndon_words, standard_bracket, witt_rank};
pub use maps::LieSystem;
pub use quasi::{BracketRing, QuasiLieElement};
