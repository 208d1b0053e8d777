//! Free groups, Magnus expansion and automorphisms of free nilpotent quotients.

pub mod artin;
pub mod clasper;
pub mod magnus;
pub mod word;

pub use artin::{
    artin, congruent, johnson_order, milnor_first_nonvanishing, symplectic_d_element, JohnsonOrder,
    MilnorInvariant, NilpotentMap, Violation,
};
pub use clasper::{clasper_commutator, twisted_clasper_commutator, ClasperCommutator};
pub use magnus::{lcs_degree, magnus, LcsDegree, MagnusSeries};
pub use word::GroupWord;
