//! Finite permutation groups with complete element lists.

pub mod aut;
pub mod extended;
pub mod group;
pub mod perm;

pub use aut::{
    automorphism_group, automorphism_group_bounded, characteristic_structure, find_isomorphism,
    fixed_subgroup, outer_classes_fixing_char, Automorphism, CharStructure, DEFAULT_AUT_BOUND,
};
pub use extended::ExtendedGroup;
pub use group::{ConjClass, PermGroup, DEFAULT_ORDER_BOUND};
pub use perm::Perm;
