//! Irreducible characters of permutation groups.

mod ops;
mod table;

pub use ops::{parabolic_odd_constituent, restrict, Restriction};
pub use table::{CharacterTable, ClassFunction};
