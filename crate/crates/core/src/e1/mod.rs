//! Deciding the eigenvalue-one property and its certificates.

mod bounds;
mod certs;
mod direct;
mod intertwiner;
mod pipeline;
mod restriction;
mod verdict;

pub use bounds::{
    example4_g2_bound, prop4_orbit_check, prop5_bounds, G2Bound, Prop5Bound, Prop5Case,
};
pub use certs::{cor4_certificate, prop2_certificate, prop2_search, prop3_certificate};
pub use direct::{check_triple, is_witness, TripleScan};
pub use intertwiner::{fixes_character, solve_intertwiner, IntertwinerData};
pub use pipeline::{
    assemble, check_character, check_characters, check_group, default_characters,
    structural_certificate, structural_fastpaths, Mode, Options,
};
pub use restriction::{restriction_strategy, RestrictionOutcome};
pub use verdict::{
    Certificate, CharacterVerdict, GroupVerdict, Method, Status, TaskVerdict, Validation, Violator,
    Witness,
};
