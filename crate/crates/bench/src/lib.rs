//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use eigenone::{CharacterTable, PermGroup};

pub fn group(spec: &str) -> Arc<PermGroup> {
    Arc::new(eigenone_cli::parse_group_spec(spec, 1 << 16).expect("valid spec"))
}

pub fn table(spec: &str) -> CharacterTable {
    CharacterTable::compute(group(spec)).expect("table")
}

/// Index of the first irreducible character of the given degree.
pub fn character_of_degree(t: &CharacterTable, d: usize) -> usize {
    (0..t.len())
        .find(|&i| t.degree(i) == d)
        .expect("degree present")
}
