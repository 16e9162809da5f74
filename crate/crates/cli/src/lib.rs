//! Command-line frontend for the eigenvalue-one checker: group specs, presets,
//! the character-table cache and JSON reports.

pub mod bounds;
pub mod cache;
pub mod error;
pub mod presets;
pub mod report;
pub mod spec;
pub mod verify;

pub use error::{CliError, CliResult};
pub use report::{run_e1, E1Args, E1Report};
pub use spec::{parse_group_spec, GroupSpec};

/// Version of every JSON document the tool reads or writes.
pub const FORMAT: u32 = 1;
