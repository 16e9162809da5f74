pub mod characters;
pub mod e1;
pub mod error;
pub mod exact;
pub mod groups;
pub mod reps;

pub use characters::{CharacterTable, ClassFunction};
pub use error::{Error, Result};
pub use exact::{CycloElement, Matrix, Poly, RadicalReal, Rational, RealCyclo};
pub use groups::{Automorphism, ExtendedGroup, Perm, PermGroup};
pub use reps::{MatrixRep, RepCertificate};
