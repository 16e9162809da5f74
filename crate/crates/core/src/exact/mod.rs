//! Exact arithmetic: cyclotomic numbers, polynomials, matrices and
//! real-algebraic eigenvalue tests.

pub mod approx;
pub mod cyclo;
pub mod field;
pub mod matrix;
pub mod modp;
pub mod poly;
pub mod radical;
pub mod real;

pub use approx::sign_of;
pub use cyclo::{rat, sqrt_int, CycloElement, Rational};
pub use field::{Field, RealField};
pub use matrix::Matrix;
pub use poly::{Bound, Poly};
pub use radical::{has_algebraic_eigenvalue, RadicalReal};
pub use real::RealCyclo;
