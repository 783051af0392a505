//! Exact computations in Z₂-, Z₃- and Z₆-graded algebras with binary and
//! ternary commutation relations.
//!
//! All arithmetic happens in the cyclotomic field Q(ζ₁₂) with rational
//! coefficients; nothing in the verification pipeline uses floating point.

pub mod clifford;
pub mod covariance;
pub mod dforms;
pub mod error;
pub mod hilbert;
pub mod matrix;
pub mod oracle;
pub mod presentation;
pub mod rewrite;
pub mod sampling;
pub mod scalars;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use presentation::{make_presentation, AlgebraType, Generator, Grade, Kind, PhaseTable, Presentation, PresentationOptions};
pub use rewrite::{normalize, Poly, Word};
pub use scalars::Cyclo;
