//! Exact duality-triad coefficients and Konvalina generalized binomial
//! coefficients, with their psi-deformed and operator-valued extensions.
//!
//! Everything is computed over [`Scalar`], the field of rational functions
//! in a formal parameter `q` with rational coefficients, so every identity
//! the crate checks is checked by exact equality.

pub mod cli;
pub mod error;
pub mod families;
pub mod genfun;
pub mod konvalina;
pub mod operators;
pub mod parse;
pub mod poly;
pub mod psi;
pub mod psi_ext;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod triad;

pub use error::{Error, Result};
pub use poly::Poly;
pub use psi::PsiSequence;
pub use report::{Check, Report};
pub use scalar::{QPoly, Rational, Scalar};
pub use triad::{TriadSpec, TriadTable};
