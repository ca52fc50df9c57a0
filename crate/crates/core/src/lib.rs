//! Counting involutions by occurrences of the pattern 3412.
//!
//! The crate splits into an enumeration layer ([`perm`], [`enumerate`]), the
//! kernel cell decomposition ([`kernel`]), exact algebra ([`algebra`]), the
//! generating-function solver ([`genfun`]) and a brute-force oracle
//! ([`oracle`]) that checks the solver against direct counts.

pub mod algebra;
pub mod enumerate;
pub mod error;
pub mod genfun;
pub mod kernel;
pub mod oracle;
pub mod perm;

pub use error::{Error, Result};
pub use perm::{Involution, Occurrence, Perm};
