//! Exact arithmetic: rationals, polynomials, rational functions, the
//! quadratic extensions the generating functions live in, and truncated power
//! series for coefficient extraction.

mod poly;
mod quadext;
mod ratfunc;
mod series;

pub use poly::Poly;
pub use quadext::{delta_motzkin, delta_signed, QuadExt};
pub use ratfunc::RatFunc;
pub use series::{quadext_to_series, ratfunc_series, sqrt_series, SeriesQ, DEFAULT_ORDER, MAX_POLE};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
