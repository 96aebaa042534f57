//! Exact coefficient arithmetic: Laurent polynomials in `q`, rational
//! functions in `q`, integer-valued polynomials in `t` in the binomial
//! basis, and exact interpolation.
//!
//! All values are immutable after construction and all operations are pure;
//! everything is safe to use concurrently.

mod binomial;
mod ivl;
mod laurent;
mod matrix;
mod polyq;
mod xpoly;

pub use binomial::{binomial, binomial_product_coeff};
pub use ivl::{interpolate_binomial, IvlPoly, NonIntegral};
pub use laurent::LaurentQ;
pub use matrix::{laurent_det, laurent_div_exact, RatMatrix};
pub use polyq::{PolyZ, RationalQ};
pub use xpoly::PolyX;

/// The q-number `[m]_q`.
pub fn qnumber(m: i64) -> LaurentQ {
    LaurentQ::qnumber(m)
}
