//! Exact multivariate polynomial arithmetic over the rationals with
//! pluggable term orders. All values are immutable after construction and
//! all operations are pure.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{coeff_int, coeff_ratio, Coeff, Polynomial};
pub use ring::RingDescriptor;
