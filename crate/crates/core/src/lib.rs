//! Exact computational commutative algebra over the rationals.
//!
//! The crate is organized around a Buchberger kernel (`gb`) with the derived
//! ideal calculus, fast combinatorial algorithms for monomial ideals
//! (`monomial`), presentations of Rees and associated graded rings
//! (`graded`), a checker for the contraction behaviour of their minimal
//! primes (`severi`), and an intersection-cycle engine on affine cones
//! (`sv`). All computations are exact; every ring is a polynomial ring over
//! the rationals or a quotient of one.

pub mod error;
pub mod gb;
pub mod graded;
pub mod monomial;
pub mod poly;
pub mod severi;
pub mod sv;

pub use error::Error;
pub use gb::Ideal;
pub use poly::{parse_polynomial, Coeff, Monomial, MonomialOrder, Polynomial, RingDescriptor};
