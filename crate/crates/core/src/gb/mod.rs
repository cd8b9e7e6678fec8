//! Buchberger engine and the derived ideal calculus: normal forms,
//! elimination, intersection, quotient, saturation, dimension and degree.

mod buchberger;
mod dimension;
mod ideal;
mod ops;

pub use buchberger::{divide_exact, groebner_basis, normal_form};
pub use ideal::Ideal;
pub use ops::CombineOp;
