//! Polynomials, truncated series, quadratic extensions and sparse
//! multivariate polynomials over the rationals.

mod multipoly;
mod poly;
mod quadext;
mod series;

pub use multipoly::MultiPoly;
pub use poly::Poly;
pub use quadext::QuadExtPoly;
pub use series::TruncSeries;
