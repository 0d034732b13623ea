//! Exact sparse multivariate polynomials over the rationals.

mod map;
mod monomial;
pub mod parse;
mod polynomial;
mod ring;

pub use map::PolynomialMap;
pub use monomial::{monomials_up_to_degree, Monomial, MonomialOrder};
pub use parse::parse_rational;
pub use polynomial::Polynomial;
pub use ring::Ring;
pub(crate) use ring::is_identifier;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
