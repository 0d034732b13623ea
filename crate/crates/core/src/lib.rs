//! Exact computational algebra for additive group actions and their
//! invariant rings.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`]: sparse polynomials over Q, monomial orders, parsing and maps.
//! - [`ideal`]: reduced Gröbner bases and the ideal operations built on
//!   them (elimination, quotients, saturation, radical membership,
//!   dimension, singular loci) plus ideal transforms as fractional ideals.
//! - [`derivation`]: derivations, local nilpotency, exponential flows and
//!   degree-bounded kernels.
//! - [`quotient`]: the fiber product `Y x_{A^2} SL_2` realising regular
//!   functions on `Y \ Z(f1, f2)` as invariants of a free `G_a`-action.
//! - [`worked`]: the Daigle–Freudenburg action on `A^5`, and a regular map
//!   into a quadric cone whose image meets the excised hypersurface.
//! - [`report`], [`session`], [`cli`]: check reports, session files and the
//!   command-line front end.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod derivation;
mod error;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod quotient;
pub mod report;
pub mod session;
pub mod worked;

pub use derivation::{Derivation, Nilpotency};
pub use error::{Error, Result};
pub use ideal::{FractionalIdeal, Ideal};
pub use poly::{Monomial, MonomialOrder, Polynomial, PolynomialMap, Rational, Ring};
