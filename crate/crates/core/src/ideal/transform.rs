//! Ideal transforms `S(I, R) = ∪_n (R : I^n)` over a polynomial ring `R`.
//!
//! Each level `(R : I^n)` is a fractional ideal `(1/d)·J`. With `f` a nonzero
//! element of `I`, one more level is obtained from
//! `((1/d)·J : I) = (1/(d f))·((f J) : I)`, an ordinary ideal quotient in `R`.

use std::fmt;

use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

/// `(1/denominator) · numerator` inside the fraction field.
#[derive(Clone, Debug)]
pub struct FractionalIdeal {
    numerator: Ideal,
    denominator: Polynomial,
}

impl FractionalIdeal {
    pub fn new(numerator: Ideal, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        numerator.ring().ensure_same(denominator.ring())?;
        Ok(FractionalIdeal {
            numerator,
            denominator,
        })
    }

    /// The ring itself, `(1/1)·(1)`.
    pub fn base_ring(ring: &Ring) -> Self {
        FractionalIdeal {
            numerator: Ideal::unit(ring),
            denominator: Polynomial::one(ring),
        }
    }

    pub fn numerator(&self) -> &Ideal {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn ring(&self) -> &Ring {
        self.numerator.ring()
    }

    /// Whether `a / b` lies in this fractional ideal: `d·a ∈ b·J`.
    pub fn contains_fraction(&self, a: &Polynomial, b: &Polynomial) -> Result<bool> {
        if b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lhs = &self.denominator * a;
        Ok(self.numerator.scaled_by(b)?.contains(&lhs))
    }

    /// `other ⊆ self`, by cross-multiplication: `d_self·J_other ⊆ d_other·J_self`.
    pub fn contains(&self, other: &FractionalIdeal) -> Result<bool> {
        let left = other.numerator.scaled_by(&self.denominator)?;
        let right = self.numerator.scaled_by(&other.denominator)?;
        Ok(right.contains_ideal(&left))
    }

    pub fn same_as(&self, other: &FractionalIdeal) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn is_base_ring(&self) -> Result<bool> {
        self.same_as(&FractionalIdeal::base_ring(self.ring()))
    }
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1/({}))*{}", self.denominator, self.numerator)
    }
}

/// `(R : I^n)` using the first nonzero generator of `I`.
pub fn transform_step(ideal: &Ideal, n: usize) -> Result<FractionalIdeal> {
    let f = ideal.generators().first().ok_or(Error::ZeroIdeal)?.clone();
    transform_step_with(ideal, n, &f)
}

/// `(R : I^n)` using a chosen nonzero element `f ∈ I`.
pub fn transform_step_with(ideal: &Ideal, n: usize, f: &Polynomial) -> Result<FractionalIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if f.is_zero() || !ideal.contains(f) {
        return Err(Error::Invalid(format!("{f} is not a nonzero element of the ideal")));
    }
    let mut level = FractionalIdeal::base_ring(ideal.ring());
    for _ in 0..n {
        let numerator = level.numerator.scaled_by(f)?.quotient(ideal)?;
        let denominator = &level.denominator * f;
        level = FractionalIdeal::new(numerator, denominator)?;
    }
    Ok(level)
}

/// Whether `(R : I^n) = (R : I^{n+1})`.
pub fn transform_stabilized(ideal: &Ideal, n: usize) -> Result<bool> {
    let f = ideal.generators().first().ok_or(Error::ZeroIdeal)?.clone();
    let here = transform_step_with(ideal, n, &f)?;
    // one more quotient step from `here`
    let numerator = here.numerator.scaled_by(&f)?.quotient(ideal)?;
    let next = FractionalIdeal::new(numerator, &here.denominator * &f)?;
    here.same_as(&next)
}
