//! Derivations of polynomial rings, local nilpotency and exponential flows.
//!
//! A derivation is fixed by the images of the variables and extended by the
//! Leibniz rule. When it is locally nilpotent its exponential
//! `x ↦ Σ r^k/k! D^k(x)` is a polynomial `G_a`-action; the invariants of that
//! action are exactly the kernel of `D`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg;
use crate::poly::{monomials_up_to_degree, MonomialOrder, Polynomial, PolynomialMap, Rational, Ring};

/// Bound used when local nilpotency must be certified internally.
pub const DEFAULT_NILPOTENCY_BOUND: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    ring: Ring,
    images: Vec<Polynomial>,
}

/// Outcome of iterating a derivation on one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    /// Least `k` with `D^k(x) = 0`.
    Order(usize),
    /// `D^k(x) != 0` for every `k` up to the bound.
    Unknown { bound: usize },
}

impl Derivation {
    pub fn new(ring: &Ring, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != ring.arity() {
            return Err(Error::ArityMismatch {
                expected: ring.arity(),
                found: images.len(),
            });
        }
        for p in &images {
            ring.ensure_same(p.ring())?;
        }
        Ok(Derivation {
            ring: ring.clone(),
            images,
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Derivation {
            ring: ring.clone(),
            images: vec![Polynomial::zero(ring); ring.arity()],
        }
    }

    /// Builds from `(variable, image)` pairs; unlisted variables map to zero.
    pub fn from_pairs(ring: &Ring, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut images = vec![Polynomial::zero(ring); ring.arity()];
        for (var, image) in pairs {
            images[ring.require(var)?] = Polynomial::parse(image, ring)?;
        }
        Derivation::new(ring, images)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        self.ring.ensure_same(p.ring())?;
        let mut out = Polynomial::zero(&self.ring);
        for (i, image) in self.images.iter().enumerate() {
            if image.is_zero() || !p.involves(i) {
                continue;
            }
            out = &out + &(&p.partial_derivative(i) * image);
        }
        Ok(out)
    }

    pub fn is_invariant(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.apply(p)?.is_zero())
    }

    /// Least `k <= bound` with `D^k(p) = 0`.
    pub fn nilpotency_order_of(&self, p: &Polynomial, bound: usize) -> Result<Nilpotency> {
        let mut cur = p.clone();
        for k in 0..=bound {
            if cur.is_zero() {
                return Ok(Nilpotency::Order(k));
            }
            if k < bound {
                cur = self.apply(&cur)?;
            }
        }
        Ok(Nilpotency::Unknown { bound })
    }

    pub fn nilpotency_order(&self, var: usize, bound: usize) -> Result<Nilpotency> {
        if var >= self.ring.arity() {
            return Err(Error::VariableOutOfRange(var));
        }
        self.nilpotency_order_of(&Polynomial::var(&self.ring, var), bound)
    }

    /// `x ↦ Σ_k (r^k / k!) D^k(x)` into the ring extended by the parameter.
    pub fn exponential_map(&self, parameter: &str) -> Result<PolynomialMap> {
        self.exponential_map_with_bound(parameter, DEFAULT_NILPOTENCY_BOUND)
    }

    pub fn exponential_map_with_bound(&self, parameter: &str, bound: usize) -> Result<PolynomialMap> {
        let target = self.ring.with_suffix(&[parameter.to_string()])?;
        let r = Polynomial::var(&target, self.ring.arity());
        let mut images = Vec::with_capacity(self.ring.arity());
        for var in 0..self.ring.arity() {
            let mut iterate = Polynomial::var(&self.ring, var);
            let mut image = Polynomial::zero(&target);
            let mut r_pow = Polynomial::one(&target);
            let mut factorial = BigInt::one();
            let mut k = 0usize;
            while !iterate.is_zero() {
                if k > bound {
                    return Err(Error::NotLocallyNilpotent {
                        variable: self.ring.name(var).to_string(),
                        bound,
                    });
                }
                let coeff = Rational::new(BigInt::one(), factorial.clone());
                image = &image + &(&iterate.embed(&target)? * &r_pow).scale(&coeff);
                iterate = self.apply(&iterate)?;
                k += 1;
                factorial *= k;
                r_pow = &r_pow * &r;
            }
            images.push(image);
        }
        PolynomialMap::new(&self.ring, &target, images)
    }

    /// Checks `D(g) ∈ I` for every generator, so `D` descends to `R/I`.
    pub fn induced_on_quotient(&self, ideal: &Ideal) -> Result<QuotientDerivation> {
        self.ring.ensure_same(ideal.ring())?;
        for g in ideal.generators() {
            let image = self.apply(g)?;
            if !ideal.contains(&image) {
                return Err(Error::NotStable {
                    generator: g.to_string(),
                    image: image.to_string(),
                });
            }
        }
        Ok(QuotientDerivation {
            derivation: self.clone(),
            ideal: ideal.clone(),
        })
    }

    /// Basis of `{p : deg p <= d, D(p) ≡ 0 mod I}` modulo `I`, echelonized
    /// with monic leading terms under grevlex.
    ///
    /// Without an ideal this is the degree-`d` slice of `ker D`. With one,
    /// elements are normal forms, so the result is a basis of the slice of
    /// the kernel of the induced derivation on `R/I`.
    pub fn kernel_basis_up_to_degree(&self, degree: u32, modulo: Option<&Ideal>) -> Result<Vec<Polynomial>> {
        let order = MonomialOrder::Grevlex;
        let quotient = match modulo {
            Some(i) => Some(self.induced_on_quotient(i)?),
            None => None,
        };
        let reduce = |p: &Polynomial| match &quotient {
            Some(q) => q.ideal.normal_form(p, &order),
            None => p.clone(),
        };

        // spanning set of the degree-<=d part of R/I, as reduced polynomials
        let span: Vec<Polynomial> = monomials_up_to_degree(self.ring.arity(), degree)
            .into_iter()
            .map(|m| reduce(&Polynomial::monomial(&self.ring, m, Rational::one())))
            .collect();
        let space = echelon_basis(&span, &order);

        let images: Vec<Polynomial> = space
            .iter()
            .map(|u| self.apply(u).map(|d| reduce(&d)))
            .collect::<Result<_>>()?;
        let (columns, matrix) = coefficient_matrix(&images, &order);
        // rows = monomials of images, cols = basis elements
        let mut system: linalg::Matrix = vec![vec![Rational::from_integer(0.into()); space.len()]; columns.len()];
        for (j, row) in matrix.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                system[i][j] = c.clone();
            }
        }
        let kernel: Vec<Polynomial> = linalg::nullspace(&system, space.len())
            .into_iter()
            .map(|v| {
                space
                    .iter()
                    .zip(&v)
                    .fold(Polynomial::zero(&self.ring), |acc, (u, c)| &acc + &u.scale(c))
            })
            .collect();
        Ok(echelon_basis(&kernel, &order))
    }
}

/// A derivation certified to preserve an ideal.
#[derive(Clone, Debug)]
pub struct QuotientDerivation {
    derivation: Derivation,
    ideal: Ideal,
}

impl QuotientDerivation {
    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// `D(p) ≡ 0` modulo the ideal.
    pub fn is_invariant(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.ideal.contains(&self.derivation.apply(p)?))
    }
}

/// Coefficient rows of `polys` over the union of their monomials, columns
/// sorted descending under `order`.
fn coefficient_matrix(
    polys: &[Polynomial],
    order: &MonomialOrder,
) -> (Vec<crate::poly::Monomial>, linalg::Matrix) {
    let mut columns: Vec<crate::poly::Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    columns.sort_by(|a, b| order.cmp(b, a));
    columns.dedup();
    let rows = polys
        .iter()
        .map(|p| columns.iter().map(|m| p.coefficient(m)).collect())
        .collect();
    (columns, rows)
}

/// Reduced row echelon basis of the span of `polys`; pivots are leading
/// monomials and are normalized to one.
pub fn echelon_basis(polys: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let Some(ring) = polys.first().map(|p| p.ring().clone()) else {
        return Vec::new();
    };
    let (columns, mut rows) = coefficient_matrix(polys, order);
    linalg::rref(&mut rows);
    rows.into_iter()
        .map(|row| Polynomial::from_terms(&ring, columns.iter().cloned().zip(row)))
        .collect()
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, p) in self.images.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{} -> {}", self.ring.name(i), p)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Derivation({self}) on {}", self.ring)
    }
}
