use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, PolynomialMap, Rational, Ring};
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients.
///
/// Stored coefficients are never zero, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.arity()), c)
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(c.into()))
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.arity(), index), Rational::one())
    }

    /// The variable called `name`.
    pub fn named(ring: &Ring, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.require(name)?))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.arity(), ring.arity());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ring.arity());
            p.add_term(m, c);
        }
        p
    }

    pub fn parse(text: &str, ring: &Ring) -> Result<Self> {
        super::parse::parse_polynomial(text, ring, &|_| None)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, x)| (t.mul(m), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.exponents_mut()[var] -= 1;
            out.add_term(d, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Evaluates `self` at `images`, one polynomial per variable of `self`'s ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::ArityMismatch {
                expected: self.ring.arity(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            // constants only
            None => self.ring.clone(),
        };
        for p in images {
            target.ensure_same(&p.ring)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn apply_map(&self, map: &PolynomialMap) -> Result<Polynomial> {
        self.ring.ensure_same(map.source())?;
        self.substitute(map.images())
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.arity() {
            return Err(Error::ArityMismatch {
                expected: self.ring.arity(),
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.terms.keys().max_by(|a, b| order.cmp(a, b)).cloned()
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }

    /// Coefficient of `var^power`, as a polynomial free of `var`.
    pub fn coefficient_in(&self, var: usize, power: u32) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            if m.exponents()[var] == power {
                let mut r = m.clone();
                r.exponents_mut()[var] = 0;
                out.add_term(r, c.clone());
            }
        }
        out
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[var] > 0)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let mut positions = Vec::with_capacity(self.ring.arity());
        for (i, name) in self.ring.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => positions.push(Some(j)),
                None if self.involves(i) => return Err(Error::UnknownIdentifier(name.clone())),
                None => positions.push(None),
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.arity()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if let Some(j) = positions[i] {
                    e[j] = x;
                }
            }
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.ring.ensure_same(&divisor.ring)?;
        let order = MonomialOrder::Lex;
        let (lm, lc) = divisor.leading_term(&order)?;
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero(&self.ring);
        while let Ok((m, c)) = rest.leading_term(&order) {
            let Some(q) = lm.quotient_of(&m) else {
                return Ok(None);
            };
            let coeff = c / &lc;
            rest = &rest - &divisor.mul_monomial(&q, &coeff);
            quotient.add_term(q, coeff);
        }
        Ok(Some(quotient))
    }

    /// Renders terms in descending `order`.
    pub fn display_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(&m);
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => out.push_str(&abs.to_string()),
                (true, false) => out.push_str(&mono),
                (false, false) => {
                    out.push_str(&abs.to_string());
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.ring.name(i).to_string()),
                _ => parts.push(format!("{}^{}", self.ring.name(i), e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&MonomialOrder::Grevlex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator impls panic on ring mismatch; use the `try_*` methods to get an error instead.
macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("ring mismatch in polynomial arithmetic")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn df_ring() -> Ring {
        Ring::new(["x", "s", "t", "u", "v"]).unwrap()
    }

    fn p(text: &str, ring: &Ring) -> Polynomial {
        Polynomial::parse(text, ring).unwrap()
    }

    #[test]
    fn add_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        let a = p("x + y", &r);
        assert_eq!(&a + &Polynomial::zero(&r), a);
        assert_eq!(&a + &p("x - y", &r), p("2*x", &r));
        let df = df_ring();
        assert_eq!(p("2*x^3*t - s^2", &df) + p("s^2", &df), p("2*x^3*t", &df));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::one(&Ring::new(["x"]).unwrap());
        let b = Polynomial::one(&Ring::new(["y"]).unwrap());
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn mul_by_one() {
        let r = df_ring();
        let a = p("2*x^3*t - s^2", &r);
        assert_eq!(&Polynomial::one(&r) * &a, a);
    }

    #[test]
    fn partial_derivatives() {
        let r = df_ring();
        assert_eq!(p("2*x^3*t - s^2", &r).partial_derivative(1), p("-2*s", &r));
        assert_eq!(p("x^3", &r).partial_derivative(0), p("3*x^2", &r));
        assert_eq!(
            p("3*x^6*u - 3*x^3*t*s + s^3", &r).partial_derivative(3),
            p("3*x^6", &r)
        );
    }

    #[test]
    fn leading_terms() {
        let r = Ring::new(["x", "y"]).unwrap();
        let (m, c) = p("5", &r).leading_term(&MonomialOrder::Lex).unwrap();
        assert!(m.is_one());
        assert_eq!(c, rational(5, 1));
        let (m, _) = p("x + y^2", &r).leading_term(&MonomialOrder::Grevlex).unwrap();
        assert_eq!(m.exponents(), &[0, 2]);
        let df = df_ring();
        let (m, c) = p("3*x^6*u - 3*x^3*t*s + s^3", &df)
            .leading_term(&MonomialOrder::Lex)
            .unwrap();
        assert_eq!(m.exponents(), &[6, 0, 0, 1, 0]);
        assert_eq!(c, rational(3, 1));
        assert_eq!(
            Polynomial::zero(&r).leading_term(&MonomialOrder::Lex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn exact_division() {
        let r = Ring::new(["x", "y"]).unwrap();
        let a = p("x^2 - y^2", &r);
        assert_eq!(a.div_exact(&p("x - y", &r)).unwrap(), Some(p("x + y", &r)));
        assert_eq!(a.div_exact(&p("x", &r)).unwrap(), None);
    }

    #[test]
    fn embedding_matches_names() {
        let small = Ring::new(["y", "x"]).unwrap();
        let big = Ring::new(["x", "z", "y"]).unwrap();
        let a = p("x*y^2 + 1", &small);
        assert_eq!(a.embed(&big).unwrap(), p("x*y^2 + 1", &big));
        assert!(p("z", &big).embed(&small).is_err());
    }

    #[test]
    fn substitution_arity_checked() {
        let r = Ring::new(["x", "y"]).unwrap();
        let err = p("x", &r).substitute(&[Polynomial::var(&r, 0)]).unwrap_err();
        assert_eq!(err, Error::ArityMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn display_uses_descending_order() {
        let r = df_ring();
        assert_eq!(p("-s^2 + 2*x^3*t", &r).to_string(), "2*x^3*t - s^2");
        assert_eq!(p("1/2*s - 1", &r).to_string(), "1/2*s - 1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }
}
