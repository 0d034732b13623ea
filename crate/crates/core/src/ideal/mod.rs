//! Polynomial ideals and the operations built on reduced Gröbner bases.

pub mod groebner;
mod ops;
mod singular;
mod transform;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::poly::{MonomialOrder, Polynomial, Ring};

pub use singular::{jacobian_matrix, minors};
pub use transform::{transform_stabilized, transform_step, transform_step_with, FractionalIdeal};

/// An ideal given by generators, with reduced Gröbner bases cached per order.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            ring.ensure_same(g.ring())?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn parse(ring: &Ring, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|t| Polynomial::parse(t, ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    pub fn principal(p: &Polynomial) -> Self {
        Ideal::new(p.ring(), vec![p.clone()]).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis under `order`, computed once and cached.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return gb.clone();
        }
        // computed outside the lock; a concurrent duplicate is discarded
        let gb = Arc::new(groebner::reduced_basis(&self.ring, &self.generators, order));
        self.cache
            .lock()
            .unwrap()
            .entry(order.clone())
            .or_insert(gb)
            .clone()
    }

    pub fn normal_form(&self, p: &Polynomial, order: &MonomialOrder) -> Polynomial {
        groebner::normal_form_by(p, &self.groebner_basis(order), order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.is_zero() || self.normal_form(p, &MonomialOrder::Grevlex).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals (mutual containment).
    pub fn same_as(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner_basis(&MonomialOrder::Grevlex);
        gb.len() == 1 && gb[0].is_constant()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        let gens = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect();
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let gens = self.generators.iter().cloned().chain(extra).collect();
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn scaled_by(&self, p: &Polynomial) -> Result<Ideal> {
        self.product(&Ideal::principal(p))
    }

    pub fn power(&self, n: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Cofactors expressing `p` in terms of the generators, if `p` is a member.
    pub fn lift(&self, p: &Polynomial) -> Option<Vec<Polynomial>> {
        groebner::lift(&self.ring, &self.generators, p, &MonomialOrder::Grevlex)
    }

    pub fn embed(&self, target: &Ring) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self} in {}", self.ring)
    }
}
