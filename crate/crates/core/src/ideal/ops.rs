use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring};

impl Ideal {
    /// `I ∩ Q[x_{k+1}, ..., x_n]`: the basis elements under a block order
    /// that do not involve the first `k` variables.
    pub fn eliminate(&self, first_k: usize) -> Ideal {
        let order = MonomialOrder::elimination(first_k);
        let gens = self
            .groebner_basis(&order)
            .iter()
            .filter(|g| (0..first_k).all(|v| !g.involves(v)))
            .cloned()
            .collect();
        Ideal::new(&self.ring, gens).unwrap()
    }

    /// Eliminates an arbitrary set of variables by moving them to the front.
    pub fn eliminate_variables(&self, vars: &[usize]) -> Result<Ideal> {
        for &v in vars {
            if v >= self.ring.arity() {
                return Err(Error::VariableOutOfRange(v));
            }
        }
        let mut names: Vec<String> = vars.iter().map(|&v| self.ring.name(v).to_string()).collect();
        for (i, n) in self.ring.names().iter().enumerate() {
            if !vars.contains(&i) {
                names.push(n.clone());
            }
        }
        let permuted = Ring::new(names)?;
        self.embed(&permuted)?.eliminate(vars.len()).embed(&self.ring)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let t_name = self.ring.fresh_name("t");
        let ext = self.ring.with_prefix(&[t_name])?;
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&t * &g.embed(&ext)?);
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.embed(&ext)?);
        }
        Ideal::new(&ext, gens)?.eliminate(1).embed(&self.ring)
    }

    /// `(I : (g)) = (I ∩ (g)) / g`.
    pub fn quotient_by(&self, g: &Polynomial) -> Result<Ideal> {
        self.ring.ensure_same(g.ring())?;
        if g.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let meet = self.intersection(&Ideal::principal(g))?;
        let mut gens = Vec::with_capacity(meet.generators.len());
        for h in meet.generators() {
            let q = h
                .div_exact(g)?
                .expect("elements of (g) are divisible by g");
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// `(I : J) = {g : gJ ⊆ I}`, as the intersection of the quotients by
    /// each generator of `J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        let mut acc: Option<Ideal> = None;
        for g in other.generators() {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `(I : J^∞)` together with the least `n` with `(I : J^n) = (I : J^{n+1})`.
    pub fn saturation(&self, other: &Ideal) -> Result<(Ideal, usize)> {
        let mut current = self.clone();
        let mut n = 0;
        loop {
            let next = current.quotient(other)?;
            if next.same_as(&current) {
                return Ok((current, n));
            }
            current = next;
            n += 1;
        }
    }

    /// `p ∈ √I`, decided by `1 ∈ I + (1 - T p)` in `Q[T, x]`.
    pub fn radical_contains(&self, p: &Polynomial) -> Result<bool> {
        self.ring.ensure_same(p.ring())?;
        if p.is_zero() || self.contains(p) {
            return Ok(true);
        }
        let t_name = self.ring.fresh_name("t");
        let ext = self.ring.with_prefix(&[t_name])?;
        let t = Polynomial::var(&ext, 0);
        let rabinowitsch = &Polynomial::one(&ext) - &(&t * &p.embed(&ext)?);
        Ok(self.embed(&ext)?.with_generators([rabinowitsch])?.is_unit())
    }

    pub fn radical_contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.generators() {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Krull dimension of `Q[x]/I`: the largest set of variables containing
    /// no leading monomial of the grevlex basis.
    pub fn dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = self.ring.arity();
        assert!(n < 32, "dimension supports at most 31 variables");
        let supports: Vec<u32> = self
            .groebner_basis(&MonomialOrder::Grevlex)
            .iter()
            .map(|g| {
                let lm = g.leading_monomial(&MonomialOrder::Grevlex).unwrap();
                lm.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u32, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        let best = (0u32..(1u32 << n))
            .filter(|set| supports.iter().all(|s| s & !set != 0))
            .map(u32::count_ones)
            .max()
            .unwrap_or(0);
        Ok(best as usize)
    }
}
