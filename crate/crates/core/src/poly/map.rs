use std::fmt;

use super::{Polynomial, Rational, Ring};
use crate::error::{Error, Result};

/// A polynomial map given by pulling back coordinates: variable `i` of the
/// source ring is sent to `images[i]` in the target ring.
#[derive(Clone, PartialEq, Eq)]
pub struct PolynomialMap {
    source: Ring,
    target: Ring,
    images: Vec<Polynomial>,
}

impl PolynomialMap {
    pub fn new(source: &Ring, target: &Ring, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != source.arity() {
            return Err(Error::ArityMismatch {
                expected: source.arity(),
                found: images.len(),
            });
        }
        for p in &images {
            target.ensure_same(p.ring())?;
        }
        Ok(PolynomialMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(ring: &Ring) -> Self {
        PolynomialMap {
            source: ring.clone(),
            target: ring.clone(),
            images: (0..ring.arity()).map(|i| Polynomial::var(ring, i)).collect(),
        }
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image(&self, var: usize) -> &Polynomial {
        &self.images[var]
    }

    pub fn pull_back(&self, p: &Polynomial) -> Result<Polynomial> {
        p.apply_map(self)
    }

    /// `self` followed by `next`: source of `self` to target of `next`.
    pub fn then(&self, next: &PolynomialMap) -> Result<PolynomialMap> {
        self.target.ensure_same(&next.source)?;
        let images = self
            .images
            .iter()
            .map(|p| p.substitute(&next.images))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolynomialMap {
            source: self.source.clone(),
            target: next.target.clone(),
            images,
        })
    }

    /// Geometric image of a rational point of the target ring's affine space.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.images.iter().map(|p| p.evaluate(point)).collect()
    }
}

impl fmt::Display for PolynomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.images.iter().enumerate() {
            writeln!(f, "{} -> {}", self.source.name(i), p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolynomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_then_is_neutral() {
        let r = Ring::new(["x", "y"]).unwrap();
        let swap = PolynomialMap::new(
            &r,
            &r,
            vec![Polynomial::parse("y", &r).unwrap(), Polynomial::parse("x + y^2", &r).unwrap()],
        )
        .unwrap();
        let id = PolynomialMap::identity(&r);
        assert_eq!(id.then(&swap).unwrap(), swap);
        assert_eq!(swap.then(&id).unwrap(), swap);
    }

    #[test]
    fn arity_checked() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert!(PolynomialMap::new(&r, &r, vec![Polynomial::one(&r)]).is_err());
    }
}
