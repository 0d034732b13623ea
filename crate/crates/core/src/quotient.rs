//! Quasi-affine rings as invariant rings of a free `G_a`-action.
//!
//! Given an affine `Y` and `f = (f1, f2): Y -> A^2`, the open set
//! `Ω = Y \ Z(f1, f2)` is the quotient of the fiber product
//! `W = Y x_{A^2} SL_2` by `G_a` acting through
//! `(a, b, c, d) ↦ (a, b + t a, c, d + t c)`. On `W`,
//! `d·f1 - b·f2 = d·a - b·c = 1`, and a function `g` regular on `Ω` lifts to
//! the invariant `g·(d·f1 - b·f2)^n`, which is polynomial as soon as
//! `g·(f1, f2)^n ⊂ Q[Y]`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Polynomial, Rational, Ring};

/// `Y` with the two functions whose common zero set is removed.
#[derive(Clone, Debug)]
pub struct QuasiAffineDatum {
    y_ideal: Ideal,
    f1: Polynomial,
    f2: Polynomial,
}

impl QuasiAffineDatum {
    pub fn new(y_ideal: Ideal, f1: Polynomial, f2: Polynomial) -> Result<Self> {
        y_ideal.ring().ensure_same(f1.ring())?;
        y_ideal.ring().ensure_same(f2.ring())?;
        if y_ideal.contains(&f1) {
            return Err(Error::DegenerateDatum { index: 1 });
        }
        if y_ideal.contains(&f2) {
            return Err(Error::DegenerateDatum { index: 2 });
        }
        Ok(QuasiAffineDatum { y_ideal, f1, f2 })
    }

    pub fn ring(&self) -> &Ring {
        self.y_ideal.ring()
    }

    pub fn y_ideal(&self) -> &Ideal {
        &self.y_ideal
    }

    pub fn f1(&self) -> &Polynomial {
        &self.f1
    }

    pub fn f2(&self) -> &Polynomial {
        &self.f2
    }
}

/// Presentation of `W = Y x_{A^2} SL_2` with its `G_a`-action.
#[derive(Clone, Debug)]
pub struct FiberProduct {
    datum: QuasiAffineDatum,
    ring: Ring,
    w_ideal: Ideal,
    action: Derivation,
    /// indices of a, b, c, d in `ring`
    abcd: [usize; 4],
}

/// Builds `W` and certifies that the action preserves its ideal.
pub fn build_fiber_product(datum: &QuasiAffineDatum) -> Result<FiberProduct> {
    let y_ring = datum.ring();
    let extra: Vec<String> = ["a", "b", "c", "d"]
        .iter()
        .map(|n| y_ring.fresh_name(n))
        .collect();
    let ring = y_ring.with_suffix(&extra)?;
    let base = y_ring.arity();
    let abcd = [base, base + 1, base + 2, base + 3];
    let [a, b, c, d] = abcd.map(|i| Polynomial::var(&ring, i));
    let f1 = datum.f1.embed(&ring)?;
    let f2 = datum.f2.embed(&ring)?;

    let sl2 = &(&(&a * &d) - &(&b * &c)) - &Polynomial::one(&ring);
    let w_ideal = datum
        .y_ideal
        .embed(&ring)?
        .with_generators([sl2, &a - &f1, &c - &f2])?;

    let mut images = vec![Polynomial::zero(&ring); ring.arity()];
    images[abcd[1]] = a.clone();
    images[abcd[3]] = c.clone();
    let action = Derivation::new(&ring, images)?;
    action.induced_on_quotient(&w_ideal)?;

    Ok(FiberProduct {
        datum: datum.clone(),
        ring,
        w_ideal,
        action,
        abcd,
    })
}

impl FiberProduct {
    pub fn datum(&self) -> &QuasiAffineDatum {
        &self.datum
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn w_ideal(&self) -> &Ideal {
        &self.w_ideal
    }

    pub fn action(&self) -> &Derivation {
        &self.action
    }

    /// The invariant coordinates `(a, c)` through which `W -> A^2` factors.
    pub fn quotient_coords(&self) -> (Polynomial, Polynomial) {
        (
            Polynomial::var(&self.ring, self.abcd[0]),
            Polynomial::var(&self.ring, self.abcd[2]),
        )
    }

    pub fn var(&self, which: char) -> Polynomial {
        let k = match which {
            'a' => 0,
            'b' => 1,
            'c' => 2,
            'd' => 3,
            _ => panic!("fiber product coordinates are a, b, c, d"),
        };
        Polynomial::var(&self.ring, self.abcd[k])
    }

    /// `d·f1 - b·f2`, identically one on `W`.
    pub fn unit_element(&self) -> Polynomial {
        let f1 = self.datum.f1.embed(&self.ring).unwrap();
        let f2 = self.datum.f2.embed(&self.ring).unwrap();
        &(&self.var('d') * &f1) - &(&self.var('b') * &f2)
    }

    /// `d·f1 - b·f2 - 1 ∈ I(W)`.
    pub fn verify_unit_relation(&self) -> bool {
        self.w_ideal
            .contains(&(&self.unit_element() - &Polynomial::one(&self.ring)))
    }

    /// Lifts `g = numerator/denominator ∈ Q[Ω]` to an invariant polynomial on `W`.
    ///
    /// Requires `numerator·m ∈ (denominator) + I(Y)` for each monomial
    /// `m = f1^i f2^(n-i)` generating `(f1, f2)^n`. Writing
    /// `numerator·m = denominator·q_i + (element of I(Y))`, the lift is
    /// `Σ_i C(n,i) d^i (-b)^(n-i) q_i`, which equals `g·(d f1 - b f2)^n` on `W`.
    pub fn extend_regular_function(
        &self,
        numerator: &Polynomial,
        denominator: &Polynomial,
        n: usize,
    ) -> Result<Polynomial> {
        let y_ring = self.datum.ring();
        y_ring.ensure_same(numerator.ring())?;
        y_ring.ensure_same(denominator.ring())?;
        if denominator.is_zero() || self.datum.y_ideal.contains(denominator) {
            return Err(Error::Invalid("denominator vanishes on Y".into()));
        }
        let mut gens = vec![denominator.clone()];
        gens.extend(self.datum.y_ideal.generators().iter().cloned());
        let membership = Ideal::new(y_ring, gens)?;

        let b = self.var('b');
        let d = self.var('d');
        let neg_b = -&b;
        let mut out = Polynomial::zero(&self.ring);
        let mut binom = BigInt::one();
        for i in 0..=n {
            let m = &self.datum.f1.pow(i as u32) * &self.datum.f2.pow((n - i) as u32);
            let target = numerator * &m;
            let cofactors = membership.lift(&target).ok_or_else(|| Error::NotRegular {
                level: n,
                generator: m.to_string(),
            })?;
            let q = cofactors[0].embed(&self.ring)?;
            let weight = &d.pow(i as u32) * &neg_b.pow((n - i) as u32);
            out = &out + &(&weight * &q).scale(&Rational::from_integer(binom.clone()));
            binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        // sanity: denominator·out ≡ numerator·(d f1 - b f2)^n on W
        let lhs = &denominator.embed(&self.ring)? * &out;
        let rhs = &numerator.embed(&self.ring)? * &self.unit_element().pow(n as u32);
        if !self.w_ideal.contains(&(&lhs - &rhs)) {
            return Err(Error::Cofactor(
                "lifted cofactors do not reproduce numerator*(d*f1 - b*f2)^n".into(),
            ));
        }
        Ok(out)
    }

    /// `D(p) ∈ I(W)`.
    pub fn is_invariant(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.w_ideal.contains(&self.action.apply(p)?))
    }

    /// Order in which `b` and `d` come first: normal forms free of `b, d`
    /// exist exactly for classes of polynomials in the other variables.
    fn elimination_ring(&self) -> Result<(Ring, Ideal)> {
        let mut names = vec![
            self.ring.name(self.abcd[1]).to_string(),
            self.ring.name(self.abcd[3]).to_string(),
        ];
        for (i, n) in self.ring.names().iter().enumerate() {
            if i != self.abcd[1] && i != self.abcd[3] {
                names.push(n.clone());
            }
        }
        let ring = Ring::new(names)?;
        let ideal = self.w_ideal.embed(&ring)?;
        Ok((ring, ideal))
    }

    /// Degree-`d` slice of the invariant ring of `W`, with each element
    /// either rewritten without `b, d` or explained as a lifted regular
    /// function on `Ω`.
    pub fn verify_quotient_slice(&self, degree: u32) -> Result<SliceReport> {
        let basis = self
            .action
            .kernel_basis_up_to_degree(degree, Some(&self.w_ideal))?;
        let (elim_ring, elim_ideal) = self.elimination_ring()?;
        let order = MonomialOrder::elimination(2);
        let mut entries = Vec::with_capacity(basis.len());
        for element in basis {
            let nf = elim_ideal.normal_form(&element.embed(&elim_ring)?, &order);
            let status = if !nf.involves(0) && !nf.involves(1) {
                SliceStatus::Descends(nf.embed(&self.ring)?)
            } else {
                match self.regular_witness(&element)? {
                    Some((num, den, level)) => SliceStatus::RegularOnOmega {
                        numerator: num,
                        denominator: den,
                        level,
                    },
                    None => SliceStatus::Unexplained,
                }
            };
            entries.push(SliceEntry { element, status });
        }
        Ok(SliceReport { entries })
    }

    /// Restricts an invariant `h` to the section `b = 0, d = 1/f1` over
    /// `f1 != 0`, giving `g = H / f1^e` on `Ω`, then checks that
    /// `extend_regular_function(H, f1^e, n)` agrees with `h` on `W` for some level `n`.
    fn regular_witness(&self, h: &Polynomial) -> Result<Option<(Polynomial, Polynomial, usize)>> {
        let y_ring = self.datum.ring().clone();
        let [ia, ib, ic, id] = self.abcd;
        let e = h.degree_in(id);
        let f1 = self.datum.f1.clone();
        let mut images: Vec<Polynomial> = (0..self.ring.arity())
            .map(|i| {
                if i < y_ring.arity() {
                    Polynomial::var(&y_ring, i)
                } else {
                    Polynomial::zero(&y_ring)
                }
            })
            .collect();
        images[ia] = f1.clone();
        images[ic] = self.datum.f2.clone();
        images[ib] = Polynomial::zero(&y_ring);
        let mut numerator = Polynomial::zero(&y_ring);
        for k in 0..=e {
            // d^k coefficient, with d = 1/f1 scaled by f1^e
            let mut restricted_images = images.clone();
            restricted_images[id] = Polynomial::zero(&y_ring);
            let coeff = h.coefficient_in(id, k).substitute(&restricted_images)?;
            numerator = &numerator + &(&coeff * &f1.pow(e - k));
        }
        let denominator = f1.pow(e);
        let max_level = (e as usize).max(1) + 2;
        for level in 0..=max_level {
            match self.extend_regular_function(&numerator, &denominator, level) {
                Ok(lift) => {
                    if self.w_ideal.contains(&(&lift - h)) {
                        return Ok(Some((numerator, denominator, level)));
                    }
                }
                Err(Error::NotRegular { .. }) => continue,
                Err(other) => return Err(other),
            }
        }
        Ok(None)
    }
}

/// How an invariant of `W` is accounted for.
#[derive(Clone, Debug)]
pub enum SliceStatus {
    /// Congruent to this polynomial in the `Y`-variables and `a, c`.
    Descends(Polynomial),
    /// Equal on `W` to the lift of `numerator/denominator ∈ Q[Ω]` at `level`.
    RegularOnOmega {
        numerator: Polynomial,
        denominator: Polynomial,
        level: usize,
    },
    /// Neither; a counterexample candidate.
    Unexplained,
}

#[derive(Clone, Debug)]
pub struct SliceEntry {
    pub element: Polynomial,
    pub status: SliceStatus,
}

#[derive(Clone, Debug)]
pub struct SliceReport {
    pub entries: Vec<SliceEntry>,
}

impl SliceReport {
    pub fn is_clean(&self) -> bool {
        self.entries
            .iter()
            .all(|e| !matches!(e.status, SliceStatus::Unexplained))
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.entries.iter().map(|e| e.element.clone()).collect()
    }
}

impl fmt::Display for SliceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match &e.status {
                SliceStatus::Descends(p) => writeln!(f, "{}  descends: {}", e.element, p)?,
                SliceStatus::RegularOnOmega {
                    numerator,
                    denominator,
                    level,
                } => writeln!(
                    f,
                    "{}  regular on Omega: ({}) / ({}) at level {}",
                    e.element, numerator, denominator, level
                )?,
                SliceStatus::Unexplained => writeln!(f, "{}  UNEXPLAINED", e.element)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for FiberProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.ring)?;
        writeln!(f, "W ideal: {}", self.w_ideal)?;
        writeln!(f, "action: {}", self.action)?;
        let (a, c) = self.quotient_coords();
        write!(f, "quotient coordinates: ({a}, {c})")
    }
}

/// `Y = A^2`, `f = (y1, y2)`: `W` is `SL_2` itself.
pub fn sl2_datum() -> QuasiAffineDatum {
    let ring = Ring::new(["y1", "y2"]).unwrap();
    QuasiAffineDatum::new(
        Ideal::zero(&ring),
        Polynomial::var(&ring, 0),
        Polynomial::var(&ring, 1),
    )
    .unwrap()
}

/// The quadric cone `y1 y4 = y2 y3` with `f = (y1, y2)`; `y3/y1 = y4/y2` is
/// regular off `Z(y1, y2)` but not a polynomial in the coordinates.
pub fn quadric_cone_datum() -> QuasiAffineDatum {
    let ring = Ring::new(["y1", "y2", "y3", "y4"]).unwrap();
    QuasiAffineDatum::new(
        Ideal::parse(&ring, &["y1*y4 - y2*y3"]).unwrap(),
        Polynomial::var(&ring, 0),
        Polynomial::var(&ring, 1),
    )
    .unwrap()
}
