use std::cmp::Ordering;
use std::fmt;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True if every variable with a positive exponent lies in `vars`.
    pub fn supported_in(&self, vars: &[bool]) -> bool {
        self.0.iter().zip(vars).all(|(&e, &allowed)| e == 0 || allowed)
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut Vec<u32> {
        &mut self.0
    }
}

/// Total orders on monomials compatible with multiplication.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// First variable dominates.
    Lex,
    /// Total degree, ties broken by the smallest exponent of the last variable.
    #[default]
    Grevlex,
    /// The first `split` variables are compared with `first`; ties go to
    /// `second` on the remaining variables. An elimination order for the
    /// leading block.
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Block order with grevlex inside both blocks.
    pub fn elimination(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(MonomialOrder::Grevlex),
            second: Box::new(MonomialOrder::Grevlex),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_slices(&a.0, &b.0)
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
            MonomialOrder::Block {
                split,
                first,
                second,
            } => {
                let k = (*split).min(a.len());
                first
                    .cmp_slices(&a[..k], &b[..k])
                    .then_with(|| second.cmp_slices(&a[k..], &b[k..]))
            }
        }
    }

    /// Parses `lex`, `grevlex` or `block:k`.
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "lex" => Some(MonomialOrder::Lex),
            "grevlex" => Some(MonomialOrder::Grevlex),
            other => other
                .strip_prefix("block:")
                .and_then(|k| k.trim().parse().ok())
                .map(MonomialOrder::elimination),
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Block {
                split,
                first,
                second,
            } => {
                if **first == MonomialOrder::Grevlex && **second == MonomialOrder::Grevlex {
                    write!(f, "block:{split}")
                } else {
                    write!(f, "block({split}, {first}, {second})")
                }
            }
        }
    }
}

/// All monomials in `arity` variables of total degree at most `max_degree`.
pub fn monomials_up_to_degree(arity: usize, max_degree: u32) -> Vec<Monomial> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == cur.len() {
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_degree, &mut vec![0; arity], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::elimination(1),
            MonomialOrder::elimination(2),
            MonomialOrder::Block {
                split: 1,
                first: Box::new(MonomialOrder::Lex),
                second: Box::new(MonomialOrder::Lex),
            },
        ]
    }

    #[test]
    fn grevlex_prefers_degree_then_reverse() {
        let o = MonomialOrder::Grevlex;
        // y^2 > x in two variables
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        // x*z < y^2 in grevlex (x > y > z)
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // but x*z > y^2 in lex
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_eliminates_leading_block() {
        let o = MonomialOrder::elimination(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn orders_are_total_multiplicative_with_one_minimal() {
        let mons = monomials_up_to_degree(3, 3);
        let one = Monomial::one(3);
        for o in orders() {
            for a in &mons {
                if !a.is_one() {
                    assert_eq!(o.cmp(a, &one), Ordering::Greater, "{o}");
                }
                for b in &mons {
                    let ab = o.cmp(a, b);
                    assert_eq!(ab, o.cmp(b, a).reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    for c in &mons {
                        assert_eq!(o.cmp(&a.mul(c), &b.mul(c)), ab, "{o}");
                    }
                }
            }
        }
    }

    #[test]
    fn orders_are_transitive() {
        let mons = monomials_up_to_degree(3, 2);
        for o in orders() {
            for a in &mons {
                for b in &mons {
                    for c in &mons {
                        if o.cmp(a, b) == Ordering::Less && o.cmp(b, c) == Ordering::Less {
                            assert_eq!(o.cmp(a, c), Ordering::Less);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumerates_monomials() {
        assert_eq!(monomials_up_to_degree(5, 1).len(), 6);
        assert_eq!(monomials_up_to_degree(5, 4).len(), 126);
        assert_eq!(monomials_up_to_degree(0, 3).len(), 1);
    }

    #[test]
    fn parses_orders() {
        assert_eq!(MonomialOrder::parse("lex"), Some(MonomialOrder::Lex));
        assert_eq!(MonomialOrder::parse("block:3"), Some(MonomialOrder::elimination(3)));
        assert_eq!(MonomialOrder::parse("block:x"), None);
        assert_eq!(MonomialOrder::elimination(2).to_string(), "block:2");
    }
}
