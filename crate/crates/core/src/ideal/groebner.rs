//! Buchberger's algorithm over Q.
//!
//! Polynomials are handled as term vectors sorted descending under the
//! active order. Pairs are processed with the normal selection strategy
//! (smallest lcm degree first, ties by index) and filtered with Buchberger's
//! coprime and chain criteria, so the resulting reduced basis is
//! deterministic for a given input and order.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring};

pub(crate) type Term = (Monomial, Rational);

pub(crate) fn to_terms(p: &Polynomial, order: &MonomialOrder) -> Vec<Term> {
    p.sorted_terms(order)
}

pub(crate) fn from_terms(ring: &Ring, terms: Vec<Term>) -> Polynomial {
    Polynomial::from_terms(ring, terms)
}

fn make_monic(p: &mut [Term]) {
    if let Some(lc) = p.first().map(|t| t.1.clone()) {
        if !lc.is_one() {
            let inv = lc.recip();
            for t in p.iter_mut() {
                t.1 *= &inv;
            }
        }
    }
}

/// `p - c * q * g`, where the leading terms cancel; both `p` and `g` sorted.
fn sub_multiple(
    p_tail: &[Term],
    c: &Rational,
    q: &Monomial,
    g_tail: &[Term],
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(p_tail.len() + g_tail.len());
    let mut i = 0;
    let mut scaled = g_tail.iter().map(|(m, x)| (m.mul(q), -(x * c))).peekable();
    let mut pending = scaled.next();
    while i < p_tail.len() || pending.is_some() {
        match (&p_tail.get(i), &pending) {
            (Some(a), Some(b)) => match order.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push((*a).clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    pending = scaled.next();
                }
                Ordering::Equal => {
                    let s = &a.1 + &b.1;
                    if !s.is_zero() {
                        out.push((a.0.clone(), s));
                    }
                    i += 1;
                    pending = scaled.next();
                }
            },
            (Some(a), None) => {
                out.push((*a).clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(pending.take().unwrap());
                pending = scaled.next();
            }
            (None, None) => break,
        }
    }
    out
}

/// Full reduction of `p` by `basis` (each element monic and sorted).
///
/// `on_step(k, q, c)` is called for every step `p -= c*q*basis[k]`.
pub(crate) fn reduce_with<F>(
    mut p: Vec<Term>,
    basis: &[Vec<Term>],
    order: &MonomialOrder,
    mut on_step: F,
) -> Vec<Term>
where
    F: FnMut(usize, &Monomial, &Rational),
{
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (lm, lc) = (&p[start].0, &p[start].1);
        let hit = basis.iter().enumerate().find_map(|(k, g)| {
            g.first()
                .and_then(|(glm, _)| glm.quotient_of(lm))
                .map(|q| (k, q))
        });
        match hit {
            Some((k, q)) => {
                let c = lc / &basis[k][0].1;
                on_step(k, &q, &c);
                p = sub_multiple(&p[start + 1..], &c, &q, &basis[k][1..], order);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

pub(crate) fn reduce(p: Vec<Term>, basis: &[Vec<Term>], order: &MonomialOrder) -> Vec<Term> {
    reduce_with(p, basis, order, |_, _, _| {})
}

fn s_poly(f: &[Term], g: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let lcm = f[0].0.lcm(&g[0].0);
    let qf = f[0].0.quotient_of(&lcm).unwrap();
    let qg = g[0].0.quotient_of(&lcm).unwrap();
    let cf = f[0].1.recip();
    let cg = g[0].1.recip();
    let left: Vec<Term> = f[1..].iter().map(|(m, c)| (m.mul(&qf), c * &cf)).collect();
    sub_multiple(&left, &cg, &qg, &g[1..], order)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Pair bookkeeping shared by the plain and the cofactor-tracking variants.
struct PairQueue {
    pending: Vec<Pair>,
    done: Vec<Vec<bool>>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue {
            pending: Vec::new(),
            done: Vec::new(),
        }
    }

    fn add_element(&mut self, lms: &[Monomial]) {
        let j = lms.len() - 1;
        for row in &mut self.done {
            row.push(false);
        }
        self.done.push(vec![false; lms.len()]);
        for i in 0..j {
            if lms[i].is_coprime(&lms[j]) {
                // coprime criterion
                self.mark(i, j);
            } else {
                self.pending.push(Pair {
                    i,
                    j,
                    lcm: lms[i].lcm(&lms[j]),
                });
            }
        }
    }

    fn mark(&mut self, i: usize, j: usize) {
        self.done[i][j] = true;
        self.done[j][i] = true;
    }

    fn next(&mut self, lms: &[Monomial]) -> Option<(usize, usize)> {
        loop {
            if self.pending.is_empty() {
                return None;
            }
            let best = (0..self.pending.len())
                .min_by_key(|&k| {
                    let p = &self.pending[k];
                    (p.lcm.degree(), p.j, p.i)
                })
                .unwrap();
            let pair = self.pending.swap_remove(best);
            self.mark(pair.i, pair.j);
            // chain criterion
            let redundant = (0..lms.len()).any(|k| {
                k != pair.i
                    && k != pair.j
                    && self.done[pair.i][k]
                    && self.done[pair.j][k]
                    && lms[k].divides(&pair.lcm)
            });
            if !redundant {
                return Some((pair.i, pair.j));
            }
        }
    }
}

/// Reduced Gröbner basis of `gens`, sorted by descending leading monomial.
pub fn reduced_basis(ring: &Ring, gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Vec<Term>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut queue = PairQueue::new();

    let push = |mut h: Vec<Term>, basis: &mut Vec<Vec<Term>>, lms: &mut Vec<Monomial>, queue: &mut PairQueue| {
        make_monic(&mut h);
        lms.push(h[0].0.clone());
        basis.push(h);
        queue.add_element(lms);
    };

    for g in gens {
        let h = reduce(to_terms(g, order), &basis, order);
        if !h.is_empty() {
            if h[0].0.is_one() {
                return vec![Polynomial::one(ring)];
            }
            push(h, &mut basis, &mut lms, &mut queue);
        }
    }

    while let Some((i, j)) = queue.next(&lms) {
        let s = s_poly(&basis[i], &basis[j], order);
        let h = reduce(s, &basis, order);
        if !h.is_empty() {
            if h[0].0.is_one() {
                return vec![Polynomial::one(ring)];
            }
            push(h, &mut basis, &mut lms, &mut queue);
        }
    }

    interreduce(ring, basis, order)
}

fn interreduce(ring: &Ring, basis: Vec<Vec<Term>>, order: &MonomialOrder) -> Vec<Polynomial> {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Vec<Term>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            l != k && h[0].0.divides(&g[0].0) && (h[0].0 != g[0].0 || l < k)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    keep.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    let mut out = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Vec<Term>> = keep
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, g)| g.clone())
            .collect();
        let mut tail = reduce(keep[k][1..].to_vec(), &others, order);
        let mut g = vec![keep[k][0].clone()];
        g.append(&mut tail);
        make_monic(&mut g);
        out.push(g);
    }
    out.into_iter().map(|t| from_terms(ring, t)).collect()
}

/// Normal form of `p` with respect to an already computed basis.
pub fn normal_form_by(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let b: Vec<Vec<Term>> = basis.iter().map(|g| to_terms(g, order)).collect();
    from_terms(p.ring(), reduce(to_terms(p, order), &b, order))
}

/// Buchberger's criterion: every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let b: Vec<Vec<Term>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_terms(g, order))
        .collect();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !reduce(s_poly(&b[i], &b[j], order), &b, order).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Reduced-basis conditions: monic, and no term of any element is divisible by
/// the leading monomial of another.
pub fn is_reduced(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let lts: Vec<(Monomial, Rational)> = match basis
        .iter()
        .map(|g| g.leading_term(order))
        .collect::<Result<Vec<_>, _>>()
    {
        Ok(v) => v,
        Err(_) => return false,
    };
    for (k, g) in basis.iter().enumerate() {
        if !lts[k].1.is_one() {
            return false;
        }
        for (l, (lm, _)) in lts.iter().enumerate() {
            if l != k && g.terms().any(|(m, _)| lm.divides(m)) {
                return false;
            }
        }
    }
    true
}

/// Cofactors `h` with `p = sum h_i * gens_i`, or `None` if `p` is not in the ideal.
///
/// Runs Buchberger while recording how every basis element arises from the
/// generators, then replays the division of `p`.
pub fn lift(
    ring: &Ring,
    gens: &[Polynomial],
    p: &Polynomial,
    order: &MonomialOrder,
) -> Option<Vec<Polynomial>> {
    let n = gens.len();
    let zero = Polynomial::zero(ring);
    let mut basis: Vec<Vec<Term>> = Vec::new();
    let mut cofs: Vec<Vec<Polynomial>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut queue = PairQueue::new();

    // reduce `h` (with representation `rep`) by the current basis; returns a monic
    // remainder together with its representation
    let reduce_tracked = |h: Vec<Term>,
                          mut rep: Vec<Polynomial>,
                          basis: &[Vec<Term>],
                          cofs: &[Vec<Polynomial>]|
     -> (Vec<Term>, Vec<Polynomial>) {
        let mut steps: Vec<(usize, Monomial, Rational)> = Vec::new();
        let mut r = reduce_with(h, basis, order, |k, q, c| steps.push((k, q.clone(), c.clone())));
        for (k, q, c) in steps {
            for (slot, cof) in rep.iter_mut().zip(&cofs[k]) {
                *slot = &*slot - &cof.mul_monomial(&q, &c);
            }
        }
        if let Some(lc) = r.first().map(|t| t.1.clone()) {
            let inv = lc.recip();
            make_monic(&mut r);
            for slot in rep.iter_mut() {
                *slot = slot.scale(&inv);
            }
        }
        (r, rep)
    };

    for (idx, g) in gens.iter().enumerate() {
        let mut rep = vec![zero.clone(); n];
        rep[idx] = Polynomial::one(ring);
        let (h, rep) = reduce_tracked(to_terms(g, order), rep, &basis, &cofs);
        if !h.is_empty() {
            lms.push(h[0].0.clone());
            basis.push(h);
            cofs.push(rep);
            queue.add_element(&lms);
        }
    }

    while let Some((i, j)) = queue.next(&lms) {
        let lcm = lms[i].lcm(&lms[j]);
        let qi = lms[i].quotient_of(&lcm).unwrap();
        let qj = lms[j].quotient_of(&lcm).unwrap();
        let s = s_poly(&basis[i], &basis[j], order);
        // basis elements are monic, so s = qi*b_i - qj*b_j
        let one = Rational::one();
        let rep: Vec<Polynomial> = cofs[i]
            .iter()
            .zip(&cofs[j])
            .map(|(a, b)| &a.mul_monomial(&qi, &one) - &b.mul_monomial(&qj, &one))
            .collect();
        let (h, rep) = reduce_tracked(s, rep, &basis, &cofs);
        if !h.is_empty() {
            lms.push(h[0].0.clone());
            basis.push(h);
            cofs.push(rep);
            queue.add_element(&lms);
        }
    }

    let mut steps: Vec<(usize, Monomial, Rational)> = Vec::new();
    let rem = reduce_with(to_terms(p, order), &basis, order, |k, q, c| {
        steps.push((k, q.clone(), c.clone()))
    });
    if !rem.is_empty() {
        return None;
    }
    let mut out = vec![zero; n];
    for (k, q, c) in steps {
        for (slot, cof) in out.iter_mut().zip(&cofs[k]) {
            *slot = &*slot + &cof.mul_monomial(&q, &c);
        }
    }
    Some(out)
}
