//! Independent reference implementations used as oracles.
//!
//! Nothing here goes through the library's polynomial arithmetic: polynomials
//! are dense maps from exponent vectors to rationals, parsed from flat sums
//! of monomials, and linear algebra is plain fraction Gaussian elimination.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type Dense = HashMap<Vec<u32>, Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn clean(mut p: Dense) -> Dense {
    p.retain(|_, c| !c.is_zero());
    p
}

/// Parses sums like `3*x^6*u - 3*x^3*t*s + s^3` (no parentheses).
pub fn parse(text: &str, vars: &[&str]) -> Dense {
    let mut out = Dense::new();
    let normalized = text.replace(' ', "").replace('-', "+-");
    for term in normalized.split('+').filter(|t| !t.is_empty()) {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, term),
        };
        let mut coeff = q(sign);
        let mut exps = vec![0u32; vars.len()];
        for factor in body.split('*') {
            let (base, power) = match factor.split_once('^') {
                Some((b, e)) => (b, e.parse::<u32>().expect("exponent")),
                None => (factor, 1),
            };
            if let Ok(n) = base.parse::<i64>() {
                coeff *= q(n).pow(power as i32);
            } else {
                let i = vars.iter().position(|v| *v == base).unwrap_or_else(|| panic!("unknown {base}"));
                exps[i] += power;
            }
        }
        *out.entry(exps).or_insert_with(Q::zero) += coeff;
    }
    clean(out)
}

pub fn add(a: &Dense, b: &Dense) -> Dense {
    let mut out = a.clone();
    for (m, c) in b {
        *out.entry(m.clone()).or_insert_with(Q::zero) += c;
    }
    clean(out)
}

pub fn neg(a: &Dense) -> Dense {
    a.iter().map(|(m, c)| (m.clone(), -c.clone())).collect()
}

pub fn sub(a: &Dense, b: &Dense) -> Dense {
    add(a, &neg(b))
}

pub fn mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            *out.entry(m).or_insert_with(Q::zero) += ca * cb;
        }
    }
    clean(out)
}

pub fn pow(a: &Dense, e: u32) -> Dense {
    let n = a.keys().next().map_or(0, Vec::len);
    let mut out: Dense = [(vec![0; n], q(1))].into_iter().collect();
    for _ in 0..e {
        out = mul(&out, a);
    }
    out
}

pub fn derivative(a: &Dense, var: usize) -> Dense {
    let mut out = Dense::new();
    for (m, c) in a {
        if m[var] > 0 {
            let mut e = m.clone();
            e[var] -= 1;
            *out.entry(e).or_insert_with(Q::zero) += c * q(m[var] as i64);
        }
    }
    clean(out)
}

/// `Σ_i ∂a/∂x_i · images[i]`.
pub fn apply_derivation(a: &Dense, images: &[Dense]) -> Dense {
    images
        .iter()
        .enumerate()
        .fold(Dense::new(), |acc, (i, img)| add(&acc, &mul(&derivative(a, i), img)))
}

/// Exact division by a monomial `x_var^e`; `None` if some term is not divisible.
pub fn divide_by_power(a: &Dense, var: usize, e: u32) -> Option<Dense> {
    let mut out = Dense::new();
    for (m, c) in a {
        if m[var] < e {
            return None;
        }
        let mut k = m.clone();
        k[var] -= e;
        out.insert(k, c.clone());
    }
    Some(out)
}

pub fn evaluate(a: &Dense, point: &[Q]) -> Q {
    a.iter().fold(Q::zero(), |acc, (m, c)| {
        let mut v = c.clone();
        for (x, &e) in point.iter().zip(m) {
            v *= x.pow(e as i32);
        }
        acc + v
    })
}

/// Exponent vectors of total degree at most `d` in `n` variables.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(i + 1, n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::new(), &mut out);
    out
}

/// Rank by Gaussian elimination with rational pivots.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * p;
            }
        }
        r += 1;
    }
    r
}

/// Dimension of `{p : deg p <= d, D(p) = 0}` by the dense linear system on
/// all monomials of degree at most `d`.
pub fn kernel_dimension(images: &[Dense], d: u32) -> usize {
    let n = images.len();
    let basis = monomials(n, d);
    let columns: Vec<Dense> = basis
        .iter()
        .map(|m| {
            let mono: Dense = [(m.clone(), q(1))].into_iter().collect();
            apply_derivation(&mono, images)
        })
        .collect();
    // rows indexed by the monomials occurring in any image
    let mut row_keys: Vec<Vec<u32>> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
    row_keys.sort();
    row_keys.dedup();
    let matrix: Vec<Vec<Q>> = row_keys
        .iter()
        .map(|k| columns.iter().map(|c| c.get(k).cloned().unwrap_or_else(Q::zero)).collect())
        .collect();
    basis.len() - rank(&matrix)
}

/// Rank of the span of `polys` as coefficient vectors.
pub fn span_rank(polys: &[Dense]) -> usize {
    let mut keys: Vec<Vec<u32>> = polys.iter().flat_map(|p| p.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<Q>> = polys
        .iter()
        .map(|p| keys.iter().map(|k| p.get(k).cloned().unwrap_or_else(Q::zero)).collect())
        .collect();
    rank(&rows)
}

pub fn is_zero(a: &Dense) -> bool {
    a.values().all(Zero::is_zero)
}

pub fn is_one(x: &Q) -> bool {
    x.is_one()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

/// The derivation of the worked example on (x, s, t, u, v), as dense images.
pub fn df_images() -> Vec<Dense> {
    let vars = ["x", "s", "t", "u", "v"];
    ["0", "x^3", "s", "t", "x^2"]
        .iter()
        .map(|t| if *t == "0" { Dense::new() } else { parse(t, &vars) })
        .collect()
}

/// Converts a library polynomial through its printed form, which is a flat
/// sum of monomials with rational coefficients.
pub fn from_display(text: &str, vars: &[&str]) -> Dense {
    // rational coefficients appear as `a/b*...`; split them off before parsing
    let mut out = Dense::new();
    let normalized = text.replace(' ', "").replace('-', "+-");
    for term in normalized.split('+').filter(|t| !t.is_empty()) {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, term),
        };
        let mut factors: Vec<&str> = body.split('*').collect();
        let mut coeff = q(sign);
        if let Some((n, d)) = factors[0].split_once('/') {
            coeff *= Q::new(n.parse::<BigInt>().unwrap(), d.parse::<BigInt>().unwrap());
            factors.remove(0);
        }
        let rest = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
        for (m, c) in parse(&rest, vars) {
            *out.entry(m).or_insert_with(Q::zero) += &coeff * c;
        }
    }
    clean(out)
}
