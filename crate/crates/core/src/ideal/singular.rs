use super::Ideal;
use crate::error::Result;
#[cfg(test)]
use crate::error::Error;
use crate::poly::Polynomial;

/// Rows are generators, columns are variables.
pub fn jacobian_matrix(polys: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    polys
        .iter()
        .map(|p| (0..p.ring().arity()).map(|v| p.partial_derivative(v)).collect())
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        0 => unreachable!("caller supplies the ring for empty minors"),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        n => {
            // Laplace expansion along the first row
            let mut acc = Polynomial::zero(m[0][0].ring());
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &determinant(&sub);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// All nonzero `size x size` minors, without repetitions.
pub fn minors(matrix: &[Vec<Polynomial>], size: usize) -> Vec<Polynomial> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut out: Vec<Polynomial> = Vec::new();
    for rs in combinations(rows, size) {
        for cs in combinations(cols, size) {
            let sub: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| matrix[r][c].clone()).collect())
                .collect();
            let d = determinant(&sub);
            if !d.is_zero() && !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

impl Ideal {
    /// Jacobian criterion: `I` plus the `c x c` minors of the Jacobian of the
    /// generators, with `c` the codimension of `I`. Assumes `I` is
    /// equidimensional; this is not checked.
    pub fn singular_locus(&self) -> Result<Ideal> {
        let dim = self.dimension()?;
        let codim = self.ring.arity() - dim;
        if codim == 0 {
            // the empty minor is 1; affine space is smooth
            return Ok(Ideal::unit(&self.ring));
        }
        let jac = jacobian_matrix(&self.generators);
        self.with_generators(minors(&jac, codim))
    }
}
