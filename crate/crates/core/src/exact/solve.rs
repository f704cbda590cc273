use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{rat_int, IntMatrix, Rational};
use crate::error::{Error, Result};

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// One particular solution plus the indices of free variables (set to zero in `particular`).
    Underdetermined { particular: Vec<Rational>, free_vars: Vec<usize> },
}

/// Solve `m x = b` over Q by Gauss-Jordan elimination.
pub fn solve_exact(m: &IntMatrix, b: &[Rational]) -> Result<Solution> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: b.len() });
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<Rational> = m.row(i).iter().map(rat_int).collect();
            r.push(b[i].clone());
            r
        })
        .collect();

    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        let Some(p) = (pr..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(pr, p);
        let inv = a[pr][c].recip();
        for x in a[pr].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != pr && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=cols {
                    let t = &f * &a[pr][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    if a[pr..].iter().any(|r| !r[cols].is_zero()) {
        return Err(Error::Inconsistent);
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][cols].clone();
    }
    if pivots.len() == cols {
        Ok(Solution::Unique(x))
    } else {
        let free_vars = (0..cols).filter(|c| !pivots.contains(c)).collect();
        Ok(Solution::Underdetermined { particular: x, free_vars })
    }
}

/// Inertia of a real symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

/// Signature of a symmetric rational matrix via congruence diagonalisation.
pub fn rational_signature(g: &[Vec<Rational>]) -> Result<Signature> {
    let n = g.len();
    if g.iter().any(|r| r.len() != n) {
        return Err(Error::NonSquare { rows: n, cols: g.first().map_or(0, |r| r.len()) });
    }
    for i in 0..n {
        for j in 0..i {
            if g[i][j] != g[j][i] {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let mut a: Vec<Vec<Rational>> = g.to_vec();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                swap_sym(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // a_kk = a_jj = 0, a_kj != 0: row/col k += row/col j gives 2 a_kj
                for c in 0..n {
                    let t = a[j][c].clone();
                    a[k][c] += t;
                }
                for r in 0..n {
                    let t = a[r][j].clone();
                    a[r][k] += t;
                }
            } else {
                k += 1;
                continue;
            }
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for c in k..n {
                let t = &f * &a[k][c];
                a[i][c] -= t;
            }
        }
        // the trailing block is now the Schur complement; column k is implied
        for i in k + 1..n {
            a[k][i] = Rational::zero();
            a[i][k] = Rational::zero();
        }
        k += 1;
    }
    Ok(Signature { pos, neg, zero: n - pos - neg })
}

fn swap_sym(a: &mut [Vec<Rational>], i: usize, j: usize) {
    a.swap(i, j);
    for r in a.iter_mut() {
        r.swap(i, j);
    }
}
