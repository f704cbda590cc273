use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Result of a Smith normal form computation: `u * m * v == d`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d_1 | d_2 | ...` (zeros included, up to `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[(bi, bj)].abs() <= a[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form with unimodular transforms `u` (rows) and `v` (columns).
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // clear column t below the pivot
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                let nq = -q;
                a.add_row_multiple(i, t, &nq);
                u.add_row_multiple(i, t, &nq);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                let nq = -q;
                a.add_col_multiple(j, t, &nq);
                v.add_col_multiple(j, t, &nq);
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder survived: move the smallest entry of row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[best].abs() {
                        best = (t, j);
                    }
                }
                if best.1 == t {
                    a.swap_rows(t, best.0);
                    u.swap_rows(t, best.0);
                } else {
                    a.swap_cols(t, best.1);
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)]))
            });
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d: a, v }
}

/// Echelon basis of the Z-row-span of `m` (zero rows dropped).
pub fn hermite_row_basis(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        loop {
            let piv = (pr..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&x, &y| a[(x, c)].abs().cmp(&a[(y, c)].abs()));
            let Some(p) = piv else { break };
            a.swap_rows(pr, p);
            let mut done = true;
            for i in pr + 1..rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let q = -a[(i, c)].div_floor(&a[(pr, c)]);
                a.add_row_multiple(i, pr, &q);
                if !a[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !a[(pr, c)].is_zero() {
            if a[(pr, c)].is_negative() {
                a.negate_row(pr);
            }
            // reduce entries above the pivot
            for i in 0..pr {
                let q = -a[(i, c)].div_floor(&a[(pr, c)]);
                a.add_row_multiple(i, pr, &q);
            }
            pr += 1;
        }
    }
    let kept: Vec<Vec<BigInt>> = a.to_rows().into_iter().take(pr).collect();
    IntMatrix::from_big_rows(kept, cols)
}

/// Z-basis of `{x : m x = 0}` as the columns of the returned matrix.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    let n = m.cols();
    let mut k = IntMatrix::zeros(n, n - r);
    for (c, j) in (r..n).enumerate() {
        for i in 0..n {
            k[(i, c)] = snf.v[(i, j)].clone();
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(s.u.det().unwrap().abs().is_one());
        assert!(s.v.det().unwrap().abs().is_one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            } else {
                assert!(w[1].is_zero());
            }
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.diagonal(), vec![BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn a3_gram() {
        let m = IntMatrix::from_rows(&[[-2, 1, 0], [1, -2, 1], [0, 1, -2]]);
        let s = check(&m);
        let d: Vec<i64> = s.diagonal().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 1, 4]);
    }

    #[test]
    fn d4_gram() {
        let m = IntMatrix::from_rows(&[
            [-2, 1, 0, 0],
            [1, -2, 1, 1],
            [0, 1, -2, 0],
            [0, 1, 0, -2],
        ]);
        let s = check(&m);
        let d: Vec<i64> = s.diagonal().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 1, 2, 2]);
    }

    #[test]
    fn rectangular_and_singular() {
        check(&IntMatrix::from_rows(&[[2, 4, 6], [1, 3, 5]]));
        let s = check(&IntMatrix::from_rows(&[[1, 2], [2, 4]]));
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn kernel_of_row() {
        let m = IntMatrix::from_rows(&[[2, 4, 6]]);
        let k = integer_kernel(&m);
        assert_eq!(k.cols(), 2);
        for c in 0..k.cols() {
            let col: Vec<BigInt> = (0..3).map(|i| k[(i, c)].clone()).collect();
            assert!(m.mul_vec(&col).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn hermite_basis_of_redundant_rows() {
        let m = IntMatrix::from_rows(&[[2, 0], [0, 2], [1, 1]]);
        let h = hermite_row_basis(&m);
        assert_eq!(h.rows(), 2);
        assert_eq!(h.det().unwrap().abs(), BigInt::from(2));
    }
}
