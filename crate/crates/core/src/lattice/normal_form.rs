//! Smith and Hermite normal forms over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Result of a Smith decomposition `u * m * v = d`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// Diagonal entries `d[0], d[1], ...` up to the smaller dimension.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

fn min_nonzero(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Computes `(D, U, V)` with `U * m * V = D`, `D` diagonal with
/// nonnegative entries `d_i | d_{i+1}`, and `U`, `V` unimodular.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut rank = 0;

    for k in 0..rows.min(cols) {
        let Some((pi, pj)) = min_nonzero(&a, k) else {
            break;
        };
        a.swap_rows(k, pi);
        u.swap_rows(k, pi);
        a.swap_cols(k, pj);
        v.swap_cols(k, pj);

        loop {
            let mut dirty = false;
            // clear column k
            for i in k + 1..rows {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let q = -a[(i, k)].div_floor(&a[(k, k)]);
                a.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                if !a[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            // clear row k
            for j in k + 1..cols {
                if a[(k, j)].is_zero() {
                    continue;
                }
                let q = -a[(k, j)].div_floor(&a[(k, k)]);
                a.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                if !a[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a smaller remainder exists in row or column k; move it to the pivot
                let mut best = (k, k);
                for i in k + 1..rows {
                    if !a[(i, k)].is_zero() && a[(i, k)].abs() < a[best].abs() {
                        best = (i, k);
                    }
                }
                for j in k + 1..cols {
                    if !a[(k, j)].is_zero() && a[(k, j)].abs() < a[best].abs() {
                        best = (k, j);
                    }
                }
                a.swap_rows(k, best.0);
                u.swap_rows(k, best.0);
                a.swap_cols(k, best.1);
                v.swap_cols(k, best.1);
                continue;
            }
            // divisibility of the remaining block by the pivot
            let bad = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&a[(k, k)]));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    a.add_row_multiple(k, i, &one);
                    u.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
        if a[(k, k)].is_negative() {
            a.negate_row(k);
            u.negate_row(k);
        }
        rank += 1;
    }
    SmithForm { d: a, u, v, rank }
}

/// Row-style Hermite normal form: the nonzero rows of the result generate
/// the same module as the rows of `m`; pivots are positive and entries
/// above each pivot are reduced into `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&x, &y| a[(x, c)].abs().cmp(&a[(y, c)].abs()));
            let Some(p) = best else { break };
            a.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let q = -a[(i, c)].div_floor(&a[(r, c)]);
                a.add_row_multiple(i, r, &q);
                if !a[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        for i in 0..r {
            let q = -a[(i, c)].div_floor(&a[(r, c)]);
            a.add_row_multiple(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    let kept: Vec<Vec<BigInt>> = (0..r).map(|i| a.row(i)).collect();
    if kept.is_empty() {
        return IntMatrix::zeros(0, cols);
    }
    IntMatrix::from_rows(&kept).expect("rows share a length")
}

/// Saturated integer kernel of `x -> m x`, as a list of basis vectors.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    (snf.rank..m.cols()).map(|j| snf.v.column(j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::matrix::ivec;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
        s
    }

    #[test]
    fn identity_is_its_own_smith_form() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.diagonal(), ivec(&[1, 1, 1]));
    }

    #[test]
    fn diag_two_two() {
        let s = check(&m(&[vec![2, 0], vec![0, 2]]));
        assert_eq!(s.diagonal(), ivec(&[2, 2]));
    }

    #[test]
    fn two_four_four_two() {
        // by hand: gcd of entries is 2, det is -12, so d = (2, 6)
        let s = check(&m(&[vec![2, 4], vec![4, 2]]));
        assert_eq!(s.diagonal(), ivec(&[2, 6]));
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let s = check(&m(&[vec![2, 4, 6], vec![1, 2, 3]]));
        assert_eq!(s.rank, 1);
        assert_eq!(s.diagonal(), ivec(&[1, 0]));
    }

    #[test]
    fn hermite_form_of_lattice_generators() {
        let h = hermite_normal_form(&m(&[vec![2, 0], vec![0, 2], vec![1, 1]]));
        assert_eq!(h, m(&[vec![1, 1], vec![0, 2]]));
    }

    #[test]
    fn kernel_is_primitive() {
        // x + 2y + 4z = 0 over Z
        let k = integer_kernel(&m(&[vec![2, 4, 8]]));
        assert_eq!(k.len(), 2);
        let basis = IntMatrix::from_columns(&k, 3).unwrap();
        assert!(m(&[vec![2, 4, 8]]).mul(&basis).unwrap().is_zero());
        let s = smith_normal_form(&basis);
        assert_eq!(s.diagonal(), ivec(&[1, 1]));
    }
}
