//! Exact integral quadratic lattices.
//!
//! An [`IntLattice`] is a free module `Z^n` with a symmetric integer Gram
//! matrix. Vectors are plain coordinate vectors in the lattice basis. No
//! floating point is used anywhere in this module tree.

mod discriminant;
mod isometry;
pub mod matrix;
pub mod normal_form;
mod overlattice;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

pub use discriminant::{discriminant_action, discriminant_group, ActionKind, DiscriminantAction, DiscriminantGroup};
pub use isometry::{fixed_and_anti_sublattice, reflection_in_vector, FixedAnti, Isometry};
pub use matrix::{IntMatrix, QMatrix};
pub use normal_form::{hermite_normal_form, integer_kernel, smith_normal_form, SmithForm};
pub use overlattice::{saturate_overlattice, RationalSpan, Saturation};

use crate::error::{Error, Result};

/// Coordinates of a lattice vector in the basis of its lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticeVector(#[serde(serialize_with = "crate::json::big_seq")] pub Vec<BigInt>);

impl LatticeVector {
    pub fn zero(rank: usize) -> Self {
        Self(vec![BigInt::zero(); rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = BigInt::from(1);
        v
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    /// Adds `k * other` in place.
    pub fn axpy(&mut self, k: &BigInt, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += k * b;
        }
    }
}

/// Rank plus symmetric integer Gram matrix, with optional basis labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    gram: IntMatrix,
    labels: Option<Vec<String>>,
}

impl IntLattice {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if gram.rows() == 0 {
            return Err(Error::EmptyLattice);
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self { gram, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Diagonal lattice, e.g. `diag(1, -1, -1, -1, -1)`.
    pub fn diagonal(entries: &[i64]) -> Result<Self> {
        Self::new(IntMatrix::diagonal(entries))
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    fn check_dim(&self, v: &LatticeVector) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear form `x^T G y`.
    pub fn pairing(&self, x: &LatticeVector, y: &LatticeVector) -> Result<BigInt> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let gy = self.gram.mul_vec(&y.0)?;
        Ok(x.0.iter().zip(&gy).map(|(a, b)| a * b).sum())
    }

    pub fn norm(&self, x: &LatticeVector) -> Result<BigInt> {
        self.pairing(x, x)
    }

    /// The row `x^T G`, i.e. pairings of `x` with every basis vector.
    pub fn pairing_row(&self, x: &LatticeVector) -> Result<Vec<BigInt>> {
        self.check_dim(x)?;
        self.gram.transpose().mul_vec(&x.0)
    }

    pub fn determinant(&self) -> BigInt {
        self.gram.determinant().expect("gram is square")
    }

    /// True when every diagonal Gram entry is even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (&self.gram[(i, i)] % 2u32).is_zero())
    }

    /// Divisibility of `x`: the gcd of its pairings with the whole lattice.
    pub fn divisibility(&self, x: &LatticeVector) -> Result<BigInt> {
        Ok(matrix::vec_content(&self.pairing_row(x)?))
    }

    /// Signature `(positive, negative)` by exact congruence diagonalization.
    pub fn signature(&self) -> (usize, usize) {
        signature(&self.gram)
    }

    /// Lattice spanned by the given vectors with the induced form.
    pub fn sublattice(&self, basis: &[LatticeVector]) -> Result<IntLattice> {
        for b in basis {
            self.check_dim(b)?;
        }
        let n = basis.len();
        let mut g = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let p = self.pairing(&basis[i], &basis[j])?;
                g[(i, j)] = p.clone();
                g[(j, i)] = p;
            }
        }
        IntLattice::new(g)
    }
}

/// Counts positive and negative entries of a diagonalization of a symmetric
/// rational form by symmetric row/column operations.
pub fn signature(gram: &IntMatrix) -> (usize, usize) {
    let n = gram.rows();
    let mut a = QMatrix::from_int(gram);
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        if a[(k, k)].is_zero() {
            if let Some(p) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                sym_swap(&mut a, k, p);
            } else if let Some(p) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // a_kk = a_pp = 0, a_kp != 0: row/col k += row/col p gives 2 a_kp
                sym_add(&mut a, k, p);
            } else {
                k += 1;
                continue;
            }
        }
        let pivot = a[(k, k)].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f: BigRational = &a[(i, k)] / &pivot;
            for j in k..n {
                let v = &f * &a[(k, j)];
                a[(i, j)] -= v;
            }
            for j in k..n {
                let v = &f * &a[(j, k)];
                a[(j, i)] -= v;
            }
        }
        k += 1;
    }
    (pos, neg)
}

fn sym_swap(a: &mut QMatrix, x: usize, y: usize) {
    let n = a.rows();
    for j in 0..n {
        let t = a[(x, j)].clone();
        a[(x, j)] = a[(y, j)].clone();
        a[(y, j)] = t;
    }
    for i in 0..n {
        let t = a[(i, x)].clone();
        a[(i, x)] = a[(i, y)].clone();
        a[(i, y)] = t;
    }
}

fn sym_add(a: &mut QMatrix, target: usize, source: usize) {
    let n = a.rows();
    for j in 0..n {
        let v = a[(source, j)].clone();
        a[(target, j)] += v;
    }
    for i in 0..n {
        let v = a[(i, source)].clone();
        a[(i, target)] += v;
    }
}
