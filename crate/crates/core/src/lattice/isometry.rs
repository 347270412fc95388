//! Isometries of a lattice, acting on column coordinate vectors `x -> M x`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::normal_form::integer_kernel;
use super::{IntLattice, LatticeVector};
use crate::error::{Error, Result};

/// A matrix `M` with `M^T G M = G` and `det M = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    lattice: IntLattice,
    matrix: IntMatrix,
}

impl Isometry {
    pub fn new(lattice: &IntLattice, matrix: IntMatrix) -> Result<Self> {
        let n = lattice.rank();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if matrix.rows() != n { matrix.rows() } else { matrix.cols() },
            });
        }
        let g = lattice.gram();
        if matrix.transpose().mul(g)?.mul(&matrix)? != *g {
            return Err(Error::NotIsometry);
        }
        let det = matrix.determinant()?;
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular(det));
        }
        Ok(Self {
            lattice: lattice.clone(),
            matrix,
        })
    }

    pub fn identity(lattice: &IntLattice) -> Self {
        Self {
            lattice: lattice.clone(),
            matrix: IntMatrix::identity(lattice.rank()),
        }
    }

    pub fn negation(lattice: &IntLattice) -> Self {
        Self {
            lattice: lattice.clone(),
            matrix: IntMatrix::identity(lattice.rank()).neg(),
        }
    }

    pub fn lattice(&self) -> &IntLattice {
        &self.lattice
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &LatticeVector) -> Result<LatticeVector> {
        Ok(LatticeVector(self.matrix.mul_vec(&x.0)?))
    }

    /// `self` after `other`: `x -> self(other(x))`.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        if self.lattice != other.lattice {
            return Err(Error::DimensionMismatch {
                expected: self.lattice.rank(),
                found: other.lattice.rank(),
            });
        }
        Ok(Self {
            lattice: self.lattice.clone(),
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn is_involution(&self) -> bool {
        self.matrix
            .mul(&self.matrix)
            .map(|m| m.is_identity())
            .unwrap_or(false)
    }
}

/// The reflection `x -> x - 2(e,x)/(e,e) e`, checked to be integral.
pub fn reflection_in_vector(lattice: &IntLattice, e: &LatticeVector) -> Result<Isometry> {
    let ee = lattice.norm(e)?;
    if ee.is_zero() {
        return Err(Error::IsotropicVector);
    }
    let row = lattice.pairing_row(e)?;
    let n = lattice.rank();
    let mut m = IntMatrix::identity(n);
    for (j, ej) in row.iter().enumerate() {
        let (q, r) = (BigInt::from(2) * ej).div_rem(&ee);
        if !r.is_zero() {
            return Err(Error::NotLatticeReflection { basis_index: j });
        }
        for i in 0..n {
            m[(i, j)] -= &q * &e.0[i];
        }
    }
    Isometry::new(lattice, m)
}

/// Saturated bases of the `+1` and `-1` eigenlattices of an involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedAnti {
    pub fixed: Vec<LatticeVector>,
    pub anti: Vec<LatticeVector>,
}

pub fn fixed_and_anti_sublattice(f: &Isometry) -> Result<FixedAnti> {
    if !f.is_involution() {
        return Err(Error::NotInvolution);
    }
    let n = f.lattice.rank();
    let id = IntMatrix::identity(n);
    let kernel = |m: IntMatrix| -> Vec<LatticeVector> {
        integer_kernel(&m).into_iter().map(normalize_sign).collect()
    };
    Ok(FixedAnti {
        fixed: kernel(f.matrix.sub(&id)?),
        anti: kernel(f.matrix.add(&id)?),
    })
}

/// Makes the first nonzero coordinate positive.
fn normalize_sign(v: Vec<BigInt>) -> LatticeVector {
    let negative = v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    let v = LatticeVector(v);
    if negative {
        v.neg()
    } else {
        v
    }
}
