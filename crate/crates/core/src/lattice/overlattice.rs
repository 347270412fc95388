//! Overlattices generated by rational vectors with a common denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::matrix::{IntMatrix, QMatrix};
use super::normal_form::hermite_normal_form;
use super::{IntLattice, LatticeVector};
use crate::error::{Error, Result};

/// Vectors `n_i / d` in `ambient ⊗ Q`, declared to generate an overlattice of
/// `ambient`.
#[derive(Clone, Debug)]
pub struct RationalSpan {
    pub ambient: IntLattice,
    pub numerators: Vec<Vec<BigInt>>,
    pub denominator: BigInt,
}

impl RationalSpan {
    pub fn new(ambient: IntLattice, numerators: Vec<Vec<BigInt>>, denominator: BigInt) -> Result<Self> {
        if !denominator.is_positive() {
            return Err(Error::NotALattice(format!("denominator {denominator} is not positive")));
        }
        for g in &numerators {
            if g.len() != ambient.rank() {
                return Err(Error::DimensionMismatch {
                    expected: ambient.rank(),
                    found: g.len(),
                });
            }
        }
        Ok(Self {
            ambient,
            numerators,
            denominator,
        })
    }
}

/// A saturated overlattice: basis vectors are `basis_numerators` rows over
/// the span's denominator, in ambient coordinates.
#[derive(Clone, Debug)]
pub struct Saturation {
    pub lattice: IntLattice,
    pub basis_numerators: IntMatrix,
    pub denominator: BigInt,
    /// `[overlattice : ambient]`.
    pub index: BigInt,
    pub even: bool,
}

impl Saturation {
    /// Coordinates in the saturated basis of the ambient-coordinate vector
    /// `numerator / denominator`.
    pub fn coordinates(&self, numerator: &[BigInt]) -> Result<LatticeVector> {
        let b = QMatrix::from_int(&self.basis_numerators);
        let rhs = QMatrix::from_int(&IntMatrix::from_rows(&[numerator.to_vec()])?);
        let x = b
            .solve_left(&rhs)
            .ok_or_else(|| Error::Inconsistent("vector outside the rational span".into()))?;
        let mut coords = Vec::with_capacity(x.cols());
        for j in 0..x.cols() {
            let c: &BigRational = &x[(0, j)];
            if !c.is_integer() {
                return Err(Error::Inconsistent(format!("non-integral coordinate {c}")));
            }
            coords.push(c.to_integer());
        }
        Ok(LatticeVector(coords))
    }

    /// Coordinates of an ambient lattice vector (denominator scaled in).
    pub fn embed_ambient(&self, v: &LatticeVector) -> Result<LatticeVector> {
        let scaled: Vec<BigInt> = v.0.iter().map(|c| c * &self.denominator).collect();
        self.coordinates(&scaled)
    }
}

/// Saturates the span by Hermite reduction of the numerators and returns the
/// induced Gram matrix. Fails if a pairing is not integral or if the span
/// does not contain the ambient lattice.
pub fn saturate_overlattice(span: &RationalSpan) -> Result<Saturation> {
    let g = span.ambient.gram();
    let d2 = &span.denominator * &span.denominator;
    let n = span.ambient.rank();

    let gens = &span.numerators;
    for (i, x) in gens.iter().enumerate() {
        let gx = g.mul_vec(x)?;
        for (j, y) in gens.iter().enumerate().skip(i) {
            let p: BigInt = y.iter().zip(&gx).map(|(a, b)| a * b).sum();
            if !p.is_multiple_of(&d2) {
                return Err(Error::NotALattice(format!(
                    "pairing of generators {i} and {j} is {p}/{d2}"
                )));
            }
        }
    }

    let basis = if gens.is_empty() {
        IntMatrix::zeros(0, n)
    } else {
        hermite_normal_form(&IntMatrix::from_rows(gens)?)
    };
    if basis.rows() != n {
        return Err(Error::NotALattice(format!(
            "span has rank {} inside a rank-{n} ambient lattice",
            basis.rows()
        )));
    }
    let gram = basis.mul(g)?.mul(&basis.transpose())?;
    let mut exact = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            exact[(i, j)] = gram[(i, j)].div_floor(&d2);
        }
    }
    let lattice = IntLattice::new(exact)?;

    // [span : ambient] = d^n / |det B|, integral iff d * Z^n lies in the span
    let det_b = basis.determinant()?.abs();
    let (index, rem) = num_traits::pow(span.denominator.clone(), n).div_rem(&det_b);
    if !rem.is_zero() {
        return Err(Error::NotALattice("span does not contain the ambient lattice".into()));
    }
    let sat = Saturation {
        even: lattice.is_even(),
        lattice,
        basis_numerators: basis,
        denominator: span.denominator.clone(),
        index,
    };
    for k in 0..n {
        sat.embed_ambient(&LatticeVector::unit(n, k)).map_err(|_| {
            Error::NotALattice("span does not contain the ambient lattice".into())
        })?;
    }
    Ok(sat)
}
