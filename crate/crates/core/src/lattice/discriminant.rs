//! Discriminant groups `L^∨ / L` and the action of isometries on them.
//!
//! With `U G V = D` (Smith form of the Gram matrix), the map `y -> U y`
//! identifies `Z^n / G Z^n` with `⊕ Z / d_i`. A dual vector `x ∈ G^{-1} Z^n`
//! corresponds to `y = G x`, and an isometry `M` acts on `y` by
//! `G M G^{-1} = M^{-T}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::isometry::Isometry;
use super::matrix::IntMatrix;
use super::normal_form::smith_normal_form;
use super::IntLattice;
use crate::error::{Error, Result};

/// `L^∨ / L` as invariant factors `d_1 | d_2 | ...`, each greater than one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub invariant_factors: Vec<BigInt>,
    /// Row operations `U` from the Smith decomposition `U G V = D`.
    pub left_transform: IntMatrix,
    pub right_transform: IntMatrix,
    /// Positions in the Smith diagonal of the nontrivial factors.
    pub positions: Vec<usize>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// True when every invariant factor is 2.
    pub fn is_two_elementary(&self) -> bool {
        self.invariant_factors.iter().all(|d| *d == BigInt::from(2))
    }
}

pub fn discriminant_group(lattice: &IntLattice) -> Result<DiscriminantGroup> {
    if lattice.determinant().is_zero() {
        return Err(Error::Degenerate);
    }
    let snf = smith_normal_form(lattice.gram());
    let diag = snf.diagonal();
    let positions: Vec<usize> = (0..diag.len()).filter(|&i| diag[i] > BigInt::one()).collect();
    Ok(DiscriminantGroup {
        invariant_factors: positions.iter().map(|&i| diag[i].clone()).collect(),
        left_transform: snf.u,
        right_transform: snf.v,
        positions,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionKind {
    Trivial,
    Negation,
    Other,
}

/// Induced automorphism of the discriminant group, on its invariant-factor
/// generators; row `i` is reduced modulo `d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantAction {
    pub group: DiscriminantGroup,
    pub matrix: IntMatrix,
    pub kind: ActionKind,
}

impl DiscriminantAction {
    pub fn is_trivial(&self) -> bool {
        self.kind == ActionKind::Trivial
    }
}

pub fn discriminant_action(f: &Isometry) -> Result<DiscriminantAction> {
    let group = discriminant_group(f.lattice())?;
    let u = &group.left_transform;
    let u_inv = u.inverse_unimodular()?;
    let m_inv_t = f.matrix().inverse_unimodular()?.transpose();
    let full = u.mul(&m_inv_t)?.mul(&u_inv)?;

    let k = group.positions.len();
    let mut a = IntMatrix::zeros(k, k);
    for (r, &pi) in group.positions.iter().enumerate() {
        let d = &group.invariant_factors[r];
        for (c, &pj) in group.positions.iter().enumerate() {
            a[(r, c)] = full[(pi, pj)].mod_floor(d);
        }
    }
    let residue_is = |sign: i64| {
        (0..k).all(|r| {
            let d = &group.invariant_factors[r];
            (0..k).all(|c| {
                let want = if r == c { BigInt::from(sign) } else { BigInt::zero() };
                (&a[(r, c)] - want).mod_floor(d).is_zero()
            })
        })
    };
    let kind = if residue_is(1) {
        ActionKind::Trivial
    } else if residue_is(-1) {
        ActionKind::Negation
    } else {
        ActionKind::Other
    };
    debug_assert!(a.content().abs() >= BigInt::zero());
    Ok(DiscriminantAction {
        group,
        matrix: a,
        kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::matrix::ivec;

    #[test]
    fn unimodular_lattice_has_trivial_group() {
        let l = IntLattice::diagonal(&[1, -1, -1]).unwrap();
        let d = discriminant_group(&l).unwrap();
        assert!(d.is_trivial());
        assert_eq!(d.order(), BigInt::one());
    }

    #[test]
    fn diag_two_two_is_klein_four() {
        let l = IntLattice::diagonal(&[2, 2]).unwrap();
        let d = discriminant_group(&l).unwrap();
        assert_eq!(d.invariant_factors, ivec(&[2, 2]));
    }

    #[test]
    fn degenerate_lattice_is_rejected() {
        let g = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        let l = IntLattice::new(g).unwrap();
        assert_eq!(discriminant_group(&l), Err(Error::Degenerate));
    }

    #[test]
    fn identity_and_negation_on_two_torsion() {
        let l = IntLattice::diagonal(&[2, 2]).unwrap();
        let id = Isometry::new(&l, IntMatrix::identity(2)).unwrap();
        assert_eq!(discriminant_action(&id).unwrap().kind, ActionKind::Trivial);
        let neg = Isometry::new(&l, IntMatrix::identity(2).neg()).unwrap();
        // -1 = 1 modulo 2
        assert_eq!(discriminant_action(&neg).unwrap().kind, ActionKind::Trivial);
    }

    #[test]
    fn negation_on_z_mod_3() {
        let l = IntLattice::diagonal(&[3]).unwrap();
        let neg = Isometry::new(&l, IntMatrix::identity(1).neg()).unwrap();
        assert_eq!(discriminant_action(&neg).unwrap().kind, ActionKind::Negation);
    }

    #[test]
    fn swap_on_a2_squared_is_not_scalar() {
        // diag(3, 3) with coordinate swap acts on Z/3 + Z/3 by a permutation
        let l = IntLattice::diagonal(&[3, 3]).unwrap();
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let f = Isometry::new(&l, swap).unwrap();
        assert_eq!(discriminant_action(&f).unwrap().kind, ActionKind::Other);
    }
}
