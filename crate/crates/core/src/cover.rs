//! Lattice shadow of the double cover `π: X4 -> Y4` branched along the ten
//! `F(ij)`.
//!
//! `π*` scales the form by 2. Each branch curve pulls back to twice its
//! ramification curve, `π*F(ij) = 2 L(ij)`, so the algebraic lattice of `X4`
//! is generated by `π*Pic(Y4)` and the ten half-classes. Vectors of the
//! saturated lattice are written in its Hermite-reduced basis.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::blowup::{Configuration, Taxonomy};
use crate::error::{Error, Result};
use crate::labels::{CurveLabel, Pair, PairPair};
use crate::lattice::{
    discriminant_group, saturate_overlattice, IntLattice, IntMatrix, LatticeVector, RationalSpan, Saturation,
};

#[derive(Clone, Debug)]
pub struct CoverLattice {
    y4: Configuration,
    saturation: Saturation,
    /// Column `k` holds the coordinates of `π* e_k`.
    pullback: IntMatrix,
    /// Curves `L(ij)` (tag `r`) and `L(ij)(kl)` (tag `l2`) over the lattice.
    x4: Configuration,
}

impl CoverLattice {
    pub fn s_x4(&self) -> &IntLattice {
        &self.saturation.lattice
    }

    pub fn y4(&self) -> &Configuration {
        &self.y4
    }

    pub fn x4(&self) -> &Configuration {
        &self.x4
    }

    pub fn saturation(&self) -> &Saturation {
        &self.saturation
    }

    /// `[S_X4 : π*Pic(Y4)]`.
    pub fn index(&self) -> &BigInt {
        &self.saturation.index
    }

    pub fn pullback_matrix(&self) -> &IntMatrix {
        &self.pullback
    }

    pub fn pullback(&self, x: &LatticeVector) -> Result<LatticeVector> {
        Ok(LatticeVector(self.pullback.mul_vec(&x.0)?))
    }

    /// `½ π* x`, when it lies in the lattice.
    pub fn half_pullback(&self, x: &LatticeVector) -> Result<LatticeVector> {
        self.saturation.coordinates(&x.0)
    }

    pub fn l_class(&self, p: Pair) -> LatticeVector {
        self.x4.curve(&CurveLabel::L(p)).expect("table curve").class.clone()
    }

    pub fn lp_class(&self, g: PairPair) -> LatticeVector {
        self.x4.curve(&CurveLabel::LP(g)).expect("table curve").class.clone()
    }
}

/// Saturates `π*Pic(Y4) + Σ Z·½π*F(ij)` and tabulates the `L` curves.
pub fn pullback_lattice(y4: &Configuration) -> Result<CoverLattice> {
    let ly = y4.lattice();
    let n = ly.rank();
    let mut ambient = IntLattice::new(ly.gram().scale(&BigInt::from(2)))?;
    if let Some(labels) = ly.labels() {
        ambient = ambient.with_labels(labels.to_vec())?;
    }

    // numerators over 2: π*e_k = 2 e_k / 2 and L(ij) = F(ij) / 2
    let two = BigInt::from(2);
    let mut gens: Vec<Vec<BigInt>> = (0..n).map(|k| LatticeVector::unit(n, k).scale(&two).0).collect();
    for r in y4.branch_curves() {
        gens.push(r.class.0.clone());
    }
    let saturation = saturate_overlattice(&RationalSpan::new(ambient, gens, two)?)?;

    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        cols.push(saturation.embed_ambient(&LatticeVector::unit(n, k))?.0);
    }
    let pullback = IntMatrix::from_columns(&cols, n)?;

    let mut curves = Vec::with_capacity(25);
    for r in y4.curves() {
        match &r.label {
            CurveLabel::F(p) => curves.push((
                CurveLabel::L(*p),
                saturation.coordinates(&r.class.0)?,
                Some(Taxonomy::R),
            )),
            CurveLabel::FP(g) => curves.push((
                CurveLabel::LP(*g),
                LatticeVector(pullback.mul_vec(&r.class.0)?),
                Some(Taxonomy::L2),
            )),
            _ => {}
        }
    }
    let x4 = Configuration::new(saturation.lattice.clone(), curves, LatticeVector::zero(n))?;

    Ok(CoverLattice {
        y4: y4.clone(),
        saturation,
        pullback,
        x4,
    })
}

/// Image of a tagged `Y4` class on `X4`: `b -> (½π*v, r)`,
/// `f1 -> (π*v, l1)`, `f2 -> (π*v, l2)`.
pub fn classify_cover_curve(
    cover: &CoverLattice,
    v: &LatticeVector,
    taxonomy: Option<Taxonomy>,
) -> Result<(LatticeVector, Taxonomy)> {
    match taxonomy {
        Some(Taxonomy::B) => Ok((cover.half_pullback(v)?, Taxonomy::R)),
        Some(Taxonomy::F1) => Ok((cover.pullback(v)?, Taxonomy::L1)),
        Some(Taxonomy::F2) => Ok((cover.pullback(v)?, Taxonomy::L2)),
        _ => Err(Error::Untagged),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranscendentalReport {
    /// `|det S_X4|`.
    #[serde(serialize_with = "crate::json::big")]
    pub disc_s: BigInt,
    #[serde(serialize_with = "crate::json::big_seq")]
    pub invariant_factors: Vec<BigInt>,
    /// Gram matrices of the even positive definite binary lattices of
    /// determinant `disc_s`, up to isometry.
    pub candidates: Vec<[[i64; 2]; 2]>,
    pub t_gram: Option<[[i64; 2]; 2]>,
}

impl TranscendentalReport {
    pub fn is_consistent(&self) -> bool {
        self.t_gram
            .is_some_and(|t| BigInt::from(t[0][0] * t[1][1] - t[0][1] * t[1][0]) == self.disc_s)
    }
}

/// The transcendental lattice has rank `22 - 20 = 2`, is even and positive
/// definite, and shares its discriminant group with `S_X4`.
pub fn transcendental_invariants(cover: &CoverLattice) -> Result<TranscendentalReport> {
    let s = cover.s_x4();
    let disc_s = s.determinant().abs();
    let group = discriminant_group(s)?;
    let det = i64::try_from(&disc_s).map_err(|_| Error::Inconsistent("determinant out of range".into()))?;
    let candidates = even_binary_forms(det);
    let t_gram = match candidates.as_slice() {
        [only] => Some(*only),
        _ => None,
    };
    Ok(TranscendentalReport {
        disc_s,
        invariant_factors: group.invariant_factors,
        candidates,
        t_gram,
    })
}

/// Reduced Gram matrices `[[p, r], [r, s]]` of even positive definite binary
/// lattices of determinant `det`: `p, s` even, `|2r| <= p <= s`, and `r >= 0`
/// when `|2r| = p` or `p = s`. One representative per isometry class.
pub fn even_binary_forms(det: i64) -> Vec<[[i64; 2]; 2]> {
    let mut out = Vec::new();
    if det <= 0 {
        return out;
    }
    // reduced forms satisfy 3p² <= 4 det
    let mut p = 2;
    while 3 * p * p <= 4 * det {
        let rmax = p / 2;
        for r in -rmax..=rmax {
            let num = det + r * r;
            if num % p != 0 {
                continue;
            }
            let s = num / p;
            if s < p || s % 2 != 0 {
                continue;
            }
            if r < 0 && (2 * r.abs() == p || p == s) {
                continue;
            }
            out.push([[p, r], [r, s]]);
        }
        p += 2;
    }
    out
}

/// Scaling `(π*x)·(π*y) = 2 x·y` on the whole basis.
pub fn pullback_scales_form(cover: &CoverLattice) -> Result<bool> {
    let p = &cover.pullback;
    let lhs = p.transpose().mul(cover.s_x4().gram())?.mul(p)?;
    Ok(lhs == cover.y4.lattice().gram().scale(&BigInt::from(2)))
}

/// `Σ L(ij) = π*(-K_Y4)`.
pub fn ramification_sum_is_pullback(cover: &CoverLattice) -> Result<bool> {
    let n = cover.s_x4().rank();
    let mut sum = LatticeVector::zero(n);
    for p in Pair::all() {
        sum = sum.add(&cover.l_class(p));
    }
    Ok(sum == cover.pullback(&cover.y4.canonical_class().neg())?)
}

/// `phi·L(ij)` for all ten ramification curves.
pub fn ramification_pairings(cover: &CoverLattice, phi: &LatticeVector) -> Result<Vec<(Pair, BigInt)>> {
    Pair::all()
        .into_iter()
        .map(|p| Ok((p, cover.s_x4().pairing(phi, &cover.l_class(p))?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::build_y4;
    use num_traits::{One, Zero};

    #[test]
    fn binary_forms_of_small_determinant() {
        assert_eq!(even_binary_forms(4), vec![[[2, 0], [0, 2]]]);
        assert_eq!(even_binary_forms(3), vec![[[2, 1], [1, 2]]]);
        assert!(even_binary_forms(1).is_empty());
        assert!(even_binary_forms(2).is_empty());
        // det 15: [[2,1],[1,8]] and [[4,1],[1,4]]
        assert_eq!(even_binary_forms(15).len(), 2);
    }

    #[test]
    fn s_x4_basic_invariants() {
        let cover = pullback_lattice(&build_y4()).unwrap();
        let s = cover.s_x4();
        assert_eq!(s.rank(), 20);
        assert!(s.is_even());
        assert_eq!(s.determinant().abs(), BigInt::from(4));
        assert_eq!(cover.index(), &BigInt::from(512));
        assert!(pullback_scales_form(&cover).unwrap());
        assert!(ramification_sum_is_pullback(&cover).unwrap());
    }

    #[test]
    fn ramification_curves_are_disjoint_roots() {
        let cover = pullback_lattice(&build_y4()).unwrap();
        let s = cover.s_x4();
        let ls: Vec<_> = Pair::all().into_iter().map(|p| cover.l_class(p)).collect();
        for (i, a) in ls.iter().enumerate() {
            assert_eq!(s.norm(a).unwrap(), BigInt::from(-2));
            for b in &ls[i + 1..] {
                assert!(s.pairing(a, b).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn classify_tags() {
        let y4 = build_y4();
        let cover = pullback_lattice(&y4).unwrap();
        let f12 = y4.resolve("F12").unwrap();
        let (l12, tag) = classify_cover_curve(&cover, &f12, Some(Taxonomy::B)).unwrap();
        assert_eq!(tag, Taxonomy::R);
        assert_eq!(l12, cover.l_class(Pair::new(1, 2).unwrap()));
        let g = y4.resolve("F(12)(34)").unwrap();
        let (lg, tag) = classify_cover_curve(&cover, &g, Some(Taxonomy::F2)).unwrap();
        assert_eq!(tag, Taxonomy::L2);
        assert_eq!(cover.s_x4().pairing(&lg, &l12).unwrap(), BigInt::one());
        assert_eq!(classify_cover_curve(&cover, &g, None), Err(Error::Untagged));
    }
}
