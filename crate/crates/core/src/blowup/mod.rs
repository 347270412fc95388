//! Divisor-class tables of the del Pezzo surface `S5` and its blow-up `Y4`.
//!
//! `S5` is the plane blown up at four general points, with basis
//! `H, E1..E4` and Gram `diag(1, -1, -1, -1, -1)`. Its ten `(-1)`-curves are
//! indexed by pairs of `{0..4}`: `E(0i) = Ei` and `E(ij) = H - Ek - El` for
//! `{i, j, k, l} = {1, 2, 3, 4}`. Two of them meet exactly when their pairs
//! are disjoint, which is the Petersen graph.
//!
//! `Y4` blows up the fifteen meeting points; `G(ij)(kl)` is the exceptional
//! class over `E(ij) ∩ E(kl)`. The strict transforms `F(ij)` are `(-4)`-curves
//! and the exceptional curves `F(ij)(kl) = G(ij)(kl)` are `(-1)`-curves.

mod conics;
mod enumerate;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::labels::{CurveLabel, Pair, PairPair};
use crate::lattice::{IntLattice, LatticeVector};

pub use conics::{find_conic_fibrations, ConicFibration};
pub use enumerate::{enumerate_negative_classes, NegativeClass};

/// Numerical curve classes from the negative-curve classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Taxonomy {
    /// `(-4)`-class meeting `-K` with degree `-2`: a branch curve.
    B,
    /// `(-1)`-class meeting one branch curve with multiplicity 2.
    F1,
    /// `(-1)`-class meeting two branch curves once each.
    F2,
    /// Ramification curve over a `B` curve.
    R,
    L1,
    L2,
}

impl Taxonomy {
    pub fn as_str(self) -> &'static str {
        match self {
            Taxonomy::B => "b",
            Taxonomy::F1 => "f1",
            Taxonomy::F2 => "f2",
            Taxonomy::R => "r",
            Taxonomy::L1 => "l1",
            Taxonomy::L2 => "l2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveRecord {
    pub label: CurveLabel,
    pub class: LatticeVector,
    #[serde(serialize_with = "crate::json::big")]
    pub self_int: BigInt,
    pub taxonomy: Option<Taxonomy>,
}

/// A labelled curve table over a fixed lattice basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    lattice: IntLattice,
    curves: Vec<CurveRecord>,
    canonical: LatticeVector,
}

impl Configuration {
    pub fn new(
        lattice: IntLattice,
        curves: Vec<(CurveLabel, LatticeVector, Option<Taxonomy>)>,
        canonical: LatticeVector,
    ) -> Result<Self> {
        lattice.norm(&canonical)?;
        let mut records = Vec::with_capacity(curves.len());
        for (label, class, taxonomy) in curves {
            if records.iter().any(|r: &CurveRecord| r.label == label) {
                return Err(Error::InvalidLabel(format!("duplicate curve {label}")));
            }
            let self_int = lattice.norm(&class)?;
            records.push(CurveRecord {
                label,
                class,
                self_int,
                taxonomy,
            });
        }
        Ok(Self {
            lattice,
            curves: records,
            canonical,
        })
    }

    pub fn lattice(&self) -> &IntLattice {
        &self.lattice
    }

    pub fn curves(&self) -> &[CurveRecord] {
        &self.curves
    }

    pub fn canonical_class(&self) -> &LatticeVector {
        &self.canonical
    }

    pub fn curve(&self, label: &CurveLabel) -> Result<&CurveRecord> {
        self.curves
            .iter()
            .find(|r| &r.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Class of a curve label, of a basis label such as `H`, `E2` or
    /// `G(12)(34)`, or of the canonical class `K`.
    pub fn resolve(&self, name: &str) -> Result<LatticeVector> {
        if name.trim() == "K" {
            return Ok(self.canonical.clone());
        }
        let label: CurveLabel = name.parse().map_err(|_| Error::UnknownLabel(name.to_string()))?;
        if let Ok(r) = self.curve(&label) {
            return Ok(r.class.clone());
        }
        let basis_name = label.to_string();
        self.lattice
            .label_index(&basis_name)
            .map(|i| LatticeVector::unit(self.lattice.rank(), i))
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    /// `Σ c_i [label_i]`.
    pub fn formal_sum(&self, terms: &[(i64, &str)]) -> Result<LatticeVector> {
        let mut acc = LatticeVector::zero(self.lattice.rank());
        for &(c, name) in terms {
            acc.axpy(&BigInt::from(c), &self.resolve(name)?);
        }
        Ok(acc)
    }

    pub fn pairing(&self, a: &CurveLabel, b: &CurveLabel) -> Result<BigInt> {
        self.lattice.pairing(&self.curve(a)?.class, &self.curve(b)?.class)
    }

    /// Curves that make up the anticanonical branch divisor: the `E(ij)` on
    /// `S5`, the `F(ij)` on `Y4`.
    pub fn branch_curves(&self) -> Vec<&CurveRecord> {
        self.curves
            .iter()
            .filter(|r| matches!(r.label, CurveLabel::E(_) | CurveLabel::F(_)))
            .collect()
    }

    pub fn branch_class(&self) -> LatticeVector {
        let mut b = LatticeVector::zero(self.lattice.rank());
        for r in self.branch_curves() {
            b = b.add(&r.class);
        }
        b
    }
}

fn s5_lattice() -> IntLattice {
    IntLattice::diagonal(&[1, -1, -1, -1, -1])
        .and_then(|l| l.with_labels(vec!["H".into(), "E1".into(), "E2".into(), "E3".into(), "E4".into()]))
        .expect("valid diagonal lattice")
}

/// Class of `E(ij)` in the basis `H, E1..E4`.
fn s5_curve_coords(p: Pair) -> [i64; 5] {
    let mut v = [0i64; 5];
    if p.first() == 0 {
        v[p.second() as usize] = 1;
    } else {
        v[0] = 1;
        for k in 1..=4u8 {
            if !p.contains(k) {
                v[k as usize] = -1;
            }
        }
    }
    v
}

pub fn build_s5() -> Configuration {
    let curves = Pair::all()
        .into_iter()
        .map(|p| (CurveLabel::E(p), LatticeVector::from_i64(&s5_curve_coords(p)), None))
        .collect();
    let k = LatticeVector::from_i64(&[-3, 1, 1, 1, 1]);
    Configuration::new(s5_lattice(), curves, k).expect("consistent S5 table")
}

/// Index of `G(ij)(kl)` in the `Y4` basis.
pub fn y4_g_index(g: PairPair) -> usize {
    5 + g.index()
}

pub const Y4_RANK: usize = 20;

fn y4_lattice() -> IntLattice {
    let mut diag = vec![-1i64; Y4_RANK];
    diag[0] = 1;
    let labels = ["H", "E1", "E2", "E3", "E4"]
        .iter()
        .map(|s| s.to_string())
        .chain(PairPair::all().into_iter().map(|g| format!("G{g}")))
        .collect();
    IntLattice::diagonal(&diag)
        .and_then(|l| l.with_labels(labels))
        .expect("valid diagonal lattice")
}

pub fn build_y4() -> Configuration {
    let mut curves = Vec::with_capacity(25);
    for p in Pair::all() {
        let mut v = vec![0i64; Y4_RANK];
        v[..5].copy_from_slice(&s5_curve_coords(p));
        for g in PairPair::containing(p) {
            v[y4_g_index(g)] = -1;
        }
        curves.push((CurveLabel::F(p), LatticeVector::from_i64(&v), Some(Taxonomy::B)));
    }
    for g in PairPair::all() {
        curves.push((
            CurveLabel::FP(g),
            LatticeVector::unit(Y4_RANK, y4_g_index(g)),
            Some(Taxonomy::F2),
        ));
    }
    let mut k = vec![1i64; Y4_RANK];
    k[0] = -3;
    Configuration::new(y4_lattice(), curves, LatticeVector::from_i64(&k)).expect("consistent Y4 table")
}

/// Weighted incidence graph of the given curves (all curves when `subset`
/// is `None`). Distinct negative curves are joined with weight equal to
/// their intersection number when it is positive.
pub fn incidence_graph(c: &Configuration, subset: Option<&[CurveLabel]>) -> Result<LabeledGraph> {
    let records: Vec<&CurveRecord> = match subset {
        None => c.curves.iter().collect(),
        Some(labels) => labels.iter().map(|l| c.curve(l)).collect::<Result<_>>()?,
    };
    let mut g = LabeledGraph::new(records.iter().map(|r| r.label.to_string()).collect())?;
    for (i, a) in records.iter().enumerate() {
        for (j, b) in records.iter().enumerate().skip(i + 1) {
            if !a.self_int.is_negative() || !b.self_int.is_negative() {
                continue;
            }
            let p = c.lattice.pairing(&a.class, &b.class)?;
            if p.is_positive() {
                let w = p.to_u64().ok_or_else(|| Error::InvalidGraph(format!("weight {p} too large")))?;
                g.add_edge(i, j, w)?;
            }
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnticanonicalCheck {
    pub branch_sum: LatticeVector,
    pub minus_two_k: LatticeVector,
    pub holds: bool,
}

/// Checks that the branch curves sum to `-2K` exactly.
pub fn verify_anticanonical(c: &Configuration) -> AnticanonicalCheck {
    let branch_sum = c.branch_class();
    let minus_two_k = c.canonical.scale(&BigInt::from(-2));
    AnticanonicalCheck {
        holds: branch_sum == minus_two_k,
        branch_sum,
        minus_two_k,
    }
}

/// Exact equality of two formal sums of labelled classes.
pub fn verify_linear_equivalence(c: &Configuration, lhs: &[(i64, &str)], rhs: &[(i64, &str)]) -> Result<bool> {
    Ok(c.formal_sum(lhs)? == c.formal_sum(rhs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lbl(s: &str) -> CurveLabel {
        s.parse().unwrap()
    }

    #[test]
    fn s5_canonical_square_is_five() {
        let s5 = build_s5();
        // (-3H + ΣE)^2 = 9 - 4
        assert_eq!(s5.lattice().norm(s5.canonical_class()).unwrap(), BigInt::from(5));
        assert!(s5.curves().iter().all(|r| r.self_int == BigInt::from(-1)));
    }

    #[test]
    fn s5_petersen_adjacencies() {
        let s5 = build_s5();
        assert_eq!(s5.pairing(&lbl("E(01)"), &lbl("E(23)")).unwrap(), BigInt::from(1));
        assert_eq!(s5.pairing(&lbl("E(01)"), &lbl("E(02)")).unwrap(), BigInt::from(0));
        let g = incidence_graph(&s5, None).unwrap();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn y4_branch_curves_are_disjoint_minus_four_curves() {
        let y4 = build_y4();
        let fs = y4.branch_curves();
        assert_eq!(fs.len(), 10);
        for (i, a) in fs.iter().enumerate() {
            assert_eq!(a.self_int, BigInt::from(-4));
            for b in &fs[i + 1..] {
                assert_eq!(y4.lattice().pairing(&a.class, &b.class).unwrap(), BigInt::from(0));
            }
        }
        assert_eq!(y4.pairing(&lbl("F(12)(34)"), &lbl("F(12)")).unwrap(), BigInt::from(1));
        assert_eq!(y4.pairing(&lbl("F(12)(34)"), &lbl("F(01)")).unwrap(), BigInt::from(0));
    }

    #[test]
    fn y4_canonical_square_is_minus_ten() {
        let y4 = build_y4();
        assert_eq!(y4.lattice().norm(y4.canonical_class()).unwrap(), BigInt::from(-10));
    }

    #[test]
    fn extended_petersen_incidence() {
        let g = incidence_graph(&build_y4(), None).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (25, 30));
        for v in 0..25 {
            let expected = if g.name(v).len() == 5 { 3 } else { 2 };
            assert_eq!(g.degree(v), expected, "{}", g.name(v));
        }
    }

    #[test]
    fn single_curve_graph() {
        let g = incidence_graph(&build_y4(), Some(&[lbl("F(01)")])).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        assert!(incidence_graph(&build_y4(), Some(&[lbl("E(01)")])).is_err());
    }

    #[test]
    fn anticanonical_sums() {
        assert!(verify_anticanonical(&build_s5()).holds);
        assert!(verify_anticanonical(&build_y4()).holds);

        let y4 = build_y4();
        let mut curves: Vec<_> = y4
            .curves()
            .iter()
            .map(|r| (r.label.clone(), r.class.clone(), r.taxonomy))
            .collect();
        curves[0].1 .0[0] += 1;
        let bad = Configuration::new(y4.lattice().clone(), curves, y4.canonical_class().clone()).unwrap();
        assert!(!verify_anticanonical(&bad).holds);
    }

    #[test]
    fn total_transform_identity() {
        let y4 = build_y4();
        let lhs = [
            (1, "F14"),
            (1, "F23"),
            (2, "G(14)(23)"),
            (1, "G(14)(02)"),
            (1, "G(14)(03)"),
            (1, "G(23)(01)"),
            (1, "G(23)(04)"),
        ];
        let rhs = [
            (1, "F12"),
            (1, "F34"),
            (2, "G(12)(34)"),
            (1, "G(12)(03)"),
            (1, "G(12)(04)"),
            (1, "G(34)(01)"),
            (1, "G(34)(02)"),
        ];
        assert!(verify_linear_equivalence(&y4, &lhs, &rhs).unwrap());
        assert!(verify_linear_equivalence(&y4, &lhs, &lhs).unwrap());
        assert!(matches!(
            verify_linear_equivalence(&y4, &[(1, "Q7")], &lhs),
            Err(Error::UnknownLabel(_))
        ));
    }
}
