//! Kodaira fiber recognition, the Shioda-Tate relations, and the
//! section-type dichotomy for elliptic fibrations on `X4`.
//!
//! A connected configuration of `(-2)`-curves supports a fiber exactly when
//! its intersection matrix has a one-dimensional kernel spanned by a strictly
//! positive vector; that vector is the multiplicity vector and the
//! configuration is an affine Dynkin diagram, identified here by its
//! multiplicity pattern.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::blowup::Configuration;
use crate::cover::{even_binary_forms, CoverLattice};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::labels::CurveLabel;
use crate::lattice::{integer_kernel, IntLattice, IntMatrix, LatticeVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCandidate {
    pub names: Vec<String>,
    /// Component classes; empty for candidates built from a bare matrix.
    pub classes: Vec<LatticeVector>,
    pub int_matrix: IntMatrix,
}

impl FiberCandidate {
    pub fn new(lattice: &IntLattice, names: Vec<String>, classes: Vec<LatticeVector>) -> Result<Self> {
        if names.len() != classes.len() {
            return Err(Error::DimensionMismatch {
                expected: names.len(),
                found: classes.len(),
            });
        }
        let basis = lattice.sublattice(&classes)?;
        Ok(Self {
            names,
            classes,
            int_matrix: basis.gram().clone(),
        })
    }

    /// Components drawn from a curve table.
    pub fn from_labels(c: &Configuration, labels: &[CurveLabel]) -> Result<Self> {
        let records = labels.iter().map(|l| c.curve(l)).collect::<Result<Vec<_>>>()?;
        Self::new(
            c.lattice(),
            records.iter().map(|r| r.label.to_string()).collect(),
            records.iter().map(|r| r.class.clone()).collect(),
        )
    }

    pub fn from_intersections(names: Vec<String>, int_matrix: IntMatrix) -> Result<Self> {
        if !int_matrix.is_square() || int_matrix.rows() != names.len() {
            return Err(Error::DimensionMismatch {
                expected: names.len(),
                found: int_matrix.rows(),
            });
        }
        Ok(Self {
            names,
            classes: Vec::new(),
            int_matrix,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Components as a weighted graph.
    pub fn graph(&self) -> Result<LabeledGraph> {
        let mut g = LabeledGraph::new(self.names.clone())?;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let w = &self.int_matrix[(i, j)];
                if w.is_positive() {
                    g.add_edge(i, j, w.to_u64().unwrap_or(u64::MAX))?;
                }
            }
        }
        Ok(g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

/// Affine type `X~n` with its multiplicity vector, aligned with the
/// candidate's components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaType {
    pub family: Family,
    pub index: usize,
    pub multiplicities: Vec<u64>,
    pub m: usize,
    pub m1: usize,
}

impl Serialize for KodairaType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("KodairaType", 4)?;
        st.serialize_field("type", &self.to_string())?;
        st.serialize_field("multiplicities", &self.multiplicities)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("m1", &self.m1)?;
        st.end()
    }
}

impl KodairaType {
    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}~{}", self.family, self.index)
    }
}

impl std::str::FromStr for KodairaType {
    type Err = Error;

    /// Parses a name such as `D~6` into a type with no multiplicity data.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NotKodaira(format!("unknown type name `{s}`"));
        let (fam, idx) = s.split_once('~').ok_or_else(bad)?;
        let family = match fam {
            "A" => Family::A,
            "D" => Family::D,
            "E" => Family::E,
            _ => return Err(bad()),
        };
        let index: usize = idx.parse().map_err(|_| bad())?;
        Ok(KodairaType {
            family,
            index,
            multiplicities: Vec::new(),
            m: index + 1,
            m1: 0,
        })
    }
}

const E6: [u64; 7] = [1, 1, 1, 2, 2, 2, 3];
const E7: [u64; 8] = [1, 1, 2, 2, 2, 3, 3, 4];
const E8: [u64; 9] = [1, 2, 2, 3, 3, 4, 4, 5, 6];

pub fn recognize_fiber(fc: &FiberCandidate) -> Result<KodairaType> {
    let m = fc.len();
    let a = &fc.int_matrix;
    if m == 0 {
        return Err(Error::NotKodaira("no components".into()));
    }
    for i in 0..m {
        if a[(i, i)] != BigInt::from(-2) {
            return Err(Error::NotKodaira(format!("{} has square {}", fc.names[i], a[(i, i)])));
        }
        for j in 0..m {
            if i != j && a[(i, j)].is_negative() {
                return Err(Error::NotKodaira(format!(
                    "{} and {} meet negatively",
                    fc.names[i], fc.names[j]
                )));
            }
        }
    }
    let graph = fc.graph()?;
    if !graph.is_connected() {
        return Err(Error::NotKodaira("components are not connected".into()));
    }
    let kernel = integer_kernel(a);
    if kernel.len() != 1 {
        return Err(Error::NotKodaira(format!("kernel has rank {}", kernel.len())));
    }
    let mut v = kernel.into_iter().next().expect("rank one");
    if v.iter().any(|x| x.is_negative()) {
        v.iter_mut().for_each(|x| *x = -&*x);
    }
    if v.iter().any(|x| !x.is_positive()) {
        return Err(Error::NotKodaira("null vector is not strictly positive".into()));
    }
    let mults: Vec<u64> = v.iter().map(|x| x.to_u64().expect("small multiplicity")).collect();
    let m1 = mults.iter().filter(|&&x| x == 1).count();
    let mut sorted = mults.clone();
    sorted.sort_unstable();

    let (family, index) = if m1 == m {
        let cycle = if m == 2 {
            a[(0, 1)] == BigInt::from(2)
        } else {
            (0..m).all(|i| graph.degree(i) == 2 && graph.neighbours(i).all(|(_, w)| w == 1))
        };
        if !cycle {
            return Err(Error::NotKodaira("multiplicity-one components do not form a cycle".into()));
        }
        (Family::A, m - 1)
    } else if m >= 5 && m1 == 4 && sorted[4..].iter().all(|&x| x == 2) {
        (Family::D, m - 1)
    } else if sorted == E6 {
        (Family::E, 6)
    } else if sorted == E7 {
        (Family::E, 7)
    } else if sorted == E8 {
        (Family::E, 8)
    } else {
        return Err(Error::NotKodaira(format!("unmatched multiplicities {sorted:?}")));
    };
    Ok(KodairaType {
        family,
        index,
        multiplicities: mults,
        m,
        m1,
    })
}

/// `φ = Σ m_i C_i`; checks `φ² = 0` and `φ·C_i = 0`.
pub fn fiber_class(lattice: &IntLattice, fc: &FiberCandidate, kt: &KodairaType) -> Result<LatticeVector> {
    if fc.classes.is_empty() {
        return Err(Error::NotKodaira("candidate has no classes".into()));
    }
    let mut phi = LatticeVector::zero(lattice.rank());
    for (c, &m) in fc.classes.iter().zip(&kt.multiplicities) {
        phi.axpy(&BigInt::from(m), c);
    }
    for (name, c) in fc.names.iter().zip(&fc.classes) {
        if !lattice.pairing(&phi, c)?.is_zero() {
            return Err(Error::NotKodaira(format!("fiber class meets component {name}")));
        }
    }
    if !lattice.norm(&phi)?.is_zero() {
        return Err(Error::NotKodaira("fiber class has nonzero square".into()));
    }
    Ok(phi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FibrationType {
    Type1,
    Type2,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationReport {
    pub fibers: Vec<String>,
    pub rho: i64,
    pub r_p: i64,
    pub product_m1: u64,
    /// Feasible `(det T, n)` with `det T · n² = Π m1`.
    pub solutions: Vec<(u64, u64)>,
    pub n_p: Option<u64>,
    pub det_t: Option<u64>,
    pub fibration_type: FibrationType,
}

/// `ρ = 2 + r + Σ (m_i - 1)` and, when `r = 0`,
/// `|det T| = Π m1_i / n²` with `n` the order of the group of sections.
///
/// With `det_t_expected` the torsion order is solved for; without it, every
/// `(det, n)` with `n >= sections_lower_bound`, `n² | Π m1` and `det` the
/// determinant of some even positive definite binary lattice (the
/// transcendental lattice when `ρ = 20`) is listed.
pub fn shioda_tate(
    rho: i64,
    fibers: &[KodairaType],
    sections_lower_bound: u64,
    det_t_expected: Option<u64>,
) -> Result<FibrationReport> {
    if rho < 2 {
        return Err(Error::InconsistentFibration(format!("rho = {rho} < 2")));
    }
    let r_p = rho - 2 - fibers.iter().map(|f| f.m as i64 - 1).sum::<i64>();
    if r_p < 0 {
        return Err(Error::InconsistentFibration(format!(
            "fiber components exceed the Picard rank (r = {r_p})"
        )));
    }
    let product_m1: u64 = fibers.iter().map(|f| f.m1 as u64).product();
    let mut solutions = Vec::new();
    if r_p == 0 {
        let lo = sections_lower_bound.max(1);
        match det_t_expected {
            Some(det) => {
                if det > 0 && product_m1.is_multiple_of(det) {
                    let n2 = product_m1 / det;
                    let n = n2.isqrt();
                    if n * n == n2 && n >= lo {
                        solutions.push((det, n));
                    }
                }
            }
            None => {
                let mut n = lo;
                while n * n <= product_m1 {
                    if product_m1.is_multiple_of(n * n) {
                        let det = product_m1 / (n * n);
                        let feasible = rho != 20 || !even_binary_forms(det as i64).is_empty();
                        if feasible {
                            solutions.push((det, n));
                        }
                    }
                    n += 1;
                }
            }
        }
    }
    let (det_t, n_p) = match solutions.as_slice() {
        [(d, n)] => (Some(*d), Some(*n)),
        _ => (None, None),
    };
    Ok(FibrationReport {
        fibers: fibers.iter().map(|f| f.to_string()).collect(),
        rho,
        r_p,
        product_m1,
        solutions,
        n_p,
        det_t,
        fibration_type: FibrationType::Undetermined,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeClassification {
    pub fibration_type: FibrationType,
    /// `φ·L(ij)` for the ten ramification curves.
    pub ramification_pairings: Vec<(CurveLabel, i64)>,
    /// Type 2 with more than two reducible fibers among those supplied.
    pub contradiction: bool,
}

/// Type 1 when some ramification curve is a section (`φ·L = 1`); type 2
/// when every ramification curve pairs to 0 or at least 2 with some 0.
pub fn classify_fibration_type(
    phi: &LatticeVector,
    cover: &CoverLattice,
    reducible_fibers: usize,
) -> Result<TypeClassification> {
    let s = cover.s_x4();
    if !s.norm(phi)?.is_zero() {
        return Err(Error::InconsistentFibration("fiber class has nonzero square".into()));
    }
    for r in cover.x4().curves() {
        let p = s.pairing(phi, &r.class)?;
        if p.is_negative() {
            return Err(Error::NotNef {
                label: r.label.to_string(),
                pairing: p,
            });
        }
    }
    let pairings: Vec<(CurveLabel, i64)> = cover
        .x4()
        .curves()
        .iter()
        .filter(|r| matches!(r.label, CurveLabel::L(_)))
        .map(|r| Ok((r.label.clone(), s.pairing(phi, &r.class)?.to_i64().unwrap_or(i64::MAX))))
        .collect::<Result<_>>()?;
    let fibration_type = if pairings.iter().any(|(_, p)| *p == 1) {
        FibrationType::Type1
    } else if pairings.iter().any(|(_, p)| *p == 0) {
        FibrationType::Type2
    } else {
        FibrationType::Undetermined
    };
    Ok(TypeClassification {
        contradiction: fibration_type == FibrationType::Type2 && reducible_fibers > 2,
        fibration_type,
        ramification_pairings: pairings,
    })
}

/// Fixture files: fibers of one elliptic fibration on `X4`, given by curve
/// labels or by classes pulled back from `Y4`.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct FibrationFixture {
    pub name: String,
    pub fibers: Vec<FiberSpec>,
    #[serde(default)]
    pub sections: Vec<String>,
    #[serde(default)]
    pub sections_lower_bound: u64,
    #[serde(default)]
    pub det_t: Option<u64>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct FiberSpec {
    pub name: String,
    pub expected_type: Option<String>,
    pub components: Vec<ComponentSpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ComponentSpec {
    /// A curve of the `X4` table, e.g. `"L(01)(23)"`.
    Label(String),
    /// `π*` of a formal sum on `Y4`; `K` names the canonical class.
    Pullback { name: String, pullback: Vec<(i64, String)> },
}

impl FibrationFixture {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Shipped transcriptions of the three figure fibrations.
    pub fn builtin(name: &str) -> Option<Self> {
        let text = match name {
            "fig3" => include_str!("../data/fig3.json"),
            "fig4" => include_str!("../data/fig4.json"),
            "fig5" => include_str!("../data/fig5.json"),
            _ => return None,
        };
        Some(Self::parse(text).expect("shipped fixture parses"))
    }

    pub fn candidates(&self, cover: &CoverLattice) -> Result<Vec<FiberCandidate>> {
        self.fibers
            .iter()
            .map(|f| {
                let (names, classes): (Vec<_>, Vec<_>) = f
                    .components
                    .iter()
                    .map(|c| resolve_component(cover, c))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .unzip();
                FiberCandidate::new(cover.s_x4(), names, classes)
            })
            .collect()
    }

    pub fn section_classes(&self, cover: &CoverLattice) -> Result<Vec<(String, LatticeVector)>> {
        self.sections
            .iter()
            .map(|s| resolve_component(cover, &ComponentSpec::Label(s.clone())))
            .collect()
    }
}

fn resolve_component(cover: &CoverLattice, c: &ComponentSpec) -> Result<(String, LatticeVector)> {
    match c {
        ComponentSpec::Label(s) => {
            let label: CurveLabel = s.parse().map_err(|_| Error::UnknownLabel(s.clone()))?;
            let r = cover.x4().curve(&label)?;
            Ok((r.label.to_string(), r.class.clone()))
        }
        ComponentSpec::Pullback { name, pullback } => {
            let terms: Vec<(i64, &str)> = pullback.iter().map(|(c, l)| (*c, l.as_str())).collect();
            let v = cover.y4().formal_sum(&terms)?;
            Ok((name.clone(), cover.pullback(&v)?))
        }
    }
}

/// Everything derived from one fixture.
#[derive(Clone, Debug, Serialize)]
pub struct FixtureAnalysis {
    pub name: String,
    pub fibers: Vec<FiberAnalysis>,
    /// All fibers share one class.
    pub same_class: bool,
    pub report: FibrationReport,
    pub classification: TypeClassification,
    /// `φ·s` for every listed section.
    pub section_pairings: Vec<(String, i64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberAnalysis {
    pub name: String,
    pub components: Vec<String>,
    pub kodaira: KodairaType,
    pub expected_type: Option<String>,
    pub matches_expected: bool,
    pub class: LatticeVector,
}

pub fn analyze_fixture(cover: &CoverLattice, fx: &FibrationFixture) -> Result<FixtureAnalysis> {
    let s = cover.s_x4();
    let candidates = fx.candidates(cover)?;
    let mut fibers = Vec::new();
    for (spec, fc) in fx.fibers.iter().zip(&candidates) {
        let kt = recognize_fiber(fc).map_err(|e| match e {
            Error::NotKodaira(msg) => Error::NotKodaira(format!("{}: {msg}", spec.name)),
            other => other,
        })?;
        let class = fiber_class(s, fc, &kt)?;
        fibers.push(FiberAnalysis {
            name: spec.name.clone(),
            components: fc.names.clone(),
            matches_expected: spec.expected_type.as_ref().is_none_or(|t| *t == kt.to_string()),
            expected_type: spec.expected_type.clone(),
            kodaira: kt,
            class,
        });
    }
    let phi = fibers
        .first()
        .map(|f| f.class.clone())
        .ok_or_else(|| Error::InconsistentFibration("fixture lists no fibers".into()))?;
    let same_class = fibers.iter().all(|f| f.class == phi);
    let kinds: Vec<KodairaType> = fibers.iter().map(|f| f.kodaira.clone()).collect();
    let mut report = shioda_tate(s.rank() as i64, &kinds, fx.sections_lower_bound, fx.det_t)?;
    let classification = classify_fibration_type(&phi, cover, fibers.len())?;
    report.fibration_type = classification.fibration_type;
    let section_pairings = fx
        .section_classes(cover)?
        .into_iter()
        .map(|(n, c)| Ok((n, s.pairing(&phi, &c)?.to_i64().unwrap_or(i64::MAX))))
        .collect::<Result<_>>()?;
    Ok(FixtureAnalysis {
        name: fx.name.clone(),
        fibers,
        same_class,
        report,
        classification,
        section_pairings,
    })
}

/// Components of all fibers plus the sections, vertices labelled by
/// multiplicity (`s` for sections).
pub fn fixture_graph(cover: &CoverLattice, fx: &FibrationFixture, an: &FixtureAnalysis) -> Result<(LabeledGraph, Vec<String>)> {
    let mut names = Vec::new();
    let mut classes = Vec::new();
    let mut tags = Vec::new();
    for (f, fc) in an.fibers.iter().zip(fx.candidates(cover)?) {
        for ((n, c), m) in fc.names.iter().zip(fc.classes).zip(&f.kodaira.multiplicities) {
            names.push(n.clone());
            classes.push(c);
            tags.push(m.to_string());
        }
    }
    for (n, c) in fx.section_classes(cover)? {
        names.push(n);
        classes.push(c);
        tags.push("s".to_string());
    }
    let fc = FiberCandidate::new(cover.s_x4(), names, classes)?;
    Ok((fc.graph()?, tags))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> FiberCandidate {
        let mut a = IntMatrix::diagonal(&vec![-2i64; n]);
        for i in 0..n {
            let j = (i + 1) % n;
            a[(i, j)] = BigInt::from(1);
            a[(j, i)] = BigInt::from(1);
        }
        FiberCandidate::from_intersections((0..n).map(|i| format!("c{i}")).collect(), a).unwrap()
    }

    #[test]
    fn cycles_are_type_a() {
        for n in 3..=18 {
            let kt = recognize_fiber(&cycle(n)).unwrap();
            assert_eq!((kt.family, kt.index, kt.m1), (Family::A, n - 1, n));
        }
    }

    #[test]
    fn two_components_meeting_twice() {
        let a = IntMatrix::from_rows(&[vec![-2, 2], vec![2, -2]]).unwrap();
        let fc = FiberCandidate::from_intersections(vec!["a".into(), "b".into()], a).unwrap();
        let kt = recognize_fiber(&fc).unwrap();
        assert_eq!(kt.to_string(), "A~1");
        assert_eq!((kt.m, kt.m1), (2, 2));
    }

    #[test]
    fn chain_is_not_a_fiber() {
        let a = IntMatrix::from_rows(&[vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -2]]).unwrap();
        let fc = FiberCandidate::from_intersections(vec!["a".into(), "b".into(), "c".into()], a).unwrap();
        assert!(matches!(recognize_fiber(&fc), Err(Error::NotKodaira(_))));
    }

    #[test]
    fn shioda_tate_examples() {
        let d6: KodairaType = KodairaType { m: 7, m1: 4, ..("D~6".parse().unwrap()) };
        let r = shioda_tate(20, &[d6.clone(), d6.clone(), d6], 4, None).unwrap();
        assert_eq!(r.r_p, 0);
        assert_eq!(r.solutions, vec![(4, 4)]);

        let a9 = KodairaType { m: 10, m1: 10, ..("A~9".parse().unwrap()) };
        let r = shioda_tate(20, &[a9.clone(), a9], 1, Some(4)).unwrap();
        assert_eq!(r.n_p, Some(5));

        let a17 = KodairaType { m: 18, m1: 18, ..("A~17".parse().unwrap()) };
        let a1 = KodairaType { m: 2, m1: 2, ..("A~1".parse().unwrap()) };
        let r = shioda_tate(20, &[a17, a1], 1, Some(4)).unwrap();
        assert_eq!(r.n_p, Some(3));

        let r = shioda_tate(20, &[], 1, None).unwrap();
        assert_eq!(r.r_p, 18);

        let big = KodairaType { m: 19, m1: 19, ..("A~18".parse().unwrap()) };
        assert!(shioda_tate(20, &[big.clone(), big], 1, None).is_err());
    }
}
