//! The standard quadratic transformation `Q[x0:x1:x2] = [x1x2 : x0x2 : x0x1]`
//! in exact projective arithmetic, its action `f_Q*` on `Pic(Y4)`, and the
//! certificate that the lift to `S_X4` is a lattice reflection.
//!
//! `Q` is based at the three diagonal points of the complete quadrilateral
//! through `p1 = [-1,1,1]`, `p2 = [1,-1,1]`, `p3 = [1,1,-1]`, `p4 = [1,1,1]`.
//! Those points are blown up in `Y4` as `G(14)(23)`, `G(12)(34)` and
//! `G(13)(24)`, which is what makes `f_Q` a regular involution there.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::blowup::{y4_g_index, Configuration, Y4_RANK};
use crate::cover::CoverLattice;
use crate::error::{Error, Result};
use crate::labels::{CurveLabel, Pair, PairPair};
use crate::lattice::{
    discriminant_action, fixed_and_anti_sublattice, reflection_in_vector, ActionKind, IntLattice, IntMatrix,
    Isometry, LatticeVector, QMatrix,
};

fn normalize(mut c: [BigInt; 3]) -> Option<[BigInt; 3]> {
    let g = c.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return None;
    }
    for x in c.iter_mut() {
        *x /= &g;
    }
    if c.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in c.iter_mut() {
            *x = -&*x;
        }
    }
    Some(c)
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn write_triple(f: &mut fmt::Formatter<'_>, c: &[BigInt; 3]) -> fmt::Result {
    write!(f, "[{},{},{}]", c[0], c[1], c[2])
}

/// A point of `P²(Q)`, gcd-reduced with first nonzero coordinate positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint([BigInt; 3]);

impl ProjPoint {
    pub fn new(c: [BigInt; 3]) -> Result<Self> {
        normalize(c).map(ProjPoint).ok_or(Error::ZeroPoint)
    }

    pub fn from_i64(c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(BigInt::from))
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    /// Number of zero coordinates.
    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|x| x.is_zero()).count()
    }

    pub fn is_base_point(&self) -> bool {
        self.zero_count() == 2
    }

    pub fn lies_on(&self, l: &ProjLine) -> bool {
        dot(&self.0, &l.0).is_zero()
    }

    /// The point `a·p + b·q`.
    pub fn combine(a: i64, p: &ProjPoint, b: i64, q: &ProjPoint) -> Result<ProjPoint> {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        ProjPoint::new([0, 1, 2].map(|i| &a * &p.0[i] + &b * &q.0[i]))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_triple(f, &self.0)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A line `a0 x0 + a1 x1 + a2 x2 = 0`, normalized like [`ProjPoint`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine([BigInt; 3]);

impl ProjLine {
    pub fn new(c: [BigInt; 3]) -> Result<Self> {
        normalize(c).map(ProjLine).ok_or(Error::ZeroPoint)
    }

    pub fn from_i64(c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(BigInt::from))
    }

    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self> {
        Self::new(cross(&p.0, &q.0))
    }

    pub fn meet(&self, other: &ProjLine) -> Result<ProjPoint> {
        ProjPoint::new(cross(&self.0, &other.0))
    }

    pub fn coefficients(&self) -> &[BigInt; 3] {
        &self.0
    }
}

/// Written as its equation, e.g. `x0-x1=0`.
impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}x{i}")?;
            } else {
                write!(f, "{sign}{mag}x{i}")?;
            }
            first = false;
        }
        write!(f, "=0")
    }
}

impl Serialize for ProjLine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Q[x0:x1:x2] = [x1x2 : x0x2 : x0x1]`, undefined where two coordinates
/// vanish.
pub fn quadratic_map(p: &ProjPoint) -> Result<ProjPoint> {
    if p.is_base_point() {
        return Err(Error::BasePoint(p.to_string()));
    }
    let c = &p.0;
    ProjPoint::new([&c[1] * &c[2], &c[0] * &c[2], &c[0] * &c[1]])
}

/// The four points `p1..p4` in the coordinates above.
pub fn configuration_points() -> [ProjPoint; 4] {
    [[-1, 1, 1], [1, -1, 1], [1, 1, -1], [1, 1, 1]].map(|c| ProjPoint::from_i64(c).expect("nonzero"))
}

/// `N(ij)` for `1 <= i < j <= 4`: the line through the other two points.
pub fn n_line(i: u8, j: u8) -> Result<ProjLine> {
    let p = Pair::new(i, j)?;
    if p.first() == 0 {
        return Err(Error::InvalidLabel(format!("N({p}) needs indices in 1..=4")));
    }
    let pts = configuration_points();
    let rest: Vec<&ProjPoint> = (1..=4u8).filter(|k| !p.contains(*k)).map(|k| &pts[k as usize - 1]).collect();
    ProjLine::through(rest[0], rest[1])
}

/// Equations printed next to the six lines in the configuration figure.
pub const FIGURE_N_LINES: [((u8, u8), [i64; 3]); 6] = [
    ((1, 4), [0, 1, 1]),
    ((1, 2), [1, -1, 0]),
    ((3, 4), [1, 1, 0]),
    ((2, 3), [0, 1, -1]),
    ((2, 4), [1, 0, 1]),
    ((1, 3), [1, 0, -1]),
];

/// The diagonal points as intersections of opposite sides, in the order
/// `N(14)∩N(23)`, `N(12)∩N(34)`, `N(13)∩N(24)`.
pub fn diagonal_points() -> Result<[ProjPoint; 3]> {
    let meet = |a: (u8, u8), b: (u8, u8)| n_line(a.0, a.1)?.meet(&n_line(b.0, b.1)?);
    Ok([meet((1, 4), (2, 3))?, meet((1, 2), (3, 4))?, meet((1, 3), (2, 4))?])
}

/// The two printed assignments of `q1, q2, q3` and the one forced by the
/// intersections defining them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QLabeling {
    pub prose: [ProjPoint; 3],
    pub figure: [ProjPoint; 3],
    pub computed: [ProjPoint; 3],
    pub prose_matches: bool,
    pub figure_matches: bool,
}

pub fn q_labeling() -> Result<QLabeling> {
    let pts = |v: [[i64; 3]; 3]| -> Result<[ProjPoint; 3]> {
        Ok([ProjPoint::from_i64(v[0])?, ProjPoint::from_i64(v[1])?, ProjPoint::from_i64(v[2])?])
    };
    let prose = pts([[0, 0, 1], [0, 1, 0], [1, 0, 0]])?;
    let figure = pts([[1, 0, 0], [0, 0, 1], [0, 1, 0]])?;
    let computed = diagonal_points()?;
    Ok(QLabeling {
        prose_matches: prose == computed,
        figure_matches: figure == computed,
        prose,
        figure,
        computed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineCheck {
    pub name: String,
    pub line: ProjLine,
    pub samples: Vec<ProjPoint>,
    pub images: Vec<ProjPoint>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointCheck {
    pub name: String,
    pub point: ProjPoint,
    pub image: ProjPoint,
    pub fixed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QPropertiesReport {
    /// Lines through pairs of `p1..p4`, with agreement against the figure.
    pub n_lines: Vec<(String, ProjLine, bool)>,
    /// (i): the base points of `Q` are exactly the diagonal points.
    pub base_points: Vec<ProjPoint>,
    pub base_points_are_diagonal: bool,
    /// (ii): `K(ij)` through `q_i, q_j` collapses to `q_k`.
    pub collapses: Vec<LineCheck>,
    /// (iii): each `N(ij)` maps into itself.
    pub n_stability: Vec<LineCheck>,
    /// (iii): each `p_i` is fixed.
    pub fixed_points: Vec<FixedPointCheck>,
    pub labeling: QLabeling,
}

impl QPropertiesReport {
    pub fn holds(&self) -> bool {
        self.n_lines.iter().all(|(_, _, ok)| *ok)
            && self.base_points_are_diagonal
            && self.collapses.iter().all(|c| c.holds)
            && self.n_stability.iter().all(|c| c.holds)
            && self.fixed_points.iter().all(|c| c.fixed)
    }
}

/// Five non-base points `a·p + b·q` with `a, b` nonzero. A map of degree two
/// that is constant on five points of a line is constant on it.
fn samples_between(p: &ProjPoint, q: &ProjPoint) -> Result<Vec<ProjPoint>> {
    let mut out = Vec::new();
    for (a, b) in [(1, 1), (1, 2), (2, 1), (1, 3), (3, -1), (2, -5), (5, 7)] {
        let x = ProjPoint::combine(a, p, b, q)?;
        if !x.is_base_point() && !out.contains(&x) {
            out.push(x);
        }
        if out.len() == 5 {
            break;
        }
    }
    Ok(out)
}

/// Checks properties (i)-(iii) of `Q` exactly. Uses the labelling of the
/// diagonal points forced by their defining intersections; the report
/// records how the two printed labellings compare.
pub fn verify_q_properties() -> Result<QPropertiesReport> {
    let mut n_lines = Vec::new();
    for ((i, j), eq) in FIGURE_N_LINES {
        let l = n_line(i, j)?;
        n_lines.push((format!("N({i}{j})"), l.clone(), l == ProjLine::from_i64(eq)?));
    }

    let q = diagonal_points()?;
    let base_points: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        .into_iter()
        .map(ProjPoint::from_i64)
        .collect::<Result<_>>()?;
    let mut sorted_q = q.to_vec();
    sorted_q.sort();
    let mut sorted_b = base_points.clone();
    sorted_b.sort();
    let undefined_everywhere = base_points.iter().all(|b| quadratic_map(b).is_err());

    let mut collapses = Vec::new();
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let samples = samples_between(&q[i], &q[j])?;
        let images: Vec<ProjPoint> = samples.iter().map(quadratic_map).collect::<Result<_>>()?;
        collapses.push(LineCheck {
            name: format!("K({}{})", i + 1, j + 1),
            line: ProjLine::through(&q[i], &q[j])?,
            holds: images.iter().all(|x| *x == q[k]),
            samples,
            images,
        });
    }

    let pts = configuration_points();
    let mut n_stability = Vec::new();
    for ((i, j), _) in FIGURE_N_LINES {
        let l = n_line(i, j)?;
        let rest: Vec<&ProjPoint> = (1..=4u8).filter(|k| *k != i && *k != j).map(|k| &pts[k as usize - 1]).collect();
        let samples: Vec<ProjPoint> = samples_between(rest[0], rest[1])?
            .into_iter()
            .filter(|x| !q.contains(x))
            .collect();
        let images: Vec<ProjPoint> = samples.iter().map(quadratic_map).collect::<Result<_>>()?;
        n_stability.push(LineCheck {
            name: format!("N({i}{j})"),
            holds: samples.len() == 5 && images.iter().all(|x| x.lies_on(&l)),
            line: l,
            samples,
            images,
        });
    }

    let fixed_points = pts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let image = quadratic_map(p)?;
            Ok(FixedPointCheck {
                name: format!("p{}", i + 1),
                fixed: image == *p,
                point: p.clone(),
                image,
            })
        })
        .collect::<Result<_>>()?;

    Ok(QPropertiesReport {
        n_lines,
        base_points_are_diagonal: sorted_q == sorted_b && undefined_everywhere,
        base_points,
        collapses,
        n_stability,
        fixed_points,
        labeling: q_labeling()?,
    })
}

/// `count` points with nonzero coordinates in `[-bound, bound]`, drawn from
/// a seeded generator. `Q` is an involution on all of them.
pub fn random_general_points(count: usize, bound: i64, seed: u64) -> Vec<ProjPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || loop {
        let x: i64 = rng.random_range(-bound..=bound);
        if x != 0 {
            return x;
        }
    };
    (0..count)
        .map(|_| ProjPoint::from_i64([draw(), draw(), draw()]).expect("nonzero"))
        .collect()
}

/// Counts the points on which `Q∘Q` is the identity.
pub fn involution_hits(points: &[ProjPoint]) -> usize {
    points
        .iter()
        .filter(|p| quadratic_map(p).and_then(|q| quadratic_map(&q)).is_ok_and(|r| r == **p))
        .count()
}

/// The three G-classes over the base points of `Q`.
pub fn cremona_g_classes() -> [PairPair; 3] {
    let pp = |a: (u8, u8), b: (u8, u8)| {
        PairPair::new(Pair::new(a.0, a.1).expect("pair"), Pair::new(b.0, b.1).expect("pair")).expect("disjoint")
    };
    [pp((1, 4), (2, 3)), pp((1, 2), (3, 4)), pp((1, 3), (2, 4))]
}

/// The matrix of `f_Q*` on `Pic(Y4)`: `H -> 2H - Ga - Gb - Gc`,
/// `Ga -> H - Gb - Gc` and cyclically, everything else fixed. Verified to be
/// an involutive isometry fixing `K` and every `F(ij)`.
pub fn build_fq_star(y4: &Configuration) -> Result<Isometry> {
    let lattice = y4.lattice();
    if lattice.rank() != Y4_RANK {
        return Err(Error::DimensionMismatch {
            expected: Y4_RANK,
            found: lattice.rank(),
        });
    }
    let g = cremona_g_classes().map(y4_g_index);
    let mut m = IntMatrix::identity(Y4_RANK);
    // column j is the image of basis vector j
    m[(0, 0)] = BigInt::from(2);
    for &gi in &g {
        m[(gi, 0)] = BigInt::from(-1);
    }
    for (k, &gk) in g.iter().enumerate() {
        m[(gk, gk)] = BigInt::zero();
        m[(0, gk)] = BigInt::one();
        for (l, &gl) in g.iter().enumerate() {
            if l != k {
                m[(gl, gk)] = BigInt::from(-1);
            }
        }
    }
    let fq = Isometry::new(lattice, m).map_err(|e| Error::Certification(format!("f_Q* is not an isometry: {e}")))?;
    if !fq.is_involution() {
        return Err(Error::Certification("f_Q* is not an involution".into()));
    }
    if &fq.apply(y4.canonical_class())? != y4.canonical_class() {
        return Err(Error::Certification("f_Q* moves K".into()));
    }
    for r in y4.branch_curves() {
        if fq.apply(&r.class)? != r.class {
            return Err(Error::Certification(format!("f_Q* moves {}", r.label)));
        }
    }
    Ok(fq)
}

/// Conjugacy invariants of a reflection `R_e` in `O(S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflectionFingerprint {
    #[serde(serialize_with = "crate::json::big")]
    pub norm: BigInt,
    #[serde(serialize_with = "crate::json::big")]
    pub divisibility: BigInt,
    pub discriminant_action: ActionKind,
    #[serde(serialize_with = "crate::json::big")]
    pub fixed_lattice_det: BigInt,
}

pub fn reflection_fingerprint(lattice: &IntLattice, e: &LatticeVector) -> Result<ReflectionFingerprint> {
    let r = reflection_in_vector(lattice, e)?;
    let fa = fixed_and_anti_sublattice(&r)?;
    Ok(ReflectionFingerprint {
        norm: lattice.norm(e)?,
        divisibility: lattice.divisibility(e)?,
        discriminant_action: discriminant_action(&r)?.kind,
        fixed_lattice_det: lattice.sublattice(&fa.fixed)?.determinant(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflectionData {
    pub e_y: LatticeVector,
    pub e_x: LatticeVector,
    pub fq_matrix: IntMatrix,
    pub lift_matrix: IntMatrix,
    pub fixed_rank_y: usize,
    pub fixed_rank_x: usize,
    #[serde(serialize_with = "crate::json::big")]
    pub e_y_norm: BigInt,
    /// `f_Q* = R_{e_y}`.
    pub fq_is_reflection: bool,
    /// `lift = R_{e_x}`.
    pub lift_is_reflection: bool,
    /// `lift · π* = π* · f_Q*`.
    pub intertwines: bool,
    pub fixed_g_classes: usize,
    pub invariants: ReflectionFingerprint,
}

fn certification(msg: impl Into<String>) -> Error {
    Error::Certification(msg.into())
}

/// Certifies that `f_Q*` is the reflection in `H - Ga - Gb - Gc` and that
/// its transport `P f P⁻¹` along `π*` is an integral reflection of `S_X4`.
pub fn certify_reflection(fq: &Isometry, cover: &CoverLattice) -> Result<ReflectionData> {
    let y4 = cover.y4();
    let ly = y4.lattice();
    let fa = fixed_and_anti_sublattice(fq)?;
    if fa.fixed.len() != 19 || fa.anti.len() != 1 {
        return Err(certification(format!(
            "eigenlattice ranks {} and {} instead of 19 and 1",
            fa.fixed.len(),
            fa.anti.len()
        )));
    }
    let e_y = fa.anti[0].clone();
    let g = cremona_g_classes().map(y4_g_index);
    let mut expected = LatticeVector::unit(Y4_RANK, 0);
    for &gi in &g {
        expected = expected.sub(&LatticeVector::unit(Y4_RANK, gi));
    }
    if e_y != expected {
        return Err(certification(format!("anti-invariant vector is {:?}", e_y.0)));
    }
    let e_y_norm = ly.norm(&e_y)?;
    if !e_y_norm.is_negative() {
        return Err(certification("anti-invariant vector is not negative"));
    }
    let fq_is_reflection = reflection_in_vector(ly, &e_y)? == *fq;
    if !fq_is_reflection {
        return Err(certification("f_Q* differs from the reflection in e_y"));
    }
    let fixed_g_classes = PairPair::all()
        .into_iter()
        .filter(|&gg| {
            let v = LatticeVector::unit(Y4_RANK, y4_g_index(gg));
            fq.apply(&v).is_ok_and(|w| w == v)
        })
        .count();

    let s = cover.s_x4();
    let p = QMatrix::from_int(cover.pullback_matrix());
    let lift_q = p.mul(&QMatrix::from_int(fq.matrix()))?.mul(&p.inverse()?)?;
    let lift_matrix = lift_q
        .to_int()
        .ok_or_else(|| certification("transported action is not integral"))?;
    let lift = Isometry::new(s, lift_matrix.clone()).map_err(|e| certification(format!("lift: {e}")))?;
    if !lift.is_involution() {
        return Err(certification("lift is not an involution"));
    }
    let intertwines = lift.matrix().mul(cover.pullback_matrix())? == cover.pullback_matrix().mul(fq.matrix())?;
    for pair in Pair::all() {
        let l = cover.l_class(pair);
        if lift.apply(&l)? != l {
            return Err(certification(format!("lift moves {}", CurveLabel::L(pair))));
        }
    }
    let e_x = cover.pullback(&e_y)?;
    if lift.apply(&e_x)? != e_x.neg() {
        return Err(certification("lift does not negate the pulled-back vector"));
    }
    let fx = fixed_and_anti_sublattice(&lift)?;
    let lift_is_reflection = reflection_in_vector(s, &e_x)? == lift;
    let invariants = reflection_fingerprint(s, &e_x)?;
    Ok(ReflectionData {
        fixed_rank_y: fa.fixed.len(),
        fixed_rank_x: fx.fixed.len(),
        e_y,
        e_x,
        fq_matrix: fq.matrix().clone(),
        lift_matrix,
        e_y_norm,
        fq_is_reflection,
        lift_is_reflection,
        intertwines,
        fixed_g_classes,
        invariants,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyComparison {
    pub reflection: ReflectionFingerprint,
    /// Reflection in the square `-2` root `L(12)`.
    pub root_reference: ReflectionFingerprint,
    pub differ: bool,
}

/// Fingerprint of the lifted reflection next to that of `R_{L(12)}`.
pub fn conjugacy_invariants(rd: &ReflectionData, cover: &CoverLattice) -> Result<ConjugacyComparison> {
    let l12 = cover.l_class(Pair::new(1, 2)?);
    let root_reference = reflection_fingerprint(cover.s_x4(), &l12)?;
    Ok(ConjugacyComparison {
        differ: root_reference != rd.invariants,
        reflection: rd.invariants.clone(),
        root_reference,
    })
}
