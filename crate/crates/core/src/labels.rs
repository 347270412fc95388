//! Curve and basis labels indexed by pairs of `{0, 1, 2, 3, 4}`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An unordered pair `{i, j}` with `0 <= i < j <= 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair(u8, u8);

impl Pair {
    pub fn new(a: u8, b: u8) -> Result<Self> {
        if a == b || a > 4 || b > 4 {
            return Err(Error::InvalidLabel(format!("pair ({a}{b})")));
        }
        Ok(Pair(a.min(b), a.max(b)))
    }

    /// The ten pairs in lexicographic order.
    pub fn all() -> Vec<Pair> {
        let mut out = Vec::with_capacity(10);
        for i in 0..5 {
            for j in i + 1..5 {
                out.push(Pair(i, j));
            }
        }
        out
    }

    pub fn first(self) -> u8 {
        self.0
    }

    pub fn second(self) -> u8 {
        self.1
    }

    pub fn contains(self, k: u8) -> bool {
        self.0 == k || self.1 == k
    }

    pub fn is_disjoint(self, other: Pair) -> bool {
        !other.contains(self.0) && !other.contains(self.1)
    }

    /// Position in [`Pair::all`].
    pub fn index(self) -> usize {
        Pair::all().iter().position(|&p| p == self).expect("valid pair")
    }

    /// Image under a permutation of `{0..4}` given as `tau[i]`.
    pub fn map(self, tau: &[u8; 5]) -> Pair {
        Pair::new(tau[self.0 as usize], tau[self.1 as usize]).expect("tau is a bijection")
    }

    /// The three pairs disjoint from this one.
    pub fn neighbours(self) -> Vec<Pair> {
        Pair::all().into_iter().filter(|&p| p.is_disjoint(self)).collect()
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

/// Two disjoint pairs, stored with the smaller pair first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairPair(Pair, Pair);

impl PairPair {
    pub fn new(a: Pair, b: Pair) -> Result<Self> {
        if !a.is_disjoint(b) {
            return Err(Error::InvalidLabel(format!("({a})({b}) are not disjoint")));
        }
        Ok(PairPair(a.min(b), a.max(b)))
    }

    /// The fifteen pair-pairs, sorted (equivalently, by label string).
    pub fn all() -> Vec<PairPair> {
        let pairs = Pair::all();
        let mut out = Vec::with_capacity(15);
        for (n, &a) in pairs.iter().enumerate() {
            for &b in &pairs[n + 1..] {
                if a.is_disjoint(b) {
                    out.push(PairPair(a, b));
                }
            }
        }
        out
    }

    pub fn pairs(self) -> (Pair, Pair) {
        (self.0, self.1)
    }

    pub fn contains(self, p: Pair) -> bool {
        self.0 == p || self.1 == p
    }

    pub fn index(self) -> usize {
        PairPair::all().iter().position(|&g| g == self).expect("valid pair-pair")
    }

    pub fn map(self, tau: &[u8; 5]) -> PairPair {
        PairPair::new(self.0.map(tau), self.1.map(tau)).expect("bijections keep pairs disjoint")
    }

    /// The three pair-pairs containing `p`.
    pub fn containing(p: Pair) -> Vec<PairPair> {
        PairPair::all().into_iter().filter(|g| g.contains(p)).collect()
    }
}

impl fmt::Display for PairPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})({})", self.0, self.1)
    }
}

/// Names of basis classes and curves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveLabel {
    /// Pullback of the line class, `H`.
    Hyperplane,
    /// Exceptional basis class `E1..E4` over a blown-up plane point.
    Exceptional(u8),
    /// Exceptional basis class over a blown-up point of `S5`.
    Blowup(PairPair),
    /// `(-1)`-curve `E(ij)` on `S5`.
    E(Pair),
    /// Branch curve `F(ij)` on `Y4`.
    F(Pair),
    /// `(-1)`-curve `F(ij)(kl)` on `Y4`.
    FP(PairPair),
    /// Ramification curve `L(ij)` on `X4`.
    L(Pair),
    /// `(-2)`-curve `L(ij)(kl)` on `X4`.
    LP(PairPair),
    Derived(String),
}

impl CurveLabel {
    pub fn kind(&self) -> &'static str {
        match self {
            CurveLabel::Hyperplane => "hyperplane",
            CurveLabel::Exceptional(_) | CurveLabel::E(_) => "exceptional_E",
            CurveLabel::F(_) | CurveLabel::FP(_) | CurveLabel::L(_) | CurveLabel::LP(_) => "strict_F",
            CurveLabel::Blowup(_) => "blowup_G",
            CurveLabel::Derived(_) => "derived",
        }
    }

    /// Image under a permutation of `{0..4}`; basis labels `H`, `E1..E4`
    /// and derived labels are returned unchanged.
    pub fn map(&self, tau: &[u8; 5]) -> CurveLabel {
        match self {
            CurveLabel::E(p) => CurveLabel::E(p.map(tau)),
            CurveLabel::F(p) => CurveLabel::F(p.map(tau)),
            CurveLabel::L(p) => CurveLabel::L(p.map(tau)),
            CurveLabel::FP(g) => CurveLabel::FP(g.map(tau)),
            CurveLabel::LP(g) => CurveLabel::LP(g.map(tau)),
            CurveLabel::Blowup(g) => CurveLabel::Blowup(g.map(tau)),
            other => other.clone(),
        }
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveLabel::Hyperplane => write!(f, "H"),
            CurveLabel::Exceptional(i) => write!(f, "E{i}"),
            CurveLabel::Blowup(g) => write!(f, "G{g}"),
            CurveLabel::E(p) => write!(f, "E({p})"),
            CurveLabel::F(p) => write!(f, "F({p})"),
            CurveLabel::FP(g) => write!(f, "F{g}"),
            CurveLabel::L(p) => write!(f, "L({p})"),
            CurveLabel::LP(g) => write!(f, "L{g}"),
            CurveLabel::Derived(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for CurveLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts `H`, `E3`, `E(12)`, `E12`, `F(03)`, `F03`, `F(12)(34)`,
/// `F(34)(12)`, `G(12)(34)`, `L(01)(23)` and the like. Parentheses are
/// optional; pair order is normalized.
impl FromStr for CurveLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest: String = chars.collect();
        if !rest.chars().all(|c| c.is_ascii_digit() || c == '(' || c == ')') {
            return Err(bad());
        }
        let digits: Vec<u8> = rest
            .chars()
            .filter(char::is_ascii_digit)
            .map(|c| c as u8 - b'0')
            .collect();
        let pair = |d: &[u8]| Pair::new(d[0], d[1]).map_err(|_| bad());
        let pair_pair = |d: &[u8]| PairPair::new(pair(&d[..2])?, pair(&d[2..])?).map_err(|_| bad());
        match (head, digits.len()) {
            ('H', 0) => Ok(CurveLabel::Hyperplane),
            ('E', 1) if (1..=4).contains(&digits[0]) && !rest.contains('(') => {
                Ok(CurveLabel::Exceptional(digits[0]))
            }
            ('E', 2) => Ok(CurveLabel::E(pair(&digits)?)),
            ('F', 2) => Ok(CurveLabel::F(pair(&digits)?)),
            ('F', 4) => Ok(CurveLabel::FP(pair_pair(&digits)?)),
            ('G', 4) => Ok(CurveLabel::Blowup(pair_pair(&digits)?)),
            ('L', 2) => Ok(CurveLabel::L(pair(&digits)?)),
            ('L', 4) => Ok(CurveLabel::LP(pair_pair(&digits)?)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        assert_eq!(Pair::all().len(), 10);
        let gs = PairPair::all();
        assert_eq!(gs.len(), 15);
        let names: Vec<String> = gs.iter().map(|g| format!("G{g}")).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert_eq!(names[0], "G(01)(23)");
    }

    #[test]
    fn each_pair_lies_in_three_pair_pairs() {
        for p in Pair::all() {
            assert_eq!(PairPair::containing(p).len(), 3);
            assert_eq!(p.neighbours().len(), 3);
        }
    }

    #[test]
    fn parse_round_trips() {
        for s in ["H", "E3", "E(12)", "F(03)", "F(12)(34)", "G(01)(23)", "L(24)", "L(02)(13)"] {
            let l: CurveLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        let l: CurveLabel = "F(34)(12)".parse().unwrap();
        assert_eq!(l.to_string(), "F(12)(34)");
        let l: CurveLabel = "L01".parse().unwrap();
        assert_eq!(l.to_string(), "L(01)");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "X12", "F11", "F(12)(13)", "G(12)", "E5", "F1a"] {
            assert!(s.parse::<CurveLabel>().is_err(), "{s}");
        }
    }
}
