//! Permutations of `{0..n-1}` and permutation groups via Schreier-Sims.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `p[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles of length at least two.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] || self.0[s] == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.0[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.0[x];
            }
            out.push(c);
        }
        out
    }
}

/// One-line cycle notation, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Perm>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Perm::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            transversal,
        }
    }

    fn recompute_orbit(&mut self) {
        let n = self.transversal.len();
        let mut transversal = vec![None; n];
        transversal[self.base_point] = Some(Perm::identity(n));
        let mut queue = vec![self.base_point];
        while let Some(b) = queue.pop() {
            let ub = transversal[b].clone().expect("orbit point");
            for g in &self.gens {
                let c = g.apply(b);
                if transversal[c].is_none() {
                    transversal[c] = Some(ub.then(g));
                    queue.push(c);
                }
            }
        }
        self.transversal = transversal;
    }

    fn orbit(&self) -> impl Iterator<Item = usize> + '_ {
        self.transversal
            .iter()
            .enumerate()
            .filter_map(|(i, t)| t.as_ref().map(|_| i))
    }

    fn orbit_len(&self) -> usize {
        self.orbit().count()
    }
}

/// A permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator of degree {} in a group of degree {degree}",
                    g.degree()
                )));
            }
        }
        let mut grp = PermutationGroup {
            degree,
            generators,
            levels: Vec::new(),
        };
        grp.schreier_sims();
        Ok(grp)
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> BigInt {
        self.levels
            .iter()
            .map(|l| BigInt::from(l.orbit_len()))
            .fold(BigInt::one(), |a, b| a * b)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (h, depth) = self.strip(p, 0);
        depth == self.levels.len() && h.is_identity()
    }

    /// Same degree and each generator set lies in the other group.
    pub fn same_group(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.generators.iter().all(|g| self.contains(g))
    }

    /// Orbit of a point under the whole group.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = vec![point];
        while let Some(x) = queue.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.degree).filter(|&i| seen[i]).collect()
    }

    /// Every element, by walking the stabilizer chain. Only sensible for
    /// small groups.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let reps: Vec<&Perm> = level.transversal.iter().flatten().collect();
            let mut next = Vec::with_capacity(out.len() * reps.len());
            for h in &out {
                for u in &reps {
                    next.push(h.then(u));
                }
            }
            out = next;
        }
        out
    }

    /// Sifts `g` through the levels from `start`; returns the residue and
    /// the level where sifting stopped.
    fn strip(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let b = h.apply(level.base_point);
            match &level.transversal[b] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn schreier_sims(&mut self) {
        let n = self.degree;
        for g in self.generators.clone() {
            if g.is_identity() {
                continue;
            }
            if self.levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let moved = (0..n).find(|&i| g.apply(i) != i).expect("non-identity");
                self.levels.push(Level::new(moved, n));
            }
            self.levels[0].gens.push(g);
        }
        if self.levels.is_empty() {
            return;
        }
        // strong generators of level 0 also seed deeper levels when they fix
        // the corresponding base points
        for i in 1..self.levels.len() {
            let fixed: Vec<usize> = self.levels[..i].iter().map(|l| l.base_point).collect();
            let inherited: Vec<Perm> = self.levels[0]
                .gens
                .iter()
                .filter(|g| fixed.iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            self.levels[i].gens = inherited;
        }
        for l in &mut self.levels {
            l.recompute_orbit();
        }

        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let iu = i as usize;
            let orbit: Vec<usize> = self.levels[iu].orbit().collect();
            let gens = self.levels[iu].gens.clone();
            for &b in &orbit {
                let ub = self.levels[iu].transversal[b].clone().expect("orbit point");
                for x in &gens {
                    let c = x.apply(b);
                    let uc = self.levels[iu].transversal[c].clone().expect("orbit is closed");
                    let ubx = ub.then(x);
                    if ubx == uc {
                        continue;
                    }
                    let y = ubx.then(&uc.inverse());
                    let (h, j) = self.strip(&y, iu + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        if j == self.levels.len() {
                            let moved = (0..n).find(|&p| h.apply(p) != p).expect("non-identity residue");
                            self.levels.push(Level::new(moved, n));
                        }
                        for l in iu + 1..=j {
                            self.levels[l].gens.push(h.clone());
                            self.levels[l].recompute_orbit();
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }
}

/// All permutations of `{0..n-1}` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Perm {
        Perm::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn composition_order() {
        let a = p(&[1, 2, 0]);
        let b = p(&[1, 0, 2]);
        // 0 -a-> 1 -b-> 0
        assert_eq!(a.then(&b).apply(0), 0);
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.to_string(), "(0 1 2)");
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 1..=7usize {
            let gens = if n < 2 {
                vec![]
            } else {
                let mut cyc: Vec<usize> = (1..n).collect();
                cyc.push(0);
                let mut tr: Vec<usize> = (0..n).collect();
                tr.swap(0, 1);
                vec![p(&cyc), p(&tr)]
            };
            let g = PermutationGroup::new(n, gens).unwrap();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(g.order(), BigInt::from(fact));
        }
    }

    #[test]
    fn cyclic_and_dihedral() {
        let r = p(&[1, 2, 3, 4, 0]);
        let s = p(&[0, 4, 3, 2, 1]);
        assert_eq!(PermutationGroup::new(5, vec![r.clone()]).unwrap().order(), BigInt::from(5));
        let d5 = PermutationGroup::new(5, vec![r, s]).unwrap();
        assert_eq!(d5.order(), BigInt::from(10));
        assert_eq!(d5.elements().len(), 10);
        assert!(!d5.contains(&p(&[1, 0, 2, 3, 4])));
    }

    #[test]
    fn lexicographic_permutations() {
        let all = all_permutations(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[5], vec![2, 1, 0]);
    }

    #[test]
    fn invalid_images_are_rejected() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![2, 0]).is_err());
    }
}
