//! Bounded enumeration of numerical negative curve classes on `Y4`.
//!
//! Write `v = m*w - Σ b_g G_g` with `w = dH - Σ a_k E_k` on `S5`. Then
//! `v·G_g = b_g`, `v·F_p = w·E_p - s_p` where `s_p` sums `b_g` over the three
//! `G_g` on `F_p`, and `v·H = d`. A class that pairs nonnegatively with every
//! configuration curve other than itself therefore has `b_g >= 0`, `a_k >= 0`
//! and `d >= 0`. Fixing `w` and the pairings `c_p = v·F_p` fixes every vertex
//! sum `s_p` of the edge labelling `b` of the Petersen graph, so the search
//! reduces to small labelled-edge problems.
//!
//! For `v² = -4`, `v·K = 2` the pairings with the branch curves would sum to
//! `v·(-2K) = -4 < 0`, so no class outside the table qualifies.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::{y4_g_index, Configuration, Taxonomy, Y4_RANK};
use crate::error::{Error, Result};
use crate::labels::{CurveLabel, Pair, PairPair};
use crate::lattice::LatticeVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeClass {
    pub class: LatticeVector,
    pub taxonomy: Taxonomy,
    /// `v·H`.
    pub degree: i64,
    pub self_int: i64,
    /// Nonzero pairings with branch curves.
    pub branch_pairings: Vec<(CurveLabel, i64)>,
    /// Set when the class is a configuration curve.
    pub label: Option<CurveLabel>,
}

/// All numerical candidates `v` with `0 <= v·H <= degree_bound` that pair
/// nonnegatively with every configuration curve other than `v` and have
/// either `v² = -4, v·K = 2` (tag `b`) or `v² = -1, v·K = -1` (tags `f1` or
/// `f2`). Sorted by degree, then coordinates.
pub fn enumerate_negative_classes(c: &Configuration, degree_bound: i64) -> Result<Vec<NegativeClass>> {
    if degree_bound < 1 {
        return Err(Error::InvalidBound(degree_bound));
    }
    check_y4(c)?;

    let mut found: Vec<LatticeVector> = Vec::new();
    let pairs = Pair::all();
    let edges: Vec<(usize, usize)> = PairPair::all()
        .into_iter()
        .map(|g| {
            let (p, q) = g.pairs();
            (p.index(), q.index())
        })
        .collect();

    for (norm, branch_degree) in [(-1i64, 2i64), (-4, -4)] {
        let patterns = compositions(branch_degree, pairs.len());
        for d in 0..=degree_bound {
            let amax = (d * d - norm).sqrt();
            for a in box4(amax) {
                let q = d * d - a.iter().map(|x| x * x).sum::<i64>() - norm;
                if q < 0 {
                    continue;
                }
                let t: Vec<i64> = pairs.iter().map(|&p| w_dot_e(d, &a, p)).collect();
                if t.iter().any(|&x| x < 0) {
                    continue;
                }
                for c_p in &patterns {
                    let s: Vec<i64> = t.iter().zip(c_p).map(|(t, c)| t - c).collect();
                    if s.iter().any(|&x| x < 0) {
                        continue;
                    }
                    label_edges(&edges, &s, q, &mut |b| {
                        found.push(assemble(d, &a, b));
                    });
                }
            }
        }
    }

    // configuration curves are excluded above by sign; add those that qualify
    for r in c.curves() {
        let degree = r.class.0[0].to_i64().unwrap_or(i64::MAX);
        if (0..=degree_bound).contains(&degree) && !found.contains(&r.class) {
            found.push(r.class.clone());
        }
    }

    let mut out = Vec::new();
    for v in found {
        if let Some(nc) = describe(c, v)? {
            out.push(nc);
        }
    }
    out.sort_by(|x, y| (x.degree, &x.class).cmp(&(y.degree, &y.class)));
    out.dedup_by(|x, y| x.class == y.class);
    Ok(out)
}

fn check_y4(c: &Configuration) -> Result<()> {
    let labels = c.lattice().labels();
    let ok = c.lattice().rank() == Y4_RANK
        && labels.is_some_and(|l| l[0] == "H" && l[5] == "G(01)(23)")
        && c.branch_curves().len() == 10;
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidLabel("enumeration expects the Y4 configuration".into()))
    }
}

/// `w·E_p` for `w = dH - Σ a_k E_k`.
fn w_dot_e(d: i64, a: &[i64; 4], p: Pair) -> i64 {
    if p.first() == 0 {
        a[p.second() as usize - 1]
    } else {
        let rest: i64 = (1..=4u8).filter(|k| !p.contains(*k)).map(|k| a[k as usize - 1]).sum();
        d - rest
    }
}

fn box4(max: i64) -> impl Iterator<Item = [i64; 4]> {
    let r = 0..=max;
    r.clone().flat_map(move |x| {
        let r = 0..=max;
        r.clone().flat_map(move |y| {
            let r = 0..=max;
            r.clone()
                .flat_map(move |z| (0..=max).map(move |u| [x, y, z, u]))
        })
    })
}

/// All vectors of `n` nonnegative integers summing to `total`.
fn compositions(total: i64, n: usize) -> Vec<Vec<i64>> {
    fn go(rem: i64, n: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() + 1 == n {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rem {
            cur.push(x);
            go(rem - x, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total >= 0 && n > 0 {
        go(total, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Nonnegative edge labellings with the given vertex sums and `Σ b² = q`.
fn label_edges(edges: &[(usize, usize)], sums: &[i64], q: i64, emit: &mut dyn FnMut(&[i64])) {
    let mut last = vec![usize::MAX; sums.len()];
    for (k, &(u, v)) in edges.iter().enumerate() {
        last[u] = k;
        last[v] = k;
    }
    if last.iter().zip(sums).any(|(&l, &s)| l == usize::MAX && s != 0) {
        return;
    }
    let mut rem = sums.to_vec();
    let mut b = vec![0i64; edges.len()];
    step(edges, &last, &mut rem, &mut b, 0, q, emit);
}

fn step(
    edges: &[(usize, usize)],
    last: &[usize],
    rem: &mut [i64],
    b: &mut [i64],
    k: usize,
    q: i64,
    emit: &mut dyn FnMut(&[i64]),
) {
    if k == edges.len() {
        if q == 0 {
            emit(b);
        }
        return;
    }
    // the remaining labels sum to half the remaining vertex sums, and
    // nonnegative integers satisfy x <= x²
    let left: i64 = rem.iter().sum();
    if left % 2 != 0 || left / 2 > q {
        return;
    }
    let (u, v) = edges[k];
    // closing a vertex forces the value
    let (lo, hi) = match (last[u] == k, last[v] == k) {
        (true, true) if rem[u] != rem[v] => return,
        (true, _) => (rem[u], rem[u]),
        (false, true) => (rem[v], rem[v]),
        (false, false) => (0, rem[u].min(rem[v])),
    };
    if hi > rem[u].min(rem[v]) {
        return;
    }
    for x in lo..=hi {
        if x * x > q {
            break;
        }
        b[k] = x;
        rem[u] -= x;
        rem[v] -= x;
        step(edges, last, rem, b, k + 1, q - x * x, emit);
        rem[u] += x;
        rem[v] += x;
    }
    b[k] = 0;
}

fn assemble(d: i64, a: &[i64; 4], b: &[i64]) -> LatticeVector {
    let mut v = vec![0i64; Y4_RANK];
    v[0] = d;
    for k in 0..4 {
        v[k + 1] = -a[k];
    }
    for (g, &x) in PairPair::all().into_iter().zip(b) {
        v[y4_g_index(g)] = -x;
    }
    LatticeVector::from_i64(&v)
}

/// Checks every defining condition from scratch and tags the class.
fn describe(c: &Configuration, v: LatticeVector) -> Result<Option<NegativeClass>> {
    let l = c.lattice();
    let vv = l.norm(&v)?;
    let vk = l.pairing(&v, c.canonical_class())?;
    let small = |x: &BigInt| x.to_i64().expect("small pairing");
    for r in c.curves() {
        if r.class != v && l.pairing(&v, &r.class)?.is_negative() {
            return Ok(None);
        }
    }
    let mut branch = Vec::new();
    for r in c.branch_curves() {
        let p = small(&l.pairing(&v, &r.class)?);
        if p != 0 {
            branch.push((r.label.clone(), p));
        }
    }
    let taxonomy = match (small(&vv), small(&vk)) {
        (-4, 2) => Taxonomy::B,
        (-1, -1) => {
            let ps: Vec<i64> = branch.iter().map(|(_, p)| *p).collect();
            match ps.as_slice() {
                [2] => Taxonomy::F1,
                [1, 1] => Taxonomy::F2,
                _ => return Ok(None),
            }
        }
        _ => return Ok(None),
    };
    let label = c.curves().iter().find(|r| r.class == v).map(|r| r.label.clone());
    Ok(Some(NegativeClass {
        degree: small(&v.0[0]),
        self_int: small(&vv),
        class: v,
        taxonomy,
        branch_pairings: branch,
        label,
    }))
}
