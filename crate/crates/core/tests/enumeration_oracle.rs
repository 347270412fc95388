//! Brute-force oracle for the negative-class enumeration.
//!
//! The oracle uses only the numerical conditions: it generates every integer
//! vector with the right `v²` and `v·K` in each degree, with no sign
//! assumptions, and filters by the pairings with the configuration curves.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use x4geom::blowup::{build_y4, enumerate_negative_classes, Taxonomy};
use x4geom::lattice::LatticeVector;

const TAIL: usize = 19;

/// Every `x ∈ Z^TAIL` with `Σx = sum` and `Σx² = sumsq`.
fn tails(sum: i64, sumsq: i64, emit: &mut dyn FnMut(&[i64])) {
    fn go(k: usize, sum: i64, sumsq: i64, cur: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
        let left = (TAIL - k) as i64;
        if left == 0 {
            if sum == 0 && sumsq == 0 {
                emit(cur);
            }
            return;
        }
        // Cauchy-Schwarz and parity
        if sum * sum > left * sumsq || (sum - sumsq) % 2 != 0 {
            return;
        }
        let r = (sumsq as f64).sqrt() as i64;
        for x in -r..=r {
            cur.push(x);
            go(k + 1, sum - x, sumsq - x * x, cur, emit);
            cur.pop();
        }
    }
    go(0, sum, sumsq, &mut Vec::with_capacity(TAIL), emit);
}

struct Oracle {
    gram_diag: Vec<i64>,
    curves: Vec<Vec<i64>>,
    branch: Vec<Vec<i64>>,
}

impl Oracle {
    fn dot(&self, a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).zip(&self.gram_diag).map(|((x, y), g)| x * y * g).sum()
    }

    /// `(class, tag)` for every qualifying class of degree `0..=bound`.
    fn run(&self, bound: i64) -> BTreeSet<(Vec<i64>, &'static str)> {
        let mut out = BTreeSet::new();
        for d in 0..=bound {
            // v = (d, x): v² = d² - Σx², v·K = -3d - Σx
            for (norm, vk) in [(-4i64, 2i64), (-1, -1)] {
                tails(-3 * d - vk, d * d - norm, &mut |x| {
                    let mut v = Vec::with_capacity(TAIL + 1);
                    v.push(d);
                    v.extend_from_slice(x);
                    if self.curves.iter().any(|c| *c != v && self.dot(&v, c) < 0) {
                        return;
                    }
                    let mut hits: Vec<i64> = self.branch.iter().map(|b| self.dot(&v, b)).filter(|&p| p != 0).collect();
                    hits.sort_unstable();
                    let tag = match (norm, hits.as_slice()) {
                        (-4, _) => "b",
                        (-1, [2]) => "f1",
                        (-1, [1, 1]) => "f2",
                        _ => return,
                    };
                    out.insert((v, tag));
                });
            }
        }
        out
    }
}

fn small(v: &LatticeVector) -> Vec<i64> {
    v.coords().iter().map(|c| c.to_i64().unwrap()).collect()
}

fn oracle() -> Oracle {
    let y4 = build_y4();
    let g = y4.lattice().gram();
    let n = y4.lattice().rank();
    assert_eq!(n, TAIL + 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                assert_eq!(g[(i, j)], BigInt::from(0), "oracle assumes a diagonal Gram matrix");
            }
        }
    }
    assert_eq!(small(y4.canonical_class()), {
        let mut k = vec![1i64; n];
        k[0] = -3;
        k
    });
    Oracle {
        gram_diag: (0..n).map(|i| g[(i, i)].to_i64().unwrap()).collect(),
        curves: y4.curves().iter().map(|r| small(&r.class)).collect(),
        branch: y4.branch_curves().iter().map(|r| small(&r.class)).collect(),
    }
}

fn tag(t: Taxonomy) -> &'static str {
    match t {
        Taxonomy::B => "b",
        Taxonomy::F1 => "f1",
        Taxonomy::F2 => "f2",
        other => panic!("unexpected taxonomy {other:?}"),
    }
}

#[test]
fn enumeration_matches_brute_force_up_to_degree_four() {
    let y4 = build_y4();
    let expected = oracle().run(4);
    let got: BTreeSet<(Vec<i64>, &'static str)> = enumerate_negative_classes(&y4, 4)
        .unwrap()
        .into_iter()
        .map(|n| (small(&n.class), tag(n.taxonomy)))
        .collect();
    assert_eq!(got, expected);
    assert_eq!(expected.iter().filter(|(_, t)| *t == "b").count(), 10);
}

#[test]
fn every_enumerated_class_has_arithmetic_genus_zero() {
    let y4 = build_y4();
    let l = y4.lattice();
    let out = enumerate_negative_classes(&y4, 5).unwrap();
    for n in &out {
        let adj = l.norm(&n.class).unwrap() + l.pairing(&n.class, y4.canonical_class()).unwrap();
        assert_eq!(adj, BigInt::from(-2), "{:?}", n.class);
        assert_eq!(BigInt::from(n.degree), n.class.coords()[0]);
    }
    let mut sorted = out.clone();
    sorted.sort_by(|x, y| (x.degree, &x.class).cmp(&(y.degree, &y.class)));
    assert_eq!(sorted, out);
}
