//! Property tests for the algebraic invariants the library relies on.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use x4geom::blowup::build_y4;
use x4geom::cover::pullback_lattice;
use x4geom::cremona::{quadratic_map, ProjPoint};
use x4geom::graph::LabeledGraph;
use x4geom::kodaira::{recognize_fiber, FiberCandidate, FibrationFixture};
use x4geom::lattice::{
    discriminant_group, reflection_in_vector, saturate_overlattice, smith_normal_form, IntLattice, IntMatrix,
    LatticeVector, RationalSpan,
};
use x4geom::symmetry::{
    brute_force_automorphisms, graph_automorphisms, induced_lattice_isometry, pair_action, Perm, PermutationGroup,
    Tau,
};

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-20i64..=20, rows * cols)
        .prop_map(move |v| IntMatrix::from_rows(&v.chunks(cols).map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap())
}

fn symmetric(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-6i64..=6, n * n).prop_map(move |v| {
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                rows[i][j] = v[i * n + j];
                rows[j][i] = v[i * n + j];
            }
        }
        IntMatrix::from_rows(&rows).unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn tau() -> impl Strategy<Value = Tau> {
    Just([0u8, 1, 2, 3, 4]).prop_shuffle()
}

fn compose(a: &Tau, b: &Tau) -> Tau {
    let mut c = [0u8; 5];
    for i in 0..5 {
        c[i] = a[b[i] as usize];
    }
    c
}

fn graph(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u64..3, n * (n - 1) / 2).prop_map(move |w| {
            let mut g = LabeledGraph::new((0..n).map(|i| format!("v{i}")).collect()).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if w[k] > 0 {
                        g.add_edge(u, v, w[k]).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Conjugates a candidate's intersection matrix by a permutation of its
/// components.
fn permuted(fc: &FiberCandidate, p: &[usize]) -> FiberCandidate {
    let m = fc.int_matrix.rows();
    let rows: Vec<Vec<BigInt>> = (0..m)
        .map(|i| (0..m).map(|j| fc.int_matrix[(p[i], p[j])].clone()).collect())
        .collect();
    let names = p.iter().map(|&i| fc.names[i].clone()).collect();
    FiberCandidate::from_intersections(names, IntMatrix::from_rows(&rows).unwrap()).unwrap()
}

#[allow(clippy::needless_range_loop)]
fn cycle_candidate(len: usize) -> FiberCandidate {
    let mut rows = vec![vec![0i64; len]; len];
    for i in 0..len {
        rows[i][i] = -2;
        let j = (i + 1) % len;
        rows[i][j] += 1;
        rows[j][i] += 1;
    }
    FiberCandidate::from_intersections((0..len).map(|i| format!("c{i}")).collect(), IntMatrix::from_rows(&rows).unwrap())
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_round_trips(m in matrix(3, 4)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(s.u.determinant().unwrap().abs().is_one());
        prop_assert!(s.v.determinant().unwrap().abs().is_one());
        for i in 0..3 {
            for j in 0..4 {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let diag = s.diagonal();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        prop_assert_eq!(diag.iter().filter(|x| !x.is_zero()).count(), s.rank);
    }

    #[test]
    fn reflections_are_involutions(e in proptest::collection::vec(-3i64..=3, 4)) {
        let l = IntLattice::diagonal(&[1, -1, -1, -2]).unwrap();
        let e = LatticeVector::from_i64(&e);
        let r = reflection_in_vector(&l, &e);
        prop_assume!(r.is_ok());
        let r = r.unwrap();
        prop_assert!(r.is_involution());
        prop_assert_eq!(r.apply(&e).unwrap(), e.neg());
        for i in 0..4 {
            let x = LatticeVector::unit(4, i);
            let moved = r.apply(&x).unwrap().sub(&x);
            // x - R(x) is a multiple of e
            let ee = l.norm(&e).unwrap();
            let k = BigInt::from(2) * l.pairing(&e, &x).unwrap() / &ee;
            prop_assert_eq!(moved, e.scale(&-k));
        }
    }

    #[test]
    fn saturation_index_squares_into_the_determinant(
        a in proptest::collection::vec(1i64..=4, 3),
        glue in proptest::collection::vec(0i64..=1, 3),
    ) {
        let ambient = IntLattice::diagonal(&a.iter().map(|x| -4 * x).collect::<Vec<_>>()).unwrap();
        let mut nums: Vec<Vec<BigInt>> = (0..3)
            .map(|i| (0..3).map(|j| big(if i == j { 2 } else { 0 })).collect())
            .collect();
        nums.push(glue.iter().map(|&x| big(x)).collect());
        let span = RationalSpan::new(ambient.clone(), nums, big(2)).unwrap();
        let sat = saturate_overlattice(&span).unwrap();
        let expected = if glue.iter().any(|&x| x != 0) { 2 } else { 1 };
        prop_assert_eq!(&sat.index, &big(expected));
        prop_assert_eq!(
            sat.lattice.determinant() * &sat.index * &sat.index,
            ambient.determinant()
        );
    }

    #[test]
    fn discriminant_order_is_the_determinant(g in symmetric(3)) {
        let l = IntLattice::new(g).unwrap();
        prop_assume!(!l.determinant().is_zero());
        let d = discriminant_group(&l).unwrap();
        prop_assert_eq!(d.order(), l.determinant().abs());
        for w in d.invariant_factors.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn quadratic_map_is_an_involution_off_the_triangle(c in proptest::array::uniform3(
        prop_oneof![-1_000_000i64..=-1, 1i64..=1_000_000]
    )) {
        let p = ProjPoint::from_i64(c).unwrap();
        let q = quadratic_map(&p).unwrap();
        prop_assert_eq!(quadratic_map(&q).unwrap(), p);
    }

    #[test]
    fn fiber_recognition_ignores_component_order(p in permutation(8), len in 2usize..=12) {
        let cover = pullback_lattice(&build_y4()).unwrap();
        let fx = FibrationFixture::builtin("fig3").unwrap();
        for fc in fx.candidates(&cover).unwrap() {
            let base = recognize_fiber(&fc).unwrap();
            let q: Vec<usize> = p.iter().copied().filter(|&i| i < fc.names.len()).collect();
            let moved = recognize_fiber(&permuted(&fc, &q)).unwrap();
            prop_assert_eq!(moved.to_string(), base.to_string());
            let realigned: Vec<u64> = q.iter().map(|&i| base.multiplicities[i]).collect();
            prop_assert_eq!(moved.multiplicities, realigned);
        }
        let cyc = cycle_candidate(len);
        let shuffled: Vec<usize> = {
            let mut v: Vec<usize> = p.iter().copied().filter(|&i| i < len).collect();
            v.extend(8..len);
            v
        };
        let t = recognize_fiber(&permuted(&cyc, &shuffled)).unwrap();
        prop_assert_eq!(t.to_string(), format!("A~{}", len - 1));
        prop_assert!(t.multiplicities.iter().all(|&m| m == 1));
    }

    #[test]
    fn search_agrees_with_brute_force(g in graph(7)) {
        let found = graph_automorphisms(&g);
        let brute: BTreeSet<Perm> = brute_force_automorphisms(&g).into_iter().collect();
        prop_assert_eq!(found.order(), BigInt::from(brute.len()));
        let elements: BTreeSet<Perm> = found.group.elements().into_iter().collect();
        prop_assert_eq!(elements, brute);
    }

    #[test]
    fn group_order_divides_factorial(n in 1usize..=7, gens in proptest::collection::vec(permutation(7), 0..3)) {
        let gens: Vec<Perm> = gens
            .into_iter()
            .map(|v| Perm::from_images(v.into_iter().filter(|&i| i < n).collect()).unwrap())
            .collect();
        let g = PermutationGroup::new(n, gens.clone()).unwrap();
        prop_assert!(factorial(n).is_multiple_of(&g.order()));
        prop_assert_eq!(BigInt::from(g.elements().len()), g.order());
        prop_assert!(gens.iter().all(|p| g.contains(p)));
    }

    #[test]
    fn pair_action_is_a_homomorphism(a in tau(), b in tau()) {
        let ab = compose(&a, &b);
        prop_assert_eq!(
            pair_action(&ab).unwrap(),
            pair_action(&b).unwrap().then(&pair_action(&a).unwrap())
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn induced_isometries_compose(a in tau(), b in tau()) {
        let y4 = build_y4();
        let ma = induced_lattice_isometry(&a, &y4).unwrap();
        let mb = induced_lattice_isometry(&b, &y4).unwrap();
        let mab = induced_lattice_isometry(&compose(&a, &b), &y4).unwrap();
        prop_assert_eq!(ma.matrix().mul(mb.matrix()).unwrap(), mab.matrix().clone());
        prop_assert_eq!(mab.apply(&y4.branch_class()).unwrap(), y4.branch_class());
    }
}
