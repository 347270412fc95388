//! One exact check per acceptance criterion, printed as a pass/fail line.
//! The test fails if any criterion fails.

use num_bigint::BigInt;

use x4geom::blowup::{
    build_s5, build_y4, enumerate_negative_classes, incidence_graph, verify_anticanonical, Taxonomy,
};
use x4geom::cover::pullback_lattice;
use x4geom::cremona::{
    build_fq_star, certify_reflection, conjugacy_invariants, involution_hits, random_general_points,
    verify_q_properties,
};
use x4geom::graph::{generalized_petersen_5_2, subdivide};
use x4geom::kodaira::{analyze_fixture, shioda_tate, FibrationFixture, FibrationType};
use x4geom::labels::{CurveLabel, Pair};
use x4geom::lattice::{discriminant_group, reflection_in_vector, ActionKind};
use x4geom::report::{reproduce_paper, ReproduceOptions, Status};
use x4geom::symmetry::{
    canonical_certificate, graph_automorphisms, induced_lattice_isometry, pair_action_group, restriction_image,
    symmetric_group_5,
};

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

type Verdict = Result<(), String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, what: impl Into<String>) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn c1_petersen() -> Verdict {
    let s5 = build_s5();
    ensure(s5.curves().len() == 10, "curve count")?;
    ensure(s5.curves().iter().all(|r| r.self_int == big(-1)), "self-intersections")?;
    let g = incidence_graph(&s5, None).map_err(|e| e.to_string())?;
    ensure((0..10).all(|v| g.degree(v) == 3), "3-regular")?;
    ensure(g.edge_count() == 15, format!("{} edges", g.edge_count()))?;
    let order = graph_automorphisms(&g).order();
    ensure(order == big(120), format!("|Aut| = {order}"))?;
    ensure(
        canonical_certificate(&g) == canonical_certificate(&generalized_petersen_5_2()),
        "not isomorphic to the Petersen graph",
    )
}

fn c2_extended_petersen() -> Verdict {
    let y4 = build_y4();
    let l = y4.lattice();
    let fs = y4.branch_curves();
    ensure(fs.len() == 10 && fs.iter().all(|r| r.self_int == big(-4)), "(-4)-classes")?;
    for (i, a) in fs.iter().enumerate() {
        for b in &fs[i + 1..] {
            ensure(l.pairing(&a.class, &b.class).unwrap() == big(0), format!("{} meets {}", a.label, b.label))?;
        }
    }
    let ones = y4
        .curves()
        .iter()
        .filter(|r| matches!(r.label, CurveLabel::FP(_)) && r.self_int == big(-1))
        .count();
    ensure(ones == 15, format!("{ones} (-1)-classes"))?;
    let g = incidence_graph(&y4, None).map_err(|e| e.to_string())?;
    ensure(g.edge_count() == 30, format!("{} edges", g.edge_count()))?;
    ensure(
        canonical_certificate(&g) == canonical_certificate(&subdivide(&generalized_petersen_5_2())),
        "incidence differs from the subdivided Petersen graph",
    )?;
    let sum = y4.branch_class().add(&y4.canonical_class().scale(&big(2)));
    ensure(sum.is_zero(), "sum F + 2K != 0")?;
    ensure(verify_anticanonical(&y4).holds, "anticanonical check")
}

fn c3_algebraic_lattice() -> Verdict {
    let cover = pullback_lattice(&build_y4()).map_err(|e| e.to_string())?;
    let s = cover.s_x4();
    ensure(s.rank() == 20 && s.is_even(), "rank/parity")?;
    ensure(s.determinant().magnitude() == big(4).magnitude(), format!("det {}", s.determinant()))?;
    ensure(s.signature() == (1, 19), format!("signature {:?}", s.signature()))?;
    let d = discriminant_group(s).map_err(|e| e.to_string())?;
    let nontrivial: Vec<BigInt> = d.invariant_factors.into_iter().filter(|x| *x > big(1)).collect();
    ensure(nontrivial == vec![big(2), big(2)], format!("discriminant {nontrivial:?}"))?;
    ensure(cover.index() == &big(512), format!("index {}", cover.index()))
}

fn fixture(name: &str) -> Result<x4geom::kodaira::FixtureAnalysis, String> {
    let cover = pullback_lattice(&build_y4()).map_err(|e| e.to_string())?;
    let fx = FibrationFixture::builtin(name).ok_or("missing fixture")?;
    analyze_fixture(&cover, &fx).map_err(|e| e.to_string())
}

fn c4_fig3() -> Verdict {
    let an = fixture("fig3")?;
    ensure(an.fibers.len() == 3, "three fibers")?;
    for f in &an.fibers {
        ensure(
            f.kodaira.to_string() == "D~6" && f.kodaira.m == 7 && f.kodaira.m1 == 4,
            format!("{} is {} (m {}, m1 {})", f.name, f.kodaira, f.kodaira.m, f.kodaira.m1),
        )?;
    }
    let kinds: Vec<_> = an.fibers.iter().map(|f| f.kodaira.clone()).collect();
    let st = shioda_tate(20, &kinds, 4, None).map_err(|e| e.to_string())?;
    ensure(st.r_p == 0, format!("r = {}", st.r_p))?;
    ensure(st.solutions == vec![(4, 4)], format!("solutions {:?}", st.solutions))?;
    ensure(st.det_t == Some(4) && st.n_p == Some(4), "det/n")
}

fn c5_fig4() -> Verdict {
    let cover = pullback_lattice(&build_y4()).map_err(|e| e.to_string())?;
    let an = fixture("fig4")?;
    ensure(
        an.fibers.len() == 2 && an.fibers.iter().all(|f| f.kodaira.to_string() == "A~9"),
        "two A~9 fibers",
    )?;
    ensure(an.same_class, "fiber classes differ")?;
    let d = cover.s_x4().pairing(&an.fibers[0].class, &an.fibers[1].class).unwrap();
    ensure(d == big(0), format!("D1.D2 = {d}"))?;
    ensure(an.classification.fibration_type == FibrationType::Type2, "not type 2")?;
    ensure(an.report.det_t == Some(4) && an.report.n_p == Some(5), format!("n = {:?}", an.report.n_p))
}

fn c6_fig5() -> Verdict {
    let an = fixture("fig5")?;
    ensure(
        an.fibers.iter().any(|f| f.kodaira.to_string() == "A~17" && f.kodaira.m1 == 18),
        "no A~17",
    )?;
    let small = an.fibers.iter().find(|f| f.kodaira.to_string() == "A~1").ok_or("no A~1 companion")?;
    ensure(small.components.iter().any(|c| c == "L(34)"), "companion does not contain L(34)")?;
    ensure(an.report.det_t == Some(4) && an.report.n_p == Some(3), format!("n = {:?}", an.report.n_p))?;
    ensure(an.classification.fibration_type == FibrationType::Type2, "fig5 not type 2")?;
    let an3 = fixture("fig3")?;
    ensure(an3.classification.fibration_type == FibrationType::Type1, "fig3 not type 1")?;
    ensure(
        an3.classification.ramification_pairings.iter().any(|(_, p)| *p == 1),
        "no ramification section",
    )
}

fn c7_negative_classes() -> Verdict {
    let y4 = build_y4();
    let l = y4.lattice();
    let out = enumerate_negative_classes(&y4, 8).map_err(|e| e.to_string())?;
    let mut b_labels = Vec::new();
    let branch = y4.branch_class();
    for n in &out {
        match n.taxonomy {
            Taxonomy::B => b_labels.push(n.label.clone().ok_or("b-class outside the table")?),
            Taxonomy::F1 | Taxonomy::F2 => {
                let g = l.norm(&n.class).unwrap() + l.pairing(&n.class, y4.canonical_class()).unwrap();
                ensure(g == big(-2), "v^2 + v.K != -2")?;
                ensure(l.pairing(&n.class, &branch).unwrap() == big(2), "v.B != 2")?;
            }
            other => return Err(format!("unexpected type {other:?}")),
        }
    }
    b_labels.sort();
    let expected: Vec<CurveLabel> = Pair::all().into_iter().map(CurveLabel::F).collect();
    ensure(b_labels == expected, format!("b-set {b_labels:?}"))
}

fn c8_symmetry() -> Verdict {
    let y4 = build_y4();
    let g = incidence_graph(&y4, None).map_err(|e| e.to_string())?;
    let aut = graph_automorphisms(&g);
    // F vertices come first, in pair order
    let fs: Vec<usize> = (0..10).collect();
    for (v, p) in fs.iter().zip(Pair::all()) {
        ensure(y4.curves()[*v].label == CurveLabel::F(p), "vertex order")?;
    }
    let r = restriction_image(&aut.group, &g, &fs).map_err(|e| e.to_string())?;
    ensure(r.order() == big(120), format!("restricted order {}", r.order()))?;
    ensure(r.same_group(&pair_action_group()), "restriction differs from the pair action")?;
    for tau in symmetric_group_5() {
        let m = induced_lattice_isometry(&tau, &y4).map_err(|e| format!("{tau:?}: {e}"))?;
        let g = y4.lattice().gram();
        ensure(&m.matrix().transpose().mul(g).unwrap().mul(m.matrix()).unwrap() == g, "Gram")?;
        ensure(&m.apply(y4.canonical_class()).unwrap() == y4.canonical_class(), "K moved")?;
    }
    Ok(())
}

fn c9_cremona() -> Verdict {
    let y4 = build_y4();
    let cover = pullback_lattice(&y4).map_err(|e| e.to_string())?;
    let fq = build_fq_star(&y4).map_err(|e| e.to_string())?;
    ensure(fq.is_involution(), "f_Q* not an involution")?;
    let rd = certify_reflection(&fq, &cover).map_err(|e| e.to_string())?;
    ensure(rd.fixed_g_classes == 12, format!("{} fixed G-classes", rd.fixed_g_classes))?;
    ensure(rd.fixed_rank_y == 19, format!("fixed rank {}", rd.fixed_rank_y))?;
    let e = y4
        .formal_sum(&[(1, "H"), (-1, "G(14)(23)"), (-1, "G(12)(34)"), (-1, "G(13)(24)")])
        .unwrap();
    ensure(reflection_in_vector(y4.lattice(), &e).unwrap() == fq, "f_Q* != R(H - Ga - Gb - Gc)")?;
    let lift = x4geom::lattice::Isometry::new(cover.s_x4(), rd.lift_matrix.clone()).map_err(|e| e.to_string())?;
    ensure(lift.is_involution(), "lift not an involution")?;
    ensure(lift.apply(&rd.e_x).unwrap() == rd.e_x.neg(), "lift does not negate e~")?;
    ensure(rd.invariants.norm == big(-4), format!("e~^2 = {}", rd.invariants.norm))?;
    ensure(rd.invariants.divisibility == big(2), format!("div = {}", rd.invariants.divisibility))?;
    let cmp = conjugacy_invariants(&rd, &cover).map_err(|e| e.to_string())?;
    ensure(cmp.differ, "fingerprint equals the root reflection's")?;
    ensure(
        rd.invariants.discriminant_action == ActionKind::Trivial,
        format!(
            "discriminant action is {:?}, not trivial (e~/2 lies in S* but not in S, so the reflection \
             acts on D as a nontrivial transvection)",
            rd.invariants.discriminant_action
        ),
    )
}

fn c10_quadratic_map() -> Verdict {
    let r = verify_q_properties().map_err(|e| e.to_string())?;
    ensure(r.base_points_are_diagonal, "(i)")?;
    ensure(r.collapses.iter().all(|c| c.holds && c.samples.len() == 5), "(ii)")?;
    ensure(r.n_stability.iter().all(|c| c.holds), "(iii) lines")?;
    ensure(r.fixed_points.iter().all(|c| c.fixed), "(iii) points")?;
    let pts = random_general_points(1000, 1_000_000, 0x5eed);
    let hits = involution_hits(&pts);
    ensure(hits == 1000, format!("Q∘Q = id on {hits}/1000"))
}

fn c11_flagged() -> Verdict {
    let report = reproduce_paper(&ReproduceOptions::default());
    let lin = report.check("flag.linear_equivalence").ok_or("no linear-equivalence entry")?;
    ensure(lin.status == Status::Flagged, "linear equivalence not FLAGGED")?;
    ensure(lin.payload["literal_holds"] == false, "literal verdict missing")?;
    ensure(lin.payload["total_transform_identity_holds"] == true, "corrected identity missing")?;
    let q = report.check("flag.q_labeling").ok_or("no q-labeling entry")?;
    ensure(q.status == Status::Flagged, "q labeling not FLAGGED")?;
    ensure(
        q.payload["computed"] == serde_json::json!(["[1,0,0]", "[0,0,1]", "[0,1,0]"]),
        format!("computed labels {}", q.payload["computed"]),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        ("1 Petersen configuration", c1_petersen),
        ("2 extended Petersen configuration", c2_extended_petersen),
        ("3 algebraic lattice", c3_algebraic_lattice),
        ("4 three D~6 fibers (fig3)", c4_fig3),
        ("5 two A~9 fibers (fig4)", c5_fig4),
        ("6 A~17 fibration and types (fig5)", c6_fig5),
        ("7 negative-class taxonomy", c7_negative_classes),
        ("8 symmetry", c8_symmetry),
        ("9 Cremona reflection", c9_cremona),
        ("10 quadratic map", c10_quadratic_map),
        ("11 flagged items", c11_flagged),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        match f() {
            Ok(()) => println!("PASS  criterion {name}"),
            Err(why) => {
                println!("FAIL  criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
