//! The ten lines on the quintic del Pezzo surface `S5` and their Petersen
//! incidence graph.
//!
//! Run with `cargo run --example petersen_configuration`.

use x4geom::blowup::{build_s5, find_conic_fibrations, incidence_graph, verify_anticanonical};
use x4geom::graph::generalized_petersen_5_2;
use x4geom::symmetry::{canonical_certificate, graph_automorphisms};

fn main() -> x4geom::Result<()> {
    let s5 = build_s5();
    for r in s5.curves() {
        println!("{:<6} {:?}  square {}", r.label.to_string(), r.class.0.iter().map(|c| c.to_string()).collect::<Vec<_>>(), r.self_int);
    }
    println!("sum of lines = -2K: {}", verify_anticanonical(&s5).holds);

    let g = incidence_graph(&s5, None)?;
    let same = canonical_certificate(&g) == canonical_certificate(&generalized_petersen_5_2());
    println!("{} vertices, {} edges, isomorphic to GP(5,2): {same}", g.vertex_count(), g.edge_count());
    println!("automorphism group order: {}", graph_automorphisms(&g).order());

    for f in find_conic_fibrations(&s5) {
        let parts: Vec<String> = f.decompositions.iter().map(|(a, b)| format!("{a}+{b}")).collect();
        println!("conic bundle {:?}: {}", f.class.0.iter().map(|c| c.to_string()).collect::<Vec<_>>(), parts.join(", "));
    }
    Ok(())
}
