//! `Σ5` acting on the configuration: the graph restriction and the lattice
//! isometries realizing every label permutation.
//!
//! Run with `cargo run --example symmetry_section`.

use x4geom::blowup::{build_y4, incidence_graph};
use x4geom::labels::CurveLabel;
use x4geom::symmetry::{
    graph_automorphisms, induced_lattice_isometry, pair_action, pair_action_group, restriction_image,
    symmetric_group_5,
};

fn main() -> x4geom::Result<()> {
    let y4 = build_y4();
    let g = incidence_graph(&y4, None)?;
    let aut = graph_automorphisms(&g);
    let fs: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| matches!(y4.curves()[v].label, CurveLabel::F(_)))
        .collect();
    let r = restriction_image(&aut.group, &g, &fs)?;
    println!("|Aut| = {}, restricted order = {}, equals pair action: {}", aut.order(), r.order(), r.same_group(&pair_action_group()));

    println!("pair action of (0 1): {}", pair_action(&[1, 0, 2, 3, 4])?);
    let mut n = 0;
    for tau in symmetric_group_5() {
        induced_lattice_isometry(&tau, &y4)?;
        n += 1;
    }
    println!("{n} permutations lift to isometries fixing K");
    Ok(())
}
