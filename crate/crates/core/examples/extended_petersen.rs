//! `Y4`: blowing up the fifteen nodes of the line configuration turns the
//! lines into ten disjoint (-4)-curves joined through fifteen (-1)-curves.
//!
//! Run with `cargo run --example extended_petersen`; prints Graphviz source.

use x4geom::blowup::{build_y4, incidence_graph, verify_anticanonical};

fn main() -> x4geom::Result<()> {
    let y4 = build_y4();
    let l = y4.lattice();
    println!("rank {}, K^2 = {}", l.rank(), l.norm(y4.canonical_class())?);
    let check = verify_anticanonical(&y4);
    println!("sum F(ij) = -2K: {}", check.holds);
    let g = incidence_graph(&y4, None)?;
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    print!("{}", g.to_dot("extended_petersen"));
    Ok(())
}
