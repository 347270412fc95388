//! The quadratic transformation `Q`, its action on `Pic(Y4)` and the lifted
//! reflection on `S_X4`.
//!
//! Run with `cargo run --example cremona_reflection`.

use x4geom::blowup::build_y4;
use x4geom::cover::pullback_lattice;
use x4geom::cremona::{
    build_fq_star, certify_reflection, conjugacy_invariants, quadratic_map, verify_q_properties, ProjPoint,
};

fn main() -> x4geom::Result<()> {
    let p = ProjPoint::from_i64([1, 2, 3])?;
    let q = quadratic_map(&p)?;
    println!("Q{p} = {q}, Q{q} = {}", quadratic_map(&q)?);
    println!("Q at a base point: {:?}", quadratic_map(&ProjPoint::from_i64([0, 1, 0])?).err());
    let props = verify_q_properties()?;
    println!("properties hold: {}", props.holds());
    for c in &props.collapses {
        println!("  {} {} -> {}", c.name, c.line, c.images[0]);
    }

    let y4 = build_y4();
    let cover = pullback_lattice(&y4)?;
    let fq = build_fq_star(&y4)?;
    let rd = certify_reflection(&fq, &cover)?;
    println!("fixed rank {}, e_y^2 = {}, f_Q* is a reflection: {}", rd.fixed_rank_y, rd.e_y_norm, rd.fq_is_reflection);
    let cmp = conjugacy_invariants(&rd, &cover)?;
    println!("lifted reflection: {:?}", cmp.reflection);
    println!("root reflection:   {:?}", cmp.root_reference);
    Ok(())
}
