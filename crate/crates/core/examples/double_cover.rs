//! The algebraic lattice of the double cover `X4 -> Y4` and its
//! transcendental complement.
//!
//! Run with `cargo run --example double_cover`.

use x4geom::blowup::build_y4;
use x4geom::cover::{pullback_lattice, pullback_scales_form, ramification_sum_is_pullback, transcendental_invariants};
use x4geom::lattice::discriminant_group;

fn main() -> x4geom::Result<()> {
    let cover = pullback_lattice(&build_y4())?;
    let s = cover.s_x4();
    println!("rank {}, even {}, det {}, signature {:?}", s.rank(), s.is_even(), s.determinant(), s.signature());
    println!("index over the pullback: {}", cover.index());
    println!("pullback doubles the form: {}", pullback_scales_form(&cover)?);
    println!("sum L(ij) = pullback of -K: {}", ramification_sum_is_pullback(&cover)?);
    let d = discriminant_group(s)?;
    println!("discriminant factors: {:?}", d.invariant_factors.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let t = transcendental_invariants(&cover)?;
    println!("transcendental Gram candidates: {:?}, chosen {:?}", t.candidates, t.t_gram);
    Ok(())
}
