//! Smith form, discriminant group and a root reflection on a small lattice.
//!
//! Run with `cargo run --example lattice_basics`.

use x4geom::lattice::{
    discriminant_action, discriminant_group, reflection_in_vector, smith_normal_form, IntLattice, IntMatrix,
    LatticeVector,
};

fn main() -> x4geom::Result<()> {
    // A2 ⊕ <-4>: determinant 3·(-4)
    let gram = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, 0], vec![0, 0, -4]])?;
    let l = IntLattice::new(gram.clone())?;
    println!("det = {}, signature = {:?}, even = {}", l.determinant(), l.signature(), l.is_even());

    let snf = smith_normal_form(&gram);
    println!("smith diagonal = {:?}", snf.diagonal().iter().map(|d| d.to_string()).collect::<Vec<_>>());

    let d = discriminant_group(&l)?;
    println!("discriminant group order {} with factors {:?}", d.order(), d.invariant_factors);

    let root = LatticeVector::from_i64(&[1, 0, 0]);
    let r = reflection_in_vector(&l, &root)?;
    println!("reflection in a root is an involution: {}", r.is_involution());
    println!("its action on the discriminant group: {:?}", discriminant_action(&r)?.kind);

    let e = LatticeVector::from_i64(&[0, 0, 1]);
    let s = reflection_in_vector(&l, &e)?;
    println!("reflection in the (-4)-vector acts as {:?}", discriminant_action(&s)?.kind);
    Ok(())
}
