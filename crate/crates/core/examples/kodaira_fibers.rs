//! Recognizes the fibers of the three shipped fibrations and solves the
//! Shioda-Tate relations.
//!
//! Run with `cargo run --example kodaira_fibers`.

use x4geom::blowup::build_y4;
use x4geom::cover::pullback_lattice;
use x4geom::kodaira::{analyze_fixture, FibrationFixture};

fn main() -> x4geom::Result<()> {
    let cover = pullback_lattice(&build_y4())?;
    for name in ["fig3", "fig4", "fig5"] {
        let fx = FibrationFixture::builtin(name).expect("shipped fixture");
        let an = analyze_fixture(&cover, &fx)?;
        let kinds: Vec<String> = an.fibers.iter().map(|f| f.kodaira.to_string()).collect();
        println!(
            "{name}: {} | r = {} | (det T, n) = {:?} | {:?} | same class {}",
            kinds.join(" + "),
            an.report.r_p,
            an.report.solutions,
            an.classification.fibration_type,
            an.same_class
        );
    }
    Ok(())
}
