//! Numerical negative classes on `Y4` up to an H-degree bound, sorted by
//! degree and tagged b, f1 or f2.
//!
//! Run with `cargo run --release --example negative_classes -- 4`.

use x4geom::blowup::{build_y4, enumerate_negative_classes, Taxonomy};

fn main() -> x4geom::Result<()> {
    let bound: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let y4 = build_y4();
    let out = enumerate_negative_classes(&y4, bound)?;
    for t in [Taxonomy::B, Taxonomy::F1, Taxonomy::F2] {
        println!("{}: {}", t.as_str(), out.iter().filter(|n| n.taxonomy == t).count());
    }
    for n in out.iter().filter(|n| n.label.is_none()).take(12) {
        let meets: Vec<String> = n.branch_pairings.iter().map(|(l, p)| format!("{l}:{p}")).collect();
        println!(
            "deg {} {:<3} meets {}",
            n.degree,
            n.taxonomy.as_str(),
            meets.join(" ")
        );
    }
    Ok(())
}
