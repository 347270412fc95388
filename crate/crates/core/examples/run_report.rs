//! Runs every verification and prints one line per check.
//!
//! Run with `cargo run --release --example run_report`.

use x4geom::report::{reproduce_paper, ReproduceOptions};

fn main() {
    let report = reproduce_paper(&ReproduceOptions::default());
    for c in &report.checks {
        println!("{:<8} {:<40} {}", format!("{:?}", c.status).to_uppercase(), c.id, c.summary);
    }
    std::process::exit(report.exit_code());
}
