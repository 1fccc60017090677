//! Runs the whole verification suite and prints one line per check.
//!
//! Run with: cargo run --example verify_suite

use qmat2::run_suite;

fn main() {
    let max = 4;
    let reports = run_suite(max);
    for r in &reports {
        println!("{}", r.line());
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("\n{} checks at max power {max}, {failed} failed", reports.len());

    // boundary notes travel with the reports
    for r in reports.iter().filter(|r| r.name == "power_trace").take(1) {
        if let Some(note) = &r.note {
            println!("note on {}: {note}", r.name);
        }
    }
    assert_eq!(failed, 0);
}
