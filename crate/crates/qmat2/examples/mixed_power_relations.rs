//! The mixed-power relations between entries of A^m and A^n: the five
//! relation families, their case branches, and the q^n-quantum structure
//! of A^n they specialize to at m = n.
//!
//! Run with: cargo run --example mixed_power_relations

use qmat2::identities::{check_rq, check_vzw, vzw_relation_reports};
use qmat2::QMatrix2;

fn main() {
    // one pair in detail, with the active branch labeled
    let (m, n) = (2, 3);
    println!("relation families for (m, n) = ({m}, {n}):");
    for report in vzw_relation_reports(m, n) {
        println!("  {}   [{}]", report.line(), report.note.as_deref().unwrap_or(""));
    }

    // the whole grid up to 5, both branches included
    let max = 5;
    let mut count = 0;
    for m in 0..=max {
        for n in 0..=max {
            let report = check_vzw(m, n);
            assert!(report.passed, "{report}");
            count += 1;
        }
    }
    println!("\nall {count} pairs with m, n <= {max} pass");

    // at m = n the relations say A^n is a q^n-quantum matrix
    let gen = QMatrix2::generator();
    for n in 0..=5u32 {
        let report = check_rq(&gen.pow(n), i64::from(n));
        assert!(report.passed, "{report}");
    }
    println!("A^n satisfies the defining relations at deformation q^n (n <= {max})");

    // and its quantum determinant is the n-th power of the determinant
    for n in 0..=5u32 {
        let report = qmat2::identities::check_qdet_power(n);
        assert!(report.passed, "{report}");
    }
    println!("qdet(A^n) = qdet(A)^n (n <= {max})");
}
