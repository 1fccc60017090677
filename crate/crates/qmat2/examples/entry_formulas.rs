//! The explicit entry formulas for powers: all eight left/right
//! expressions for the entries of A^n, the determinant-free diagonal
//! variants, and the adjoint-power entries with their cross identities.
//!
//! Run with: cargo run --example entry_formulas

use qmat2::{adjoint_power_closed, entries_alt, entries_closed, EntryVariant, QMatrix2};

fn main() {
    let gen = QMatrix2::generator();

    let n = 3;
    let brute = gen.pow(n);
    println!("entries of A^{n}:");
    for variant in EntryVariant::BOTH {
        let entries = entries_closed(n, variant).unwrap();
        for (closed, brute_entry) in entries.iter().zip(brute.entries()) {
            assert_eq!(closed, brute_entry);
        }
        println!("  {variant:?} variant matches brute force");
    }
    for (label, e) in ["a", "b", "c", "d"].iter().zip(brute.entries()) {
        println!("  {label}_{n} = {e}");
    }

    // the alternative diagonal expressions hold from n = 0 up
    for n in 0..=5u32 {
        let pw = gen.pow(n);
        for variant in EntryVariant::BOTH {
            let (an, dn) = entries_alt(n, variant).unwrap();
            assert_eq!(an, pw.e11);
            assert_eq!(dn, pw.e22);
        }
    }
    println!("\ndeterminant-free diagonal formulas hold for n = 0..=5");

    // adjoint powers: closed form and the cross identities
    // adj_a_m = d_m, adj_b_m = -q^-m b_m, adj_c_m = -q^m c_m, adj_d_m = a_m
    let m = 3;
    let adj_pow = gen.adjoint().pow(m);
    for variant in EntryVariant::BOTH {
        assert_eq!(adjoint_power_closed(m, variant).unwrap(), adj_pow);
    }
    let plain = gen.pow(m);
    let p = i64::from(m);
    assert_eq!(adj_pow.e11, plain.e22);
    assert_eq!(adj_pow.e12, (-&plain.e12).scale_v(-2 * p));
    assert_eq!(adj_pow.e21, (-&plain.e21).scale_v(2 * p));
    assert_eq!(adj_pow.e22, plain.e11);
    println!("adj(A)^{m} closed forms and cross identities verified");
    println!("  top-right of adj(A)^{m} = {}", adj_pow.e12);
}
