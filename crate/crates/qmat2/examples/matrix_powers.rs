//! Computes powers of the generator matrix three ways and shows they
//! coincide: brute-force repeated multiplication against both
//! closed-form routes through the Chebyshev-type family.
//!
//! Run with: cargo run --example matrix_powers

use qmat2::closedform::{power_ch1, power_ch2};
use qmat2::QMatrix2;

fn main() {
    let gen = QMatrix2::generator();

    println!("generator matrix A = {gen}\n");

    for n in 1..=4u32 {
        let brute = gen.pow(n);
        let route1 = power_ch1(&gen, n).unwrap();
        let route2 = power_ch2(&gen, n).unwrap();
        assert_eq!(brute, route1);
        assert_eq!(brute, route2);

        println!("A^{n} (brute force == both closed forms):");
        for (label, e) in ["a", "b", "c", "d"].iter().zip(brute.entries()) {
            println!("  {label}_{n} = {e}");
        }
        println!();
    }

    // the closed forms stay cheap at exponents where repeated
    // multiplication already produces hundreds of monomials
    let n = 12;
    let big = power_ch1(&gen, n).unwrap();
    println!(
        "A^{n} via the closed form: {} monomials in the top-left entry",
        big.e11.num_terms()
    );
    assert_eq!(big, gen.pow(n));
    println!("matches the brute-force power exactly");
}
