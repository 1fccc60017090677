//! The two-variable Chebyshev-type polynomials: construction by the
//! alternating binomial sum, by the three-term recurrence, and
//! evaluation both at rationals and inside the algebra.
//!
//! Run with: cargo run --example chebyshev_family

use num::{BigInt, BigRational};
use qmat2::{f_eval, f_rec, f_sum, quantum_determinant, QMatrix2};

fn main() {
    println!("f_n(x, y) with f_{{n+1}} = x f_n - y f_{{n-1}}:");
    for n in -1..=6i64 {
        let f = f_sum(n).unwrap();
        assert_eq!(f, f_rec(n).unwrap());
        println!("  f_{n:2} = {f}");
    }

    // weighted homogeneity: x carries weight 1, y weight 2
    for n in 0..=24u32 {
        assert!(f_sum(n as i64).unwrap().is_weighted_homogeneous(n));
    }
    println!("\nevery f_n is homogeneous of weighted degree n (checked to 24)");

    // rational evaluation: f_3(2, 1) = 8 - 4
    let f3 = f_sum(3).unwrap();
    let two = BigRational::from(BigInt::from(2));
    let one = BigRational::from(BigInt::from(1));
    println!("f_3(2, 1) = {}", f3.eval_rational(&two, &one));

    // evaluation at the twisted trace and the determinant, where the
    // commutation precondition holds
    let gen = QMatrix2::generator();
    let tau = gen.tau();
    let delta = quantum_determinant();
    println!("\nf_2(tau, delta) = {}", f_eval(2, &tau, &delta).unwrap());

    // non-commuting arguments are rejected, not silently accepted
    let a = gen.e11.clone();
    let b = gen.e12.clone();
    println!("f_2(a, b) -> {}", f_eval(2, &a, &b).unwrap_err());
}
