//! Specializing v = 1 collapses the algebra onto the commutative
//! polynomial ring: symbolic powers then agree with plain numeric 2x2
//! matrix powers, exactly, over the rationals.
//!
//! Run with: cargo run --example classical_limit

use num::{BigInt, BigRational};
use qmat2::identities::check_classical_limit;
use qmat2::QMatrix2;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn main() {
    let gen = QMatrix2::generator();
    let one = rat(1, 1);

    // the shear matrix [[1, 1], [0, 1]]: its cube has upper-right 3
    let shear = [rat(1, 1), rat(1, 1), rat(0, 1), rat(1, 1)];
    let cube = gen.pow(3);
    let upper_right = cube.e12.eval_at(&one, &shear).unwrap();
    println!("[[1,1],[0,1]]^3 upper-right entry via the symbolic cube: {upper_right}");

    // the full check also compares against the commutative entry
    // formulas built from the trace and determinant
    for n in 1..=8 {
        let report = check_classical_limit(n, &shear);
        assert!(report.passed, "{report}");
    }
    println!("shear assignment passes for n = 1..=8");

    let generic = [rat(2, 1), rat(1, 1), rat(1, 1), rat(1, 1)];
    let fractional = [rat(1, 2), rat(2, 3), rat(-3, 1), rat(5, 7)];
    for vals in [&generic, &fractional] {
        for n in 1..=8 {
            let report = check_classical_limit(n, vals);
            assert!(report.passed, "{report}");
        }
    }
    println!("integer and fractional assignments pass for n = 1..=8");

    // the deformation coefficient q - q^-1 vanishes at v = 1
    let gap = &qmat2::QCoeff::q_power(1) - &qmat2::QCoeff::q_power(-1);
    println!("(q - q^-1) at v = 1: {}", gap.specialize(&one).unwrap());
}
