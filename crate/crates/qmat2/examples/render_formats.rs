//! Text, LaTeX, and canonical JSON renderings of elements and matrices,
//! including the parse -> emit round trip.
//!
//! Run with: cargo run --example render_formats

use qmat2::{quantum_determinant, AlgebraElement, QMatrix2};

fn main() {
    let gen = QMatrix2::generator();
    let tau = gen.tau();
    let delta = quantum_determinant();

    println!("text : tau = {tau}");
    println!("latex: tau = {}", tau.latex());
    println!("json : tau = {}", tau.to_json_string());
    println!();
    println!("text : delta = {delta}");
    println!("latex: delta = {}", delta.latex());

    // coefficients render in the v variable when printed standalone
    let gap = &qmat2::QCoeff::q_power(1) - &qmat2::QCoeff::q_power(-1);
    println!("\nq - q^-1 as a bare coefficient: {gap}");

    // matrices serialize entry by entry; parsing an emitted document and
    // re-emitting reproduces it byte for byte
    let square = gen.pow(2);
    let emitted = square.to_json_string();
    let parsed = QMatrix2::from_json_str(&emitted).unwrap();
    assert_eq!(parsed, square);
    assert_eq!(parsed.to_json_string(), emitted);
    println!("\nA^2 json round-trips byte-identically ({} bytes)", emitted.len());

    let element = AlgebraElement::from_json_str(&tau.to_json_string()).unwrap();
    assert_eq!(element, tau);
    println!("element json round-trips as well");

    println!("\nA^2 in LaTeX:\n{}", square.latex());
}
