//! The quantum determinant and the quantum adjoint: centrality, the two
//! defining expressions, the adjoint product identity, and how the
//! adjoint's own invariants line up with the original matrix.
//!
//! Run with: cargo run --example adjoint_and_determinant

use qmat2::{quantum_determinant, AlgebraElement, Gen, QMatrix2};

fn main() {
    let gen = QMatrix2::generator();
    let delta = quantum_determinant();

    println!("delta = qdet(A) = {delta}");
    assert_eq!(delta, gen.qdet());

    // central: commutes with every generator
    for g in Gen::ALL {
        let ge = AlgebraElement::gen(g);
        assert_eq!(&delta * &ge, &ge * &delta);
    }
    println!("delta commutes with a, b, c, d");

    // the adjoint and the product identity A adj(A) = adj(A) A = delta E
    let adj = gen.adjoint();
    println!("\nadj(A) = {adj}");
    let delta_e = QMatrix2::scalar(delta.clone());
    assert_eq!(&gen * &adj, delta_e);
    assert_eq!(&adj * &gen, delta_e);
    println!("A adj(A) = adj(A) A = delta E");

    // the adjoint is a q^-1 quantum matrix; taken at p = -1 its twisted
    // traces and determinant reproduce those of A, and its own adjoint
    // undoes the first one
    assert_eq!(adj.tau_p(-1), gen.tau());
    assert_eq!(adj.tau_prime_p(-1), gen.tau_prime());
    assert_eq!(adj.qdet_p(-1), delta);
    assert_eq!(adj.adjoint_p(-1), gen);
    println!("adjoint invariants at p = -1 match the original matrix");

    println!("\ntau  = tr(A C)    = {}", gen.tau());
    println!("tau' = tr(C^-1 A) = {}", gen.tau_prime());
}
