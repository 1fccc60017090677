//! Exact symbolic computation for 2x2 quantum matrices.
//!
//! The crate implements the coordinate algebra on four generators
//! `a, b, c, d` subject to the q-commutation relations, with every
//! element kept in PBW normal form over the Laurent ring `Z[v, v^-1]`
//! (`v = q^(1/2)`). On top of the normal form it provides:
//!
//! - [`QMatrix2`]: 2x2 matrices over the algebra, with brute-force
//!   powers, the quantum determinant, the quantum adjoint, and the
//!   twisted traces;
//! - [`FPoly`] and [`f_eval`]: the two-variable Chebyshev-type family
//!   driving the closed-form power formulas;
//! - [`closedform`]: both closed-form routes to `A^n` and the explicit
//!   entry formulas, including adjoint powers;
//! - [`identities`]: a mechanical verification suite that checks every
//!   identity exactly and reports monomial-level failure witnesses.
//!
//! All arithmetic is exact (arbitrary-precision integers; no floats and
//! no tolerances), and all values are immutable: operations are pure and
//! safe to share across threads.
//!
//! The `examples/` directory demonstrates each capability end to end;
//! the `qmat2` binary exposes the same functionality as a small CLI
//! (`power`, `fpoly`, `verify`, `vzw`).

pub mod algebra;
pub mod cheb;
pub mod closedform;
pub mod coeff;
pub mod error;
pub mod identities;
pub mod matrix;

pub use algebra::{quantum_determinant, AlgebraElement, Gen, PbwMonomial};
pub use cheb::{f_eval, f_rec, f_sum, FPoly};
pub use closedform::{
    adjoint_power_closed, entries_alt, entries_closed, power_ch1, power_ch2, EntryVariant,
};
pub use coeff::QCoeff;
pub use error::{Error, Result};
pub use identities::{run_suite, CheckReport, Witness};
pub use matrix::QMatrix2;
