//! Closed-form expressions for matrix powers and their entries.
//!
//! Writing `tau`, `tau'` for the twisted traces and `delta` for the
//! quantum determinant, a power of a quantum matrix `A` factors through
//! the Chebyshev-type family in two ways:
//!
//! ```text
//! A^n = A C^(-n+1) f_{n-1}(tau)  -  C^(-n) delta f_{n-2}(tau)
//!     = f_{n-1}(tau') C^(n-1) A  -  f_{n-2}(tau') delta C^n
//! ```
//!
//! for n >= 1, where `C = c_power(1)` and `f_n(tau) = f_n(tau, delta)`.
//! Comparing entries yields explicit formulas for the entries of `A^n`
//! and, applied to the adjoint (a `q^-1`-quantum matrix with the same
//! invariants), of `adj(A)^m`. Everything here is exact; the brute-force
//! oracle is [`QMatrix2::pow`].

use crate::algebra::{AlgebraElement, Gen};
use crate::cheb::f_eval;
use crate::error::{Error, Result};
use crate::matrix::QMatrix2;

/// Which of the two stated forms of an entry formula to use: the
/// `tau`-form keeps the generator on the left of the polynomial factor,
/// the `tau'`-form keeps it on the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryVariant {
    /// generator on the left, polynomials in `tau`
    Left,
    /// polynomials in `tau'` on the left, generator on the right
    Right,
}

impl EntryVariant {
    pub const BOTH: [EntryVariant; 2] = [EntryVariant::Left, EntryVariant::Right];
}

/// `A^n` via the `tau`-route: `A C^(-n+1) f_{n-1}(tau) - C^(-n) delta f_{n-2}(tau)`.
pub fn power_ch1(m: &QMatrix2, n: u32) -> Result<QMatrix2> {
    if n == 0 {
        return Err(Error::ZeroPowerIndex);
    }
    let n = i64::from(n);
    let tau = m.tau();
    let delta = m.qdet();
    let f1 = f_eval(n - 1, &tau, &delta)?;
    let f2 = f_eval(n - 2, &tau, &delta)?;
    let first = &(m * &QMatrix2::c_power(-n + 1)) * &QMatrix2::scalar(f1);
    let second = &QMatrix2::c_power(-n) * &QMatrix2::scalar(&delta * &f2);
    Ok(&first - &second)
}

/// `A^n` via the `tau'`-route: `f_{n-1}(tau') C^(n-1) A - f_{n-2}(tau') delta C^n`.
pub fn power_ch2(m: &QMatrix2, n: u32) -> Result<QMatrix2> {
    if n == 0 {
        return Err(Error::ZeroPowerIndex);
    }
    let n = i64::from(n);
    let tau_p = m.tau_prime();
    let delta = m.qdet();
    let f1 = f_eval(n - 1, &tau_p, &delta)?;
    let f2 = f_eval(n - 2, &tau_p, &delta)?;
    let first = &QMatrix2::scalar(f1) * &(&QMatrix2::c_power(n - 1) * m);
    let second = &QMatrix2::scalar(&f2 * &delta) * &QMatrix2::c_power(n);
    Ok(&first - &second)
}

/// Entries `(a_n, b_n, c_n, d_n)` of the n-th power of the generator
/// matrix, by the explicit formulas (n >= 1). Both stated variants are
/// available; they agree with each other and with the brute-force power.
pub fn entries_closed(n: u32, variant: EntryVariant) -> Result<[AlgebraElement; 4]> {
    if n == 0 {
        return Err(Error::ZeroPowerIndex);
    }
    let gen = QMatrix2::generator();
    let delta = gen.qdet();
    let n = i64::from(n);
    let (ga, gb, gc, gd) = (
        AlgebraElement::gen(Gen::A),
        AlgebraElement::gen(Gen::B),
        AlgebraElement::gen(Gen::C),
        AlgebraElement::gen(Gen::D),
    );
    match variant {
        EntryVariant::Left => {
            let tau = gen.tau();
            let f1 = f_eval(n - 1, &tau, &delta)?;
            let f2 = f_eval(n - 2, &tau, &delta)?;
            let df2 = &delta * &f2;
            Ok([
                &(&ga * &f1).scale_v(-(n - 1)) - &df2.scale_v(-n),
                (&gb * &f1).scale_v(n - 1),
                (&gc * &f1).scale_v(-(n - 1)),
                &(&gd * &f1).scale_v(n - 1) - &df2.scale_v(n),
            ])
        }
        EntryVariant::Right => {
            let tau_p = gen.tau_prime();
            let f1 = f_eval(n - 1, &tau_p, &delta)?;
            let f2 = f_eval(n - 2, &tau_p, &delta)?;
            let df2 = &delta * &f2;
            Ok([
                &(&f1 * &ga).scale_v(n - 1) - &df2.scale_v(n),
                (&f1 * &gb).scale_v(n - 1),
                (&f1 * &gc).scale_v(-(n - 1)),
                &(&f1 * &gd).scale_v(-(n - 1)) - &df2.scale_v(-n),
            ])
        }
    }
}

/// Alternative expressions for the diagonal entries `(a_n, d_n)` that
/// eliminate the standalone determinant term; valid from n = 0 up.
pub fn entries_alt(n: u32, variant: EntryVariant) -> Result<(AlgebraElement, AlgebraElement)> {
    let gen = QMatrix2::generator();
    let delta = gen.qdet();
    let n = i64::from(n);
    let ga = AlgebraElement::gen(Gen::A);
    let gd = AlgebraElement::gen(Gen::D);
    match variant {
        EntryVariant::Left => {
            let tau = gen.tau();
            let fn_ = f_eval(n, &tau, &delta)?;
            let f1 = f_eval(n - 1, &tau, &delta)?;
            Ok((
                &fn_.scale_v(-n) - &(&gd * &f1).scale_v(-(n + 1)),
                &fn_.scale_v(n) - &(&ga * &f1).scale_v(n + 1),
            ))
        }
        EntryVariant::Right => {
            let tau_p = gen.tau_prime();
            let fn_ = f_eval(n, &tau_p, &delta)?;
            let f1 = f_eval(n - 1, &tau_p, &delta)?;
            Ok((
                &fn_.scale_v(n) - &(&f1 * &gd).scale_v(n + 1),
                &fn_.scale_v(-n) - &(&f1 * &ga).scale_v(-(n + 1)),
            ))
        }
    }
}

/// `adj(A)^m` by the explicit entry formulas (m >= 1).
///
/// The adjoint is a `q^-1`-quantum matrix whose twisted traces and
/// determinant coincide with those of the generator matrix, so the entry
/// formulas apply with every half-integer exponent negated. Its entries
/// relate back to the plain power entries by
/// `adj_a_m = d_m`, `adj_b_m = -q^-m b_m`, `adj_c_m = -q^m c_m`,
/// `adj_d_m = a_m`.
pub fn adjoint_power_closed(m: u32, variant: EntryVariant) -> Result<QMatrix2> {
    if m == 0 {
        return Err(Error::ZeroPowerIndex);
    }
    let gen = QMatrix2::generator();
    let adj = gen.adjoint();
    let delta = gen.qdet();
    let m = i64::from(m);
    match variant {
        EntryVariant::Left => {
            let tau = gen.tau();
            let f1 = f_eval(m - 1, &tau, &delta)?;
            let f2 = f_eval(m - 2, &tau, &delta)?;
            let df2 = &delta * &f2;
            Ok(QMatrix2::new(
                &(&adj.e11 * &f1).scale_v(m - 1) - &df2.scale_v(m),
                (&adj.e12 * &f1).scale_v(-(m - 1)),
                (&adj.e21 * &f1).scale_v(m - 1),
                &(&adj.e22 * &f1).scale_v(-(m - 1)) - &df2.scale_v(-m),
            ))
        }
        EntryVariant::Right => {
            let tau_p = gen.tau_prime();
            let f1 = f_eval(m - 1, &tau_p, &delta)?;
            let f2 = f_eval(m - 2, &tau_p, &delta)?;
            let df2 = &delta * &f2;
            Ok(QMatrix2::new(
                &(&f1 * &adj.e11).scale_v(-(m - 1)) - &df2.scale_v(-m),
                (&f1 * &adj.e12).scale_v(-(m - 1)),
                (&f1 * &adj.e21).scale_v(m - 1),
                &(&f1 * &adj.e22).scale_v(m - 1) - &df2.scale_v(m),
            ))
        }
    }
}
