//! The two-variable Chebyshev-type family `f_n(x, y)`.
//!
//! ```text
//! f_n(x, y) = sum_{l=0}^{floor(n/2)} (-1)^l C(n-l, l) x^(n-2l) y^l
//! f_{-1} = 0,  f_0 = 1,  f_{n+1} = x f_n - y f_{n-1}
//! ```
//!
//! Setting `y = 1` gives the Chebyshev polynomials of the second kind.
//! Every `f_n` is homogeneous of weighted degree `n` with `x` of weight 1
//! and `y` of weight 2. The family drives the closed-form matrix powers,
//! evaluated at the twisted trace and the quantum determinant.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};

/// A commutative integer-coefficient polynomial in `(x, y)`, stored
/// sparsely by `(x exponent, y exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl FPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, 0), BigInt::one());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x_exp: u32, y_exp: u32) -> BigInt {
        self.terms.get(&(x_exp, y_exp)).cloned().unwrap_or_default()
    }

    /// Terms in descending `x`-degree (the rendering order).
    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().rev().map(|(k, c)| (*k, c))
    }

    fn add_term(&mut self, key: (u32, u32), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// True when every stored term satisfies `x_exp + 2 y_exp = n`.
    pub fn is_weighted_homogeneous(&self, n: u32) -> bool {
        self.terms.keys().all(|(xe, ye)| xe + 2 * ye == n)
    }

    /// Direct monomial-by-monomial substitution of commuting algebra
    /// elements. Serves as the equivalence oracle for [`f_eval`].
    pub fn eval_elements(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement> {
        if !x.commutes_with(y) {
            return Err(Error::NonCommutingArguments);
        }
        let mut acc = AlgebraElement::zero();
        for ((xe, ye), c) in &self.terms {
            let mono = &x.pow(*xe) * &y.pow(*ye);
            acc = &acc + &mono.scale(&crate::coeff::QCoeff::term(0, c.clone()));
        }
        Ok(acc)
    }

    /// Evaluation at exact rational arguments.
    pub fn eval_rational(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for ((xe, ye), c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for _ in 0..*xe {
                term *= x;
            }
            for _ in 0..*ye {
                term *= y;
            }
            acc += term;
        }
        acc
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, ((xe, ye), c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut body = String::new();
            if !mag.is_one() || (xe == 0 && ye == 0) {
                body.push_str(&mag.to_string());
            }
            let mut after_exponent = false;
            for (sym, e) in [("x", xe), ("y", ye)] {
                if e == 0 {
                    continue;
                }
                if after_exponent {
                    body.push(' ');
                }
                body.push_str(sym);
                if e > 1 {
                    if latex {
                        body.push_str(&format!("^{{{e}}}"));
                    } else {
                        body.push_str(&format!("^{e}"));
                    }
                    after_exponent = true;
                } else {
                    after_exponent = false;
                }
            }
            out.push_str(&body);
        }
        out
    }

    pub fn latex(&self) -> String {
        self.render(true)
    }

    /// JSON form: `[[x_exp, y_exp, "coeff"], ...]` in rendering order.
    pub fn to_triples(&self) -> Vec<(u32, u32, String)> {
        self.iter().map(|((xe, ye), c)| (xe, ye, c.to_string())).collect()
    }
}

impl fmt::Display for FPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

/// `f_n` from the defining alternating binomial sum.
pub fn f_sum(n: i64) -> Result<FPoly> {
    if n < -1 {
        return Err(Error::IndexOutOfRange(n));
    }
    if n == -1 {
        return Ok(FPoly::zero());
    }
    let n = n as u32;
    let mut out = FPoly::zero();
    let mut sign = BigInt::one();
    for l in 0..=(n / 2) {
        let c = &sign * binomial(n - l, l);
        out.add_term((n - 2 * l, l), &c);
        sign = -sign;
    }
    Ok(out)
}

/// `f_n` from the three-term recurrence seeded with `f_{-1} = 0`, `f_0 = 1`.
pub fn f_rec(n: i64) -> Result<FPoly> {
    if n < -1 {
        return Err(Error::IndexOutOfRange(n));
    }
    let mut prev = FPoly::zero(); // f_{-1}
    let mut cur = FPoly::one(); // f_0
    if n == -1 {
        return Ok(prev);
    }
    for _ in 0..n {
        let mut next = FPoly::zero();
        for ((xe, ye), c) in cur.iter() {
            next.add_term((xe + 1, ye), c);
        }
        for ((xe, ye), c) in prev.iter() {
            next.add_term((xe, ye + 1), &-c);
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Evaluates `f_n` at a commuting pair of algebra elements using the
/// recurrence (a Horner-style accumulation with far fewer products than
/// direct substitution).
///
/// Commutation of the arguments is checked, not assumed: the polynomial
/// value is ill-defined otherwise.
pub fn f_eval(n: i64, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    if n < -1 {
        return Err(Error::IndexOutOfRange(n));
    }
    if !x.commutes_with(y) {
        return Err(Error::NonCommutingArguments);
    }
    let mut prev = AlgebraElement::zero();
    let mut cur = AlgebraElement::one();
    if n == -1 {
        return Ok(prev);
    }
    for _ in 0..n {
        let next = &(x * &cur) - &(y * &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Exact binomial coefficient by Pascal recursion.
fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
