//! Exact arithmetic in the Laurent ring `Z[v, v^-1]`.
//!
//! The base unit is `v = q^(1/2)`, the square root of the deformation
//! parameter, so every exponent produced by the power formulas
//! (`q^(n/2)`, `q^((n-1)/2)`, ...) is an integer power of `v`.
//! Coefficients are arbitrary-precision integers; identities over this
//! ring hold under every specialization of `v` at once.
//!
//! The representation is canonical: zero terms are pruned eagerly, so
//! equality of values is structural equality of the term maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in `v = q^(1/2)` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QCoeff {
    /// exponent of `v` -> nonzero coefficient
    terms: BTreeMap<i64, BigInt>,
}

impl QCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::v_power(0)
    }

    /// The monomial `v^k` with coefficient 1, i.e. `q^(k/2)`.
    pub fn v_power(k: i64) -> Self {
        Self::term(k, BigInt::one())
    }

    /// The monomial `q^k`, i.e. `v^(2k)`.
    pub fn q_power(k: i64) -> Self {
        Self::v_power(2 * k)
    }

    /// A single term `c * v^k`; canonicalizes `c = 0` to the zero value.
    pub fn term(k: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::term(0, BigInt::from(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_single_term().is_some_and(|(k, c)| k == 0 && c.is_one())
    }

    /// `Some((exponent, coefficient))` when the value is a single monomial.
    pub fn as_single_term(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    /// Terms in ascending `v`-exponent order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub(crate) fn add_term(&mut self, k: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Multiplication by the monomial `v^k` (an exponent shift).
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `v = t` and returns the exact rational value.
    ///
    /// `t = 0` is a domain error: the ring contains negative powers of `v`.
    pub fn specialize(&self, t: &BigRational) -> Result<BigRational> {
        if t.is_zero() {
            return Err(Error::SpecializeAtZero);
        }
        let mut acc = BigRational::zero();
        for (k, c) in &self.terms {
            acc += BigRational::from(c.clone()) * rat_pow(t, *k);
        }
        Ok(acc)
    }

    /// JSON form: `[exponent, coefficient-as-decimal-string]` pairs in
    /// decreasing exponent order.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.terms.iter().rev().map(|(k, c)| (*k, c.to_string())).collect()
    }

    /// Rebuilds a value from exponent/coefficient pairs, canonicalizing
    /// duplicates and zeros.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, String)>,
    {
        let mut out = Self::zero();
        for (k, c) in pairs {
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::Json(format!("bad integer literal `{c}`")))?;
            out.add_term(k, &c);
        }
        Ok(out)
    }

    /// Renders in `q`-notation, `v^k` appearing as the half-integer power
    /// `q^(k/2)`. Used by the algebra-element printers.
    pub(crate) fn q_text(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&scalar_q_text(*k, &c.abs(), latex));
        }
        out
    }
}

/// `t^k` for exact rationals, `k` of either sign (`t != 0` assumed).
fn rat_pow(t: &BigRational, k: i64) -> BigRational {
    let base = if k >= 0 { t.clone() } else { t.recip() };
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// One product `n * q^(k/2)` with `n > 0`, in text or LaTeX notation.
pub(crate) fn scalar_q_text(k: i64, n: &BigInt, latex: bool) -> String {
    let q = q_power_text(k, latex);
    match (q.as_str(), n.is_one()) {
        ("", _) => n.to_string(),
        (_, true) => q,
        (_, false) => format!("{n}{q}"),
    }
}

/// `v^k` printed as a power of `q`; empty for `k = 0`.
fn q_power_text(k: i64, latex: bool) -> String {
    if k == 0 {
        return String::new();
    }
    if k % 2 == 0 {
        let e = k / 2;
        if e == 1 {
            "q".into()
        } else if latex {
            format!("q^{{{e}}}")
        } else {
            format!("q^{e}")
        }
    } else if latex {
        let sign = if k < 0 { "-" } else { "" };
        format!("q^{{{sign}\\frac{{{}}}{{2}}}}", k.abs())
    } else {
        format!("q^{{{k}/2}}")
    }
}

impl fmt::Display for QCoeff {
    /// Text form in the `v` variable, decreasing exponent: `v^2 - 2 + v^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if *k == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &QCoeff {
    type Output = QCoeff;
    fn add(self, rhs: &QCoeff) -> QCoeff {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for &QCoeff {
    type Output = QCoeff;
    fn sub(self, rhs: &QCoeff) -> QCoeff {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &(-c));
        }
        out
    }
}

impl Mul for &QCoeff {
    type Output = QCoeff;
    fn mul(self, rhs: &QCoeff) -> QCoeff {
        let mut out = QCoeff::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &QCoeff {
    type Output = QCoeff;
    fn neg(self) -> QCoeff {
        QCoeff {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Add for QCoeff {
    type Output = QCoeff;
    fn add(self, rhs: QCoeff) -> QCoeff {
        &self + &rhs
    }
}

impl Sub for QCoeff {
    type Output = QCoeff;
    fn sub(self, rhs: QCoeff) -> QCoeff {
        &self - &rhs
    }
}

impl Mul for QCoeff {
    type Output = QCoeff;
    fn mul(self, rhs: QCoeff) -> QCoeff {
        &self * &rhs
    }
}

impl Neg for QCoeff {
    type Output = QCoeff;
    fn neg(self) -> QCoeff {
        -&self
    }
}
