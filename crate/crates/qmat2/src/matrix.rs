//! 2x2 matrices over the algebra: products, powers, the quantum
//! determinant, the quantum adjoint, diagonal scalar twists, and the
//! twisted traces.
//!
//! Entry products preserve order (entries of the left factor multiply
//! from the left), so these operations are valid over the noncommutative
//! ring. "Being a quantum matrix" is a semantic predicate checked by the
//! identities layer, not a construction invariant of this type.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, ElementJson, Gen};
use crate::coeff::QCoeff;
use crate::error::{Error, Result};

/// A 2x2 matrix with [`AlgebraElement`] entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QMatrix2 {
    pub e11: AlgebraElement,
    pub e12: AlgebraElement,
    pub e21: AlgebraElement,
    pub e22: AlgebraElement,
}

impl QMatrix2 {
    pub fn new(
        e11: AlgebraElement,
        e12: AlgebraElement,
        e21: AlgebraElement,
        e22: AlgebraElement,
    ) -> Self {
        Self { e11, e12, e21, e22 }
    }

    pub fn identity() -> Self {
        Self::scalar(AlgebraElement::one())
    }

    /// The universal generator matrix `[[a, b], [c, d]]`.
    pub fn generator() -> Self {
        Self::new(
            AlgebraElement::gen(Gen::A),
            AlgebraElement::gen(Gen::B),
            AlgebraElement::gen(Gen::C),
            AlgebraElement::gen(Gen::D),
        )
    }

    /// `diag(e, e)`; multiplying by it multiplies every entry by `e`
    /// on the corresponding side.
    pub fn scalar(e: AlgebraElement) -> Self {
        Self::new(e.clone(), AlgebraElement::zero(), AlgebraElement::zero(), e)
    }

    /// The diagonal twist `diag(v^k, v^-k)`; `c_power(1)` is the matrix
    /// entering the twisted traces and `c_power(j) * c_power(k) =
    /// c_power(j + k)`.
    pub fn c_power(k: i64) -> Self {
        Self::new(
            AlgebraElement::embed(QCoeff::v_power(k)),
            AlgebraElement::zero(),
            AlgebraElement::zero(),
            AlgebraElement::embed(QCoeff::v_power(-k)),
        )
    }

    pub fn entries(&self) -> [&AlgebraElement; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    /// `self^n` by repeated left multiplication (`A * A^(n-1)`); `n = 0`
    /// gives the identity. This is the brute-force oracle the closed
    /// forms are checked against.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = self * &acc;
        }
        acc
    }

    /// Quantum determinant `e11 e22 - q e12 e21`.
    pub fn qdet(&self) -> AlgebraElement {
        self.qdet_p(1)
    }

    /// Determinant with deformation `q^p`: `e11 e22 - q^p e12 e21`.
    /// A power `A^n` is a `q^n`-quantum matrix, so its determinant uses
    /// `p = n`; the adjoint uses `p = -1`.
    pub fn qdet_p(&self, p: i64) -> AlgebraElement {
        &(&self.e11 * &self.e22) - &(&self.e12 * &self.e21).scale_v(2 * p)
    }

    /// Quantum adjoint `[[e22, -q^-1 e12], [-q e21, e11]]`, satisfying
    /// `A * adj(A) = adj(A) * A = qdet(A) * E`.
    pub fn adjoint(&self) -> Self {
        self.adjoint_p(1)
    }

    /// Adjoint of a `q^p`-quantum matrix: `[[e22, -q^-p e12], [-q^p e21, e11]]`.
    /// Applying `adjoint_p(-1)` to the adjoint of the generator matrix
    /// recovers the generator matrix.
    pub fn adjoint_p(&self, p: i64) -> Self {
        Self::new(
            self.e22.clone(),
            (-&self.e12).scale_v(-2 * p),
            (-&self.e21).scale_v(2 * p),
            self.e11.clone(),
        )
    }

    /// Twisted trace `q^(1/2) e11 + q^(-1/2) e22`, the trace of
    /// `self * c_power(1)`.
    pub fn tau(&self) -> AlgebraElement {
        self.tau_p(1)
    }

    /// Trace of `self * c_power(p)`.
    pub fn tau_p(&self, p: i64) -> AlgebraElement {
        &self.e11.scale_v(p) + &self.e22.scale_v(-p)
    }

    /// Twisted trace `q^(-1/2) e11 + q^(1/2) e22`, the trace of
    /// `c_power(-1) * self`.
    pub fn tau_prime(&self) -> AlgebraElement {
        self.tau_prime_p(1)
    }

    /// Trace of `c_power(-p) * self`.
    pub fn tau_prime_p(&self, p: i64) -> AlgebraElement {
        &self.e11.scale_v(-p) + &self.e22.scale_v(p)
    }

    pub fn latex(&self) -> String {
        format!(
            "\\begin{{pmatrix}} {} & {} \\\\ {} & {} \\end{{pmatrix}}",
            self.e11.latex(),
            self.e12.latex(),
            self.e21.latex(),
            self.e22.latex()
        )
    }

    /// Canonical JSON string; see [`MatrixJson`] for the schema.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&MatrixJson::from(self)).expect("matrix serialization")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let dto: MatrixJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        dto.try_into()
    }
}

impl Mul for &QMatrix2 {
    type Output = QMatrix2;

    fn mul(self, rhs: &QMatrix2) -> QMatrix2 {
        QMatrix2::new(
            &(&self.e11 * &rhs.e11) + &(&self.e12 * &rhs.e21),
            &(&self.e11 * &rhs.e12) + &(&self.e12 * &rhs.e22),
            &(&self.e21 * &rhs.e11) + &(&self.e22 * &rhs.e21),
            &(&self.e21 * &rhs.e12) + &(&self.e22 * &rhs.e22),
        )
    }
}

impl Add for &QMatrix2 {
    type Output = QMatrix2;
    fn add(self, rhs: &QMatrix2) -> QMatrix2 {
        QMatrix2::new(
            &self.e11 + &rhs.e11,
            &self.e12 + &rhs.e12,
            &self.e21 + &rhs.e21,
            &self.e22 + &rhs.e22,
        )
    }
}

impl Sub for &QMatrix2 {
    type Output = QMatrix2;
    fn sub(self, rhs: &QMatrix2) -> QMatrix2 {
        QMatrix2::new(
            &self.e11 - &rhs.e11,
            &self.e12 - &rhs.e12,
            &self.e21 - &rhs.e21,
            &self.e22 - &rhs.e22,
        )
    }
}

impl Neg for &QMatrix2 {
    type Output = QMatrix2;
    fn neg(self) -> QMatrix2 {
        QMatrix2::new(-&self.e11, -&self.e12, -&self.e21, -&self.e22)
    }
}

impl fmt::Display for QMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e11, self.e12, self.e21, self.e22
        )
    }
}

/// JSON schema: `{"e11": <element>, "e12": ..., "e21": ..., "e22": ...}`.
#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    pub e11: ElementJson,
    pub e12: ElementJson,
    pub e21: ElementJson,
    pub e22: ElementJson,
}

impl From<&QMatrix2> for MatrixJson {
    fn from(m: &QMatrix2) -> Self {
        MatrixJson {
            e11: (&m.e11).into(),
            e12: (&m.e12).into(),
            e21: (&m.e21).into(),
            e22: (&m.e22).into(),
        }
    }
}

impl TryFrom<MatrixJson> for QMatrix2 {
    type Error = Error;

    fn try_from(dto: MatrixJson) -> Result<Self> {
        Ok(QMatrix2::new(
            dto.e11.try_into()?,
            dto.e12.try_into()?,
            dto.e21.try_into()?,
            dto.e22.try_into()?,
        ))
    }
}
