//! The quantum coordinate algebra on four generators `a, b, c, d`.
//!
//! Generators satisfy the q-commutation relations
//!
//! ```text
//! ab = q ba    ac = q ca    ad - da = (q - q^-1) bc
//! bc = cb      bd = q db    cd = q dc
//! ```
//!
//! with `q = v^2` central. Every element is held in PBW normal form: a
//! finite sum of ordered words `a^i b^j c^k d^l` with [`QCoeff`]
//! coefficients. The normal form is unique, so equality in the algebra
//! is structural equality of the term maps.
//!
//! Multiplication straightens products one generator at a time, walking
//! the new generator leftward past higher generators with the six rules
//! above. Only the swap `d*a` produces an extra term; the recursion
//! bottoms out because each step shortens the tail it still has to cross.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{scalar_q_text, QCoeff};
use crate::error::{Error, Result};

/// One of the four generators, in PBW order `a < b < c < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A,
    B,
    C,
    D,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::B, Gen::C, Gen::D];

    pub fn letter(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::C => 'c',
            Gen::D => 'd',
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Gen::A),
            "b" => Ok(Gen::B),
            "c" => Ok(Gen::C),
            "d" => Ok(Gen::D),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

/// Exponent quadruple `(i, j, k, l)` of the normal-form word
/// `a^i b^j c^k d^l`. Ordered graded-lexicographically: total degree
/// first, then the exponent tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    pub exps: [u32; 4],
}

impl PbwMonomial {
    pub const UNIT: PbwMonomial = PbwMonomial { exps: [0; 4] };

    pub fn new(i: u32, j: u32, k: u32, l: u32) -> Self {
        Self { exps: [i, j, k, l] }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps == [0; 4]
    }

    pub fn exp(&self, g: Gen) -> u32 {
        self.exps[g.index()]
    }

    /// Appends one `g` to the word. Only valid when no smaller generator
    /// follows `g` in the word, which holds everywhere this is used.
    fn bump(mut self, g: Gen) -> Self {
        self.exps[g.index()] += 1;
        self
    }

    fn text(&self, latex: bool) -> String {
        let mut out = String::new();
        for g in Gen::ALL {
            let e = self.exp(g);
            if e == 0 {
                continue;
            }
            out.push(g.letter());
            if e > 1 {
                if latex {
                    out.push_str(&format!("^{{{e}}}"));
                } else {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        write!(f, "{}", self.text(false))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.exps).cmp(&(other.degree(), other.exps))
    }
}

/// An element of the algebra in canonical PBW form: a finite map from
/// monomials to nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<PbwMonomial, QCoeff>,
}

/// Coefficient of the `b c` term produced by the swap `d*a -> a*d - (q - q^-1) b*c`.
fn da_swap_coeff() -> QCoeff {
    let gap = &QCoeff::q_power(1) - &QCoeff::q_power(-1);
    if cfg!(feature = "negative-control") {
        // Corrupted rewrite used to prove the harness catches bad algebras.
        &gap + &gap
    } else {
        gap
    }
}

/// `m * g` in normal form, by single-swap recursion on the word of `m`.
fn mono_times_gen(m: PbwMonomial, g: Gen) -> Vec<(PbwMonomial, QCoeff)> {
    let [i, j, k, l] = m.exps;
    match g {
        // d appends directly: nothing to its right.
        Gen::D => vec![(m.bump(Gen::D), QCoeff::one())],
        // c crosses each trailing d via dc = q^-1 cd.
        Gen::C => {
            if l == 0 {
                return vec![(m.bump(Gen::C), QCoeff::one())];
            }
            mono_times_gen(PbwMonomial::new(i, j, k, l - 1), Gen::C)
                .into_iter()
                .map(|(m2, c)| (m2.bump(Gen::D), c.shifted(-2)))
                .collect()
        }
        // b crosses d via db = q^-1 bd; b and c commute.
        Gen::B => {
            if l == 0 {
                return vec![(m.bump(Gen::B), QCoeff::one())];
            }
            mono_times_gen(PbwMonomial::new(i, j, k, l - 1), Gen::B)
                .into_iter()
                .map(|(m2, c)| (m2.bump(Gen::D), c.shifted(-2)))
                .collect()
        }
        Gen::A => {
            if l > 0 {
                // ...d^l a = (...d^(l-1) a) d - (q - q^-1) (...d^(l-1) b) c
                let rest = PbwMonomial::new(i, j, k, l - 1);
                let mut out: Vec<(PbwMonomial, QCoeff)> = mono_times_gen(rest, Gen::A)
                    .into_iter()
                    .map(|(m2, c)| (m2.bump(Gen::D), c))
                    .collect();
                let swap = da_swap_coeff();
                for (mb, cb) in mono_times_gen(rest, Gen::B) {
                    for (mc, cc) in mono_times_gen(mb, Gen::C) {
                        out.push((mc, -&(&(&cb * &cc) * &swap)));
                    }
                }
                out
            } else if k > 0 {
                // ca = q^-1 ac
                mono_times_gen(PbwMonomial::new(i, j, k - 1, 0), Gen::A)
                    .into_iter()
                    .map(|(m2, c)| {
                        debug_assert_eq!(m2.exp(Gen::D), 0);
                        (m2.bump(Gen::C), c.shifted(-2))
                    })
                    .collect()
            } else if j > 0 {
                // ba = q^-1 ab
                mono_times_gen(PbwMonomial::new(i, j - 1, 0, 0), Gen::A)
                    .into_iter()
                    .map(|(m2, c)| (m2.bump(Gen::B), c.shifted(-2)))
                    .collect()
            } else {
                vec![(m.bump(Gen::A), QCoeff::one())]
            }
        }
    }
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(PbwMonomial::UNIT, QCoeff::one())
    }

    /// The generator `g` as an element.
    pub fn gen(g: Gen) -> Self {
        let mut exps = [0; 4];
        exps[g.index()] = 1;
        Self::from_monomial(PbwMonomial { exps }, QCoeff::one())
    }

    /// Embeds a scalar on the unit monomial. Scalars are central.
    pub fn embed(c: QCoeff) -> Self {
        Self::from_monomial(PbwMonomial::UNIT, c)
    }

    pub fn from_monomial(m: PbwMonomial, c: QCoeff) -> Self {
        let mut out = Self::zero();
        out.add_term(m, &c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&PbwMonomial, &QCoeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> QCoeff {
        self.terms.get(m).cloned().unwrap_or_else(QCoeff::zero)
    }

    pub(crate) fn add_term(&mut self, m: PbwMonomial, c: &QCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scale(&self, c: &QCoeff) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, &(x * c));
        }
        out
    }

    /// Multiplies by `v^k` (shifts every coefficient).
    pub fn scale_v(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c.shifted(k))).collect(),
        }
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact commutation test on computed normal forms.
    pub fn commutes_with(&self, other: &Self) -> bool {
        self * other == other * self
    }

    /// Substitutes `v = t` and commuting numeric values for the four
    /// generators, returning the exact rational result.
    pub fn eval_at(&self, t: &BigRational, vals: &[BigRational; 4]) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.specialize(t)?;
            for g in Gen::ALL {
                for _ in 0..m.exp(g) {
                    term *= &vals[g.index()];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let multi = self.terms.len() > 1;
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = render_term(m, c, latex, multi);
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }

    /// LaTeX rendering with half-integer powers of `q`.
    pub fn latex(&self) -> String {
        self.render(true)
    }

    /// Canonical JSON string; see [`ElementJson`] for the schema.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&ElementJson::from(self)).expect("element serialization")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let dto: ElementJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        dto.try_into()
    }
}

/// One rendered term: sign flag plus body without the sign.
fn render_term(m: &PbwMonomial, c: &QCoeff, latex: bool, multi: bool) -> (bool, String) {
    if m.is_unit() {
        return match c.as_single_term() {
            Some((k, n)) => (n.is_negative(), scalar_q_text(k, &n.abs(), latex)),
            None if multi => (false, format!("({})", c.q_text(latex))),
            None => (false, c.q_text(latex)),
        };
    }
    let mono = m.text(latex);
    match c.as_single_term() {
        Some((k, n)) => {
            let neg = n.is_negative();
            let mag = n.abs();
            if k == 0 && mag.is_one() {
                (neg, mono)
            } else {
                (neg, format!("{} {mono}", scalar_q_text(k, &mag, latex)))
            }
        }
        None => (false, format!("({}) {mono}", c.q_text(latex))),
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;

    /// Straightened product: bilinear over scalars, each monomial of the
    /// right factor appended generator by generator.
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut acc = AlgebraElement::zero();
        for (m2, c2) in &rhs.terms {
            let mut cur = self.terms.clone();
            for g in Gen::ALL {
                for _ in 0..m2.exp(g) {
                    let mut next: BTreeMap<PbwMonomial, QCoeff> = BTreeMap::new();
                    for (m, c) in &cur {
                        for (m3, c3) in mono_times_gen(*m, g) {
                            let prod = c * &c3;
                            if prod.is_zero() {
                                continue;
                            }
                            match next.get_mut(&m3) {
                                Some(e) => {
                                    let sum = &*e + &prod;
                                    if sum.is_zero() {
                                        next.remove(&m3);
                                    } else {
                                        *e = sum;
                                    }
                                }
                                None => {
                                    next.insert(m3, prod);
                                }
                            }
                        }
                    }
                    cur = next;
                }
            }
            for (m, c) in cur {
                acc.add_term(m, &(&c * c2));
            }
        }
        acc
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        &self + &rhs
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        &self - &rhs
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        &self * &rhs
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

/// The quantum determinant `ad - q bc` of the generator matrix; the
/// canonical central element.
pub fn quantum_determinant() -> AlgebraElement {
    let ad = &AlgebraElement::gen(Gen::A) * &AlgebraElement::gen(Gen::D);
    let bc = &AlgebraElement::gen(Gen::B) * &AlgebraElement::gen(Gen::C);
    &ad - &bc.scale_v(2)
}

/// JSON schema for an element:
/// `{"terms":[{"m":[i,j,k,l],"c":[[vexp,"coeff"],...]},...]}`
/// with terms in descending graded-lex order and coefficient pairs in
/// descending exponent order.
#[derive(Serialize, Deserialize)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub m: [u32; 4],
    pub c: Vec<(i64, String)>,
}

impl From<&AlgebraElement> for ElementJson {
    fn from(e: &AlgebraElement) -> Self {
        ElementJson {
            terms: e
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    m: m.exps,
                    c: c.to_pairs(),
                })
                .collect(),
        }
    }
}

impl TryFrom<ElementJson> for AlgebraElement {
    type Error = Error;

    fn try_from(dto: ElementJson) -> Result<Self> {
        let mut out = AlgebraElement::zero();
        for t in dto.terms {
            let c = QCoeff::from_pairs(t.c)?;
            out.add_term(PbwMonomial { exps: t.m }, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;

    pub fn a() -> AlgebraElement {
        AlgebraElement::gen(Gen::A)
    }
    pub fn b() -> AlgebraElement {
        AlgebraElement::gen(Gen::B)
    }
    pub fn c() -> AlgebraElement {
        AlgebraElement::gen(Gen::C)
    }
    pub fn d() -> AlgebraElement {
        AlgebraElement::gen(Gen::D)
    }

    /// Commutative product oracle: multiplies by adding exponents only,
    /// ignoring the relations. Agrees with the straightened product after
    /// specializing v = 1.
    pub fn commutative_mul(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m1, c1) in x.iter() {
            for (m2, c2) in y.iter() {
                let exps = [
                    m1.exps[0] + m2.exps[0],
                    m1.exps[1] + m2.exps[1],
                    m1.exps[2] + m2.exps[2],
                    m1.exps[3] + m2.exps[3],
                ];
                out.add_term(PbwMonomial { exps }, &(c1 * c2));
            }
        }
        out
    }

    /// Specializes every coefficient at v = 1 (exponents untouched).
    pub fn at_v1(x: &AlgebraElement) -> AlgebraElement {
        use num::{BigInt, BigRational};
        let one = BigRational::from(BigInt::from(1));
        let mut out = AlgebraElement::zero();
        for (m, c) in x.iter() {
            let val = c.specialize(&one).unwrap();
            assert!(val.is_integer());
            out.add_term(*m, &QCoeff::term(0, val.to_integer()));
        }
        out
    }
}
