//! Laurent polynomials in the deformation parameters q and p.
//!
//! Exponents may be negative; coefficients are arbitrary-precision rationals.
//! The monomial order used everywhere (leading terms, canonical rendering) is
//! graded lexicographic: first by total degree, then by the q exponent.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent vector of the monomial `q^qexp * p^pexp`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Mono {
    pub qexp: i64,
    pub pexp: i64,
}

impl Mono {
    pub const ONE: Mono = Mono { qexp: 0, pexp: 0 };

    pub fn new(qexp: i64, pexp: i64) -> Self {
        Mono { qexp, pexp }
    }

    fn total(&self) -> i64 {
        self.qexp + self.pexp
    }
}

// Graded lexicographic order with q ranked above p.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total(), self.qexp).cmp(&(other.total(), other.qexp))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial in q (and p in generic mode) with rational coefficients.
///
/// Invariant: no stored coefficient is zero, and exponent vectors are unique keys.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Mono, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn monomial(coeff: BigRational, qexp: i64, pexp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Mono::new(qexp, pexp), coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_int(value: i64) -> Self {
        Self::monomial(BigRational::from(BigInt::from(value)), 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    /// Add `coeff * q^m.qexp * p^m.pexp`, removing the key if it cancels.
    pub fn add_term(&mut self, m: Mono, coeff: &BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(Mono::new(m1.qexp + m2.qexp, m1.pexp + m2.pexp), &(c1 * c2));
            }
        }
        out
    }

    /// Multiply by the monomial `coeff * q^dq * p^dp`.
    pub fn mul_mono(&self, coeff: &BigRational, dq: i64, dp: i64) -> Self {
        if coeff.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono::new(m.qexp + dq, m.pexp + dp), c * coeff))
                .collect(),
        }
    }

    pub fn scale(&self, coeff: &BigRational) -> Self {
        self.mul_mono(coeff, 0, 0)
    }

    /// Componentwise minimum of the exponent vectors; `(0, 0)` for the zero polynomial.
    pub fn min_exponents(&self) -> Mono {
        let mut qmin = i64::MAX;
        let mut pmin = i64::MAX;
        for m in self.terms.keys() {
            qmin = qmin.min(m.qexp);
            pmin = pmin.min(m.pexp);
        }
        if self.terms.is_empty() {
            Mono::ONE
        } else {
            Mono::new(qmin, pmin)
        }
    }

    /// Leading (maximal) term under the graded lexicographic order.
    pub fn leading(&self) -> Option<(Mono, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn max_qexp(&self) -> i64 {
        self.terms.keys().map(|m| m.qexp).max().unwrap_or(0)
    }

    pub fn max_pexp(&self) -> i64 {
        self.terms.keys().map(|m| m.pexp).max().unwrap_or(0)
    }

    /// Remap exponent vectors (used for the substitutions p -> q^n and p -> q^-1).
    pub fn map_exponents(&self, f: impl Fn(Mono) -> Mono) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(*m), c);
        }
        out
    }

    /// View as a polynomial in q with coefficients in the p-only subring.
    /// Only meaningful when all exponents are non-negative.
    pub(crate) fn coeffs_in_q(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.qexp)
                .or_insert_with(LaurentPoly::zero)
                .add_term(Mono::new(0, m.pexp), c);
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub(crate) fn coeffs_in_p(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.pexp)
                .or_insert_with(LaurentPoly::zero)
                .add_term(Mono::new(m.qexp, 0), c);
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Exact multivariate division; `None` when `div` does not divide `self`.
    /// Requires non-negative exponents in both operands.
    pub fn exact_div(&self, div: &Self) -> Option<Self> {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let (dm, dc) = div.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().expect("nonzero remainder");
            let dq = rm.qexp - dm.qexp;
            let dp = rm.pexp - dm.pexp;
            if dq < 0 || dp < 0 {
                return None;
            }
            let coeff = rc / dc;
            quot.add_term(Mono::new(dq, dp), &coeff);
            rem = rem.sub(&div.mul_mono(&coeff, dq, dp));
        }
        Some(quot)
    }
}

/// Render a rational coefficient: integers without the denominator.
pub(crate) fn rational_text(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn mono_text(m: &Mono) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("q", m.qexp), ("p", m.pexp)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{}^{}", name, e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    /// Terms ascending in the fixed monomial order, signs folded into the
    /// separators: `1 - q^8`, `q^-2 + 1 + q^2 + q^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = mono_text(m);
            if mono.is_empty() {
                write!(f, "{}", rational_text(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", rational_text(&abs), mono)?;
            }
        }
        Ok(())
    }
}
