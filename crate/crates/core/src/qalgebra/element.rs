//! Normal-form elements of the graded algebra of the quantum plane.
//!
//! An element is a finite sum of `scalar * x^a y^b xi^e eta^d` with the
//! scalar coefficients on the far left. Products, the exterior derivative
//! and the invariant one-form theta all land back in this normal form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{ParamMode, ScalarRF};

use super::word::{q_integer, word_mul, GenWord, Generator};

/// A normal-form element of the differential algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgElement {
    mode: ParamMode,
    terms: BTreeMap<GenWord, ScalarRF>,
}

impl AlgElement {
    pub fn zero(mode: ParamMode) -> Self {
        AlgElement { mode, terms: BTreeMap::new() }
    }

    pub fn one(mode: ParamMode) -> Self {
        Self::from_term(mode, GenWord::ONE, ScalarRF::one())
    }

    pub fn scalar(mode: ParamMode, s: ScalarRF) -> Self {
        Self::from_term(mode, GenWord::ONE, s)
    }

    pub fn from_term(mode: ParamMode, word: GenWord, coeff: ScalarRF) -> Self {
        let mut e = AlgElement::zero(mode);
        e.add_term(word, &coeff);
        e
    }

    pub fn generator(mode: ParamMode, g: Generator) -> Self {
        Self::from_term(mode, GenWord::generator(g), ScalarRF::one())
    }

    /// The monomial `x^a y^b`; negative exponents require torus mode.
    pub fn monomial(mode: ParamMode, xexp: i64, yexp: i64) -> Result<Self> {
        if (xexp < 0 || yexp < 0) && !mode.allows_negative_powers() {
            return Err(Error::NegativeExponent);
        }
        Ok(Self::from_term(mode, GenWord::monomial(xexp, yexp), ScalarRF::one()))
    }

    /// The invariant one-form `theta = x*eta - q*y*xi`.
    pub fn theta(mode: ParamMode) -> Self {
        let mut e = AlgElement::zero(mode);
        e.add_term(GenWord::with_form(1, 0, false, true), &ScalarRF::one());
        e.add_term(GenWord::with_form(0, 1, true, false), &mode.q_pow(1).neg());
        e
    }

    pub fn mode(&self) -> ParamMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenWord, &ScalarRF)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, word: &GenWord) -> ScalarRF {
        self.terms.get(word).cloned().unwrap_or_else(ScalarRF::zero)
    }

    pub fn add_term(&mut self, word: GenWord, coeff: &ScalarRF) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word).or_insert_with(ScalarRF::zero);
        *entry = entry.add(coeff);
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.mode.require_same(&other.mode)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgElement {
            mode: self.mode,
            terms: self.terms.iter().map(|(w, c)| (*w, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &ScalarRF) -> Self {
        let mut out = AlgElement::zero(self.mode);
        for (w, c) in &self.terms {
            out.add_term(*w, &c.mul(s));
        }
        out
    }

    /// The set of form degrees present in the element.
    pub fn degrees(&self) -> BTreeSet<u8> {
        self.terms.keys().map(|w| w.form_degree()).collect()
    }

    /// The degree of a homogeneous element; zero counts as every degree.
    pub fn homogeneous_degree(&self) -> Option<u8> {
        let degrees = self.degrees();
        match degrees.len() {
            0 => Some(0),
            1 => degrees.into_iter().next(),
            _ => None,
        }
    }

    pub fn require_degree(&self, expected: u8) -> Result<()> {
        if self.is_zero() {
            return Ok(());
        }
        match self.homogeneous_degree() {
            Some(d) if d == expected => Ok(()),
            _ => Err(Error::DegreeMismatch {
                expected,
                found: self.degrees().into_iter().collect(),
            }),
        }
    }

    /// Normal form of the product, bilinear over the coefficient field.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.mode.require_same(&other.mode)?;
        let mut out = AlgElement::zero(self.mode);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                for (c, w) in word_mul(self.mode, w1, w2) {
                    out.add_term(w, &c1.mul(c2).mul(&c));
                }
            }
        }
        Ok(out)
    }

    /// Exterior derivative: graded Leibniz expansion on normal words, with
    /// `d(x) = xi`, `d(y) = eta`, `d(xi) = d(eta) = 0`.
    pub fn exterior_d(&self) -> Self {
        let mode = self.mode;
        let mut out = AlgElement::zero(mode);
        for (w, c) in &self.terms {
            // d(x^a y^b) = [a] p^-b x^(a-1) y^b xi + [b] x^a y^(b-1) eta,
            // with [k] the q-integer in t = (pq)^-1.
            let da = q_integer(mode, w.xexp).mul(&mode.p_pow(-w.yexp));
            let db = q_integer(mode, w.yexp);
            match (w.xi, w.eta) {
                (false, false) => {
                    out.add_term(
                        GenWord::with_form(w.xexp - 1, w.yexp, true, false),
                        &c.mul(&da),
                    );
                    out.add_term(
                        GenWord::with_form(w.xexp, w.yexp - 1, false, true),
                        &c.mul(&db),
                    );
                }
                (true, false) => {
                    // d(f xi) = d(f) xi; only the eta part of df survives,
                    // and eta*xi = -p xi*eta.
                    let coeff = c.mul(&db).mul(&mode.p_pow(1)).neg();
                    out.add_term(GenWord::with_form(w.xexp, w.yexp - 1, true, true), &coeff);
                }
                (false, true) => {
                    let coeff = c.mul(&da);
                    out.add_term(GenWord::with_form(w.xexp - 1, w.yexp, true, true), &coeff);
                }
                (true, true) => {}
            }
        }
        out
    }
}

/// Normal form of a two-letter word that is out of canonical order (or a
/// repeated form generator). In-order pairs are a caller bug and rejected.
pub fn rewrite_pair(left: Generator, right: Generator, mode: ParamMode) -> Result<AlgElement> {
    use Generator::*;
    let out_of_order = matches!(
        (left, right),
        (Y, X) | (Xi, X) | (Xi, Y) | (Eta, X) | (Eta, Y) | (Eta, Xi) | (Xi, Xi) | (Eta, Eta)
    );
    if !out_of_order {
        return Err(Error::PairInOrder);
    }
    AlgElement::generator(mode, left).product(&AlgElement::generator(mode, right))
}

pub(crate) fn word_text(w: &GenWord) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("x", w.xexp), ("y", w.yexp)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{}^{}", name, e)),
        }
    }
    if w.xi {
        parts.push("xi".to_string());
    }
    if w.eta {
        parts.push("eta".to_string());
    }
    parts.join("*")
}

/// Render a single term `coeff * word`; the sign is pulled out front so the
/// element renderer can fold it into the separator.
pub(crate) fn term_text(coeff: &ScalarRF, word_part: &str) -> String {
    let den_trivial = coeff.denominator().is_one();
    let single = coeff.numerator().num_terms() == 1 && den_trivial;
    if word_part.is_empty() {
        return if single || den_trivial {
            format!("{}", coeff)
        } else {
            format!("({})", coeff)
        };
    }
    if coeff.is_one() {
        return word_part.to_string();
    }
    if coeff.neg().is_one() {
        return format!("-{}", word_part);
    }
    if single {
        format!("{}*{}", coeff, word_part)
    } else {
        format!("({})*{}", coeff, word_part)
    }
}

pub(crate) fn join_terms(terms: impl Iterator<Item = String>) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(
            self.terms
                .iter()
                .map(|(w, c)| term_text(c, &word_text(w))),
        );
        write!(f, "{}", rendered)
    }
}

/// Convenience constructors used throughout the tensor calculus and tests.
pub fn gen_x(mode: ParamMode) -> AlgElement {
    AlgElement::generator(mode, Generator::X)
}
pub fn gen_y(mode: ParamMode) -> AlgElement {
    AlgElement::generator(mode, Generator::Y)
}
pub fn gen_xi(mode: ParamMode) -> AlgElement {
    AlgElement::generator(mode, Generator::Xi)
}
pub fn gen_eta(mode: ParamMode) -> AlgElement {
    AlgElement::generator(mode, Generator::Eta)
}

/// The degree-two basis word `xi*eta`.
pub fn xi_eta(mode: ParamMode) -> AlgElement {
    AlgElement::from_term(mode, GenWord::with_form(0, 0, true, true), ScalarRF::one())
}
