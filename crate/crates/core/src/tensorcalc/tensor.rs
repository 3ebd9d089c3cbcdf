//! Tensor squares and cubes of the one-form bimodule, in left-normal form.
//!
//! The tensor product is taken over the algebra, so coefficients pass across
//! the tensor sign: `alpha f (x) beta = alpha (x) f beta`. That freedom is
//! normalized away by pushing every function coefficient to the far left,
//! leaving sums of `c * w * xi^i (x) xi^j` with w a pure x, y word.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::qalgebra::{
    join_terms, push_through_form, term_text, word_text, AlgElement, GenWord, Generator,
};
use crate::scalars::{ParamMode, ScalarRF};

/// A one-form basis letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum FormLetter {
    Xi,
    Eta,
}

impl FormLetter {
    pub fn generator(self) -> Generator {
        match self {
            FormLetter::Xi => Generator::Xi,
            FormLetter::Eta => Generator::Eta,
        }
    }

    /// The paired coordinate generator (x for xi, y for eta).
    pub fn coordinate(self) -> Generator {
        match self {
            FormLetter::Xi => Generator::X,
            FormLetter::Eta => Generator::Y,
        }
    }

    pub fn index(self) -> usize {
        match self {
            FormLetter::Xi => 1,
            FormLetter::Eta => 2,
        }
    }

    pub fn from_index(i: usize) -> Self {
        match i {
            1 => FormLetter::Xi,
            2 => FormLetter::Eta,
            _ => panic!("form letter index must be 1 or 2"),
        }
    }

    pub fn flags(self) -> (bool, bool) {
        match self {
            FormLetter::Xi => (true, false),
            FormLetter::Eta => (false, true),
        }
    }

    fn from_flags(xi: bool, eta: bool) -> Self {
        match (xi, eta) {
            (true, false) => FormLetter::Xi,
            (false, true) => FormLetter::Eta,
            _ => panic!("not a single form letter"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FormLetter::Xi => "xi",
            FormLetter::Eta => "eta",
        }
    }

    pub const BOTH: [FormLetter; 2] = [FormLetter::Xi, FormLetter::Eta];
}

/// Push a coefficient word left through a single form letter.
/// Returns terms `(coeff, word, letter)` with the letter possibly changed.
fn push_through_letter(
    mode: ParamMode,
    letter: FormLetter,
    w: GenWord,
) -> Vec<(ScalarRF, GenWord, FormLetter)> {
    let (xi, eta) = letter.flags();
    push_through_form(mode, xi, eta, w.xexp, w.yexp)
        .into_iter()
        .map(|(c, a, b, rx, re)| (c, GenWord::monomial(a, b), FormLetter::from_flags(rx, re)))
        .collect()
}

/// Product of two coefficient words: `y^b1 x^a2` costs `q^(-b1*a2)`.
fn word_product(mode: ParamMode, w1: GenWord, w2: GenWord) -> (ScalarRF, GenWord) {
    (
        mode.q_pow(-w1.yexp * w2.xexp),
        GenWord::monomial(w1.xexp + w2.xexp, w1.yexp + w2.yexp),
    )
}

/// An element of the tensor square of the one-form bimodule.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor2 {
    mode: ParamMode,
    terms: BTreeMap<(GenWord, FormLetter, FormLetter), ScalarRF>,
}

impl Tensor2 {
    pub fn zero(mode: ParamMode) -> Self {
        Tensor2 { mode, terms: BTreeMap::new() }
    }

    pub fn basis(mode: ParamMode, a: FormLetter, b: FormLetter) -> Self {
        let mut t = Tensor2::zero(mode);
        t.add_term(GenWord::ONE, a, b, &ScalarRF::one());
        t
    }

    pub fn mode(&self) -> ParamMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(GenWord, FormLetter, FormLetter), &ScalarRF)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: GenWord, a: FormLetter, b: FormLetter, c: &ScalarRF) {
        debug_assert!(w.is_coefficient_word());
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((w, a, b))
            .or_insert_with(ScalarRF::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&(w, a, b));
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.mode.require_same(&other.mode)?;
        let mut out = self.clone();
        for ((w, a, b), c) in &other.terms {
            out.add_term(*w, *a, *b, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Tensor2 {
            mode: self.mode,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &ScalarRF) -> Self {
        let mut out = Tensor2::zero(self.mode);
        for ((w, a, b), c) in &self.terms {
            out.add_term(*w, *a, *b, &c.mul(s));
        }
        out
    }

    /// `alpha (x) beta` for one-forms, normalized left. Bilinear over the
    /// algebra: coefficients of `beta` pass through the first slot letter.
    pub fn from_pair(alpha: &AlgElement, beta: &AlgElement) -> Result<Self> {
        alpha.mode().require_same(&beta.mode())?;
        alpha.require_degree(1)?;
        beta.require_degree(1)?;
        let mode = alpha.mode();
        let mut out = Tensor2::zero(mode);
        for (wa, ca) in alpha.terms() {
            let la = FormLetter::from_flags(wa.xi, wa.eta);
            for (wb, cb) in beta.terms() {
                let lb = FormLetter::from_flags(wb.xi, wb.eta);
                for (c1, w1, la1) in push_through_letter(mode, la, wb.coefficient_word()) {
                    let (c2, w) = word_product(mode, wa.coefficient_word(), w1);
                    out.add_term(w, la1, lb, &ca.mul(cb).mul(&c1).mul(&c2));
                }
            }
        }
        Ok(out)
    }

    /// Left action of a function: coefficientwise product.
    pub fn left_mul(&self, f: &AlgElement) -> Result<Self> {
        self.mode.require_same(&f.mode())?;
        f.require_degree(0)?;
        let mut out = Tensor2::zero(self.mode);
        for (wf, cf) in f.terms() {
            for ((w, a, b), c) in &self.terms {
                let (c1, word) = word_product(self.mode, wf.coefficient_word(), *w);
                out.add_term(word, *a, *b, &cf.mul(c).mul(&c1));
            }
        }
        Ok(out)
    }

    /// Right action of a function: pushed leftward through the second slot
    /// letter, then the first.
    pub fn right_mul(&self, f: &AlgElement) -> Result<Self> {
        self.mode.require_same(&f.mode())?;
        f.require_degree(0)?;
        let mut out = Tensor2::zero(self.mode);
        for ((w, a, b), c) in &self.terms {
            for (wf, cf) in f.terms() {
                for (c1, w1, b1) in push_through_letter(self.mode, *b, wf.coefficient_word()) {
                    for (c2, w2, a2) in push_through_letter(self.mode, *a, w1) {
                        let (c3, word) = word_product(self.mode, *w, w2);
                        out.add_term(word, a2, b1, &c.mul(cf).mul(&c1).mul(&c2).mul(&c3));
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Tensor2 {
    /// `x*xi @ eta - q*eta @ xi` style: `@` separates the slots, the
    /// coefficient sits on the left factor.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(self.terms.iter().map(|((w, a, b), c)| {
            let mut left = word_text(w);
            if !left.is_empty() {
                left.push('*');
            }
            left.push_str(a.name());
            format!("{} @ {}", term_text(c, &left), b.name())
        }));
        write!(f, "{}", rendered)
    }
}

/// An element of the triple tensor power, left-normal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3 {
    mode: ParamMode,
    terms: BTreeMap<(GenWord, FormLetter, FormLetter, FormLetter), ScalarRF>,
}

impl Tensor3 {
    pub fn zero(mode: ParamMode) -> Self {
        Tensor3 { mode, terms: BTreeMap::new() }
    }

    pub fn basis(mode: ParamMode, a: FormLetter, b: FormLetter, c: FormLetter) -> Self {
        let mut t = Tensor3::zero(mode);
        t.add_term(GenWord::ONE, a, b, c, &ScalarRF::one());
        t
    }

    pub fn mode(&self) -> ParamMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(
        &self,
    ) -> impl Iterator<Item = (&(GenWord, FormLetter, FormLetter, FormLetter), &ScalarRF)> {
        self.terms.iter()
    }

    pub fn add_term(
        &mut self,
        w: GenWord,
        a: FormLetter,
        b: FormLetter,
        c: FormLetter,
        coeff: &ScalarRF,
    ) {
        debug_assert!(w.is_coefficient_word());
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((w, a, b, c))
            .or_insert_with(ScalarRF::zero);
        *entry = entry.add(coeff);
        if entry.is_zero() {
            self.terms.remove(&(w, a, b, c));
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.mode.require_same(&other.mode)?;
        let mut out = self.clone();
        for ((w, a, b, c), coeff) in &other.terms {
            out.add_term(*w, *a, *b, *c, coeff);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Tensor3 {
            mode: self.mode,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &ScalarRF) -> Self {
        let mut out = Tensor3::zero(self.mode);
        for ((w, a, b, c), coeff) in &self.terms {
            out.add_term(*w, *a, *b, *c, &coeff.mul(s));
        }
        out
    }

    pub fn left_mul(&self, f: &AlgElement) -> Result<Self> {
        self.mode.require_same(&f.mode())?;
        f.require_degree(0)?;
        let mut out = Tensor3::zero(self.mode);
        for (wf, cf) in f.terms() {
            for ((w, a, b, c), coeff) in &self.terms {
                let (c1, word) = word_product(self.mode, wf.coefficient_word(), *w);
                out.add_term(word, *a, *b, *c, &cf.mul(coeff).mul(&c1));
            }
        }
        Ok(out)
    }

    /// Append a basis letter in the third slot: `t (x) xi^j`.
    pub fn from_t2_letter(t: &Tensor2, letter: FormLetter) -> Self {
        let mut out = Tensor3::zero(t.mode());
        for ((w, a, b), c) in t.terms() {
            out.add_term(*w, *a, *b, letter, c);
        }
        out
    }

    /// `alpha (x) t` for a one-form alpha: the coefficients of `t` pass
    /// through alpha's slot letter.
    pub fn from_element_t2(alpha: &AlgElement, t: &Tensor2) -> Result<Self> {
        alpha.mode().require_same(&t.mode())?;
        alpha.require_degree(1)?;
        let mode = alpha.mode();
        let mut out = Tensor3::zero(mode);
        for (wa, ca) in alpha.terms() {
            let la = FormLetter::from_flags(wa.xi, wa.eta);
            for ((w2, k, l), c2) in t.terms() {
                for (c1, w1, la1) in push_through_letter(mode, la, *w2) {
                    let (c3, word) = word_product(mode, wa.coefficient_word(), w1);
                    out.add_term(word, la1, *k, *l, &ca.mul(c2).mul(&c1).mul(&c3));
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(self.terms.iter().map(|((w, a, b, c), coeff)| {
            let mut left = word_text(w);
            if !left.is_empty() {
                left.push('*');
            }
            left.push_str(a.name());
            format!(
                "{} @ {} @ {}",
                term_text(coeff, &left),
                b.name(),
                c.name()
            )
        }));
        write!(f, "{}", rendered)
    }
}

/// An element of (two-forms) tensor (one-forms): sums of
/// `c * w * xi*eta (x) xi^j`, coefficients far left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mixed21 {
    mode: ParamMode,
    terms: BTreeMap<(GenWord, FormLetter), ScalarRF>,
}

impl Mixed21 {
    pub fn zero(mode: ParamMode) -> Self {
        Mixed21 { mode, terms: BTreeMap::new() }
    }

    pub fn mode(&self) -> ParamMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(GenWord, FormLetter), &ScalarRF)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: GenWord, j: FormLetter, c: &ScalarRF) {
        debug_assert!(w.is_coefficient_word());
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((w, j)).or_insert_with(ScalarRF::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&(w, j));
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.mode.require_same(&other.mode)?;
        let mut out = self.clone();
        for ((w, j), c) in &other.terms {
            out.add_term(*w, *j, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Mixed21 {
            mode: self.mode,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &ScalarRF) -> Self {
        let mut out = Mixed21::zero(self.mode);
        for ((w, j), c) in &self.terms {
            out.add_term(*w, *j, &c.mul(s));
        }
        out
    }

    pub fn left_mul(&self, f: &AlgElement) -> Result<Self> {
        self.mode.require_same(&f.mode())?;
        f.require_degree(0)?;
        let mut out = Mixed21::zero(self.mode);
        for (wf, cf) in f.terms() {
            for ((w, j), c) in &self.terms {
                let (c1, word) = word_product(self.mode, wf.coefficient_word(), *w);
                out.add_term(word, *j, &cf.mul(c).mul(&c1));
            }
        }
        Ok(out)
    }

    /// `omega (x) beta` for a two-form omega and one-form beta; beta's
    /// coefficients are pushed through the two-form slot.
    pub fn from_pair(omega: &AlgElement, beta: &AlgElement) -> Result<Self> {
        omega.mode().require_same(&beta.mode())?;
        omega.require_degree(2)?;
        beta.require_degree(1)?;
        let mode = omega.mode();
        let mut out = Mixed21::zero(mode);
        for (wb, cb) in beta.terms() {
            let lb = FormLetter::from_flags(wb.xi, wb.eta);
            let coeff_fn = AlgElement::from_term(mode, wb.coefficient_word(), cb.clone());
            let pushed = omega.product(&coeff_fn)?;
            for (w, c) in pushed.terms() {
                debug_assert!(w.xi && w.eta);
                out.add_term(w.coefficient_word(), lb, c);
            }
        }
        Ok(out)
    }

    /// The two-form paired with `xi^j`, as an algebra element.
    pub fn component(&self, j: FormLetter) -> AlgElement {
        let mut out = AlgElement::zero(self.mode);
        for ((w, letter), c) in &self.terms {
            if *letter == j {
                out.add_term(GenWord::with_form(w.xexp, w.yexp, true, true), c);
            }
        }
        out
    }

    /// The exact scalar c with `self = c * target`, when it exists.
    pub fn proportionality(&self, target: &Mixed21) -> Option<ScalarRF> {
        if self.is_zero() {
            return Some(ScalarRF::zero());
        }
        let (key, tc) = target.terms.iter().next()?;
        let sc = self.terms.get(key)?;
        let ratio = sc.div(tc).ok()?;
        if self.sub(&target.scale(&ratio)).ok()?.is_zero() {
            Some(ratio)
        } else {
            None
        }
    }
}

impl fmt::Display for Mixed21 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(self.terms.iter().map(|((w, j), c)| {
            let mut left = word_text(w);
            if !left.is_empty() {
                left.push('*');
            }
            left.push_str("xi*eta");
            format!("{} @ {}", term_text(c, &left), j.name())
        }));
        write!(f, "{}", rendered)
    }
}
