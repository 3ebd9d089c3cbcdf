//! The generalized permutation sigma and the product projections.
//!
//! Sigma is defined on basis tensors by
//!
//! ```text
//! sigma(xi (x) xi)   = (pq)^-1 xi (x) xi
//! sigma(xi (x) eta)  = p^-1 eta (x) xi
//! sigma(eta (x) xi)  = q^-1 xi (x) eta + ((pq)^-1 - 1) eta (x) xi
//! sigma(eta (x) eta) = (pq)^-1 eta (x) eta
//! ```
//!
//! and extended by left-linearity (coefficients stay put). Right-linearity
//! is a theorem, exercised by the test suites rather than assumed.

use crate::qalgebra::{form_mul, AlgElement, GenWord};
use crate::scalars::{ParamMode, ScalarRF};

use super::tensor::{FormLetter, Mixed21, Tensor2, Tensor3};

/// Action of sigma on a basis pair, as a short list of terms.
pub(crate) fn sigma_basis(
    mode: ParamMode,
    a: FormLetter,
    b: FormLetter,
) -> Vec<(ScalarRF, FormLetter, FormLetter)> {
    use FormLetter::*;
    match (a, b) {
        (Xi, Xi) => vec![(mode.pq_pow(-1), Xi, Xi)],
        (Xi, Eta) => vec![(mode.p_pow(-1), Eta, Xi)],
        (Eta, Xi) => vec![
            (mode.q_pow(-1), Xi, Eta),
            (mode.pq_pow(-1).sub(&ScalarRF::one()), Eta, Xi),
        ],
        (Eta, Eta) => vec![(mode.pq_pow(-1), Eta, Eta)],
    }
}

/// Sigma on the tensor square, left coefficients fixed.
pub fn sigma2(t: &Tensor2) -> Tensor2 {
    let mode = t.mode();
    let mut out = Tensor2::zero(mode);
    for ((w, a, b), c) in t.terms() {
        for (s, a1, b1) in sigma_basis(mode, *a, *b) {
            out.add_term(*w, a1, b1, &c.mul(&s));
        }
    }
    out
}

/// `sigma (x) 1`: sigma on the first two slots of a tensor cube.
pub fn sigma12(t: &Tensor3) -> Tensor3 {
    let mode = t.mode();
    let mut out = Tensor3::zero(mode);
    for ((w, a, b, c3), coeff) in t.terms() {
        for (s, a1, b1) in sigma_basis(mode, *a, *b) {
            out.add_term(*w, a1, b1, *c3, &coeff.mul(&s));
        }
    }
    out
}

/// `1 (x) sigma`: sigma on the last two slots.
pub fn sigma23(t: &Tensor3) -> Tensor3 {
    let mode = t.mode();
    let mut out = Tensor3::zero(mode);
    for ((w, a, b, c3), coeff) in t.terms() {
        for (s, b1, c1) in sigma_basis(mode, *b, *c3) {
            out.add_term(*w, *a, b1, c1, &coeff.mul(&s));
        }
    }
    out
}

/// The projection defined by the product of forms: slot1 * slot2.
pub fn pi2(t: &Tensor2) -> AlgElement {
    let mode = t.mode();
    let mut out = AlgElement::zero(mode);
    for ((w, a, b), c) in t.terms() {
        if let Some((s, xi, eta)) = form_mul(mode, a.flags(), b.flags()) {
            debug_assert!(xi && eta);
            out.add_term(GenWord::with_form(w.xexp, w.yexp, xi, eta), &c.mul(&s));
        }
    }
    out
}

/// `pi (x) 1`: multiply the first two slots into a two-form, keep the third.
pub fn pi12(t: &Tensor3) -> Mixed21 {
    let mode = t.mode();
    let mut out = Mixed21::zero(mode);
    for ((w, a, b, c3), coeff) in t.terms() {
        if let Some((s, _, _)) = form_mul(mode, a.flags(), b.flags()) {
            out.add_term(*w, *c3, &coeff.mul(&s));
        }
    }
    out
}

/// Sigma as a 4x4 matrix over the scalar field, rows indexed by the input
/// pair and columns by the output pair, both in the order
/// (xi,xi), (xi,eta), (eta,xi), (eta,eta).
pub fn sigma_matrix(mode: ParamMode) -> [[ScalarRF; 4]; 4] {
    let mut m: [[ScalarRF; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| ScalarRF::zero()));
    for (row, (a, b)) in pair_order().into_iter().enumerate() {
        for (s, a1, b1) in sigma_basis(mode, a, b) {
            let col = pair_slot(a1, b1);
            m[row][col] = m[row][col].add(&s);
        }
    }
    m
}

pub(crate) fn pair_order() -> [(FormLetter, FormLetter); 4] {
    use FormLetter::*;
    [(Xi, Xi), (Xi, Eta), (Eta, Xi), (Eta, Eta)]
}

pub(crate) fn pair_slot(a: FormLetter, b: FormLetter) -> usize {
    (a.index() - 1) * 2 + (b.index() - 1)
}
