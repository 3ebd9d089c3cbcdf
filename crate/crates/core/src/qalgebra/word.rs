//! Ordered words over the generators x, y, xi, eta and the closed-form
//! commutation rules that move a monomial left through the form letters.
//!
//! The canonical word is `x^a * y^b * xi^e * eta^d` with e, d in {0, 1}.
//! The two-letter rule table (obtained by contracting the defining relations
//! with the R-matrix) is
//!
//! ```text
//! y*x   -> q^-1 x y                 eta*x -> q^-1 x eta - (1 - p^-1 q^-1) y xi
//! xi*x  -> (pq)^-1 x xi             eta*y -> (pq)^-1 y eta
//! xi*y  -> p^-1 y xi                eta*eta -> 0
//! xi*xi -> 0                        eta*xi -> -p xi eta
//! ```
//!
//! Rewriting with this table is strongly normalizing: each rule moves x and y
//! strictly to the left and strictly reduces the number of inverted adjacent
//! pairs under the order x < y < xi < eta, and the form letters can only
//! shorten. The closed forms below collapse whole monomial crossings
//! (`eta * x^a y^b` etc.) into at most two terms, which also covers the
//! negative exponents of torus mode, where `1 - (pq)^-a` vanishes and the
//! table becomes diagonal.

use std::cmp::Ordering;

use crate::scalars::{ParamMode, ScalarRF};

/// The four generators of the differential algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    X,
    Y,
    Xi,
    Eta,
}

/// A canonically ordered word `x^xexp y^yexp xi^xi eta^eta`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct GenWord {
    pub xexp: i64,
    pub yexp: i64,
    pub xi: bool,
    pub eta: bool,
}

impl GenWord {
    pub const ONE: GenWord = GenWord { xexp: 0, yexp: 0, xi: false, eta: false };

    pub fn monomial(xexp: i64, yexp: i64) -> Self {
        GenWord { xexp, yexp, xi: false, eta: false }
    }

    pub fn with_form(xexp: i64, yexp: i64, xi: bool, eta: bool) -> Self {
        GenWord { xexp, yexp, xi, eta }
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::X => GenWord::monomial(1, 0),
            Generator::Y => GenWord::monomial(0, 1),
            Generator::Xi => GenWord::with_form(0, 0, true, false),
            Generator::Eta => GenWord::with_form(0, 0, false, true),
        }
    }

    /// Form degree (number of xi/eta letters), in {0, 1, 2}.
    pub fn form_degree(&self) -> u8 {
        self.xi as u8 + self.eta as u8
    }

    /// The x, y part with form letters stripped.
    pub fn coefficient_word(&self) -> GenWord {
        GenWord::monomial(self.xexp, self.yexp)
    }

    pub fn is_coefficient_word(&self) -> bool {
        !self.xi && !self.eta
    }
}

// Term order used by the canonical rendering: form degree ascending, then
// x exponent descending, then y exponent descending, then xi before eta.
impl Ord for GenWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (
            self.form_degree(),
            std::cmp::Reverse(self.xexp),
            std::cmp::Reverse(self.yexp),
            self.eta,
        )
            .cmp(&(
                other.form_degree(),
                std::cmp::Reverse(other.xexp),
                std::cmp::Reverse(other.yexp),
                other.eta,
            ))
    }
}

impl PartialOrd for GenWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The q-integer `[k] = 1 + t + ... + t^(k-1)` with t = (pq)^-1, extended to
/// negative k by `[-k] = -t^-1 - ... - t^-k`. On the torus t = 1 and [k] = k.
pub(crate) fn q_integer(mode: ParamMode, k: i64) -> ScalarRF {
    let mut out = ScalarRF::zero();
    if k >= 0 {
        for s in 0..k {
            out = out.add(&mode.pq_pow(-s));
        }
    } else {
        for s in 1..=(-k) {
            out = out.sub(&mode.pq_pow(s));
        }
    }
    out
}

/// Move the monomial `x^a y^b` left through the form letters `xi^e eta^d`.
///
/// Returns the expansion `xi^e eta^d * x^a y^b = sum c_i * x^(a_i) y^(b_i) *
/// (form_i)` with each form of the same degree. At most two terms appear (the
/// eta/x crossing splits once; the split term then dies against a xi).
pub(crate) fn push_through_form(
    mode: ParamMode,
    xi: bool,
    eta: bool,
    a: i64,
    b: i64,
) -> Vec<(ScalarRF, i64, i64, bool, bool)> {
    match (xi, eta) {
        (false, false) => vec![(ScalarRF::one(), a, b, false, false)],
        (true, false) => {
            // xi * x^a y^b = (pq)^-a p^-b x^a y^b xi
            vec![(mode.pq_pow(-a).mul(&mode.p_pow(-b)), a, b, true, false)]
        }
        (false, true) => {
            // eta * x^a y^b = q^-a (pq)^-b x^a y^b eta
            //               - q^(1-a) (1 - (pq)^-a) p^-b x^(a-1) y^(b+1) xi
            let diag = mode.q_pow(-a).mul(&mode.pq_pow(-b));
            let split = mode
                .q_pow(1 - a)
                .mul(&ScalarRF::one().sub(&mode.pq_pow(-a)))
                .mul(&mode.p_pow(-b))
                .neg();
            let mut out = vec![(diag, a, b, false, true)];
            if !split.is_zero() {
                out.push((split, a - 1, b + 1, true, false));
            }
            out
        }
        (true, true) => {
            // The split term of the eta crossing meets the xi and vanishes.
            let factor = mode
                .q_pow(-2 * a - b)
                .mul(&mode.p_pow(-a - 2 * b));
            vec![(factor, a, b, true, true)]
        }
    }
}

/// Product of two pure form words; `None` when a letter repeats (degree > 2
/// or a square). The only sign-bearing case is `eta * xi = -p xi eta`.
pub(crate) fn form_mul(
    mode: ParamMode,
    left: (bool, bool),
    right: (bool, bool),
) -> Option<(ScalarRF, bool, bool)> {
    let (lx, le) = left;
    let (rx, re) = right;
    if (lx && rx) || (le && re) {
        return None;
    }
    let factor = if le && rx {
        mode.p_pow(1).neg()
    } else {
        ScalarRF::one()
    };
    Some((factor, lx || rx, le || re))
}

/// Normal-form product of two canonical words, as a short list of terms.
pub(crate) fn word_mul(mode: ParamMode, w1: &GenWord, w2: &GenWord) -> Vec<(ScalarRF, GenWord)> {
    let mut out = Vec::with_capacity(2);
    for (c_push, a, b, xi1, eta1) in push_through_form(mode, w1.xi, w1.eta, w2.xexp, w2.yexp) {
        if let Some((c_form, xi, eta)) = form_mul(mode, (xi1, eta1), (w2.xi, w2.eta)) {
            // y^b1 * x^a = q^(-a*b1) x^a y^b1
            let c_mono = mode.q_pow(-w1.yexp * a);
            let coeff = c_push.mul(&c_form).mul(&c_mono);
            if !coeff.is_zero() {
                out.push((
                    coeff,
                    GenWord::with_form(w1.xexp + a, w1.yexp + b, xi, eta),
                ));
            }
        }
    }
    out
}
