//! Covariant derivatives on the one-form bimodule.
//!
//! A connection is the pair (D xi, D eta); D is extended to arbitrary
//! one-forms by the left Leibniz rule `D(f alpha) = df (x) alpha + f D alpha`
//! and to the tensor square by `D(alpha (x) beta) = D alpha (x) beta +
//! sigma12(alpha (x) D beta)`.

use crate::error::{Error, Result};
use crate::qalgebra::{coordinate, AlgElement, GenWord};
use crate::scalars::{ParamMode, ScalarRF};

use super::sigma::sigma12;
use super::tensor::{FormLetter, Tensor2, Tensor3};
use crate::qalgebra::RMatrix;

/// A linear connection: the images of the two basis one-forms. The overall
/// scale mu is fixed to one; the verification suite checks that the whole
/// pipeline is linear in that scale.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Connection {
    mode: ParamMode,
    d_xi: Tensor2,
    d_eta: Tensor2,
}

impl Connection {
    pub fn new(mode: ParamMode, d_xi: Tensor2, d_eta: Tensor2) -> Result<Self> {
        mode.require_same(&d_xi.mode())?;
        mode.require_same(&d_eta.mode())?;
        Ok(Connection { mode, d_xi, d_eta })
    }

    pub fn zero(mode: ParamMode) -> Self {
        Connection {
            mode,
            d_xi: Tensor2::zero(mode),
            d_eta: Tensor2::zero(mode),
        }
    }

    pub fn mode(&self) -> ParamMode {
        self.mode
    }

    pub fn d_xi(&self) -> &Tensor2 {
        &self.d_xi
    }

    pub fn d_eta(&self) -> &Tensor2 {
        &self.d_eta
    }

    pub fn d_of(&self, letter: FormLetter) -> &Tensor2 {
        match letter {
            FormLetter::Xi => &self.d_xi,
            FormLetter::Eta => &self.d_eta,
        }
    }

    pub fn scale(&self, s: &ScalarRF) -> Self {
        Connection {
            mode: self.mode,
            d_xi: self.d_xi.scale(s),
            d_eta: self.d_eta.scale(s),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.d_xi.is_zero() && self.d_eta.is_zero()
    }
}

/// The one-parameter family of the locked plane (with mu = 1):
/// `D xi^i = x^i Z theta (x) theta`, `Z = x^(n-1) y^(n-1)`.
pub fn standard_connection(mode: ParamMode) -> Result<Connection> {
    let n = match mode {
        ParamMode::Locked(n) if n >= 1 => n as i64,
        ParamMode::Locked(_) => return Err(Error::InvalidLockedParameter),
        _ => {
            return Err(Error::UnsupportedMode {
                op: "standard_connection",
                mode,
            })
        }
    };
    let theta = AlgElement::theta(mode);
    let theta_theta = Tensor2::from_pair(&theta, &theta)?;
    let z = AlgElement::monomial(mode, n - 1, n - 1)?;
    let mut d = Vec::with_capacity(2);
    for i in 1..=2 {
        let prefix = AlgElement::generator(mode, coordinate(i)).product(&z)?;
        d.push(theta_theta.left_mul(&prefix)?);
    }
    let d_eta = d.pop().expect("two prefixes");
    let d_xi = d.pop().expect("two prefixes");
    Connection::new(mode, d_xi, d_eta)
}

/// Covariant derivative of a one-form by the left Leibniz rule.
pub fn cov_d1(alpha: &AlgElement, conn: &Connection) -> Result<Tensor2> {
    alpha.mode().require_same(&conn.mode())?;
    alpha.require_degree(1)?;
    let mode = alpha.mode();
    let mut out = Tensor2::zero(mode);
    for (w, c) in alpha.terms() {
        let letter = if w.xi { FormLetter::Xi } else { FormLetter::Eta };
        let f = AlgElement::from_term(mode, w.coefficient_word(), c.clone());
        // df (x) xi^i: the second slot is a bare basis letter.
        for (wd, cd) in f.exterior_d().terms() {
            let ld = if wd.xi { FormLetter::Xi } else { FormLetter::Eta };
            out.add_term(wd.coefficient_word(), ld, letter, cd);
        }
        out = out.add(&conn.d_of(letter).left_mul(&f)?)?;
    }
    Ok(out)
}

/// Extension of D to the tensor square:
/// `D(alpha (x) beta) = D alpha (x) beta + sigma12(alpha (x) D beta)`.
pub fn cov_d2(t: &Tensor2, conn: &Connection) -> Result<Tensor3> {
    t.mode().require_same(&conn.mode())?;
    let mode = t.mode();
    let mut out = Tensor3::zero(mode);
    for ((w, i, j), c) in t.terms() {
        let (xi, eta) = i.flags();
        let alpha = AlgElement::from_term(
            mode,
            GenWord::with_form(w.xexp, w.yexp, xi, eta),
            c.clone(),
        );
        let d_alpha = cov_d1(&alpha, conn)?;
        out = out.add(&Tensor3::from_t2_letter(&d_alpha, *j))?;
        let alpha_db = Tensor3::from_element_t2(&alpha, conn.d_of(*j))?;
        out = out.add(&sigma12(&alpha_db))?;
    }
    Ok(out)
}

/// Residuals of the compatibility constraint
/// `x^i D xi^j - p Rhat^{ij}_{kl} (D xi^k) x^l`, indexed by (i, j) in the
/// order (1,1), (1,2), (2,1), (2,2). A connection is admissible exactly when
/// all four vanish; this check shares no code with the solver's elimination.
pub fn constraint_residuals(conn: &Connection) -> Result<[Tensor2; 4]> {
    let mode = conn.mode();
    let r = RMatrix::new(mode);
    let p = mode.p_pow(1);
    let mut out: Vec<Tensor2> = Vec::with_capacity(4);
    for i in 1..=2 {
        let xi_elem = AlgElement::generator(mode, coordinate(i));
        for j in 1..=2 {
            let lhs = conn.d_of(FormLetter::from_index(j)).left_mul(&xi_elem)?;
            let mut rhs = Tensor2::zero(mode);
            for k in 1..=2 {
                for l in 1..=2 {
                    let entry = r.entry(i, j, k, l);
                    if entry.is_zero() {
                        continue;
                    }
                    let xl = AlgElement::generator(mode, coordinate(l));
                    let pushed = conn.d_of(FormLetter::from_index(k)).right_mul(&xl)?;
                    rhs = rhs.add(&pushed.scale(&p.mul(entry)))?;
                }
            }
            out.push(lhs.sub(&rhs)?);
        }
    }
    Ok(out.try_into().expect("four residuals"))
}
