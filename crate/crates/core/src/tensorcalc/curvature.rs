//! Torsion and curvature of a connection.
//!
//! The curvature map is `pi12 D^2` from one-forms to (two-forms) tensor
//! (one-forms). For the standard connections it collapses to the shape
//! `pi12 D^2 xi^i = c(q) x^i Z xi*eta (x) theta`, and rewriting the theta
//! slot onto the basis {xi, eta} produces the 2x2 curvature matrix.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qalgebra::{coordinate, one_form, xi_eta, AlgElement};
use crate::scalars::{ParamMode, ScalarRF};

use super::connection::{cov_d1, cov_d2, Connection};
use super::sigma::{pi12, pi2};
use super::tensor::{FormLetter, Mixed21};

/// The curvature map `pi12 D^2` applied to a one-form.
pub fn pi12_d2(alpha: &AlgElement, conn: &Connection) -> Result<Mixed21> {
    let d1 = cov_d1(alpha, conn)?;
    let d2 = cov_d2(&d1, conn)?;
    Ok(pi12(&d2))
}

/// Result of matching a curvature value against the expected shape
/// `c * x^i Z xi*eta (x) theta`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum ShapeDecomposition {
    /// The value is exactly `c` times the shape tensor.
    Proportional { c: ScalarRF },
    /// Structured failure: the value is not left-proportional to the shape.
    NotProportional { value: String, shape: String },
}

/// Everything the curvature pipeline produces for one connection.
#[derive(Clone, Debug)]
pub struct CurvatureReport {
    pub mode: ParamMode,
    pub n: u32,
    /// Torsion residuals `(d - pi D) xi^i`; zero for admissible connections.
    pub torsion: [AlgElement; 2],
    /// `pi12 D^2 theta`; zero by the flatness of theta.
    pub theta_curvature: Mixed21,
    /// `pi12 D^2 xi^i`.
    pub xi_curvature: [Mixed21; 2],
    /// Match against `c(q) x^i Z xi*eta (x) theta`.
    pub shape: [ShapeDecomposition; 2],
    /// The curvature matrix from `pi12 D^2 xi^i = -Omega^i_j (x) xi^j`.
    pub omega: [[AlgElement; 2]; 2],
}

impl CurvatureReport {
    /// The extracted scalar when both components share the expected shape.
    pub fn curvature_scalar(&self) -> Option<&ScalarRF> {
        match (&self.shape[0], &self.shape[1]) {
            (ShapeDecomposition::Proportional { c: c0 }, ShapeDecomposition::Proportional { c: c1 })
                if c0 == c1 =>
            {
                Some(c0)
            }
            _ => None,
        }
    }
}

/// Run the full torsion/curvature pipeline for a locked-mode connection.
pub fn curvature_of(conn: &Connection) -> Result<CurvatureReport> {
    let mode = conn.mode();
    let n = match mode {
        ParamMode::Locked(n) if n >= 1 => n,
        ParamMode::Locked(_) => return Err(Error::InvalidLockedParameter),
        _ => {
            return Err(Error::UnsupportedMode {
                op: "curvature_of",
                mode,
            })
        }
    };

    let theta = AlgElement::theta(mode);
    let z = AlgElement::monomial(mode, n as i64 - 1, n as i64 - 1)?;

    let mut torsion = Vec::with_capacity(2);
    let mut xi_curvature = Vec::with_capacity(2);
    let mut shape = Vec::with_capacity(2);
    let mut omega = Vec::with_capacity(2);
    for i in 1..=2 {
        let form = AlgElement::generator(mode, one_form(i));
        // (d - pi D) xi^i
        let residual = form
            .exterior_d()
            .sub(&pi2(&cov_d1(&form, conn)?))?;
        torsion.push(residual);

        let curv = pi12_d2(&form, conn)?;
        // Shape tensor: x^i Z xi*eta (x) theta.
        let prefix = AlgElement::generator(mode, coordinate(i)).product(&z)?;
        let omega2 = prefix.product(&xi_eta(mode))?;
        let target = Mixed21::from_pair(&omega2, &theta)?;
        shape.push(match curv.proportionality(&target) {
            Some(c) => ShapeDecomposition::Proportional { c },
            None => ShapeDecomposition::NotProportional {
                value: curv.to_string(),
                shape: target.to_string(),
            },
        });
        // pi12 D^2 xi^i = -Omega^i_j (x) xi^j
        omega.push([
            curv.component(FormLetter::Xi).neg(),
            curv.component(FormLetter::Eta).neg(),
        ]);
        xi_curvature.push(curv);
    }

    let theta_curvature = pi12_d2(&theta, conn)?;

    Ok(CurvatureReport {
        mode,
        n,
        torsion: torsion.try_into().expect("two residuals"),
        theta_curvature,
        xi_curvature: xi_curvature.try_into().expect("two values"),
        shape: shape.try_into().expect("two shapes"),
        omega: omega.try_into().expect("two rows"),
    })
}
