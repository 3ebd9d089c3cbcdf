//! Exact arithmetic over the coefficient field: rational functions in the
//! commuting deformation parameters q (and p in generic mode).
//!
//! The parameters are formal transcendentals, so quantities like `1 + p*q`
//! or `1 - q^(n+1)` are invertible automatically: only the zero polynomial
//! is zero. All values are immutable and all operations pure.

mod gcd;
mod laurent;
mod rational;

use std::fmt;

use serde::{Serialize, Serializer};

pub use laurent::{LaurentPoly, Mono};
pub use rational::{int_q_pow, ScalarRF};

use crate::error::{Error, Result};

/// How the two deformation parameters are related.
///
/// `Locked(n)` imposes the relation p = q^n (n >= 1); `Torus` imposes
/// p*q = 1 and additionally permits negative powers of x and y.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParamMode {
    Generic,
    Locked(u32),
    Torus,
}

impl ParamMode {
    /// Locked mode constructor enforcing n >= 1.
    pub fn locked(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidLockedParameter);
        }
        Ok(ParamMode::Locked(n))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ParamMode::Locked(n) if *n < 1 => Err(Error::InvalidLockedParameter),
            _ => Ok(()),
        }
    }

    pub fn locked_n(&self) -> Option<u32> {
        match self {
            ParamMode::Locked(n) => Some(*n),
            _ => None,
        }
    }

    /// Negative powers of x and y are allowed only on the torus.
    pub fn allows_negative_powers(&self) -> bool {
        matches!(self, ParamMode::Torus)
    }

    pub fn name(&self) -> &'static str {
        match self {
            ParamMode::Generic => "generic",
            ParamMode::Locked(_) => "locked",
            ParamMode::Torus => "torus",
        }
    }

    /// `q^k`, identical in every mode.
    pub fn q_pow(&self, k: i64) -> ScalarRF {
        ScalarRF::q_pow(k)
    }

    /// `p^k` with the mode relation already substituted.
    pub fn p_pow(&self, k: i64) -> ScalarRF {
        match self {
            ParamMode::Generic => ScalarRF::p_pow(k),
            ParamMode::Locked(n) => ScalarRF::q_pow(k * (*n as i64)),
            ParamMode::Torus => ScalarRF::q_pow(-k),
        }
    }

    /// `(p*q)^k` with the mode relation substituted; `1` on the torus.
    pub fn pq_pow(&self, k: i64) -> ScalarRF {
        self.p_pow(k).mul(&ScalarRF::q_pow(k))
    }

    /// The two modes must agree before values may be combined.
    pub fn require_same(&self, other: &ParamMode) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ModeMismatch(*self, *other))
        }
    }
}

impl fmt::Display for ParamMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamMode::Generic => write!(f, "generic"),
            ParamMode::Locked(n) => write!(f, "locked(n={})", n),
            ParamMode::Torus => write!(f, "torus"),
        }
    }
}

impl Serialize for ParamMode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Replace every occurrence of p according to the mode relation.
pub fn lock_parameters(s: &ScalarRF, mode: ParamMode) -> Result<ScalarRF> {
    s.lock(mode)
}
