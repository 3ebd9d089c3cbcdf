//! The coefficient field: reduced rational functions in q (and p).
//!
//! Every `ScalarRF` is kept in a unique canonical form, so equality of field
//! elements is a plain data comparison. The canonical form is fixed by
//!
//! * clearing all negative exponents and any pure monomial factor of the
//!   denominator into the numerator (the numerator stays a Laurent
//!   polynomial, the denominator a true polynomial not divisible by q or p),
//! * dividing out the gcd of numerator and denominator, and
//! * scaling the denominator monic under the graded lexicographic order.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::gcd::poly_gcd;
use super::laurent::{LaurentPoly, Mono};
use crate::error::{Error, Result};

/// An exact rational function in the deformation parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalarRF {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl ScalarRF {
    /// Canonical reduced form of `num / den`. Rejects a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(ScalarRF { num: LaurentPoly::zero(), den: LaurentPoly::one() });
        }
        // Pull the Laurent monomial content out of both parts.
        let mn = num.min_exponents();
        let md = den.min_exponents();
        let num_poly = num.mul_mono(&BigRational::one(), -mn.qexp, -mn.pexp);
        let den_poly = den.mul_mono(&BigRational::one(), -md.qexp, -md.pexp);

        let g = poly_gcd(&num_poly, &den_poly);
        let mut n = num_poly.exact_div(&g).expect("gcd divides numerator");
        let mut d = den_poly.exact_div(&g).expect("gcd divides denominator");

        // Monic denominator; the scale and the monomial factor go into the numerator.
        let lc = d.leading().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            let inv = BigRational::one() / lc;
            d = d.scale(&inv);
            n = n.scale(&inv);
        }
        let n = n.mul_mono(&BigRational::one(), mn.qexp - md.qexp, mn.pexp - md.pexp);
        Ok(ScalarRF { num: n, den: d })
    }

    pub fn zero() -> Self {
        ScalarRF { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        ScalarRF { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(value: i64) -> Self {
        ScalarRF { num: LaurentPoly::from_int(value), den: LaurentPoly::one() }
    }

    pub fn from_rational(value: BigRational) -> Self {
        ScalarRF { num: LaurentPoly::monomial(value, 0, 0), den: LaurentPoly::one() }
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: i64) -> Self {
        ScalarRF {
            num: LaurentPoly::monomial(BigRational::one(), k, 0),
            den: LaurentPoly::one(),
        }
    }

    /// The monomial `p^k` of generic mode.
    pub fn p_pow(k: i64) -> Self {
        ScalarRF {
            num: LaurentPoly::monomial(BigRational::one(), 0, k),
            den: LaurentPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        ScalarRF::new(num, den).expect("nonzero denominator product")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ScalarRF { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ScalarRF::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator product")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        ScalarRF::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> Result<Self> {
        ScalarRF::one().div(self)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut out = ScalarRF::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        Ok(out)
    }

    /// Substitute the parameter relation of `mode` (identity in generic mode)
    /// and renormalize.
    pub fn lock(&self, mode: super::ParamMode) -> Result<Self> {
        use super::ParamMode::*;
        match mode {
            Generic => Ok(self.clone()),
            Locked(n) => {
                if n < 1 {
                    return Err(Error::InvalidLockedParameter);
                }
                let n = n as i64;
                let map = |m: Mono| Mono::new(m.qexp + n * m.pexp, 0);
                ScalarRF::new(self.num.map_exponents(map), self.den.map_exponents(map))
            }
            Torus => {
                let map = |m: Mono| Mono::new(m.qexp - m.pexp, 0);
                ScalarRF::new(self.num.map_exponents(map), self.den.map_exponents(map))
            }
        }
    }
}

impl fmt::Display for ScalarRF {
    /// `q^-2 + 1 + q^2 + q^4` when the denominator is trivial, otherwise
    /// `(...)/(...)` with both parts in canonical term order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl serde::Serialize for ScalarRF {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Convenience: c * q^a as a scalar with an integer coefficient.
pub fn int_q_pow(c: i64, a: i64) -> ScalarRF {
    ScalarRF::from_int(c).mul(&ScalarRF::q_pow(a))
}

impl From<i64> for ScalarRF {
    fn from(value: i64) -> Self {
        ScalarRF::from_int(value)
    }
}

impl From<BigInt> for ScalarRF {
    fn from(value: BigInt) -> Self {
        ScalarRF::from_rational(BigRational::from(value))
    }
}
