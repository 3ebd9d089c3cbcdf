//! Polynomial gcd over Q[q, p] via content-and-primitive-part factorization.
//!
//! The bivariate case recurses on q with coefficients in Q[p], using a
//! primitive pseudo-remainder sequence; univariate gcds are plain Euclid.
//! Results are normalized monic under the graded lexicographic order, which
//! makes the reduced fraction of `ScalarRF` unique.

use num_rational::BigRational;
use num_traits::One;

use super::laurent::{LaurentPoly, Mono};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Var {
    Q,
    P,
}

/// Gcd of two polynomials with non-negative exponents, normalized so the
/// grlex-leading coefficient is one. Inputs may be zero (gcd(0, g) = monic g).
pub(crate) fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return make_monic(b.clone());
    }
    if b.is_zero() {
        return make_monic(a.clone());
    }
    debug_assert!(a.min_exponents().qexp >= 0 && a.min_exponents().pexp >= 0);
    debug_assert!(b.min_exponents().qexp >= 0 && b.min_exponents().pexp >= 0);

    let result = if a.max_pexp() == 0 && b.max_pexp() == 0 {
        gcd_univariate(a, b, Var::Q)
    } else if a.max_qexp() == 0 && b.max_qexp() == 0 {
        gcd_univariate(a, b, Var::P)
    } else {
        gcd_bivariate(a, b)
    };
    make_monic(result)
}

fn make_monic(poly: LaurentPoly) -> LaurentPoly {
    match poly.leading() {
        None => poly,
        Some((_, lc)) => {
            if lc.is_one() {
                poly
            } else {
                let inv = BigRational::one() / lc.clone();
                poly.scale(&inv)
            }
        }
    }
}

fn degree_in(poly: &LaurentPoly, var: Var) -> i64 {
    match var {
        Var::Q => poly.max_qexp(),
        Var::P => poly.max_pexp(),
    }
}

/// Leading coefficient of `poly` viewed as a polynomial in `var`; the result
/// lives in the opposite variable's subring.
fn lead_coeff_in(poly: &LaurentPoly, var: Var) -> LaurentPoly {
    let deg = degree_in(poly, var);
    let mut out = LaurentPoly::zero();
    for (m, c) in poly.terms() {
        let (main, rest) = match var {
            Var::Q => (m.qexp, Mono::new(0, m.pexp)),
            Var::P => (m.pexp, Mono::new(m.qexp, 0)),
        };
        if main == deg {
            out.add_term(rest, c);
        }
    }
    out
}

fn shift_in(poly: &LaurentPoly, var: Var, k: i64) -> LaurentPoly {
    match var {
        Var::Q => poly.mul_mono(&BigRational::one(), k, 0),
        Var::P => poly.mul_mono(&BigRational::one(), 0, k),
    }
}

/// Euclidean remainder in one variable over the rationals.
fn rem_univariate(f: &LaurentPoly, g: &LaurentPoly, var: Var) -> LaurentPoly {
    let dg = degree_in(g, var);
    let lg = lead_coeff_in(g, var)
        .leading()
        .expect("nonzero divisor")
        .1
        .clone();
    let mut r = f.clone();
    while !r.is_zero() && degree_in(&r, var) >= dg {
        let dr = degree_in(&r, var);
        let lr = lead_coeff_in(&r, var).leading().unwrap().1.clone();
        let t = shift_in(g, var, dr - dg).scale(&(lr / lg.clone()));
        r = r.sub(&t);
    }
    r
}

fn gcd_univariate(a: &LaurentPoly, b: &LaurentPoly, var: Var) -> LaurentPoly {
    let mut f = a.clone();
    let mut g = b.clone();
    while !g.is_zero() {
        let r = rem_univariate(&f, &g, var);
        f = g;
        g = r;
    }
    f
}

/// Content of `poly` in q: the Q[p]-gcd of its q-coefficients.
fn content_q(poly: &LaurentPoly) -> LaurentPoly {
    let mut content = LaurentPoly::zero();
    for (_, coeff) in poly.coeffs_in_q() {
        content = if content.is_zero() {
            make_monic(coeff)
        } else {
            make_monic(gcd_univariate(&content, &coeff, Var::P))
        };
        if content.is_one() {
            break;
        }
    }
    content
}

fn primitive_part_q(poly: &LaurentPoly) -> LaurentPoly {
    let c = content_q(poly);
    if c.is_one() {
        poly.clone()
    } else {
        poly.exact_div(&c).expect("content divides")
    }
}

/// Pseudo-remainder of f by g in the variable q (coefficients in Q[p]).
fn pseudo_rem_q(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let dg = g.max_qexp();
    let lg = lead_coeff_in(g, Var::Q);
    let mut r = f.clone();
    while !r.is_zero() && r.max_qexp() >= dg {
        let dr = r.max_qexp();
        let lr = lead_coeff_in(&r, Var::Q);
        r = r.mul(&lg).sub(&shift_in(g, Var::Q, dr - dg).mul(&lr));
    }
    r
}

fn gcd_bivariate(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let ca = content_q(a);
    let cb = content_q(b);
    let content = make_monic(gcd_univariate(&ca, &cb, Var::P));

    let mut f = primitive_part_q(a);
    let mut g = primitive_part_q(b);
    if f.max_qexp() < g.max_qexp() {
        std::mem::swap(&mut f, &mut g);
    }
    let prim = loop {
        if g.is_zero() {
            break f;
        }
        if g.max_qexp() == 0 {
            // Primitive and q-free: the primitive parts are coprime.
            break LaurentPoly::one();
        }
        let r = pseudo_rem_q(&f, &g);
        f = g;
        g = if r.is_zero() { r } else { primitive_part_q(&r) };
    };
    content.mul(&prim)
}
