//! Normal-form engine for the graded algebra of the two-parameter quantum
//! plane: rewriting to ordered words, products, the exterior derivative and
//! the invariant form theta.
//!
//! Degree two is one-dimensional: the basis word is `xi*eta`, and `eta*xi`
//! is always eliminated through `eta*xi = -p xi*eta`.

mod element;
mod rmatrix;
mod word;

pub use element::{
    gen_eta, gen_x, gen_xi, gen_y, rewrite_pair, xi_eta, AlgElement,
};
pub use rmatrix::{pair_index, RMatrix};
pub use word::{GenWord, Generator};

pub(crate) use element::{join_terms, term_text, word_text};
pub(crate) use word::{form_mul, push_through_form, q_integer};

/// The generator `x^i` for i in {1, 2}.
pub fn coordinate(i: usize) -> Generator {
    match i {
        1 => Generator::X,
        2 => Generator::Y,
        _ => panic!("coordinate index must be 1 or 2"),
    }
}

/// The generator `xi^i = dx^i` for i in {1, 2}.
pub fn one_form(i: usize) -> Generator {
    match i {
        1 => Generator::Xi,
        2 => Generator::Eta,
        _ => panic!("one-form index must be 1 or 2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::scalars::{ParamMode, ScalarRF};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn q(k: i64) -> ScalarRF {
        ScalarRF::q_pow(k)
    }

    fn elem(mode: ParamMode, g: Generator) -> AlgElement {
        AlgElement::generator(mode, g)
    }

    /// Independent oracle: derive the full two-letter rule table by explicit
    /// index summation over the defining relations, pulling every coefficient
    /// from the R-matrix entries and solving for the out-of-order word. This
    /// shares none of the closed-form crossing code.
    fn table_from_rmatrix(mode: ParamMode) -> BTreeMap<(Generator, Generator), AlgElement> {
        use Generator::*;
        let r = RMatrix::new(mode);
        let p = mode.p_pow(1);
        let mut table = BTreeMap::new();
        let mut put = |pair, e| {
            table.insert(pair, e);
        };
        let term = |word: GenWord, c: ScalarRF| AlgElement::from_term(mode, word, c);

        // y*x from the coordinate relation row (2,1): y x = q^-1 R[21,12] x y.
        put(
            (Y, X),
            term(
                GenWord::monomial(1, 1),
                q(-1).mul(r.entry(2, 1, 1, 2)),
            ),
        );
        // xi*x from row (1,1) of the mixed relation: x xi = p R[11,11] xi x.
        let c_xx = p.mul(r.entry(1, 1, 1, 1)).inv().unwrap();
        put((Xi, X), term(GenWord::with_form(1, 0, true, false), c_xx));
        // eta*y from row (2,2): y eta = p R[22,22] eta y.
        let c_ey = p.mul(r.entry(2, 2, 2, 2)).inv().unwrap();
        put((Eta, Y), term(GenWord::with_form(0, 1, false, true), c_ey));
        // xi*y from row (2,1): y xi = p R[21,12] xi y.
        let c_xy = p.mul(r.entry(2, 1, 1, 2)).inv().unwrap();
        put(
            (Xi, Y),
            term(GenWord::with_form(0, 1, true, false), c_xy.clone()),
        );
        // eta*x from row (1,2): x eta = p R[12,12] xi y + p R[12,21] eta x,
        // then substitute the xi*y rule.
        let lead = p.mul(r.entry(1, 2, 2, 1)).inv().unwrap();
        let mut eta_x = AlgElement::zero(mode);
        eta_x.add_term(GenWord::with_form(1, 0, false, true), &lead);
        eta_x.add_term(
            GenWord::with_form(0, 1, true, false),
            &lead.mul(&p).mul(r.entry(1, 2, 1, 2)).mul(&c_xy).neg(),
        );
        put((Eta, X), eta_x);
        // Squares from the form relations (1,1) and (2,2):
        // (1 + p R[11,11]) xi^2 = 0 with an invertible prefactor.
        assert!(!ScalarRF::one().add(&p.mul(r.entry(1, 1, 1, 1))).is_zero());
        assert!(!ScalarRF::one().add(&p.mul(r.entry(2, 2, 2, 2))).is_zero());
        put((Xi, Xi), AlgElement::zero(mode));
        put((Eta, Eta), AlgElement::zero(mode));
        // eta*xi from the form relation row (1,2):
        // xi eta = -p R[12,12] xi eta - p R[12,21] eta xi.
        let lead = p.mul(r.entry(1, 2, 2, 1)).inv().unwrap();
        let c = lead
            .mul(&ScalarRF::one().add(&p.mul(r.entry(1, 2, 1, 2))))
            .neg();
        put((Eta, Xi), term(GenWord::with_form(0, 0, true, true), c));
        table
    }

    #[test]
    fn rewrite_table_matches_index_summation_oracle() {
        for mode in [
            ParamMode::Generic,
            ParamMode::Locked(1),
            ParamMode::Locked(2),
            ParamMode::Locked(3),
            ParamMode::Locked(4),
            ParamMode::Torus,
        ] {
            let oracle = table_from_rmatrix(mode);
            for (pair, expected) in &oracle {
                let got = rewrite_pair(pair.0, pair.1, mode).unwrap();
                assert_eq!(&got, expected, "pair {:?} in {}", pair, mode);
            }
        }
    }

    #[test]
    fn rewrite_table_explicit_entries() {
        use Generator::*;
        let g = ParamMode::Generic;
        // y*x -> q^-1 x y
        let yx = rewrite_pair(Y, X, g).unwrap();
        assert_eq!(
            yx,
            AlgElement::from_term(g, GenWord::monomial(1, 1), q(-1))
        );
        // xi*xi -> 0, from (1 + pq) xi^2 = 0
        assert!(rewrite_pair(Xi, Xi, g).unwrap().is_zero());
        // eta*x -> q^-1 x eta - (1 - p^-1 q^-1) y xi
        let mut expected = AlgElement::zero(g);
        expected.add_term(GenWord::with_form(1, 0, false, true), &q(-1));
        expected.add_term(
            GenWord::with_form(0, 1, true, false),
            &ScalarRF::one().sub(&g.pq_pow(-1)).neg(),
        );
        assert_eq!(rewrite_pair(Eta, X, g).unwrap(), expected);
        // eta*xi -> -p xi eta
        assert_eq!(
            rewrite_pair(Eta, Xi, g).unwrap(),
            AlgElement::from_term(
                g,
                GenWord::with_form(0, 0, true, true),
                g.p_pow(1).neg()
            )
        );
        // in-order pairs are rejected
        assert_eq!(rewrite_pair(X, Y, g), Err(Error::PairInOrder));
        assert_eq!(rewrite_pair(X, Xi, g), Err(Error::PairInOrder));
    }

    #[test]
    fn torus_table_is_diagonal() {
        use Generator::*;
        let t = ParamMode::Torus;
        // eta*x -> q^-1 x eta exactly: the coupling term carries 1 - (pq)^-1 = 0.
        let got = rewrite_pair(Eta, X, t).unwrap();
        assert_eq!(
            got,
            AlgElement::from_term(t, GenWord::with_form(1, 0, false, true), q(-1))
        );
        assert_eq!(
            rewrite_pair(Eta, Xi, t).unwrap(),
            AlgElement::from_term(t, GenWord::with_form(0, 0, true, true), q(1).neg())
        );
        assert_eq!(
            rewrite_pair(Xi, X, t).unwrap(),
            AlgElement::from_term(t, GenWord::with_form(1, 0, true, false), ScalarRF::one())
        );
    }

    #[test]
    fn relation_fidelity_all_components() {
        // Every component identity of the three defining relations
        // normalizes to zero when fed through the product.
        for mode in [ParamMode::Generic, ParamMode::Locked(2), ParamMode::Torus] {
            let r = RMatrix::new(mode);
            let p = mode.p_pow(1);
            let x = |i| elem(mode, coordinate(i));
            let f = |i| elem(mode, one_form(i));
            for i in 1..=2 {
                for j in 1..=2 {
                    let mut sum_a = AlgElement::zero(mode);
                    let mut sum_b = AlgElement::zero(mode);
                    let mut sum_c = AlgElement::zero(mode);
                    for k in 1..=2 {
                        for l in 1..=2 {
                            let c = r.entry(i, j, k, l);
                            sum_a = sum_a
                                .add(&x(k).product(&x(l)).unwrap().scale(c))
                                .unwrap();
                            sum_b = sum_b
                                .add(&f(k).product(&x(l)).unwrap().scale(c))
                                .unwrap();
                            sum_c = sum_c
                                .add(&f(k).product(&f(l)).unwrap().scale(c))
                                .unwrap();
                        }
                    }
                    let res_a = x(i)
                        .product(&x(j))
                        .unwrap()
                        .sub(&sum_a.scale(&q(-1)))
                        .unwrap();
                    let res_b = x(i)
                        .product(&f(j))
                        .unwrap()
                        .sub(&sum_b.scale(&p))
                        .unwrap();
                    let res_c = f(i)
                        .product(&f(j))
                        .unwrap()
                        .add(&sum_c.scale(&p))
                        .unwrap();
                    assert!(res_a.is_zero(), "coordinate relation ({i},{j}) in {mode}");
                    assert!(res_b.is_zero(), "mixed relation ({i},{j}) in {mode}");
                    assert!(res_c.is_zero(), "form relation ({i},{j}) in {mode}");
                }
            }
        }
    }

    #[test]
    fn product_examples() {
        let g = ParamMode::Generic;
        let x = elem(g, Generator::X);
        let y = elem(g, Generator::Y);
        let xy = x.product(&y).unwrap();
        let yx = y.product(&x).unwrap();
        assert_eq!(xy, AlgElement::monomial(g, 1, 1).unwrap());
        // x y = q * (y x), the plane relation.
        assert_eq!(xy, yx.scale(&q(1)));
        // theta^2 = 0
        let theta = AlgElement::theta(g);
        assert!(theta.product(&theta).unwrap().is_zero());
        // unit
        let one = AlgElement::one(g);
        assert_eq!(one.product(&theta).unwrap(), theta);
    }

    #[test]
    fn exterior_d_examples() {
        let g = ParamMode::Generic;
        let x = elem(g, Generator::X);
        assert_eq!(x.exterior_d(), elem(g, Generator::Xi));
        // d(xy) = x eta + p^-1 y xi
        let xy = AlgElement::monomial(g, 1, 1).unwrap();
        let mut expected = AlgElement::zero(g);
        expected.add_term(GenWord::with_form(1, 0, false, true), &ScalarRF::one());
        expected.add_term(GenWord::with_form(0, 1, true, false), &g.p_pow(-1));
        assert_eq!(xy.exterior_d(), expected);
        // d(d(x^2 y)) = 0
        let x2y = AlgElement::monomial(g, 2, 1).unwrap();
        assert!(x2y.exterior_d().exterior_d().is_zero());
    }

    #[test]
    fn theta_and_its_differential() {
        let g = ParamMode::Generic;
        let theta = AlgElement::theta(g);
        let mut expected = AlgElement::zero(g);
        expected.add_term(GenWord::with_form(1, 0, false, true), &ScalarRF::one());
        expected.add_term(GenWord::with_form(0, 1, true, false), &q(1).neg());
        assert_eq!(theta, expected);
        // d(theta) = xi eta - q eta xi = (1 + pq) xi*eta
        let d_theta = theta.exterior_d();
        let expected = xi_eta(g).scale(&ScalarRF::one().add(&g.pq_pow(1)));
        assert_eq!(d_theta, expected);
    }

    #[test]
    fn torus_inverses_multiply_to_one() {
        let t = ParamMode::Torus;
        let x = AlgElement::monomial(t, 1, 0).unwrap();
        let x_inv = AlgElement::monomial(t, -1, 0).unwrap();
        assert_eq!(x.product(&x_inv).unwrap(), AlgElement::one(t));
        assert_eq!(x_inv.product(&x).unwrap(), AlgElement::one(t));
        // d(x^-1) = -pq x^-2 xi, checked against d(x * x^-1) = 0
        let d = x_inv.exterior_d();
        let leibniz = x
            .exterior_d()
            .product(&x_inv)
            .unwrap()
            .add(&x.product(&d).unwrap())
            .unwrap();
        assert!(leibniz.is_zero());
        // negative powers are rejected off the torus
        assert_eq!(
            AlgElement::monomial(ParamMode::Generic, -1, 0),
            Err(Error::NegativeExponent)
        );
    }

    fn random_word(rng: &mut ChaCha8Rng, mode: ParamMode) -> GenWord {
        let span = if mode.allows_negative_powers() { -2..=2 } else { 0..=2 };
        GenWord::with_form(
            rng.gen_range(span.clone()),
            rng.gen_range(span),
            rng.gen_bool(0.4),
            rng.gen_bool(0.4),
        )
    }

    #[test]
    fn associativity_on_seeded_random_triples() {
        // Doubles as the confluence check of the rewrite system.
        for (mode, count, seed) in [
            (ParamMode::Generic, 200usize, 0x5ee_d001u64),
            (ParamMode::Torus, 100, 0x5ee_d002),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let u = AlgElement::from_term(mode, random_word(&mut rng, mode), ScalarRF::one());
                let v = AlgElement::from_term(mode, random_word(&mut rng, mode), ScalarRF::one());
                let w = AlgElement::from_term(mode, random_word(&mut rng, mode), ScalarRF::one());
                let left = u.product(&v).unwrap().product(&w).unwrap();
                let right = u.product(&v.product(&w).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn grading_is_respected() {
        let g = ParamMode::Generic;
        let mut rng = ChaCha8Rng::seed_from_u64(0x5ee_d003);
        for _ in 0..100 {
            let u = AlgElement::from_term(g, random_word(&mut rng, g), ScalarRF::one());
            let v = AlgElement::from_term(g, random_word(&mut rng, g), ScalarRF::one());
            let du = u.homogeneous_degree().unwrap();
            let dv = v.homogeneous_degree().unwrap();
            let prod = u.product(&v).unwrap();
            if du + dv > 2 {
                assert!(prod.is_zero());
            } else if !prod.is_zero() {
                assert_eq!(prod.homogeneous_degree(), Some(du + dv));
            }
        }
    }

    #[test]
    fn d_squared_vanishes_on_seeded_functions() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5ee_d004);
        for mode in [ParamMode::Generic, ParamMode::Torus] {
            for _ in 0..50 {
                let mut f = AlgElement::zero(mode);
                for _ in 0..rng.gen_range(1..=3) {
                    let w = random_word(&mut rng, mode).coefficient_word();
                    let c = ScalarRF::from_int(rng.gen_range(-3..=3))
                        .mul(&mode.q_pow(rng.gen_range(-2..=2)));
                    f.add_term(w, &c);
                }
                assert!(f.exterior_d().exterior_d().is_zero());
            }
        }
    }

    #[test]
    fn locked_one_recovers_the_one_parameter_table() {
        // The locked(1) rewrite table coincides with the table contracted
        // from the one-parameter relations and R-matrix.
        use Generator::*;
        let m = ParamMode::Locked(1);
        let pairs = [
            (Y, X),
            (Xi, X),
            (Xi, Y),
            (Eta, X),
            (Eta, Y),
            (Eta, Xi),
            (Xi, Xi),
            (Eta, Eta),
        ];
        let oracle = table_from_rmatrix(m);
        for pair in pairs {
            assert_eq!(rewrite_pair(pair.0, pair.1, m).unwrap(), oracle[&pair]);
        }
        // Spot values: xi x = q^-2 x xi and eta xi = -q xi eta.
        assert_eq!(
            rewrite_pair(Xi, X, m).unwrap(),
            AlgElement::from_term(m, GenWord::with_form(1, 0, true, false), q(-2))
        );
        assert_eq!(
            rewrite_pair(Eta, Xi, m).unwrap(),
            AlgElement::from_term(m, GenWord::with_form(0, 0, true, true), q(1).neg())
        );
    }
}
