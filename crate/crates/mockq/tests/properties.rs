use mockq::chars::{self, PeriodicFunction};
use mockq::cyclo::{cyclotomic_polynomial, eval_terminating, terminating::eval_terminating_numeric, EvaluationPoint, PochFactor, TermSum};
use mockq::lfunc::{l_value_bernoulli, BernoulliTable};
use mockq::series::{pochhammer, q_binomial, PochLen};
use mockq::{Cyclo, Monomial, Prec, QSeries, Q};
use proptest::prelude::*;

fn sparse(t: i64) -> impl Strategy<Value = QSeries> {
    prop::collection::vec((0..t, -20i64..=20), 0..12).prop_map(move |terms| {
        QSeries::from_terms(Prec::q(t), terms.into_iter().map(|(e, c)| (e, Cyclo::from_int(c)))).unwrap()
    })
}

fn truncated(t: i64) -> impl Strategy<Value = QSeries> {
    (sparse(60), 10..60i64).prop_map(move |(s, k)| s.truncate(k.min(t)))
}

fn cyclo(m: u64) -> impl Strategy<Value = Cyclo> {
    prop::collection::vec(-9i64..=9, 1..(m as usize + 1))
        .prop_map(move |c| Cyclo::from_poly(m, c.into_iter().map(|x| Q::from_integer(x.into())).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_ring_laws(a in truncated(60), b in truncated(60), c in truncated(60)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        let agree = |x: QSeries, y: QSeries| x.first_mismatch(&y).unwrap().is_none();
        prop_assert!(agree(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap()));
        prop_assert!(agree(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap()));
        prop_assert!(agree(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()));
    }

    #[test]
    fn truncation_is_pessimistic(a in truncated(60), b in truncated(60)) {
        prop_assert_eq!(a.add(&b).unwrap().trunc(), a.trunc().min(b.trunc()));
    }

    #[test]
    fn inverse_of_unit(a in sparse(40), c in 1i64..=3) {
        let u = a.shift(1).add(&QSeries::constant(Cyclo::from_int(c), Prec::q(40))).unwrap();
        let one = QSeries::one(Prec::q(40));
        prop_assert_eq!(u.mul(&u.inverse().unwrap()).unwrap(), one);
    }

    #[test]
    fn promotion_is_homomorphism(a in cyclo(12), b in cyclo(12), k in 2u64..=5) {
        let m = 12 * k;
        let ab = a.mul(&b).promote(m).unwrap();
        prop_assert_eq!(ab, a.promote(m).unwrap().mul(&b.promote(m).unwrap()));
        prop_assert_eq!(a.add(&b).promote(m).unwrap(), a.promote(m).unwrap().add(&b.promote(m).unwrap()));
    }

    #[test]
    fn cyclo_field_inverse(a in cyclo(15)) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.mul(&a.inv().unwrap()), Cyclo::one());
    }

    #[test]
    fn terminating_sum_matches_float(n in 2u64..=12, j in 1i64..12, b in 0i64..3, alpha in 0i64..3, gamma in -3i64..3) {
        prop_assume!(mockq::cyclo::gcd_i64(j, n as i64) == 1);
        let beta = alpha % 2;
        let ts = TermSum::new(1, alpha, beta, gamma, vec![PochFactor::plain(1, b, 1, 0)]);
        let pt = EvaluationPoint::new(n, j);
        let exact = eval_terminating(&ts, &pt).unwrap().to_complex(128);
        let float = eval_terminating_numeric(&ts, &pt, 128).unwrap();
        prop_assert!(exact.sub(&float).abs_f64() < 1e-25);
    }

    #[test]
    fn bernoulli_route_is_odd(p in 2u64..=12, a in 1u64..12, k in 0usize..=6) {
        prop_assume!(a < p);
        let chi = PeriodicFunction::psi(p, a).unwrap();
        let table = BernoulliTable::new(2 * k + 2);
        prop_assert_eq!(l_value_bernoulli(&chi.scale(-1), k, &table), -l_value_bernoulli(&chi, k, &table));
    }

    #[test]
    fn periodic_functions_are_odd(p in 2u64..=30, a in 1u64..30) {
        prop_assume!(a < p);
        let chi = PeriodicFunction::psi(p, a).unwrap();
        for n in 0..2 * p as i64 {
            prop_assert_eq!(chi.value(2 * p as i64 - n), -chi.value(n));
        }
    }
}

#[test]
fn pochhammer_recurrence() {
    let z = Monomial::q(1, 1);
    let p = Prec::q(120);
    for n in 0..=50u64 {
        let lhs = pochhammer(&z, &Q::from_integer(1.into()), PochLen::Finite(n), p).unwrap()
            .mul_binomial(&Cyclo::one(), n as i64 + 1);
        let rhs = pochhammer(&z, &Q::from_integer(1.into()), PochLen::Finite(n + 1), p).unwrap();
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn q_binomial_symmetry() {
    for n in 0..=30 {
        for m in 0..=n {
            assert_eq!(q_binomial(n, m).unwrap(), q_binomial(n, n - m).unwrap(), "[{n} {m}]");
        }
    }
}

#[test]
fn cyclotomic_polynomial_vanishes() {
    for m in 1..=100u64 {
        let phi = cyclotomic_polynomial(m);
        let v = Cyclo::from_poly(m, phi.iter().map(|&c| Q::from_integer(c.into())).collect());
        assert!(v.is_zero(), "Phi_{m}");
    }
}

#[test]
fn all_characters_odd() {
    for id in chars::CHARACTER_IDS {
        let chi = chars::character(id).unwrap();
        assert!(chi.is_odd(), "{id}");
    }
}
