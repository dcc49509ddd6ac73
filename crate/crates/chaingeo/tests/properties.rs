//! Randomized invariants for the exact field and the geometry built on it.

use num_bigint::BigInt;
use proptest::prelude::*;

use chaingeo::qfield::{QNum, Rational};
use chaingeo::{build_ca, build_cb, tangency_point, verify_config, Circle, Point};

fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..=200, 1i64..=40)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn radicand() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![1u64, 2, 3, 4, 5, 6, 7, 10, 13, 9])
}

fn qnum() -> impl Strategy<Value = (QNum, u64)> {
    (rational(), rational(), radicand()).prop_map(|(p, q, n)| (QNum::new(p, q, n), n))
}

fn triple() -> impl Strategy<Value = (QNum, QNum, QNum)> {
    (rational(), rational(), rational(), rational(), rational(), rational(), radicand())
        .prop_map(|(p1, q1, p2, q2, p3, q3, n)| {
            (QNum::new(p1, q1, n), QNum::new(p2, q2, n), QNum::new(p3, q3, n))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms((x, y, z) in triple()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            let inv = QNum::one(x.radicand()).try_div(&x).unwrap();
            prop_assert_eq!(&x * &inv, QNum::one(x.radicand()));
        }
    }

    #[test]
    fn squares_are_nonnegative_and_sqrt_round_trips((x, _) in qnum()) {
        let sq = &x * &x;
        prop_assert!(sq.sign() >= 0);
        let root = sq.sqrt().unwrap().expect("x·x must have a root in the field");
        let abs_x = if x.sign() < 0 { -&x } else { x };
        prop_assert_eq!(root, abs_x);
    }

    #[test]
    fn sign_agrees_with_float((x, _) in qnum()) {
        let f = x.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(x.sign(), if f > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn canonical_construction_is_idempotent((x, _) in qnum()) {
        let y = QNum::new(x.p().clone(), x.q().clone(), x.radicand());
        prop_assert_eq!(&x, &y);
        if x.radicand() == 1 || x.radicand() == 4 || x.radicand() == 9 {
            prop_assert!(x.is_rational());
        }
    }

    #[test]
    fn tangency_point_lies_on_both_circles(
        s1 in 1i64..=5, s2 in 1i64..=5, x0 in -20i64..=20, shift in -10i64..=10, n in radicand()
    ) {
        // square radii keep the tangent offset 2√(r1·r2) = 2·s1·s2 rational,
        // so two externally tangent baseline circles can be placed exactly
        let (r1, r2) = (s1 * s1, s2 * s2);
        let q = |v: i64| QNum::from_int(v, n);
        let c1 = Circle::new(Point::new(q(x0), q(r1)), q(r1)).unwrap();
        let dx = q(2 * s1 * s2);
        let c2 = Circle::new(Point::new(&q(x0) + &dx, q(r2)), q(r2)).unwrap();
        let p = tangency_point(&c1, &c2).unwrap();
        prop_assert!(c1.contains(&p));
        prop_assert!(c2.contains(&p));
        // translation along the baseline shifts the tangency point with it
        let t = q(shift);
        let m1 = Circle::new(Point::new(&c1.center.x + &t, c1.center.y.clone()), c1.r.clone()).unwrap();
        let m2 = Circle::new(Point::new(&c2.center.x + &t, c2.center.y.clone()), c2.r.clone()).unwrap();
        let mp = tangency_point(&m1, &m2).unwrap();
        prop_assert_eq!(mp.x, &p.x + &t);
        prop_assert_eq!(mp.y, p.y);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn built_configs_always_verify(n in 1u32..=40, num in 1i64..=9, den in 1i64..=5) {
        let a_cb = QNum::rational(Rational::new(BigInt::from(num), BigInt::from(den)), n as u64);
        let cfg = build_cb(n, &a_cb).unwrap();
        prop_assert!(verify_config(&cfg).overall());
        if n >= 2 {
            let a_ca = QNum::rational(Rational::new(BigInt::from(num), BigInt::from(den)), 1);
            prop_assert!(verify_config(&build_ca(n, &a_ca).unwrap()).overall());
        }
    }
}
