mod common;

use common::*;
use halftheta::arith::rat;
use halftheta::localsymbols::Sl2;
use halftheta::multiplier::{c_infinity, cocycle_check, v_eta, MultiplierSpec, UnitRoot};
use halftheta::{FieldCtx, FracIdeal, GTriple, Weight};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational_spec() -> MultiplierSpec {
    let q = FieldCtx::rational();
    let t = GTriple::new(q.rat(rat(1, 24)), q.primes_above(3), FracIdeal::unit(q), vec![Weight::Half]);
    MultiplierSpec::new(&t).unwrap()
}

#[test]
fn rational_generators() {
    let q = FieldCtx::rational();
    let s = rational_spec();
    assert_eq!(s.v_lambda(&Sl2::t(q)).unwrap(), UnitRoot::new(rat(1, 24)));
    assert_eq!(s.v_lambda(&Sl2::s(q)).unwrap(), UnitRoot::new(rat(-1, 8)));
    assert_eq!(s.v_lambda(&Sl2::minus_one(q)).unwrap(), UnitRoot::new(rat(1, 4)));
    assert_eq!(c_infinity(&Sl2::s(q), &Sl2::s(q), q).unwrap(), -1);
}

#[test]
fn rational_agrees_with_eta_on_box() {
    let q = FieldCtx::rational();
    let s = rational_spec();
    let n = 12i64;
    let mut checked = 0;
    for a in -n..=n {
        for b in -n..=n {
            for c in -n..=n {
                for d in -n..=n {
                    if a * d - b * c != 1 {
                        continue;
                    }
                    let g = Sl2::from_ints(q, a, b, c, d).unwrap();
                    let eta = v_eta(&a.into(), &b.into(), &c.into(), &d.into()).unwrap();
                    assert_eq!(s.v_lambda(&g).unwrap(), eta, "{a} {b} {c} {d}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn two_not_split_refused() {
    let k = ctx(5);
    let t = GTriple::new(k.int(1), vec![], FracIdeal::unit(k), vec![Weight::Half, Weight::Half]);
    assert!(MultiplierSpec::new(&t).is_err());
}

fn eta_of(g: &Sl2) -> UnitRoot {
    let z = |x: &halftheta::QuadElem| -> BigInt { x.x.to_integer() };
    v_eta(&z(&g.a), &z(&g.b), &z(&g.c), &z(&g.d)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eta_cocycle(g in sl2_word(FieldCtx::rational(), 6), h in sl2_word(FieldCtx::rational(), 6)) {
        let q = FieldCtx::rational();
        prop_assert!(cocycle_check(|x| Ok(eta_of(x)), &g, &h, q).unwrap());
    }

    #[test]
    fn rational_lambda_cocycle(g in sl2_word(FieldCtx::rational(), 6), h in sl2_word(FieldCtx::rational(), 6)) {
        let q = FieldCtx::rational();
        let s = rational_spec();
        prop_assert!(cocycle_check(|x| s.v_lambda(x), &g, &h, q).unwrap());
        prop_assert_eq!(s.v_lambda(&g).unwrap(), eta_of(&g));
    }
}

fn cubic_spec() -> MultiplierSpec {
    let q = FieldCtx::rational();
    let t = GTriple::new(q.rat(rat(1, 8)), vec![], FracIdeal::unit(q), vec![Weight::ThreeHalves]);
    MultiplierSpec::new(&t).unwrap()
}

#[test]
fn cubic_agrees_with_eta_cubed_on_box() {
    let q = FieldCtx::rational();
    let s = cubic_spec();
    let n = 10i64;
    for a in -n..=n {
        for b in -n..=n {
            for c in -n..=n {
                for d in -n..=n {
                    if a * d - b * c != 1 {
                        continue;
                    }
                    let g = Sl2::from_ints(q, a, b, c, d).unwrap();
                    let eta = v_eta(&a.into(), &b.into(), &c.into(), &d.into()).unwrap().pow(3);
                    assert_eq!(s.v_lambda(&g).unwrap(), eta, "{a} {b} {c} {d}");
                }
            }
        }
    }
}

#[test]
fn kappa_orders_at_unipotent() {
    use halftheta::multiplier::kappa_v;
    let q = FieldCtx::rational();
    let t = Sl2::t(q);
    let s = rational_spec();
    let k2 = kappa_v(s.beta(), &t, &q.primes_above(2)[0], true).unwrap();
    let k3 = kappa_v(s.beta(), &t, &q.primes_above(3)[0], false).unwrap();
    assert_eq!(k2, UnitRoot::new(rat(3, 8)));
    assert_eq!(k3, UnitRoot::new(rat(2, 3)));
    assert_eq!(k2.order(), BigInt::from(8));
    assert_eq!(k3.order(), BigInt::from(3));
    let sm = kappa_v(s.beta(), &Sl2::s(q), &q.primes_above(3)[0], false).unwrap();
    assert!(sm.is_one());
    assert!(s.v_lambda(&Sl2::identity(q)).unwrap().is_one());
}

#[test]
fn automorphy_values() {
    use halftheta::multiplier::automorphy_j;
    use num_complex::Complex64;
    let q = FieldCtx::rational();
    let i = Complex64::new(0.0, 1.0);
    assert!((automorphy_j(&Sl2::identity(q), 0, i) - 1.0).norm() < 1e-15);
    let m = automorphy_j(&Sl2::minus_one(q), 0, i);
    assert!((m * m + 1.0).norm() < 1e-15);
    let s = automorphy_j(&Sl2::s(q), 0, i);
    let e = Complex64::from_polar(1.0, core::f64::consts::FRAC_PI_4);
    assert!((s - e).norm() < 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn j_squares_to_cz_plus_d(
        (k, g) in prop_oneof![Just(1i64), Just(17), Just(793)].prop_flat_map(|d| (Just(d), sl2_word(ctx(d), 6))),
        x in -2.0f64..2.0, y in 0.1f64..3.0,
    ) {
        use halftheta::multiplier::automorphy_j;
        use num_complex::Complex64;
        let f = ctx(k);
        let z = Complex64::new(x, y);
        for i in 0..f.degree() {
            let [_, _, c, d] = g.embed_f64(i);
            let j = automorphy_j(&g, i, z);
            let w = z * c + d;
            prop_assert!((j * j - w).norm() <= 1e-9 * (1.0 + w.norm()));
        }
    }

    #[test]
    fn j_cocycle_matches_kubota(
        (k, g, h) in prop_oneof![Just(1i64), Just(17), Just(793)]
            .prop_flat_map(|d| (Just(d), sl2_word(ctx(d), 4), sl2_word(ctx(d), 4))),
        x in -2.0f64..2.0, y in 0.2f64..3.0,
    ) {
        use halftheta::multiplier::automorphy_j;
        use halftheta::localsymbols::{kubota_cocycle, Place};
        use num_complex::Complex64;
        let f = ctx(k);
        let z = Complex64::new(x, y);
        let gh = g.mul(&h);
        for i in 0..f.degree() {
            let [a, b, c, d] = h.embed_f64(i);
            let hz = (z * a + b) / (z * c + d);
            let lhs = automorphy_j(&gh, i, z);
            let rhs = automorphy_j(&g, i, hz) * automorphy_j(&h, i, z);
            let s = f64::from(kubota_cocycle(&g, &h, &Place::Real(i)).unwrap());
            prop_assert!((lhs - rhs * s).norm() <= 1e-7 * (1.0 + lhs.norm()), "{} {} {}", lhs, rhs, s);
        }
    }
}
