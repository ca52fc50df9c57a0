mod common;

use std::sync::Arc;

use common::{discriminants, poly, quadext, regular_ratfunc};
use inv3412::algebra::{
    delta_motzkin, delta_signed, quadext_to_series, ratfunc_series, sqrt_series, Poly, QuadExt, RatFunc, SeriesQ,
};
use proptest::prelude::*;

const ORDER: usize = 24;

#[test]
fn sqrt_squares_back_to_order_64() {
    for (_, d) in discriminants() {
        let s = sqrt_series(&d, 64).unwrap();
        assert_eq!(&s * &s, SeriesQ::from_poly(&d, 64));
    }
    let s = sqrt_series(&delta_motzkin(), 8).unwrap();
    assert_eq!(s, SeriesQ::from_ints(&[1, -1, -2, -2, -4, -8, -18, -42, -102], 8));
    assert!(sqrt_series(&Poly::from_ints(&[2, 1]), 4).is_err());
}

#[test]
fn w_squared_and_inverse() {
    let d = Arc::new(delta_motzkin());
    let w = QuadExt::sqrt(d.clone());
    assert_eq!(
        &w * &w,
        QuadExt::rational(RatFunc::from_poly(delta_motzkin()), d.clone())
    );
    let inv = w.inv().unwrap();
    assert_eq!(
        inv,
        QuadExt::new(
            RatFunc::zero(),
            RatFunc::recip_poly(&delta_motzkin()).unwrap(),
            d.clone()
        )
    );
    assert!(QuadExt::zero(d.clone()).inv().is_err());
    let u = QuadExt::sqrt(Arc::new(delta_signed()));
    assert!(w.checked_mul(&u).is_err());
}

#[test]
fn ratfunc_examples() {
    let one_minus_x = RatFunc::from_poly(Poly::from_ints(&[1, -1]));
    let geo = one_minus_x.inv().unwrap();
    assert_eq!(&geo * &one_minus_x, RatFunc::one());
    let sum = &geo + &RatFunc::from_poly(Poly::from_ints(&[1, 1])).inv().unwrap();
    assert_eq!(
        sum.to_string(),
        RatFunc::new(Poly::from_ints(&[2]), Poly::from_ints(&[1, 0, -1]))
            .unwrap()
            .to_string()
    );
    assert_eq!(ratfunc_series(&geo, 10).unwrap(), SeriesQ::from_ints(&[1; 11], 10));
    assert!(RatFunc::one().div(&RatFunc::zero()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_laws(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(Poly::parse(&a.to_expr()).unwrap(), a);
    }

    #[test]
    fn poly_division(a in poly(6), b in poly(3)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn ratfunc_inverse(f in regular_ratfunc()) {
        prop_assume!(!f.is_zero());
        prop_assert_eq!(&f * &f.inv().unwrap(), RatFunc::one());
    }

    #[test]
    fn quadext_laws_motzkin(u in quadext(Arc::new(delta_motzkin())), v in quadext(Arc::new(delta_motzkin())), t in quadext(Arc::new(delta_motzkin()))) {
        check_field(&u, &v, &t)?;
    }

    #[test]
    fn quadext_laws_signed(u in quadext(Arc::new(delta_signed())), v in quadext(Arc::new(delta_signed())), t in quadext(Arc::new(delta_signed()))) {
        check_field(&u, &v, &t)?;
    }

    #[test]
    fn series_of_product(u in quadext(Arc::new(delta_motzkin())), v in quadext(Arc::new(delta_motzkin()))) {
        let lhs = quadext_to_series(&(&u * &v), ORDER).unwrap();
        let rhs = &quadext_to_series(&u, ORDER).unwrap() * &quadext_to_series(&v, ORDER).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_of_sum_signed(u in quadext(Arc::new(delta_signed())), v in quadext(Arc::new(delta_signed()))) {
        let lhs = quadext_to_series(&(&u + &v), ORDER).unwrap();
        let rhs = &quadext_to_series(&u, ORDER).unwrap() + &quadext_to_series(&v, ORDER).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn check_field(u: &QuadExt, v: &QuadExt, t: &QuadExt) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(u * v) * t, u * &(v * t));
    prop_assert_eq!(&(u + v) * t, &(u * t) + &(v * t));
    prop_assert_eq!(u * v, v * u);
    prop_assert_eq!((u * &u.conj()).b().clone(), RatFunc::zero());
    if !u.is_zero() {
        let one = QuadExt::one(u.disc_arc().clone());
        prop_assert_eq!(u * &u.inv().unwrap(), one);
    }
    Ok(())
}
