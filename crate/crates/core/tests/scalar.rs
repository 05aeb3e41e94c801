use ckq_core::scalar::*;
use proptest::prelude::*;

fn g(n: i64) -> GaussRational {
    GaussRational::int(n)
}

fn zs(cs: &[i64], order: usize) -> ZSeries {
    let mut v: Vec<DualCoeff> = cs.iter().map(|&c| DualCoeff::int(c)).collect();
    v.resize(order + 1, DualCoeff::default());
    Series::from_coeffs(v)
}

#[test]
fn dual_products() {
    let i1 = DualCoeff::iota1();
    let i2 = DualCoeff::iota2();
    assert!((&i1 * &i1).is_zero());
    assert_eq!(&i1 * &i2, DualCoeff::iota12());
    let a = &DualCoeff::int(1) + &i1;
    let b = &DualCoeff::int(1) - &i1;
    assert!((&a * &b).is_one());
}

#[test]
fn dual_inverse() {
    let x = DualCoeff::new(g(2), g(3), GaussRational::complex(0, 1, 1), g(-5));
    let inv = x.inverse().unwrap();
    assert!((&x * &inv).is_one());
    assert!(DualCoeff::iota1().inverse().is_none());
}

#[test]
fn gauss_display() {
    assert_eq!(GaussRational::complex(1, -2, 3).to_string(), "(1/3-2/3i)");
    assert_eq!(GaussRational::i().to_string(), "i");
}

#[test]
fn series_examples() {
    let a = zs(&[1, 1], 3);
    let b = zs(&[1, -1], 3);
    assert_eq!(&a * &b, zs(&[1, 0, -1], 3));
    let zn = Series::monomial(DualCoeff::int(1), 3, 3);
    let z = Series::monomial(DualCoeff::int(1), 1, 3);
    assert!((&zn * &z).is_zero());
    let iz = Series::monomial(DualCoeff::iota1(), 1, 3);
    assert!((&iz * &iz).is_zero());
    assert!(zs(&[1], 3).try_add(&zs(&[1], 4)).is_err());
}

#[test]
fn structure_fn_examples() {
    let one = GaussRational::one();
    let j = JAssign::new(JUnit::Dual, JUnit::Dual);
    let jj = &j.j1() * &j.j2();
    let s = structure_fn(StructureFn::Sinhc, &one, &jj, 8);
    assert_eq!(s, Series::monomial(DualCoeff::int(1), 1, 8));

    let e = structure_fn(StructureFn::Exp, &one, &DualCoeff::int(1), 3);
    let expect = Series::from_coeffs(vec![
        DualCoeff::int(1),
        DualCoeff::int(1),
        DualCoeff::scalar(GaussRational::ratio(1, 2)),
        DualCoeff::scalar(GaussRational::ratio(1, 6)),
    ]);
    assert_eq!(e, expect);

    let c = structure_fn(StructureFn::Cosh, &one, &DualCoeff::iota1(), 8);
    assert_eq!(c, Series::one(8));
}

#[test]
fn structure_identities() {
    for jm in [DualCoeff::int(1), DualCoeff::iota1(), DualCoeff::iota12(), DualCoeff::int(3)] {
        for s in [GaussRational::one(), GaussRational::ratio(1, 2), GaussRational::complex(0, 1, 2)] {
            let n = 9;
            let ch = structure_fn(StructureFn::Cosh, &s, &jm, n);
            let sh = structure_fn(StructureFn::Sinh, &s, &jm, n);
            let ex = structure_fn(StructureFn::Exp, &s, &jm, n);
            let sc = structure_fn(StructureFn::Sinhc, &s, &jm, n);
            assert_eq!(&(&ch * &ch) - &(&sh * &sh), Series::one(n));
            assert_eq!(&ch + &sh, ex);
            assert_eq!(sc.scale(&jm), sh);
        }
    }
}

#[test]
fn dual_structure_fns_are_order_independent() {
    let one = GaussRational::one();
    for jm in [DualCoeff::iota1(), DualCoeff::iota2(), DualCoeff::iota12()] {
        for kind in [StructureFn::Exp, StructureFn::Cosh, StructureFn::Sinh, StructureFn::Sinhc] {
            let a = structure_fn(kind, &one, &jm, 4);
            let b = structure_fn(kind, &one, &jm, 12);
            assert_eq!(a.with_order(12), b, "{kind:?}");
        }
    }
}

#[test]
fn sqrt_examples() {
    assert_eq!(series_sqrt_one_plus(&zs(&[], 5)).unwrap(), Series::one(5));
    assert_eq!(series_sqrt_one_plus(&zs(&[0, 2, 1], 5)).unwrap(), zs(&[1, 1], 5));
    let r = series_sqrt_one_plus(&zs(&[0, 1], 6)).unwrap();
    assert_eq!(r.coeff(1), &DualCoeff::scalar(GaussRational::ratio(1, 2)));
    assert_eq!(r.coeff(2), &DualCoeff::scalar(GaussRational::ratio(-1, 8)));
    assert_eq!(r.coeff(3), &DualCoeff::scalar(GaussRational::ratio(1, 16)));
    assert_eq!(&r * &r, zs(&[1, 1], 6));
    assert_eq!(series_sqrt_one_plus(&zs(&[1], 3)), Err(ScalarError::NonzeroConstant));
}

#[test]
fn subst_scale_examples() {
    let e = structure_fn(StructureFn::Exp, &GaussRational::one(), &DualCoeff::int(1), 6);
    assert_eq!(e.subst_scale(&DualCoeff::iota1()), &Series::one(6) + &Series::monomial(DualCoeff::iota1(), 1, 6));
    let z2 = Series::monomial(DualCoeff::int(1), 2, 6);
    let half_i = DualCoeff::scalar(GaussRational::complex(0, 1, 2));
    assert_eq!(z2.subst_scale(&half_i), Series::monomial(DualCoeff::scalar(GaussRational::ratio(-1, 4)), 2, 6));
    // sinh(iz/2) = i sin(z/2)
    let sh = structure_fn(StructureFn::Sinh, &GaussRational::one(), &DualCoeff::int(1), 7).subst_scale(&half_i);
    assert_eq!(sh.coeff(1), &DualCoeff::scalar(GaussRational::complex(0, 1, 2)));
    assert_eq!(sh.coeff(3), &DualCoeff::scalar(GaussRational::complex(0, -1, 48)));
    assert_eq!(sh.coeff(5), &DualCoeff::scalar(GaussRational::complex(0, 1, 3840)));
}

#[test]
fn laurent_specialization() {
    let j = JAssign::new(JUnit::Dual, JUnit::One);
    let x = JLaurent::term(g(3), (2, 1)) + JLaurent::monomial((1, -1)) + JLaurent::constant(g(2));
    assert_eq!(x.specialize(&j).unwrap(), &DualCoeff::iota1() + &DualCoeff::int(2));
    assert!(JLaurent::monomial((-1, 0)).specialize(&j).is_err());
    assert!(JLaurent::monomial((0, -1)).specialize(&j).is_ok());
    let m = JLaurent::term(g(2), (1, -3));
    assert_eq!((&m * &m.try_inverse().unwrap()), JLaurent::one());
}

#[test]
fn series_inverse() {
    let a = structure_fn(StructureFn::Cosh, &GaussRational::one(), &DualCoeff::iota2(), 6);
    let b = structure_fn(StructureFn::Exp, &GaussRational::ratio(1, 3), &DualCoeff::int(1), 6);
    for s in [a, b] {
        assert_eq!(&s * &s.inverse().unwrap(), Series::one(6));
    }
    assert!(zs(&[0, 1], 3).inverse().is_err());
}

fn arb_gauss() -> impl Strategy<Value = GaussRational> {
    (-5i64..=5, -5i64..=5, 1i64..=4).prop_map(|(a, b, d)| GaussRational::complex(a, b, d))
}

fn arb_dual() -> impl Strategy<Value = DualCoeff> {
    (arb_gauss(), arb_gauss(), arb_gauss(), arb_gauss()).prop_map(|(a, b, c, d)| DualCoeff::new(a, b, c, d))
}

fn arb_series() -> impl Strategy<Value = ZSeries> {
    proptest::collection::vec(arb_dual(), 5).prop_map(Series::from_coeffs)
}

proptest! {
    #[test]
    fn gauss_field(a in arb_gauss(), b in arb_gauss(), c in arb_gauss()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn dual_ring(a in arb_dual(), b in arb_dual(), c in arb_dual()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn dual_nilpotency(a in arb_dual()) {
        let mut n = a.clone();
        n.c[0] = GaussRational::zero();
        let sq = &n * &n;
        prop_assert!(sq.c[0].is_zero() && sq.c[1].is_zero() && sq.c[2].is_zero());
        prop_assert!((&sq * &n).is_zero());
    }

    #[test]
    fn series_ring(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn sqrt_squares(mut s in arb_series()) {
        s = &s - &Series::constant(s.coeff(0).clone(), 4);
        let r = series_sqrt_one_plus(&s).unwrap();
        prop_assert_eq!(&r * &r, &Series::one(4) + &s);
    }
}
