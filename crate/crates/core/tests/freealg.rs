use std::sync::Arc;

use ckq_core::freealg::*;
use ckq_core::scalar::*;
use proptest::prelude::*;

const N: usize = 4;

fn alpha() -> Arc<Alphabet> {
    Arc::new(Alphabet::new(&["x", "y", "h"]))
}

fn one() -> ZSeries {
    Series::one(N)
}

fn z() -> ZSeries {
    Series::monomial(DualCoeff::int(1), 1, N)
}

fn w(s: &str) -> Word {
    alpha().parse_word(s).unwrap()
}

fn p(terms: &[(&str, ZSeries)]) -> NCPoly<DualCoeff> {
    let mut out = NCPoly::zero(N);
    for (s, c) in terms {
        out.add_term(w(s), c.clone());
    }
    out
}

/// A q-deformed sl2-like system: h x -> x h + 2x, h y -> y h - 2y,
/// y x -> x y - sinh(z h)/z style series in h.
fn system() -> RewriteSystem<DualCoeff> {
    let mut rs = RewriteSystem::new(alpha(), N);
    rs.add_rule(&w("h x"), p(&[("x h", one()), ("x", one().scale_gauss(&GaussRational::int(2)))])).unwrap();
    rs.add_rule(&w("h y"), p(&[("y h", one()), ("y", one().scale_gauss(&GaussRational::int(-2)))])).unwrap();
    let mut rhs = p(&[("x y", one())]);
    let mut hk = NCPoly::one(N);
    for k in 0..N {
        hk = &hk * &NCPoly::gen(2, N);
        if k % 2 == 0 {
            let c = structure_fn(StructureFn::Sinhc, &GaussRational::one(), &DualCoeff::int(1), N);
            rhs.add_assign_poly(&hk.scale(&Series::monomial(c.coeff(k + 1).neg_ref(), k, N)));
        }
    }
    rs.add_rule(&w("y x"), rhs).unwrap();
    rs
}

#[test]
fn rule_lhs_reduces_to_rhs() {
    let rs = system();
    for (lhs, rhs) in rs.rules() {
        assert_eq!(rs.normal_form_word(&lhs).unwrap(), *rhs);
    }
    for (_, rel) in rs.relations() {
        assert!(rs.normal_form(&rel).unwrap().is_zero());
    }
}

#[test]
fn normal_words_are_fixed() {
    let rs = system();
    let q = p(&[("x y h", z()), ("x x", one())]);
    assert_eq!(rs.normal_form(&q).unwrap(), q);
}

#[test]
fn deg_lex_order() {
    assert!(w("h") < w("x x"));
    assert!(w("x y") < w("y x"));
    assert!(w("x h") < w("h x"));
}

#[test]
fn increasing_rule_rejected() {
    let mut rs: RewriteSystem<DualCoeff> = RewriteSystem::new(alpha(), N);
    assert!(matches!(rs.add_rule(&w("x y"), p(&[("y x", one())])), Err(FreeAlgError::NotDecreasing { .. })));
    assert!(matches!(rs.add_rule(&w("x y"), p(&[("h h h", one())])), Err(FreeAlgError::NotDecreasing { .. })));
    rs.add_rule(&w("x y"), p(&[("h h h", &z() * &z())])).unwrap();
}

#[test]
fn sl2_like_system_is_confluent() {
    let rs = system();
    let r = critical_pairs_check(&rs, 4).unwrap();
    assert!(r.is_confluent(), "{:?}", r.failures.len());
    assert!(r.checked > 0);
}

#[test]
fn counterexample_detected() {
    let mut rs: RewriteSystem<DualCoeff> = RewriteSystem::new(alpha(), N);
    rs.add_rule(&w("x y"), NCPoly::one(N)).unwrap();
    rs.add_rule(&w("y x"), NCPoly::one(N)).unwrap();
    rs.add_rule(&w("x x"), NCPoly::zero(N)).unwrap();
    let r = critical_pairs_check(&rs, 3).unwrap();
    assert!(r.failures.iter().any(|f| f.word == w("x x y")));
}

#[test]
fn budget_exhaustion_is_reported() {
    let rs = system().with_budget(3);
    let q = NCPoly::word(w("y y y x x x"), N);
    assert!(matches!(rs.normal_form(&q), Err(FreeAlgError::BudgetExceeded { budget: 3 })));
}

#[test]
fn tensor_products() {
    let x: NCPoly<DualCoeff> = NCPoly::gen(0, N);
    let y = NCPoly::gen(1, N);
    let e = NCPoly::one(N);
    let a = TensorPoly::pure(&[&x, &e]);
    let b = TensorPoly::pure(&[&e, &y]);
    assert_eq!(&a * &b, TensorPoly::pure(&[&x, &y]));
    let s = &TensorPoly::pure(&[&x, &y]) + &TensorPoly::pure(&[&y, &y]);
    assert_eq!(&TensorPoly::one(2, N) * &s, s);
    let xy = &x * &y;
    let yx = &y * &x;
    assert_eq!(&TensorPoly::pure(&[&x, &y]) * &TensorPoly::pure(&[&y, &x]), TensorPoly::pure(&[&xy, &yx]));
    assert!(TensorPoly::pure(&[&x]).try_mul(&a).is_err());
}

#[test]
fn maps() {
    let a = alpha();
    let id = GenMap::new(MapKind::Hom, a.clone(), NCPoly::one(N))
        .with(0, NCPoly::gen(0, N))
        .with(1, NCPoly::gen(1, N))
        .with(2, NCPoly::gen(2, N));
    let q = p(&[("x y h", z()), ("y", one())]);
    assert_eq!(apply_map(&id, &q).unwrap(), q);

    let s = GenMap::new(MapKind::AntiHom, a.clone(), NCPoly::one(N))
        .with(0, p(&[("y", one())]))
        .with(1, p(&[("h", one())]));
    assert_eq!(apply_map(&s, &p(&[("x y", one())])).unwrap(), p(&[("h y", one())]));
    assert!(matches!(apply_map(&s, &p(&[("h", one())])), Err(FreeAlgError::MissingImage(n)) if n == "h"));
}

#[test]
fn commutator() {
    let rs = system();
    let x = NCPoly::gen(0, N);
    assert!(nc_commutator(&x, &x, &rs).unwrap().is_zero());
    let h = NCPoly::gen(2, N);
    assert_eq!(nc_commutator(&h, &x, &rs).unwrap(), x.scale_c(&DualCoeff::int(2)));
}

fn arb_word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..3, 0..=4).prop_map(|v| Word::from_slice(&v))
}

fn arb_poly() -> impl Strategy<Value = NCPoly<DualCoeff>> {
    proptest::collection::vec((arb_word(), -3i64..=3, 0usize..=2), 1..=3).prop_map(|ts| {
        let mut out = NCPoly::zero(N);
        for (w, c, k) in ts {
            out.add_term(w, Series::monomial(DualCoeff::int(c), k, N));
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nf_idempotent_projection(a in arb_poly(), b in arb_poly()) {
        let rs = system();
        let na = rs.normal_form(&a).unwrap();
        prop_assert_eq!(rs.normal_form(&na).unwrap(), na.clone());
        prop_assert_eq!(rs.normal_form(&(&a + &b)).unwrap(), rs.normal_form(&(&na + &b)).unwrap());
    }

    #[test]
    fn nf_product_associative(a in arb_word(), b in arb_word(), c in arb_word()) {
        let rs = system();
        let (pa, pb, pc) = (NCPoly::word(a, N), NCPoly::word(b, N), NCPoly::word(c, N));
        let left = rs.mul_nf(&rs.mul_nf(&pa, &pb).unwrap(), &pc).unwrap();
        let right = rs.mul_nf(&pa, &rs.mul_nf(&pb, &pc).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn poly_ring(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }
}
