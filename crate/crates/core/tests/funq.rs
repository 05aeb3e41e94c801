mod common;

use std::sync::Arc;

use ckq_core::freealg::{critical_pairs_check, NCPoly, TensorPoly};
use ckq_core::funq::*;
use ckq_core::hopf::Poly;
use ckq_core::scalar::*;
use common::*;

const N: usize = 6;

fn i() -> GaussRational {
    GaussRational::i()
}

fn cases() -> Vec<(Variant, JAssign)> {
    Variant::ALL.iter().flat_map(|v| JAssign::all().map(|j| (*v, j))).collect()
}

/// v02 rules written out from the closed forms with reference series.
fn v02_expected(j: &JAssign, n: usize) -> Vec<(&'static str, Poly)> {
    let al = fun_alphabet();
    let jm = dual(j, (1, 1));
    let ch = cosh_s(&jm, n);
    let sh = sinh_s(&jm, n).scale(&jm);
    let shc = sinhc_s(g(1), &jm, n);
    let em = exp_s(&-&jm, n);
    let j1s = Series::constant(dual(j, (2, 0)), n);
    let j2s = Series::constant(dual(j, (0, 2)), n);
    let ab = &(&em * &shc).scale_gauss(&i());
    vec![
        ("b2 b1", poly(&al, n, &[("b1 b2", one(n))])),
        ("a1 b1", poly(&al, n, &[("b1 a1", ch.clone()), ("b1 a2", c(&sh, i()))])),
        ("a1 b2", poly(&al, n, &[("b2 a1", ch.clone()), ("b2 a2", c(&sh, i()))])),
        ("a2 b1", poly(&al, n, &[("b1 a2", ch.clone()), ("b1 a1", c(&shc, -i()))])),
        ("a2 b2", poly(&al, n, &[("b2 a2", ch.clone()), ("b2 a1", c(&shc, -i()))])),
        ("a2 a1", poly(&al, n, &[("a1 a2", one(n)), ("b1 b1", ab * &j1s), ("b2 b2", ab * &j2s)])),
    ]
}

#[test]
fn v02_rules_match_reference_series_for_every_j() {
    let al = fun_alphabet();
    for j in JAssign::all() {
        let alg = build_fun(Variant::V02, &j, N, FunMode::Bialgebra).unwrap();
        for (lhs, want) in v02_expected(&j, N) {
            let got = rule_at(&alg.system, &al.parse_word(lhs).unwrap());
            assert_eq!(got, Some(&want), "{j} {lhs}");
        }
    }
}

#[test]
fn a2a1_rule_carries_exp_minus_z() {
    let al = fun_alphabet();
    let alg = build_fun(Variant::V02, &JAssign::STANDARD, N, FunMode::Bialgebra).unwrap();
    let rhs = rule_at(&alg.system, &al.parse_word("a2 a1").unwrap()).unwrap();
    let got = rhs.coeff(&al.parse_word("b1 b1").unwrap()).unwrap();
    let s = sinh_s(&DualCoeff::int(1), N);
    assert_eq!(*got, c(&(&exp_s(&DualCoeff::int(-1), N) * &s), i()));
    assert_ne!(*got, c(&(&exp_s(&DualCoeff::int(1), N) * &s), i()));
}

#[test]
fn rtt_derivation_reproduces_closed_forms() {
    for v in Variant::ALL {
        let d = relations_from_rtt_generic(&v.spec(), N).unwrap();
        assert_eq!(d.rules, fun_rules_generic(&v.spec(), N), "{v}");
        assert!(d.leftover.iter().all(|p| p.is_zero()), "{v}");
    }
}

#[test]
fn rtt_and_ybe_residuals_vanish() {
    for (v, j) in cases() {
        let alg = build_fun(v, &j, N, FunMode::Bialgebra).unwrap();
        assert!(rtt_residual(&alg).unwrap().iter().all(|p| p.is_zero()), "{v} {j}");
        assert!(ybe_residual(v, &j, N).unwrap().is_zero(), "{v} {j}");
    }
}

#[test]
fn r_matrix_determinant() {
    for (v, j) in cases() {
        let jm = v.spec().mult_at(&j);
        let r = r_matrix(&v.spec(), &j, N).unwrap();
        assert_eq!(r.det(), exp_s(&(&jm * &DualCoeff::int(2)), N), "{v} {j}");
        let scaled = r.scale(&exp_s(&jm.mul_gauss(&q(-1, 2)), N));
        assert_eq!(scaled.det(), one(N), "{v} {j}");
    }
}

#[test]
fn corrupted_rule_is_detected_by_rtt() {
    let al = fun_alphabet();
    let mut alg = build_fun(Variant::V02, &JAssign::STANDARD, N, FunMode::Bialgebra).unwrap();
    let mut rs = (*alg.system).clone();
    let lhs = al.parse_word("a2 a1").unwrap();
    let bump = poly(&al, N, &[("b1 b1", Series::monomial(DualCoeff::int(1), 3, N))]);
    assert!(rs.map_rule(&lhs, |p| p + &bump));
    alg.system = Arc::new(rs);
    let res = rtt_residual(&alg).unwrap();
    assert!(res.iter().any(|p| !p.is_zero()));
}

#[test]
fn contracted_rules_are_exact() {
    let al = fun_alphabet();
    let j = JAssign::all()[3];
    for n in [4, 8] {
        let alg = build_fun(Variant::V02, &j, n, FunMode::Bialgebra).unwrap();
        let rule = |s: &str| rule_at(&alg.system, &al.parse_word(s).unwrap()).cloned().unwrap();
        assert_eq!(rule("b2 b1"), poly(&al, n, &[("b1 b2", one(n))]));
        for k in ["b1", "b2"] {
            let want = poly(&al, n, &[(&format!("{k} a2"), one(n)), (&format!("{k} a1"), c(&z(n), -i()))]);
            assert_eq!(rule(&format!("a2 {k}")), want);
            assert_eq!(rule(&format!("a1 {k}")), poly(&al, n, &[(&format!("{k} a1"), one(n))]));
        }
        assert_eq!(rule("a2 a1"), poly(&al, n, &[("a1 a2", one(n))]));
    }
}

#[test]
fn v02_determinant_closed_form() {
    let al = fun_alphabet();
    for j in JAssign::all() {
        let alg = build_fun(Variant::V02, &j, N, FunMode::Bialgebra).unwrap();
        let jm = dual(&j, (1, 1));
        let bb = &exp_s(&-&jm, N) * &cosh_s(&jm, N);
        let want = poly(
            &al,
            N,
            &[
                ("a1 a1", one(N)),
                ("a2 a2", Series::constant(&jm * &jm, N)),
                ("b1 b1", bb.scale(&dual(&j, (2, 0)))),
                ("b2 b2", bb.scale(&dual(&j, (0, 2)))),
            ],
        );
        assert_eq!(quantum_det(&alg), want, "{j}");
    }
    let most = build_fun(Variant::V02, &JAssign::all()[3], N, FunMode::Bialgebra).unwrap();
    assert_eq!(quantum_det(&most), poly(&al, N, &[("a1 a1", one(N))]));
}

#[test]
fn determinant_is_central_and_a2_is_not() {
    for (v, j) in cases() {
        let alg = build_fun(v, &j, N, FunMode::Bialgebra).unwrap();
        assert!(check_central(&alg, &alg.det).unwrap(), "{v} {j}");
    }
    let alg = build_fun(Variant::V02, &JAssign::STANDARD, N, FunMode::Bialgebra).unwrap();
    assert!(!check_central(&alg, &alg.gen(A2)).unwrap());
    assert!(check_central(&alg, &NCPoly::one(N)).unwrap());
}

#[test]
fn v02_coproduct_of_a1() {
    let al = fun_alphabet();
    for j in JAssign::all() {
        let alg = build_fun(Variant::V02, &j, N, FunMode::Bialgebra).unwrap();
        let h = hopf_maps_fun(&alg).unwrap();
        let jm = dual(&j, (1, 1));
        let em = exp_s(&-&jm, N);
        let pure = |x: &str, y: &str, s: ZSeries| {
            let a = poly(&al, N, &[(x, one(N))]);
            let b = poly(&al, N, &[(y, one(N))]);
            TensorPoly::pure(&[&a, &b]).scale(&s)
        };
        let mut want = pure("a1", "a1", one(N));
        want.add_assign_tensor(&pure("a2", "a2", Series::constant(-(&jm * &jm), N)));
        want.add_assign_tensor(&pure("b1", "b1", em.scale(&-dual(&j, (2, 0)))));
        want.add_assign_tensor(&pure("b2", "b2", em.scale(&-dual(&j, (0, 2)))));
        assert_eq!(h.delta_of(&alg.gen(A1)).unwrap(), want, "{j}");
        assert_eq!(h.counit_of(&alg.gen(A1)), one(N));
        assert_eq!(h.counit_of(&alg.gen(B1)), ZSeries::zero(N));
    }
}

#[test]
fn hopf_axioms_hold_in_both_modes() {
    for (v, j) in cases() {
        let ring = build_fun(v, &j, N, FunMode::CoordinateRing).unwrap();
        let rep = hopf_axiom_report_fun(&ring).unwrap();
        assert!(rep.all_pass(), "{v} {j}\n{rep}");
        assert_eq!(rep.get("antipode").unwrap().status, ckq_core::report::Status::Pass);
        let bi = build_fun(v, &j, N, FunMode::Bialgebra).unwrap();
        let rep = hopf_axiom_report_fun(&bi).unwrap();
        assert!(rep.all_pass(), "{v} {j}\n{rep}");
        assert_eq!(rep.get("antipode").unwrap().status, ckq_core::report::Status::PassWithNote);
    }
}

#[test]
fn antipode_products_give_determinant_in_bialgebra_mode() {
    let alg = build_fun(Variant::V12, &JAssign::STANDARD, N, FunMode::Bialgebra).unwrap();
    let h = hopf_maps_fun(&alg).unwrap();
    let (l, r) = h.antipode_products(A1).unwrap();
    assert_eq!(l, alg.det);
    assert_eq!(r, alg.det);
}

#[test]
fn contractions_pass_and_are_stable_at_dual_j() {
    for (v, j) in cases() {
        let rep = verify_contraction_fun(v, &j, N).unwrap();
        assert!(rep.all_pass(), "{v} {j}\n{rep}");
        assert_eq!(rep.outcomes.len(), 6);
        if j.has_dual() {
            assert_eq!(verify_contraction_fun(v, &j, N + 2).unwrap(), rep);
        }
    }
}

#[test]
fn systems_are_confluent() {
    for (v, j) in cases() {
        for mode in [FunMode::Bialgebra, FunMode::CoordinateRing] {
            let alg = build_fun(v, &j, N, mode).unwrap();
            assert!(critical_pairs_check(&alg.system, 3).unwrap().is_confluent(), "{v} {j} {mode:?}");
        }
    }
}

#[test]
fn ring_mode_at_most_contracted_j_sets_a1_squared_to_one() {
    let al = fun_alphabet();
    let alg = build_fun(Variant::V02, &JAssign::all()[3], N, FunMode::CoordinateRing).unwrap();
    let p = poly(&al, N, &[("a1 a1", one(N))]);
    assert_eq!(alg.nf(&p).unwrap(), NCPoly::one(N));
}

#[test]
fn lower_coefficients_stable_under_order_increase() {
    let al = fun_alphabet();
    let lo = build_fun(Variant::V01, &JAssign::STANDARD, 4, FunMode::Bialgebra).unwrap();
    let hi = build_fun(Variant::V01, &JAssign::STANDARD, 6, FunMode::Bialgebra).unwrap();
    for (lhs, rhs) in lo.system.rules() {
        assert_eq!(rule_at(&hi.system, &lhs).unwrap().with_order(4), *rhs, "{}", al.fmt_word(&lhs));
    }
}
