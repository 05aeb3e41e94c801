mod common;

use ckq_core::freealg::{GenMap, MapKind, NCPoly, Word};
use ckq_core::funq::{Primitive, Variant};
use ckq_core::isomap::*;
use ckq_core::report::Status;
use ckq_core::scalar::*;
use ckq_core::uqalg::{build_so, X01, X02, X12};
use common::*;

const N: usize = 5;

fn i() -> GaussRational {
    GaussRational::i()
}

fn galilean() -> JAssign {
    JAssign::all()[3]
}

#[test]
fn v01_has_no_isomorphism() {
    assert!(build_iso(Variant::V01, &JAssign::STANDARD, N).is_err());
}

#[test]
fn relations_and_coproducts_are_preserved() {
    for v in [Variant::V02, Variant::V12] {
        for j in JAssign::all() {
            let iso = build_iso(v, &j, N).unwrap();
            let rel = verify_iso_relations(&iso).unwrap();
            assert!(rel.all_pass(), "{v} {j}\n{rel}");
            assert_eq!(rel.outcomes.len(), 4);
            let cop = verify_iso_coproducts(&iso).unwrap();
            assert!(cop.all_pass(), "{v} {j}\n{cop}");
            for o in &cop.outcomes {
                if o.name.starts_with("antipode:") {
                    assert_eq!(o.status, Status::PassWithNote);
                    assert!(o.notes[0].contains("against S~(phi)"));
                }
            }
        }
    }
}

#[test]
fn v12_factor_squares_to_reference() {
    for j in JAssign::all() {
        let iso = build_iso(Variant::V12, &j, N).unwrap();
        let jm = dual(&j, (0, 1));
        let sin_over_j = c(&sinhc_s(GaussRational::complex(0, 1, 2), &jm, N), -i());
        let phase = exp_s(&jm.mul_gauss(&GaussRational::complex(0, -1, 2)), N);
        let want = c(&(&(&phase * &z(N)) * &sin_over_j), g(2));
        assert_eq!(&iso.factor * &iso.factor, want, "{j}");
        assert_eq!(*iso.factor.coeff(1), DualCoeff::int(1));
        assert!(iso.factor.coeff(0).is_zero());
    }
}

#[test]
fn v02_factor_squares_to_reference() {
    for j in JAssign::all() {
        let iso = build_iso(Variant::V02, &j, N).unwrap();
        let jm = dual(&j, (1, 1));
        let sin_over_j = c(&sinhc_s(GaussRational::complex(0, 1, 2), &jm, N), -i());
        let phase = exp_s(&jm.mul_gauss(&GaussRational::complex(0, -1, 2)), N);
        let want = c(&(&(&phase * &z(N)) * &sin_over_j), q(-1, 2));
        assert_eq!(&iso.factor * &iso.factor, want, "{j}");
    }
}

#[test]
fn group_like_element_maps_to_exponential_of_primitive() {
    for v in [Variant::V02, Variant::V12] {
        let iso = build_iso(v, &JAssign::STANDARD, N).unwrap();
        let t = iso.source.t_pow(1);
        assert_eq!(iso.map_poly(&t).unwrap(), iso.target.exp_p(q(1, 2)), "{v}");
    }
}

#[test]
fn lower_coefficients_stable_under_order_increase() {
    let lo = build_iso(Variant::V12, &JAssign::STANDARD, 4).unwrap();
    let hi = build_iso(Variant::V12, &JAssign::STANDARD, 6).unwrap();
    assert_eq!(hi.factor.with_order(4), lo.factor);
    let lo = build_iso(Variant::V02, &JAssign::STANDARD, 4).unwrap();
    let hi = build_iso(Variant::V02, &JAssign::STANDARD, 6).unwrap();
    assert_eq!(hi.factor.with_order(4), lo.factor);
}

#[test]
fn there_are_48_distinct_signed_permutations() {
    let all = signed_permutations();
    assert_eq!(all.len(), 48);
    let set: std::collections::HashSet<_> = all.iter().collect();
    assert_eq!(set.len(), 48);
}

#[test]
fn identity_map_passes_on_same_algebra() {
    for p in Primitive::ALL {
        let a = build_so(p, &JAssign::STANDARD, N).unwrap();
        let id = Candidate { perm: [0, 1, 2], signs: [1, 1, 1] }.to_map(&a);
        assert!(check_candidate_iso(&id, &a, &a).unwrap().all_pass(), "{p}");
    }
}

#[test]
fn raw_identity_between_different_primitives_fails() {
    let a = build_so(Primitive::X02, &JAssign::STANDARD, N).unwrap();
    let b = build_so(Primitive::X12, &JAssign::STANDARD, N).unwrap();
    let id = Candidate { perm: [0, 1, 2], signs: [1, 1, 1] }.to_map(&a);
    let rep = check_candidate_iso(&id, &a, &b).unwrap();
    assert_eq!(rep.get("relations").unwrap().status, Status::Fail);
    assert_eq!(rep.get("invertible").unwrap().status, Status::Pass);
}

#[test]
fn galilean_x01_and_x12_are_related_and_inverse_passes() {
    let a = build_so(Primitive::X01, &galilean(), N).unwrap();
    let b = build_so(Primitive::X12, &galilean(), N).unwrap();
    let found = find_isomorphisms(&a, &b).unwrap();
    assert!(!found.is_empty());
    assert!(found.contains(&Candidate { perm: [2, 1, 0], signs: [1, -1, 1] }));
    for cand in found {
        let m = cand.to_map(&a);
        assert!(check_candidate_iso(&m, &a, &b).unwrap().all_pass());
        let inv = inverse_linear_map(&m, &b).unwrap();
        assert!(check_candidate_iso(&inv, &b, &a).unwrap().all_pass(), "{}", cand.describe(&a));
    }
}

#[test]
fn non_invertible_map_is_flagged() {
    let a = build_so(Primitive::X12, &galilean(), N).unwrap();
    let zero = NCPoly::zero(N);
    let m = GenMap::new(MapKind::Hom, a.system.alphabet().clone(), NCPoly::one(N))
        .with(X01, zero.clone())
        .with(X02, zero.clone())
        .with(X12, NCPoly::term(Word::letter(X12), one(N)));
    let rep = check_candidate_iso(&m, &a, &a).unwrap();
    assert_eq!(rep.get("invertible").unwrap().status, Status::Fail);
}

#[test]
fn special_cases_report() {
    let rep = special_case_report(N).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert_eq!(rep.outcomes.iter().filter(|o| o.name.starts_with("structure:")).count(), 5);
    let eu = rep.get("structure:X12@i1,1").unwrap();
    assert!(eu.notes.iter().any(|n| n == "deformation parameter rescaled: no"));
    let eu01 = rep.get("structure:X01@i1,1").unwrap();
    assert!(eu01.notes.iter().any(|n| n == "deformation parameter rescaled: yes"));
    assert_eq!(rep.get("galilean:X01 ~ X12").unwrap().status, Status::Pass);
    assert!(rep.get("galilean:X02 vs X12").is_some());
}

#[test]
fn euclidean_brackets() {
    let j = JAssign::all()[1];
    let a = build_so(Primitive::X12, &j, N).unwrap();
    let x = |g| a.gen(g);
    assert!(a.bracket(&x(X01), &x(X02)).unwrap().is_zero());
    assert_eq!(a.bracket(&x(X02), &x(X12)).unwrap(), x(X01));
}
