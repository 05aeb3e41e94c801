use super::table::{GenericTable, T, TI, U1, U2};
use super::word::Pairing;
use crate::error::Result;
use crate::exec::par_map;
use crate::freealg::{NCPoly, Word};
use crate::funq::{build_fun, r_matrix_generic, t_matrix_generic, FunMode, Variant};
use crate::linalg::SeriesMatrix;
use crate::report::{CheckOutcome, Report, Residual};
use crate::scalar::{DualCoeff, GaussRational, JAssign, JLaurent, JSeries, StructureFn, ZSeries};

type GPoly = NCPoly<JLaurent>;
type Poly = NCPoly<DualCoeff>;

/// An L-matrix entry as a combination of symbols with j-Laurent series
/// coefficients.
type LComb = Vec<(u8, JSeries)>;

fn pair_comb(tab: &GenericTable, l: &LComb, p: &GPoly) -> Result<JSeries> {
    let mut acc = JSeries::zero(tab.order);
    for (s, c) in l {
        acc = &acc + &(c * &tab.pair_linear(*s, p)?);
    }
    Ok(acc)
}

fn residual_at(s: &JSeries, j: &JAssign) -> std::result::Result<Residual, String> {
    s.specialize(j).map(|z| Residual::of_series(&z)).map_err(|e| e.to_string())
}

/// `⟨L^{(±)}_{ij}, T_{kl}⟩ = R^{(±)}_{(ik),(jl)}` with `R = e^{−Jz/2}R_z`,
/// `R⁺ = PRP`, `R⁻ = R⁻¹`; `det R = 1`; and the aggregate values
/// `t(a)=x`, `t(ā)=x⁻¹`, `u(b̄)=−xλ`, `ū(b)=x⁻¹λ` with the vanishing ones.
/// Combinations are paired with symbolic j and specialized afterwards.
pub fn verify_lt_pairing(variant: Variant, j: &JAssign, n: usize) -> Result<Report> {
    let tab = GenericTable::new(variant, n);
    let spec = tab.spec;
    let i = GaussRational::i();
    let one = JSeries::one(n);
    let gam = |k: usize| JSeries::constant(JLaurent::monomial((-spec.gamma[k].0, -spec.gamma[k].1)), n);
    let e = spec.sf(StructureFn::Exp, GaussRational::one(), n);
    // u = u₁/γ₁ + iu₂/γ₂, ū = u₁/γ₁ − iu₂/γ₂
    let u: LComb = vec![(U1, gam(0)), (U2, gam(1).scale_gauss(&i))];
    let ubar: LComb = vec![(U1, gam(0)), (U2, gam(1).scale_gauss(&-&i))];
    let neg_e_ubar: LComb = ubar.iter().map(|(s, c)| (*s, -&(c * &e))).collect();
    let lplus: [[LComb; 2]; 2] = [[vec![(T, one.clone())], u.clone()], [vec![], vec![(TI, one.clone())]]];
    let lminus: [[LComb; 2]; 2] = [[vec![(TI, one.clone())], vec![]], [neg_e_ubar, vec![(T, one.clone())]]];

    let tm = t_matrix_generic(&spec, n);
    let r = r_matrix_generic(&spec, n).scale(&spec.sf(StructureFn::Exp, GaussRational::ratio(-1, 2), n));
    let p = SeriesMatrix::swap(2, 2, n);
    let rplus = &(&p * &r) * &p;
    let rminus = r.inverse()?;

    let mut rep = Report::new();
    for (name, l, target) in [("L+T=R+", &lplus, &rplus), ("L-T=R-", &lminus, &rminus)] {
        let mut res = Residual::zero();
        let mut err = None;
        for (ii, jj, kk, ll) in index_quads() {
            let v = pair_comb(&tab, &l[ii][jj], &tm[kk][ll])?;
            let d = &v - target.get(2 * ii + kk, 2 * jj + ll);
            match residual_at(&d, j) {
                Ok(x) => res = res.merge(x),
                Err(e) => err = Some(e),
            }
        }
        rep.push(match err {
            Some(e) => CheckOutcome::failed(name, e),
            None => CheckOutcome::from_residual(name, res),
        });
    }

    let rj = r.try_map(|s| s.specialize(j))?;
    rep.push(CheckOutcome::from_residual("det-R", Residual::of_series(&(&rj.det() - &ZSeries::one(n)))));

    let x = spec.sf(StructureFn::Exp, GaussRational::ratio(1, 2), n);
    let xinv = spec.sf(StructureFn::Exp, GaussRational::ratio(-1, 2), n);
    let lam = spec.sf(StructureFn::Sinh, GaussRational::one(), n).scale_gauss(&GaussRational::int(2));
    let a = tm[0][0].clone();
    let abar = tm[1][1].clone();
    let b = tm[0][1].clone();
    let bbar = tm[1][0].scale(&-&e);
    let tt: LComb = vec![(T, one.clone())];
    let zero = JSeries::zero(n);
    let cases: Vec<(&str, &LComb, &GPoly, JSeries)> = vec![
        ("t(a)=x", &tt, &a, x.clone()),
        ("t(abar)=1/x", &tt, &abar, xinv.clone()),
        ("u(bbar)=-x*lambda", &u, &bbar, -&(&x * &lam)),
        ("ubar(b)=lambda/x", &ubar, &b, &xinv * &lam),
        ("t(b)=0", &tt, &b, zero.clone()),
        ("t(bbar)=0", &tt, &bbar, zero.clone()),
        ("u(b)=0", &u, &b, zero.clone()),
        ("ubar(bbar)=0", &ubar, &bbar, zero.clone()),
        ("u(a)=0", &u, &a, zero.clone()),
        ("u(abar)=0", &u, &abar, zero.clone()),
        ("ubar(a)=0", &ubar, &a, zero.clone()),
        ("ubar(abar)=0", &ubar, &abar, zero),
    ];
    for (name, l, f, want) in cases {
        let d = &pair_comb(&tab, l, f)? - &want;
        rep.push(match residual_at(&d, j) {
            Ok(res) => CheckOutcome::from_residual(format!("aggregate:{name}"), res),
            Err(e) => CheckOutcome::failed(format!("aggregate:{name}"), e),
        });
    }
    Ok(rep)
}

fn index_quads() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|m| (m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1))
}

fn words_up_to(ngens: u8, maxlen: usize) -> Vec<Word> {
    Word::all_up_to(ngens, maxlen)
}

/// For every defining relation of Fun(SU_q(2;j)) in ring mode (RTT
/// relations and det = 1) and every L-word of length ≤ `maxlen`,
/// `⟨w, r⟩ = 0`.
pub fn verify_ideal_annihilation(variant: Variant, j: &JAssign, maxlen: usize, n: usize) -> Result<Report> {
    let alg = build_fun(variant, j, n, FunMode::CoordinateRing)?;
    let pairing = Pairing::new(variant, j, n)?;
    let alpha = alg.alphabet();
    let lwords = words_up_to(4, maxlen);
    let mut rep = Report::new();
    for (lhs, rel) in alg.system.relations() {
        let res = par_map(&lwords, |w| Residual::of_series(&pairing.pair_fun_poly(w, &rel)));
        let res = res.into_iter().fold(Residual::zero(), Residual::merge);
        rep.push(CheckOutcome::from_residual(format!("ideal:{}", alpha.fmt_word(&lhs)), res));
    }
    Ok(rep)
}

/// The su-side relations in t-form, j-cleared:
/// `u₁t = cosh·tu₁ + iκ₁ sinhc·tu₂`, `u₂t = cosh·tu₂ − iκ₂ sinhc·tu₁`,
/// `t t⁻¹ = t⁻¹t = 1`,
/// `[u₁,u₂] = −iγ₁γ₂ e^{−Jz} sinh(Jz)(t² − t⁻²)`.
pub fn l_relations(variant: Variant, j: &JAssign, n: usize) -> Result<Vec<(String, Poly)>> {
    let spec = variant.spec();
    let sp = |s: JSeries| s.specialize(j);
    let mono = |m: (i32, i32)| JLaurent::monomial(m).specialize(j);
    let [g1, g2] = spec.gamma;
    let k1 = mono((spec.mult.0 + g1.0 - g2.0, spec.mult.1 + g1.1 - g2.1))?;
    let k2 = mono((spec.mult.0 + g2.0 - g1.0, spec.mult.1 + g2.1 - g1.1))?;
    let ch = sp(spec.sf(StructureFn::Cosh, GaussRational::one(), n))?;
    let shc = sp(spec.sf(StructureFn::Sinhc, GaussRational::one(), n))?;
    let sh = sp(spec.sf(StructureFn::Sinh, GaussRational::one(), n))?;
    let em = sp(spec.sf(StructureFn::Exp, GaussRational::int(-1), n))?;
    let gg = mono((g1.0 + g2.0, g1.1 + g2.1))?;
    let i = GaussRational::i();
    let w = |s: &[u8]| Poly::word(Word::from_slice(s), n);
    let one = Poly::one(n);

    let a = &(&w(&[U1, T]) - &w(&[T, U1]).scale(&ch)) - &w(&[T, U2]).scale(&shc.scale(&k1).scale_gauss(&i));
    let b = &(&w(&[U2, T]) - &w(&[T, U2]).scale(&ch)) + &w(&[T, U1]).scale(&shc.scale(&k2).scale_gauss(&i));
    let c1 = &w(&[T, TI]) - &one;
    let c2 = &w(&[TI, T]) - &one;
    let coef = (&em * &sh).scale(&gg).scale_gauss(&i);
    let d = &(&w(&[U1, U2]) - &w(&[U2, U1])) + &(&w(&[T, T]) - &w(&[TI, TI])).scale(&coef);
    Ok(vec![
        ("u1*t".into(), a),
        ("u2*t".into(), b),
        ("t*ti".into(), c1),
        ("ti*t".into(), c2),
        ("[u1,u2]".into(), d),
    ])
}

/// Pair each t-form relation against every fun word of length ≤ `maxlen`.
pub fn verify_relation_functionals(variant: Variant, j: &JAssign, maxlen: usize, n: usize) -> Result<Report> {
    let pairing = Pairing::new(variant, j, n)?;
    let fwords = words_up_to(4, maxlen);
    let mut rep = Report::new();
    for (name, rel) in l_relations(variant, j, n)? {
        let res = par_map(&fwords, |w| Residual::of_series(&pairing.pair_l_poly(&rel, w)));
        let res = res.into_iter().fold(Residual::zero(), Residual::merge);
        rep.push(CheckOutcome::from_residual(format!("functional:{name}"), res));
    }
    Ok(rep)
}
