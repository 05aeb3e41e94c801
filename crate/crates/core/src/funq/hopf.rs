use std::sync::Arc;

use super::algebra::{specialize_poly, t_matrix_generic, FunAlgebra, FunMode, A1};
use super::variant::{mono_inv, VariantSpec};
use crate::error::Result;
use crate::freealg::{NCPoly, TensorPoly};
use crate::hopf::HopfData;
use crate::report::{CheckOutcome, Report, Residual};
use crate::scalar::{GaussRational, JLaurent, JSeries, Series, StructureFn, ZSeries};

type GPoly = NCPoly<JLaurent>;
type GTensor = TensorPoly<JLaurent>;

trait Lin: Sized {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, s: &JSeries) -> Self;
}

impl Lin for GPoly {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, s: &JSeries) -> Self {
        self.scale(s)
    }
}

impl Lin for GTensor {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, s: &JSeries) -> Self {
        self.scale(s)
    }
}

/// Recover generator components from the four entries of a T-shaped
/// matrix, dividing by j-monomials symbolically. Returns images in
/// alphabet order `b1, b2, a1, a2`.
fn components<X: Lin>(spec: &VariantSpec, m: [[X; 2]; 2], n: usize) -> [X; 4] {
    let c = |l: JLaurent| Series::constant(l, n);
    let half = GaussRational::ratio(1, 2);
    let half_i = GaussRational::complex(0, -1, 2);
    let e = spec.sf(StructureFn::Exp, GaussRational::one(), n);
    let [[m00, m01], [m10, m11]] = m;
    let e10 = m10.times(&e);
    let a1 = m00.plus(&m11).times(&Series::from_gauss(half.clone(), n));
    let a2 = m00.minus(&m11).times(&c(mono_inv(spec.alpha).mul_gauss_l(&half_i)));
    let b1 = m01.minus(&e10).times(&c(mono_inv(spec.beta[0]).mul_gauss_l(&half)));
    let b2 = m01.plus(&e10).times(&c(mono_inv(spec.beta[1]).mul_gauss_l(&half_i)));
    [b1, b2, a1, a2]
}

trait MulGaussL {
    fn mul_gauss_l(&self, g: &GaussRational) -> JLaurent;
}

impl MulGaussL for JLaurent {
    fn mul_gauss_l(&self, g: &GaussRational) -> JLaurent {
        crate::scalar::Scalar::mul_gauss(self, g)
    }
}

/// Component coproducts from `ΔT = T ⊗̇ T`, symbolic j.
pub fn coproduct_generic(spec: &VariantSpec, n: usize) -> [GTensor; 4] {
    let t = t_matrix_generic(spec, n);
    let d = |i: usize, j: usize| {
        &TensorPoly::pure(&[&t[i][0], &t[0][j]]) + &TensorPoly::pure(&[&t[i][1], &t[1][j]])
    };
    components(spec, [[d(0, 0), d(0, 1)], [d(1, 0), d(1, 1)]], n)
}

/// Component antipodes from
/// `S(T) = [[T₁₁, −e^{−Jz}T₀₁], [−e^{Jz}T₁₀, T₀₀]]`, symbolic j.
pub fn antipode_generic(spec: &VariantSpec, n: usize) -> [GPoly; 4] {
    let [[t00, t01], [t10, t11]] = t_matrix_generic(spec, n);
    let e = spec.sf(StructureFn::Exp, GaussRational::one(), n);
    let em = spec.sf(StructureFn::Exp, GaussRational::int(-1), n);
    let s01 = t01.scale(&-&em);
    let s10 = t10.scale(&-&e);
    components(spec, [[t11, s01], [s10, t00]], n)
}

/// Δ, ε, S at the algebra's j, acting modulo its active relations.
pub fn hopf_maps_fun(alg: &FunAlgebra) -> Result<HopfData> {
    hopf_on(alg, alg.system.clone())
}

fn hopf_on(alg: &FunAlgebra, system: Arc<crate::freealg::RewriteSystem<crate::scalar::DualCoeff>>) -> Result<HopfData> {
    let n = alg.order;
    let delta = coproduct_generic(&alg.spec, n)
        .iter()
        .map(|t| specialize_tensor(t, &alg.j))
        .collect::<Result<Vec<_>>>()?;
    let mut counit = vec![ZSeries::zero(n); 4];
    counit[A1 as usize] = ZSeries::one(n);
    let antipode = antipode_generic(&alg.spec, n)
        .iter()
        .map(|p| specialize_poly(p, &alg.j))
        .collect::<Result<Vec<_>>>()?;
    Ok(HopfData::new(system, delta, counit, antipode))
}

pub(crate) fn specialize_tensor(t: &GTensor, j: &crate::scalar::JAssign) -> Result<TensorPoly<crate::scalar::DualCoeff>> {
    let mut out = TensorPoly::zero(t.arity(), t.order());
    for (k, s) in t.terms() {
        out.add_term(k.clone(), s.specialize(j)?);
    }
    Ok(out)
}

/// Hopf axioms of Fun(SU_q(2;j)) at the algebra's j and mode.
pub fn hopf_axiom_report_fun(alg: &FunAlgebra) -> Result<Report> {
    let h = hopf_maps_fun(alg)?;
    let bh = hopf_on(alg, alg.bialgebra.clone())?;
    let n = alg.order;
    let mut rep = Report::new();
    let rels = alg.relations();
    rep.push(h.check_multiplicative("coproduct-multiplicative", &rels)?);
    rep.push(h.check_coassociative("coassociativity")?);
    rep.push(h.check_counit("counit")?);

    let t = alg.t_matrix()?;
    let mut r = Residual::zero();
    for (i, row) in t.iter().enumerate() {
        for (jj, e) in row.iter().enumerate() {
            let want = if i == jj { ZSeries::one(n) } else { ZSeries::zero(n) };
            r = r.merge(Residual::of_series(&(&h.counit_of(e) - &want)));
        }
    }
    rep.push(CheckOutcome::from_residual("counit-matrix", r));

    match alg.mode {
        FunMode::CoordinateRing => rep.push(h.check_antipode("antipode", &NCPoly::one(n))?),
        FunMode::Bialgebra => rep.push(
            h.check_antipode("antipode", &alg.det)?
                .noted("bialgebra mode: m(S⊗id)Δ(g) = ε(g)·det_q"),
        ),
    }
    rep.push(h.check_antipode_relations("antipode-relations", &rels)?);

    let dd = bh.delta_of(&alg.det)?;
    let want = TensorPoly::pure(&[&alg.det, &alg.det]);
    let want = bh.nf_tensor(&want)?;
    rep.push(CheckOutcome::from_residual("det-grouplike", Residual::of_tensor(&(&dd - &want))));

    // S² on the off-diagonal entries: S²(b) = e^{−2Jz} b, S²(b̄) = e^{2Jz} b̄.
    let e2 = alg.sf(StructureFn::Exp, GaussRational::int(2));
    let em2 = alg.sf(StructureFn::Exp, GaussRational::int(-2));
    let s2 = |p: &NCPoly<_>| -> Result<NCPoly<_>> { h.antipode_of(&h.antipode_of(p)?) };
    let r = Residual::of_poly(&(&s2(&t[0][1])? - &t[0][1].scale(&em2)))
        .merge(Residual::of_poly(&(&s2(&t[1][0])? - &t[1][0].scale(&e2))));
    rep.push(CheckOutcome::from_residual("antipode-square", r).with_note("S²(b) = e^{−2Jz}·b and S²(b̄) = e^{2Jz}·b̄"));
    Ok(rep)
}
