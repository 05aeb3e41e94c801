use std::sync::{Arc, OnceLock};

use super::exp_of_gen;
use crate::error::Result;
use crate::freealg::{Alphabet, NCPoly, RewriteSystem, TensorPoly, Word};
use crate::funq::{Variant, VariantSpec};
use crate::hopf::HopfData;
use crate::report::{CheckOutcome, Report, Residual};
use crate::scalar::{DualCoeff, GaussRational, JAssign, JLaurent, JMonomial, Scalar, Series, StructureFn, ZSeries};

pub const U1: u8 = 0;
pub const U2: u8 = 1;
pub const H: u8 = 2;

type GPoly = NCPoly<JLaurent>;
type Poly = NCPoly<DualCoeff>;

pub fn su_alphabet() -> Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Arc::new(Alphabet::new(&["u1", "u2", "H"]))).clone()
}

/// su_q(2;j) for one variant at one j.
#[derive(Clone, Debug)]
pub struct SuAlgebra {
    pub spec: VariantSpec,
    pub j: JAssign,
    pub order: usize,
    pub system: Arc<RewriteSystem<DualCoeff>>,
}

fn m(e: JMonomial) -> JLaurent {
    JLaurent::monomial(e)
}

fn mdiv(a: JMonomial, b: JMonomial) -> JMonomial {
    (a.0 - b.0, a.1 - b.1)
}

fn mmul(a: JMonomial, b: JMonomial) -> JMonomial {
    (a.0 + b.0, a.1 + b.1)
}

/// `κ₁ = Jγ₁/γ₂`, `κ₂ = Jγ₂/γ₁`.
pub(crate) fn kappas(spec: &VariantSpec) -> [JMonomial; 2] {
    let [g1, g2] = spec.gamma;
    [mdiv(mmul(spec.mult, g1), g2), mdiv(mmul(spec.mult, g2), g1)]
}

/// Oriented relations with symbolic j:
/// `Hu₁ → u₁H − 2iκ₁u₂`, `Hu₂ → u₂H + 2iκ₂u₁`,
/// `u₂u₁ → u₁u₂ + 2iγ₁γ₂e^{−Jz}sinh(Jz)·sinh(zH)`.
pub fn su_rules_generic(spec: &VariantSpec, n: usize) -> Vec<(Word, GPoly)> {
    let i = GaussRational::i();
    let c = |l: JLaurent| Series::constant(l, n);
    let w = |a: u8, b: u8| Word::from_slice(&[a, b]);
    let t = |x: &[u8], s: Series<JLaurent>| NCPoly::term(Word::from_slice(x), s);
    let [k1, k2] = kappas(spec);
    let mut rules = Vec::new();
    rules.push((w(H, U1), &t(&[U1, H], Series::one(n)) + &t(&[U2], c(m(k1).mul_gauss(&(&i * &GaussRational::int(-2)))))));
    rules.push((w(H, U2), &t(&[U2, H], Series::one(n)) + &t(&[U1], c(m(k2).mul_gauss(&(&i * &GaussRational::int(2)))))));
    let em = spec.sf(StructureFn::Exp, GaussRational::int(-1), n);
    let sh = spec.sf(StructureFn::Sinh, GaussRational::one(), n);
    let coef = (&em * &sh).scale(&m(mmul(spec.gamma[0], spec.gamma[1]))).scale_gauss(&(&i * &GaussRational::int(2)));
    let sinh_zh: GPoly = exp_of_gen(H, &GaussRational::one(), Some(1), n);
    rules.push((w(U2, U1), &t(&[U1, U2], Series::one(n)) + &sinh_zh.scale(&coef)));
    rules.sort_by(|a, b| a.0.cmp(&b.0));
    rules
}

pub fn build_su(variant: Variant, j: &JAssign, n: usize) -> Result<SuAlgebra> {
    let spec = variant.spec();
    let mut rs = RewriteSystem::new(su_alphabet(), n);
    for (lhs, rhs) in su_rules_generic(&spec, n) {
        rs.add_rule(&lhs, rhs.try_map_coeffs(|s| s.specialize(j))?)?;
    }
    Ok(SuAlgebra { spec, j: *j, order: n, system: Arc::new(rs) })
}

impl SuAlgebra {
    pub fn gen(&self, g: u8) -> Poly {
        NCPoly::gen(g, self.order)
    }

    /// `t^{±1} = e^{±zH/2}`.
    pub fn t_pow(&self, sign: i64) -> Poly {
        exp_of_gen(H, &GaussRational::ratio(sign, 2), None, self.order)
    }

    pub fn sf(&self, kind: StructureFn, scale: GaussRational) -> ZSeries {
        self.spec.sf(kind, scale, self.order).specialize(&self.j).expect("nonnegative exponents")
    }

    pub fn relations(&self) -> Vec<Poly> {
        self.system.relations().into_iter().map(|(_, r)| r).collect()
    }

    pub fn nf(&self, p: &Poly) -> Result<Poly> {
        Ok(self.system.normal_form(p)?)
    }

    fn kappa_at(&self, k: usize) -> DualCoeff {
        m(kappas(&self.spec)[k]).specialize(&self.j).expect("nonnegative exponents")
    }

    /// Closed forms of `t⁻¹u_k t`:
    /// `cosh(Jz)u₁ + iκ₁ sinhc u₂` and `cosh(Jz)u₂ − iκ₂ sinhc u₁`.
    pub fn conjugation_closed_form(&self, k: u8) -> Poly {
        let ch = self.sf(StructureFn::Cosh, GaussRational::one());
        let shc = self.sf(StructureFn::Sinhc, GaussRational::one());
        let (own, other, sign, kap) = if k == U1 { (U1, U2, 1, 0) } else { (U2, U1, -1, 1) };
        let c = shc.scale(&self.kappa_at(kap)).scale_gauss(&GaussRational::complex(0, sign, 1));
        &NCPoly::term(Word::letter(own), ch) + &NCPoly::term(Word::letter(other), c)
    }
}

/// Δ(H) = H⊗1 + 1⊗H, Δu = t⊗u + u⊗t⁻¹, ε = 0, S(H) = −H,
/// S(u) = −t⁻¹ u t.
pub fn hopf_maps_su(alg: &SuAlgebra) -> Result<HopfData> {
    let n = alg.order;
    let one = NCPoly::one(n);
    let tp = alg.t_pow(1);
    let tm = alg.t_pow(-1);
    let mut delta = Vec::new();
    let mut antipode = Vec::new();
    for g in [U1, U2] {
        let u = alg.gen(g);
        delta.push(&TensorPoly::pure(&[&tp, &u]) + &TensorPoly::pure(&[&u, &tm]));
        antipode.push(-&alg.nf(&(&(&tm * &u) * &tp))?);
    }
    let h = alg.gen(H);
    delta.push(&TensorPoly::pure(&[&h, &one]) + &TensorPoly::pure(&[&one, &h]));
    antipode.push(-&h);
    Ok(HopfData::new(alg.system.clone(), delta, vec![ZSeries::zero(n); 3], antipode))
}

/// Expand `t⁻¹u_k t` with the H-rules and compare with the closed forms.
pub fn su_conjugation_check(alg: &SuAlgebra) -> Result<CheckOutcome> {
    let mut r = Residual::zero();
    for k in [U1, U2] {
        let conj = alg.nf(&(&(&alg.t_pow(-1) * &alg.gen(k)) * &alg.t_pow(1)))?;
        r = r.merge(Residual::of_poly(&(&conj - &alg.conjugation_closed_form(k))));
    }
    Ok(CheckOutcome::from_residual("conjugation", r))
}

/// Hopf axioms of su_q(2;j), plus the conjugation identity and the
/// antipode on the combination `γ₂u₁ + iγ₁u₂` (the j-cleared form of
/// `u₁/γ₁ + iu₂/γ₂`), which must be `−e^{Jz}` times itself.
pub fn hopf_axiom_report_su(alg: &SuAlgebra) -> Result<Report> {
    let h = hopf_maps_su(alg)?;
    let n = alg.order;
    let rels = alg.relations();
    let mut rep = Report::new();
    rep.push(h.check_multiplicative("coproduct-multiplicative", &rels)?);
    rep.push(h.check_coassociative("coassociativity")?);
    rep.push(h.check_counit("counit")?);
    rep.push(h.check_antipode("antipode", &NCPoly::one(n))?);
    rep.push(h.check_antipode_relations("antipode-relations", &rels)?);
    rep.push(su_conjugation_check(alg)?);

    let g = |k: usize| m(alg.spec.gamma[k]).specialize(&alg.j).expect("nonnegative exponents");
    let comb = &alg.gen(U1).scale_c(&g(1)) + &alg.gen(U2).scale_c(&g(0).mul_gauss(&GaussRational::i()));
    let e = alg.sf(StructureFn::Exp, GaussRational::one());
    let r = Residual::of_poly(&(&h.antipode_of(&comb)? + &comb.scale(&e)));
    rep.push(CheckOutcome::from_residual("antipode-combination", r));
    Ok(rep)
}
