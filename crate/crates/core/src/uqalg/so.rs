use std::sync::{Arc, OnceLock};

use super::exp_of_gen;
use crate::error::Result;
use crate::freealg::{nc_commutator, Alphabet, NCPoly, RewriteSystem, TensorPoly, Word};
use crate::funq::Primitive;
use crate::hopf::HopfData;
use crate::report::{CheckOutcome, Report, Residual};
use crate::scalar::{structure_fn, DualCoeff, GaussRational, JAssign, JLaurent, Series, StructureFn, ZSeries};

pub const X01: u8 = 0;
pub const X02: u8 = 1;
pub const X12: u8 = 2;

type GPoly = NCPoly<JLaurent>;
type Poly = NCPoly<DualCoeff>;

pub fn so_alphabet() -> Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Arc::new(Alphabet::new(&["X01", "X02", "X12"]))).clone()
}

/// so_q(3;j) with a chosen primitive generator, deformation variable ẑ.
#[derive(Clone, Debug)]
pub struct SoAlgebra {
    pub primitive: Primitive,
    pub j: JAssign,
    pub order: usize,
    pub system: Arc<RewriteSystem<DualCoeff>>,
}

/// `sinh(ẑP)/ẑ = Σ ẑ^{2k} P^{2k+1}/(2k+1)!`.
fn sinh_over_z<C: crate::scalar::Scalar>(p: u8, n: usize) -> NCPoly<C> {
    // exp_of_gen puts z^k on P^k; shift down by one power of z.
    let full: NCPoly<C> = exp_of_gen(p, &GaussRational::one(), Some(1), n + 1);
    let mut out = NCPoly::zero(n);
    for (w, s) in full.terms() {
        let k = w.len();
        out.add_term(w.clone(), Series::monomial(s.coeff(k).clone(), k - 1, n));
    }
    out
}

/// Commutation relations with symbolic j:
/// `[X01,X02] = j₁²·f(X12)`, `[X02,X12] = j₂²·f(X01)`, `[X12,X01] = f(X02)`,
/// where f is `sinh(ẑP)/ẑ` on the primitive P and the identity otherwise.
pub fn so_rules_generic(p: Primitive, n: usize) -> Vec<(Word, GPoly)> {
    so_rules_with(p, n, [JLaurent::monomial((2, 0)), JLaurent::monomial((0, 2)), JLaurent::monomial((0, 0))])
}

/// Same relations with explicit multipliers in place of `(j₁², j₂², 1)`.
pub(crate) fn so_rules_with(p: Primitive, n: usize, mults: [JLaurent; 3]) -> Vec<(Word, GPoly)> {
    let f = |x: u8| -> GPoly {
        if x == p.index() {
            sinh_over_z(x, n)
        } else {
            NCPoly::gen(x, n)
        }
    };
    let w = |a: u8, b: u8| NCPoly::<JLaurent>::word(Word::from_slice(&[a, b]), n);
    let c = |l: &JLaurent| Series::constant(l.clone(), n);
    let [m1, m2, m3] = mults;
    let mut rules = vec![
        (Word::from_slice(&[X02, X01]), &w(X01, X02) - &f(X12).scale(&c(&m1))),
        (Word::from_slice(&[X12, X02]), &w(X02, X12) - &f(X01).scale(&c(&m2))),
        (Word::from_slice(&[X12, X01]), &w(X01, X12) + &f(X02).scale(&c(&m3))),
    ];
    rules.sort_by(|a, b| a.0.cmp(&b.0));
    rules
}

pub fn build_so(primitive: Primitive, j: &JAssign, n: usize) -> Result<SoAlgebra> {
    let mut rs = RewriteSystem::new(so_alphabet(), n);
    for (lhs, rhs) in so_rules_generic(primitive, n) {
        rs.add_rule(&lhs, rhs.try_map_coeffs(|s| s.specialize(j))?)?;
    }
    Ok(SoAlgebra { primitive, j: *j, order: n, system: Arc::new(rs) })
}

/// Closed-form antipodes `S̃(X) = −cos(Jẑ/2)X ± c·(sin(Jẑ/2)/J)Y` with
/// symbolic j, in alphabet order; J is the primitive's multiplier.
pub fn so_antipode_generic(p: Primitive, n: usize) -> [GPoly; 3] {
    let jm = JLaurent::monomial(p.multiplier());
    let half_i = GaussRational::complex(0, 1, 2);
    let cos = structure_fn(StructureFn::Cosh, &half_i, &jm, n);
    // sin(Jẑ/2)/J = −i·sinh(iJẑ/2)/J
    let sinc = structure_fn(StructureFn::Sinhc, &half_i, &jm, n).scale_gauss(&GaussRational::complex(0, -1, 1));
    let t = |x: u8, s: Series<JLaurent>| NCPoly::term(Word::letter(x), s);
    let lin = |x: u8, y: u8, sign: i64, mono: (i32, i32)| {
        &t(x, -&cos) + &t(y, sinc.scale(&JLaurent::monomial(mono)).scale_gauss(&GaussRational::int(sign)))
    };
    let prim = -&NCPoly::gen(p.index(), n);
    match p {
        Primitive::X02 => [lin(X01, X12, 1, (2, 0)), prim, lin(X12, X01, -1, (0, 2))],
        Primitive::X12 => [lin(X01, X02, -1, (0, 0)), lin(X02, X01, 1, (0, 2)), prim],
        Primitive::X01 => [prim, lin(X02, X12, -1, (2, 0)), lin(X12, X02, 1, (0, 0))],
    }
}

impl SoAlgebra {
    pub fn gen(&self, g: u8) -> Poly {
        NCPoly::gen(g, self.order)
    }

    /// `e^{sẑP}` as a polynomial in the primitive.
    pub fn exp_p(&self, s: GaussRational) -> Poly {
        exp_of_gen(self.primitive.index(), &s, None, self.order)
    }

    pub fn relations(&self) -> Vec<Poly> {
        self.system.relations().into_iter().map(|(_, r)| r).collect()
    }

    pub fn nf(&self, p: &Poly) -> Result<Poly> {
        Ok(self.system.normal_form(p)?)
    }

    pub fn bracket(&self, x: &Poly, y: &Poly) -> Result<Poly> {
        Ok(nc_commutator(x, y, &self.system)?)
    }
}

/// Δ(P) = P⊗1 + 1⊗P, ΔX = e^{−ẑP/2}⊗X + X⊗e^{ẑP/2}, ε = 0, S̃ closed
/// forms.
pub fn hopf_maps_so(alg: &SoAlgebra) -> Result<HopfData> {
    let n = alg.order;
    let one = NCPoly::one(n);
    let em = alg.exp_p(GaussRational::ratio(-1, 2));
    let ep = alg.exp_p(GaussRational::ratio(1, 2));
    let p = alg.primitive.index();
    let delta = (0..3u8)
        .map(|g| {
            let x = alg.gen(g);
            if g == p {
                &TensorPoly::pure(&[&x, &one]) + &TensorPoly::pure(&[&one, &x])
            } else {
                &TensorPoly::pure(&[&em, &x]) + &TensorPoly::pure(&[&x, &ep])
            }
        })
        .collect();
    let antipode = so_antipode_generic(alg.primitive, n)
        .iter()
        .map(|q| q.try_map_coeffs(|s| s.specialize(&alg.j)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(HopfData::new(alg.system.clone(), delta, vec![ZSeries::zero(n); 3], antipode))
}

/// Hopf axioms, Jacobi identity, and the conjugation identity
/// `S̃(X) = −e^{ẑP/2} X e^{−ẑP/2}`.
pub fn hopf_axiom_report_so(alg: &SoAlgebra) -> Result<Report> {
    let h = hopf_maps_so(alg)?;
    let n = alg.order;
    let rels = alg.relations();
    let mut rep = Report::new();
    rep.push(h.check_multiplicative("coproduct-multiplicative", &rels)?);
    rep.push(h.check_coassociative("coassociativity")?);
    rep.push(h.check_counit("counit")?);
    rep.push(h.check_antipode("antipode", &NCPoly::one(n))?);
    rep.push(h.check_antipode_relations("antipode-relations", &rels)?);

    let x = |g| alg.gen(g);
    let jac = &(&alg.bracket(&x(X01), &alg.bracket(&x(X02), &x(X12))?)?
        + &alg.bracket(&x(X02), &alg.bracket(&x(X12), &x(X01))?)?)
        + &alg.bracket(&x(X12), &alg.bracket(&x(X01), &x(X02))?)?;
    rep.push(CheckOutcome::from_residual("jacobi", Residual::of_poly(&alg.nf(&jac)?)));

    let ep = alg.exp_p(GaussRational::ratio(1, 2));
    let em = alg.exp_p(GaussRational::ratio(-1, 2));
    let mut r = Residual::zero();
    for g in 0..3u8 {
        let conj = -&alg.nf(&(&(&ep * &x(g)) * &em))?;
        let closed = h.antipode.image(g).expect("antipode image");
        r = r.merge(Residual::of_poly(&(&conj - closed)));
    }
    rep.push(CheckOutcome::from_residual("conjugation", r));
    Ok(rep)
}
