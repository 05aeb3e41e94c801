use std::sync::{Arc, OnceLock};

use super::variant::{mono, Variant, VariantSpec};
use crate::error::{Error, Result};
use crate::freealg::{nc_commutator, Alphabet, NCPoly, RewriteSystem, Word};
use crate::linalg::SeriesMatrix;
use crate::scalar::{DualCoeff, GaussRational, JAssign, JLaurent, JSeries, Scalar, Series, StructureFn, ZSeries};

pub const B1: u8 = 0;
pub const B2: u8 = 1;
pub const A1: u8 = 2;
pub const A2: u8 = 3;

type GPoly = NCPoly<JLaurent>;
type Poly = NCPoly<DualCoeff>;

pub fn fun_alphabet() -> Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Arc::new(Alphabet::new(&["b1", "b2", "a1", "a2"]))).clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunMode {
    Bialgebra,
    /// Adds the determinant relation `det_q = 1`.
    CoordinateRing,
}

/// Fun(SU_q(2;j)) for one variant and one contraction assignment.
#[derive(Clone, Debug)]
pub struct FunAlgebra {
    pub spec: VariantSpec,
    pub j: JAssign,
    pub order: usize,
    pub mode: FunMode,
    /// The six quadratic relations.
    pub bialgebra: Arc<RewriteSystem<DualCoeff>>,
    /// The active system (equal to `bialgebra` in bialgebra mode).
    pub system: Arc<RewriteSystem<DualCoeff>>,
    /// Normal form of the quantum determinant in the bialgebra.
    pub det: Poly,
}

fn w2(a: u8, b: u8) -> Word {
    Word::from_slice(&[a, b])
}

fn gterm(w: Word, c: JSeries) -> GPoly {
    NCPoly::term(w, c)
}

fn jc(l: JLaurent, n: usize) -> JSeries {
    Series::constant(l, n)
}

fn i_unit() -> GaussRational {
    GaussRational::i()
}

/// The T-matrix with symbolic j.
pub fn t_matrix_generic(spec: &VariantSpec, n: usize) -> [[GPoly; 2]; 2] {
    let g = |x: u8, m| gterm(Word::letter(x), jc(mono(m), n));
    let gi = |x: u8, m| gterm(Word::letter(x), jc(mono(m).mul_gauss(&i_unit()), n));
    let em = spec.sf(StructureFn::Exp, GaussRational::int(-1), n);
    let a1 = NCPoly::gen(A1, n);
    let t00 = &a1 + &gi(A2, spec.alpha);
    let t11 = &a1 - &gi(A2, spec.alpha);
    let t01 = &g(B1, spec.beta[0]) + &gi(B2, spec.beta[1]);
    let t10 = (&g(B1, spec.beta[0]) - &gi(B2, spec.beta[1])).scale(&-&em);
    [[t00, t01], [t10, t11]]
}

/// `R_z(j)` with symbolic j, indexed by `2i + k`.
pub fn r_matrix_generic(spec: &VariantSpec, n: usize) -> SeriesMatrix<JLaurent> {
    let e = spec.sf(StructureFn::Exp, GaussRational::one(), n);
    let mut r = SeriesMatrix::zero(4, 4, n);
    r.set(0, 0, e.clone());
    r.set(1, 1, Series::one(n));
    r.set(2, 1, spec.sf(StructureFn::Sinh, GaussRational::one(), n).scale_gauss(&GaussRational::int(2)));
    r.set(2, 2, Series::one(n));
    r.set(3, 3, e);
    r
}

pub fn t_matrix(spec: &VariantSpec, j: &JAssign, n: usize) -> Result<[[Poly; 2]; 2]> {
    let t = t_matrix_generic(spec, n);
    let s = |p: &GPoly| specialize_poly(p, j);
    Ok([[s(&t[0][0])?, s(&t[0][1])?], [s(&t[1][0])?, s(&t[1][1])?]])
}

pub fn r_matrix(spec: &VariantSpec, j: &JAssign, n: usize) -> Result<SeriesMatrix<DualCoeff>> {
    Ok(r_matrix_generic(spec, n).try_map(|s| s.specialize(j))?)
}

pub(crate) fn specialize_poly(p: &GPoly, j: &JAssign) -> Result<Poly> {
    Ok(p.try_map_coeffs(|s| s.specialize(j))?)
}

/// Entries of `R T₁ T₂ − T₂ T₁ R` in the free algebra, row-major over
/// `(2i+k, 2j+l)`.
pub(crate) fn rtt_entries<C: Scalar>(t: &[[NCPoly<C>; 2]; 2], r: &SeriesMatrix<C>) -> Vec<NCPoly<C>> {
    let n = r.order();
    let mut out = Vec::with_capacity(16);
    for i in 0..2 {
        for k in 0..2 {
            for jj in 0..2 {
                for l in 0..2 {
                    let mut e = NCPoly::zero(n);
                    for m in 0..2 {
                        for q in 0..2 {
                            let left = r.get(2 * i + k, 2 * m + q);
                            if !left.is_zero() {
                                e.add_assign_poly(&(&t[m][jj] * &t[q][l]).scale(left));
                            }
                            let right = r.get(2 * m + q, 2 * jj + l);
                            if !right.is_zero() {
                                e = &e - &(&t[k][q] * &t[i][m]).scale(right);
                            }
                        }
                    }
                    out.push(e);
                }
            }
        }
    }
    out
}

/// The six oriented relations in closed form, symbolic j.
pub fn fun_rules_generic(spec: &VariantSpec, n: usize) -> Vec<(Word, GPoly)> {
    let i = i_unit();
    let ch = spec.sf(StructureFn::Cosh, GaussRational::one(), n);
    let jsh = spec.sf(StructureFn::Sinh, GaussRational::one(), n).scale(&spec.mult_l()).scale_gauss(&i);
    let shc = spec.sf(StructureFn::Sinhc, GaussRational::one(), n);
    let em = spec.sf(StructureFn::Exp, GaussRational::int(-1), n);
    let mut rules = vec![(w2(B2, B1), gterm(w2(B1, B2), Series::one(n)))];
    for b in [B1, B2] {
        rules.push((w2(A1, b), &gterm(w2(b, A1), ch.clone()) + &gterm(w2(b, A2), jsh.clone())));
    }
    for b in [B1, B2] {
        rules.push((w2(A2, b), &gterm(w2(b, A2), ch.clone()) - &gterm(w2(b, A1), shc.scale_gauss(&i))));
    }
    let coef = (&em * &shc).scale_gauss(&i);
    let b2s = |b: u8, m: (i32, i32)| gterm(w2(b, b), coef.scale(&mono((2 * m.0, 2 * m.1))));
    let rhs = &(&gterm(w2(A1, A2), Series::one(n)) + &b2s(B1, spec.beta[0])) + &b2s(B2, spec.beta[1]);
    rules.push((w2(A2, A1), rhs));
    rules.sort_by(|a, b| a.0.cmp(&b.0));
    rules
}

/// Relations of the standard group (all scalings trivial) with symbolic
/// coefficients, as `lhs − rhs`.
pub fn standard_rules_generic(n: usize) -> Vec<(Word, GPoly)> {
    let mut spec = Variant::V02.spec();
    spec.mult = (0, 0);
    spec.alpha = (0, 0);
    spec.beta = [(0, 0); 2];
    spec.gamma = [(0, 0); 2];
    fun_rules_generic(&spec, n)
}

/// Outcome of eliminating the RTT relations for the six leading words.
#[derive(Clone, Debug)]
pub struct RttDerivation {
    pub rules: Vec<(Word, GPoly)>,
    /// Rows not used as pivots, reduced; all zero when RTT gives exactly
    /// the six relations.
    pub leftover: Vec<GPoly>,
}

/// Gauss-Jordan elimination of the 16 RTT entries over symbolic-j series.
pub fn relations_from_rtt_generic(spec: &VariantSpec, n: usize) -> Result<RttDerivation> {
    let t = t_matrix_generic(spec, n);
    let r = r_matrix_generic(spec, n);
    let mut rows = rtt_entries(&t, &r);
    let leading = [w2(B2, B1), w2(A1, B1), w2(A1, B2), w2(A2, B1), w2(A2, B2), w2(A2, A1)];
    let mut pivot_rows = Vec::new();
    for lw in &leading {
        let found = (0..rows.len()).find(|k| {
            !pivot_rows.contains(k) && rows[*k].coeff(lw).is_some_and(|c| c.inverse().is_ok())
        });
        let Some(p) = found else {
            return Err(Error::RankDeficient(fun_alphabet().fmt_word(lw)));
        };
        let inv = rows[p].coeff(lw).expect("pivot").inverse()?;
        rows[p] = rows[p].scale(&inv);
        for k in 0..rows.len() {
            if k == p {
                continue;
            }
            if let Some(c) = rows[k].coeff(lw).cloned() {
                rows[k] = &rows[k] - &rows[p].scale(&c);
            }
        }
        pivot_rows.push(p);
    }
    let rules = leading
        .iter()
        .zip(&pivot_rows)
        .map(|(lw, &p)| (lw.clone(), -&(&rows[p] - &NCPoly::word(lw.clone(), n))))
        .collect();
    let leftover = (0..rows.len()).filter(|k| !pivot_rows.contains(k)).map(|k| rows[k].clone()).collect();
    Ok(RttDerivation { rules, leftover })
}

/// The RTT-derived rewrite system at a concrete `j`.
pub fn relations_from_rtt(variant: Variant, j: &JAssign, n: usize) -> Result<RewriteSystem<DualCoeff>> {
    let d = relations_from_rtt_generic(&variant.spec(), n)?;
    let mut rs = RewriteSystem::new(fun_alphabet(), n);
    for (lhs, rhs) in &d.rules {
        rs.add_rule(lhs, specialize_poly(rhs, j)?)?;
    }
    Ok(rs)
}

pub fn build_fun(variant: Variant, j: &JAssign, n: usize, mode: FunMode) -> Result<FunAlgebra> {
    let spec = variant.spec();
    let mut bialg = RewriteSystem::new(fun_alphabet(), n);
    for (lhs, rhs) in fun_rules_generic(&spec, n) {
        bialg.add_rule(&lhs, specialize_poly(&rhs, j)?)?;
    }
    let t = t_matrix(&spec, j, n)?;
    let e = spec.sf(StructureFn::Exp, GaussRational::one(), n).specialize(j)?;
    let det_free = &(&t[0][0] * &t[1][1]) - &(&t[0][1] * &t[1][0]).scale(&e);
    let det = bialg.normal_form(&det_free)?;
    let bialgebra = Arc::new(bialg);
    let system = match mode {
        FunMode::Bialgebra => bialgebra.clone(),
        FunMode::CoordinateRing => {
            let mut rs = (*bialgebra).clone();
            let (lhs, rhs) = orient_det(&det, n)?;
            rs.add_rule(&lhs, rhs)?;
            Arc::new(rs)
        }
    };
    Ok(FunAlgebra { spec, j: *j, order: n, mode, bialgebra, system, det })
}

/// Solve `det − 1 = 0` for `a₂²` when its coefficient is a unit,
/// otherwise for `a₁²`.
fn orient_det(det: &Poly, n: usize) -> Result<(Word, Poly)> {
    let rel = det - &NCPoly::one(n);
    for lw in [w2(A2, A2), w2(A1, A1)] {
        if let Some(c) = rel.coeff(&lw) {
            if let Ok(inv) = c.inverse() {
                let rest = &rel - &NCPoly::term(lw.clone(), c.clone());
                return Ok((lw, (-&rest).scale(&inv)));
            }
        }
    }
    Err(Error::RankDeficient("a2·a2 / a1·a1".into()))
}

impl FunAlgebra {
    pub fn alphabet(&self) -> Arc<Alphabet> {
        fun_alphabet()
    }

    pub fn gen(&self, g: u8) -> Poly {
        NCPoly::gen(g, self.order)
    }

    pub fn t_matrix(&self) -> Result<[[Poly; 2]; 2]> {
        t_matrix(&self.spec, &self.j, self.order)
    }

    pub fn r_matrix(&self) -> Result<SeriesMatrix<DualCoeff>> {
        r_matrix(&self.spec, &self.j, self.order)
    }

    pub fn mult(&self) -> DualCoeff {
        self.spec.mult_at(&self.j)
    }

    /// Structure function of `J z` at this algebra's j.
    pub fn sf(&self, kind: StructureFn, scale: GaussRational) -> ZSeries {
        self.spec.sf(kind, scale, self.order).specialize(&self.j).expect("nonnegative exponents")
    }

    /// Defining relations of the active system, as `lhs − rhs`.
    pub fn relations(&self) -> Vec<Poly> {
        self.system.relations().into_iter().map(|(_, r)| r).collect()
    }

    pub fn nf(&self, p: &Poly) -> Result<Poly> {
        Ok(self.system.normal_form(p)?)
    }
}

/// Normal-formed entries of `R T₁ T₂ − T₂ T₁ R`, row-major 4×4.
pub fn rtt_residual(alg: &FunAlgebra) -> Result<Vec<Poly>> {
    let t = alg.t_matrix()?;
    let r = alg.r_matrix()?;
    rtt_entries(&t, &r).iter().map(|e| alg.nf(e)).collect()
}

/// `R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂` on `C²⊗C²⊗C²`.
pub fn ybe_residual(variant: Variant, j: &JAssign, n: usize) -> Result<SeriesMatrix<DualCoeff>> {
    let r = r_matrix(&variant.spec(), j, n)?;
    Ok(ybe_of(&r))
}

pub(crate) fn ybe_of(r: &SeriesMatrix<DualCoeff>) -> SeriesMatrix<DualCoeff> {
    let n = r.order();
    let id2 = SeriesMatrix::identity(2, n);
    let r12 = r.kron(&id2);
    let r23 = id2.kron(r);
    let p12 = SeriesMatrix::swap(2, 2, n).kron(&id2);
    let r13 = &(&p12 * &r23) * &p12;
    let left = &(&r12 * &r13) * &r23;
    let right = &(&r23 * &r13) * &r12;
    &left - &right
}

/// The quantum determinant `T₀₀T₁₁ − e^{Jz}T₀₁T₁₀`, normal-formed in the
/// bialgebra.
pub fn quantum_det(alg: &FunAlgebra) -> Poly {
    alg.det.clone()
}

/// `[p, g] = 0` for every generator g.
pub fn check_central(alg: &FunAlgebra, p: &Poly) -> Result<bool> {
    for g in 0..4 {
        if !nc_commutator(p, &alg.gen(g), &alg.system)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
