use crate::error::{Error, Result};
use crate::freealg::{GenMap, MapKind, NCPoly, TensorPoly, Word};
use crate::funq::{Primitive, Variant};
use crate::hopf::{HopfData, Poly, Tensor};
use crate::report::{CheckOutcome, Report, Residual};
use crate::scalar::{
    inv_factorial, series_sqrt_one_plus, structure_fn, DualCoeff, GaussRational, JAssign, JLaurent, JSeries, Scalar,
    Series, StructureFn, ZSeries,
};
use crate::uqalg::{build_so, build_su, hopf_maps_so, hopf_maps_su, SoAlgebra, SuAlgebra, H, U1, U2, X01, X02, X12};

/// The map su_q(2;j) → so_q(3;j;P) for the v02 and v12 variants, with
/// `z = iẑ/2` and j-cleared images of `u₁, u₂`.
#[derive(Clone, Debug)]
pub struct IsoSpec {
    pub variant: Variant,
    pub j: JAssign,
    pub order: usize,
    pub source: SuAlgebra,
    pub target: SoAlgebra,
    /// `D·e^{−iJẑ/4}` (v02) or `F` (v12).
    pub factor: ZSeries,
    pub images: GenMap<Poly>,
}

fn z_scale() -> GaussRational {
    GaussRational::complex(0, 1, 2)
}

/// `sin(x)/x − 1` at `x = Jẑ/2`, graded by J.
fn sinc_tail(n: usize) -> impl Fn(&JLaurent) -> JSeries {
    move |jm: &JLaurent| {
        let mut coeffs = vec![JLaurent::zero(); n + 1];
        let mut k = 1;
        while 2 * k <= n {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let c = &GaussRational::ratio(sign, 1i64 << (2 * k)) * &inv_factorial(2 * k + 1);
            coeffs[2 * k] = jm.pow((2 * k) as u32).mul_gauss(&c);
            k += 1;
        }
        Series::from_coeffs(coeffs)
    }
}

/// `sin(Jẑ/2)/J` as a series without dividing by J.
fn sin_over_j(jm: &JLaurent, n: usize) -> JSeries {
    structure_fn(StructureFn::Sinhc, &z_scale(), jm, n).scale_gauss(&GaussRational::complex(0, -1, 1))
}

fn zhat(n: usize) -> ZSeries {
    Series::monomial(DualCoeff::one(), 1, n)
}

pub fn build_iso(variant: Variant, j: &JAssign, n: usize) -> Result<IsoSpec> {
    let primitive = match variant {
        Variant::V02 => Primitive::X02,
        Variant::V12 => Primitive::X12,
        Variant::V01 => {
            return Err(Error::Unsupported("no isomorphism is given for the v01 variant".into()));
        }
    };
    let source = build_su(variant, j, n)?;
    let target = build_so(primitive, j, n)?;
    let jm = JLaurent::monomial(primitive.multiplier());
    let sp = |s: JSeries| s.specialize(j);
    let root = series_sqrt_one_plus(&sp(sinc_tail(n)(&jm))?)?;
    let phase = sp(structure_fn(StructureFn::Exp, &GaussRational::complex(0, -1, 4), &jm, n))?;
    let base = &(&zhat(n) * &root) * &phase;
    let mono = |m: (i32, i32)| JLaurent::monomial(m).specialize(j);
    let x = |g: u8, c: ZSeries| NCPoly::term(Word::letter(g), c);
    let (factor, u1, u2) = match variant {
        Variant::V02 => {
            // D = i(ẑ/2)·sqrt(...), u_k = 2i j_k² D e^{−iJẑ/4} X
            let f = base.scale_gauss(&GaussRational::complex(0, 1, 2));
            let two_i = GaussRational::complex(0, 2, 1);
            let u1 = x(X12, f.scale(&mono((2, 0))?).scale_gauss(&two_i));
            let u2 = x(X01, f.scale(&mono((0, 2))?).scale_gauss(&two_i));
            (f, u1, u2)
        }
        _ => {
            // F = e^{−iJẑ/4}·ẑ·sqrt(...), u₁ = F X02, u₂ = −j₂² F X01
            let u1 = x(X02, base.clone());
            let u2 = x(X01, -&base.scale(&mono((0, 2))?));
            (base, u1, u2)
        }
    };
    let h = x(primitive.index(), Series::from_gauss(GaussRational::complex(0, -2, 1), n));
    let images = GenMap::new(MapKind::Hom, source.system.alphabet().clone(), NCPoly::one(n))
        .with(U1, u1)
        .with(U2, u2)
        .with(H, h);
    Ok(IsoSpec { variant, j: *j, order: n, source, target, factor, images })
}

impl IsoSpec {
    fn subst(&self) -> DualCoeff {
        DualCoeff::from_gauss(z_scale())
    }

    /// Image of a source polynomial, reduced in the target.
    pub fn map_poly(&self, p: &Poly) -> Result<Poly> {
        let rs = self.target.system.clone();
        let q = p.subst_scale(&self.subst());
        Ok(self.images.apply_with(&q, &move |x: Poly| rs.normal_form(&x))?)
    }

    pub fn map_tensor(&self, t: &Tensor) -> Result<Tensor> {
        let n = self.order;
        let mut out = TensorPoly::zero(t.arity(), n);
        for (k, c) in t.terms() {
            let mut term = TensorPoly::scalar(c.subst_scale(&self.subst()));
            for w in k {
                let img = self.map_poly(&NCPoly::word(w.clone(), n))?;
                term = term.append(&TensorPoly::from_poly(&img));
            }
            out.add_assign_tensor(&term);
        }
        Ok(out.normal_form(&self.target.system)?)
    }
}

/// The squared identities of the square-root factor:
/// `D² = −(ẑ/2J) sin(Jẑ/2)` (v02), `F² = e^{−iJẑ/2}·2ẑ sin(Jẑ/2)/J` (v12).
pub fn iso_factor_check(iso: &IsoSpec) -> Result<CheckOutcome> {
    let n = iso.order;
    let jm = JLaurent::monomial(iso.target.primitive.multiplier());
    let s = sin_over_j(&jm, n).specialize(&iso.j)?;
    let sq = &iso.factor * &iso.factor;
    let want = match iso.variant {
        Variant::V02 => {
            let phase = structure_fn(StructureFn::Exp, &GaussRational::complex(0, -1, 2), &jm, n).specialize(&iso.j)?;
            // (D e^{−iJẑ/4})² = D² e^{−iJẑ/2}
            (&(&zhat(n) * &s) * &phase).scale_gauss(&GaussRational::ratio(-1, 2))
        }
        _ => {
            let phase = structure_fn(StructureFn::Exp, &GaussRational::complex(0, -1, 2), &jm, n).specialize(&iso.j)?;
            (&(&zhat(n) * &s) * &phase).scale_gauss(&GaussRational::int(2))
        }
    };
    Ok(CheckOutcome::from_residual("factor-square", Residual::of_series(&(&sq - &want))))
}

/// Every source relation maps to zero in the target, plus the factor
/// identity.
pub fn verify_iso_relations(iso: &IsoSpec) -> Result<Report> {
    let mut rep = Report::new();
    let alpha = iso.source.system.alphabet().clone();
    for (lhs, rel) in iso.source.system.relations() {
        let img = iso.map_poly(&rel)?;
        rep.push(CheckOutcome::from_residual(format!("iso:{}", alpha.fmt_word(&lhs)), Residual::of_poly(&img)));
    }
    rep.push(iso_factor_check(iso)?);
    Ok(rep)
}

/// Coefficient comparison of two linear images, as `X+` (equal), `X−`
/// (opposite) or `X?` (neither) per target generator.
fn sign_pattern(iso: &IsoSpec, a: &Poly, b: &Poly) -> String {
    let alpha = iso.target.system.alphabet();
    let mut words: Vec<&Word> = a.terms().map(|(w, _)| w).chain(b.terms().map(|(w, _)| w)).collect();
    words.sort();
    words.dedup();
    if words.is_empty() {
        return "zero image".into();
    }
    words
        .into_iter()
        .map(|w| {
            let (x, y) = (a.coeff_or_zero(w), b.coeff_or_zero(w));
            let s = if (&x - &y).is_zero() {
                "+"
            } else if (&x + &y).is_zero() {
                "-"
            } else {
                "?"
            };
            format!("{}{}", alpha.fmt_word(w), s)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Coproducts, counits and antipodes under the isomorphism.
///
/// The images intertwine the opposite coproduct of the target; this is
/// reported as a pass with a note. The antipode is compared both with
/// `S̃⁻¹` (exact) and with `S̃` (sign pattern only).
pub fn verify_iso_coproducts(iso: &IsoSpec) -> Result<Report> {
    let n = iso.order;
    let src = hopf_maps_su(&iso.source)?;
    let tgt: HopfData = hopf_maps_so(&iso.target)?;
    let salpha = iso.source.system.alphabet().clone();
    let ep = iso.target.exp_p(GaussRational::ratio(1, 2));
    let em = iso.target.exp_p(GaussRational::ratio(-1, 2));
    let mut rep = Report::new();
    for g in [U1, U2, H] {
        let name = salpha.name(g).to_string();
        let x = NCPoly::gen(g, n);
        let phi = iso.map_poly(&x)?;

        let lhs = iso.map_tensor(&src.delta_of(&x)?)?;
        let rhs = tgt.delta_of(&phi)?;
        let direct = Residual::of_tensor(&(&lhs - &rhs));
        let flipped = Residual::of_tensor(&(&lhs - &rhs.flip()));
        let degenerate = phi.is_zero();
        let cop = if direct.is_zero() {
            CheckOutcome::from_residual(format!("coproduct:{name}"), direct)
        } else if flipped.is_zero() {
            CheckOutcome::from_residual(format!("coproduct:{name}"), flipped)
                .noted("intertwines the opposite coproduct of the target")
        } else {
            CheckOutcome::from_residual(format!("coproduct:{name}"), direct)
        };
        rep.push(if degenerate { cop.noted("j-cleared image vanishes at this j") } else { cop });

        let ce = &tgt.counit_of(&phi) - &src.counit_of(&x).subst_scale(&iso.subst());
        rep.push(CheckOutcome::from_residual(format!("counit:{name}"), Residual::of_series(&ce)));

        let phi_s = iso.map_poly(&src.antipode_of(&x)?)?;
        let s_inv = -&iso.target.nf(&(&(&em * &phi) * &ep))?;
        let s_phi = tgt.antipode_of(&phi)?;
        let pattern = sign_pattern(iso, &phi_s, &s_phi);
        rep.push(
            CheckOutcome::from_residual(format!("antipode:{name}"), Residual::of_poly(&(&phi_s - &s_inv)))
                .noted(format!("phi(S) = S~^-1(phi); against S~(phi): {pattern}")),
        );
    }
    Ok(rep)
}
