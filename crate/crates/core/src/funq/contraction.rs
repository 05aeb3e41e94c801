use super::algebra::{build_fun, fun_alphabet, specialize_poly, standard_rules_generic, FunMode, A1, A2, B1, B2};
use super::variant::{mono, Variant};
use crate::error::Result;
use crate::freealg::{GenMap, MapKind, NCPoly};
use crate::report::{CheckOutcome, Report, Residual};
use crate::scalar::{JAssign, JLaurent, Scalar, Series};

/// Substitute `ã₁ = a₁, ã₂ = α a₂, b̃_k = β_k b_k, z̃ = J z` into the
/// standard relations, cancel the leading j-monomial, specialize, and
/// reduce in the j-algebra.
pub fn verify_contraction_fun(variant: Variant, j: &JAssign, n: usize) -> Result<Report> {
    let spec = variant.spec();
    let alg = build_fun(variant, j, n, FunMode::Bialgebra)?;
    let alpha = fun_alphabet();
    let scaled = |g: u8, m| NCPoly::term(crate::freealg::Word::letter(g), Series::constant(mono(m), n));
    let map = GenMap::new(MapKind::Hom, alpha.clone(), NCPoly::<JLaurent>::one(n))
        .with(B1, scaled(B1, spec.beta[0]))
        .with(B2, scaled(B2, spec.beta[1]))
        .with(A1, NCPoly::gen(A1, n))
        .with(A2, scaled(A2, spec.alpha));
    let mut rep = Report::new();
    for (lhs, rhs) in standard_rules_generic(n) {
        let name = format!("contraction:{}", alpha.fmt_word(&lhs));
        let rel = (&NCPoly::word(lhs.clone(), n) - &rhs).subst_scale(&spec.mult_l());
        let sub = crate::freealg::apply_map(&map, &rel)?;
        let lead = sub.coeff(&lhs).cloned().unwrap_or_else(|| Series::zero(n));
        let Some(inv) = lead.coeff(0).try_inverse() else {
            rep.push(CheckOutcome::failed(name, "leading coefficient is not a j-monomial"));
            continue;
        };
        let cleared = sub.scale(&Series::constant(inv, n));
        match specialize_poly(&cleared, j) {
            Ok(p) => rep.push(CheckOutcome::from_residual(name, Residual::of_poly(&alg.nf(&p)?))),
            Err(e) => rep.push(CheckOutcome::failed(name, e.to_string())),
        }
    }
    Ok(rep)
}
