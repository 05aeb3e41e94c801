use std::fmt;
use std::sync::Arc;

use super::so::{build_so, so_alphabet, so_rules_with};
use super::su::{build_su, su_alphabet, su_rules_generic, H, U1, U2};
use crate::error::Result;
use crate::freealg::{apply_map, Alphabet, GenMap, MapKind, NCPoly, RewriteSystem, Word};
use crate::funq::{Primitive, Variant, VariantSpec};
use crate::report::{CheckOutcome, Report, Residual};
use crate::scalar::{DualCoeff, JAssign, JLaurent, JMonomial, Scalar, Series};

/// Which quantum algebra a contraction check targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgFamily {
    Su(Variant),
    So(Primitive),
}

impl fmt::Display for AlgFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgFamily::Su(v) => write!(f, "su/{}", v.name()),
            AlgFamily::So(p) => write!(f, "so/{}", p.name()),
        }
    }
}

type Setup = (Arc<Alphabet>, Vec<(Word, NCPoly<JLaurent>)>, Vec<(u8, JMonomial)>, JMonomial, Arc<RewriteSystem<DualCoeff>>);

fn inv(m: JMonomial) -> JLaurent {
    JLaurent::monomial((-m.0, -m.1))
}

/// Substitute `X̃ = X/J_X`, `ẑ̃ = J_P ẑ` into the standard so relations, or
/// `H̃ = H/J`, `ũ_k = u_k/γ_k`, `z̃ = Jz` into the standard su relations;
/// clear the leading j-monomial, specialize and reduce in the j-algebra.
pub fn verify_contraction_alg(family: AlgFamily, j: &JAssign, n: usize) -> Result<Report> {
    let one = (0, 0);
    let (alpha, rules, scalings, mult, target): Setup =
        match family {
            AlgFamily::Su(v) => {
                let spec = v.spec();
                let standard = VariantSpec { mult: one, alpha: one, beta: [one; 2], gamma: [one; 2], ..spec };
                let alg = build_su(v, j, n)?;
                let sc = vec![(U1, spec.gamma[0]), (U2, spec.gamma[1]), (H, spec.mult)];
                (su_alphabet(), su_rules_generic(&standard, n), sc, spec.mult, alg.system)
            }
            AlgFamily::So(p) => {
                let c = JLaurent::one();
                let alg = build_so(p, j, n)?;
                let sc = Primitive::ALL.iter().map(|q| (q.index(), q.multiplier())).collect();
                (so_alphabet(), so_rules_with(p, n, [c.clone(), c.clone(), c]), sc, p.multiplier(), alg.system)
            }
        };
    contract(&alpha, rules, &scalings, mult, j, n, &target)
}

fn contract(
    alpha: &Arc<Alphabet>,
    rules: Vec<(Word, NCPoly<JLaurent>)>,
    scalings: &[(u8, JMonomial)],
    mult: JMonomial,
    j: &JAssign,
    n: usize,
    target: &RewriteSystem<DualCoeff>,
) -> Result<Report> {
    let mut map = GenMap::new(MapKind::Hom, alpha.clone(), NCPoly::<JLaurent>::one(n));
    for &(g, m) in scalings {
        map.set(g, NCPoly::term(Word::letter(g), Series::constant(inv(m), n)));
    }
    let mut rep = Report::new();
    for (lhs, rhs) in rules {
        let name = format!("contraction:{}", alpha.fmt_word(&lhs));
        let rel = (&NCPoly::word(lhs.clone(), n) - &rhs).subst_scale(&JLaurent::monomial(mult));
        let sub = apply_map(&map, &rel)?;
        let lead = sub.coeff(&lhs).cloned().unwrap_or_else(|| Series::zero(n));
        let Some(li) = lead.coeff(0).try_inverse() else {
            rep.push(CheckOutcome::failed(name, "leading coefficient is not a j-monomial"));
            continue;
        };
        let cleared = sub.scale(&Series::constant(li, n));
        match cleared.try_map_coeffs(|s| s.specialize(j)) {
            Ok(p) => rep.push(CheckOutcome::from_residual(name, Residual::of_poly(&target.normal_form(&p)?))),
            Err(e) => rep.push(CheckOutcome::failed(name, e.to_string())),
        }
    }
    Ok(rep)
}
