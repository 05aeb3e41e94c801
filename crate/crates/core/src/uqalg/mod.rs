//! The quantum algebras: su_q(2;j) in H-presentation for each variant and
//! so_q(3;j) for each choice of primitive generator.

mod contraction;
mod so;
mod su;

pub use contraction::{verify_contraction_alg, AlgFamily};
pub use so::{
    build_so, hopf_axiom_report_so, hopf_maps_so, so_alphabet, so_antipode_generic, so_rules_generic, SoAlgebra,
    X01, X02, X12,
};
pub use su::{
    build_su, hopf_axiom_report_su, hopf_maps_su, su_alphabet, su_conjugation_check, su_rules_generic, SuAlgebra, H,
    U1, U2,
};

use crate::freealg::{NCPoly, Word};
use crate::scalar::{inv_factorial, GaussRational, Scalar, Series};

/// `Σ_n c_n (s z)^n g^n / n!` restricted to the parity `parity`
/// (`None` for all n), as a polynomial in generator `g`.
pub(crate) fn exp_of_gen<C: Scalar>(g: u8, scale: &GaussRational, parity: Option<usize>, n: usize) -> NCPoly<C> {
    let mut out = NCPoly::zero(n);
    let mut sk = GaussRational::one();
    let mut w = Word::empty();
    for k in 0..=n {
        if parity.is_none_or(|p| k % 2 == p) {
            let c = &sk * &inv_factorial(k);
            out.add_term(w.clone(), Series::monomial(C::from_gauss(c), k, n));
        }
        sk = &sk * scale;
        w = w.concat(&Word::letter(g));
    }
    out
}
