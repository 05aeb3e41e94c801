//! The quantum groups Fun(SU_q(2;j)) in the three Hopf/Cayley-Klein
//! couplings.

mod algebra;
mod contraction;
mod hopf;
mod variant;

pub use algebra::{
    build_fun, check_central, fun_alphabet, quantum_det, relations_from_rtt, relations_from_rtt_generic,
    rtt_residual, standard_rules_generic, fun_rules_generic, r_matrix, r_matrix_generic, t_matrix, t_matrix_generic,
    ybe_residual, FunAlgebra, FunMode, RttDerivation, A1, A2, B1, B2,
};
pub use contraction::verify_contraction_fun;
pub use hopf::{antipode_generic, coproduct_generic, hopf_axiom_report_fun, hopf_maps_fun};
pub use variant::{Primitive, Variant, VariantSpec};

