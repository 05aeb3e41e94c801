//! Isomorphisms between the su-type algebras and so_q(3;j;X), and
//! candidate-isomorphism search for the contracted special cases.

mod candidate;
mod iso;
mod special;

pub use candidate::{check_candidate_iso, find_isomorphisms, inverse_linear_map, signed_permutations, Candidate};
pub use iso::{build_iso, iso_factor_check, verify_iso_coproducts, verify_iso_relations, IsoSpec};
pub use special::{special_case_report, SPECIAL_CASES};
