//! Duality pairing between the L-symbol algebra (t, t⁻¹, u₁, u₂) and
//! Fun(SU_q(2;j)).

mod checks;
mod table;
mod word;

pub use checks::{l_relations, verify_ideal_annihilation, verify_lt_pairing, verify_relation_functionals};
pub use table::{l_alphabet, pair_gen, GenericTable, PairingTable, T, TI, U1, U2};
pub use word::{pair_word, Pairing, Route};
