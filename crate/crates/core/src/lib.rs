//! Exact symbolic engine for the Cayley-Klein quantum groups
//! Fun(SU_q(2;j)), their dual quantum algebras su_q(2;j) and so_q(3;j),
//! and the identities relating them.

pub mod error;
pub mod exec;
pub mod hopf;
pub mod scalar;
pub mod freealg;
pub mod report;
pub mod linalg;
pub mod funq;
pub mod uqalg;
pub mod pairing;
pub mod isomap;

pub use error::{Error, Result};
