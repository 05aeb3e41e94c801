//! Exact coefficient arithmetic: Gaussian rationals, the dual-number algebra
//! D_2, Laurent polynomials in the contraction parameters, and truncated
//! power series.

mod dual;
mod gauss;
mod laurent;
mod series;

use std::fmt;

pub use dual::{DualCoeff, JAssign, JUnit};
pub use gauss::GaussRational;
pub use laurent::{JLaurent, JMonomial};
pub use series::{
    inv_factorial, series_sqrt_one_plus, structure_fn, JSeries, Series, StructureFn, ZSeries,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has nonzero constant term")]
    NonzeroConstant,
    #[error("element is not a unit")]
    NotUnit,
    #[error("j-monomial {monomial} has no value at j = ({assign})")]
    IllDefined { monomial: String, assign: String },
}

/// Coefficient ring used inside series and polynomials.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_gauss(c: GaussRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_gauss(&self, c: &GaussRational) -> Self;
    fn try_inverse(&self) -> Option<Self>;

    fn add_assign_ref(&mut self, o: &Self) {
        *self = self.add_ref(o);
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl Scalar for GaussRational {
    fn zero() -> Self {
        GaussRational::zero()
    }
    fn one() -> Self {
        GaussRational::one()
    }
    fn from_gauss(c: GaussRational) -> Self {
        c
    }
    fn is_zero(&self) -> bool {
        GaussRational::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_gauss(&self, c: &GaussRational) -> Self {
        self * c
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}
