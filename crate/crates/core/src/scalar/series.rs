use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One};

use super::dual::DualCoeff;
use super::gauss::GaussRational;
use super::laurent::JLaurent;
use super::{Scalar, ScalarError};

/// Power series in the deformation variable truncated modulo `z^{N+1}`.
///
/// Binary operators panic on mismatched orders; the `try_*` methods report
/// the mismatch instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

pub type ZSeries = Series<DualCoeff>;
pub type JSeries = Series<JLaurent>;

impl<C: Scalar> Series<C> {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c z^k`, zero when `k > order`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_gauss(c: GaussRational, order: usize) -> Self {
        Self::constant(C::from_gauss(c), order)
    }

    /// Panics on an empty coefficient vector.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check(&self, o: &Self) -> Result<(), ScalarError> {
        if self.order() != o.order() {
            return Err(ScalarError::OrderMismatch { left: self.order(), right: o.order() });
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, ScalarError> {
        self.check(o)?;
        Ok(Series { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add_ref(b)).collect() })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, ScalarError> {
        self.check(o)?;
        Ok(Series { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub_ref(b)).collect() })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, ScalarError> {
        self.check(o)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in o.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + k].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    pub fn add_assign_series(&mut self, o: &Self) {
        assert_eq!(self.order(), o.order(), "truncation order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                a.add_assign_ref(b);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect() }
    }

    pub fn scale_gauss(&self, c: &GaussRational) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a.mul_gauss(c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(ScalarError::NotUnit)?;
        let n = self.order();
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                acc.add_assign_ref(&self.coeffs[k].mul_ref(&b[m - k]));
            }
            b.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(Series { coeffs: b })
    }

    /// Substitution `z -> c z`: coefficient k is multiplied by `c^k`.
    pub fn subst_scale(&self, c: &C) -> Self {
        let mut p = C::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.mul_ref(&p));
            p = p.mul_ref(c);
        }
        Series { coeffs: out }
    }

    /// Zero every coefficient above index `k`.
    pub fn truncate_above(&self, k: usize) -> Self {
        let mut s = self.clone();
        for c in s.coeffs.iter_mut().skip(k + 1) {
            *c = C::zero();
        }
        s
    }

    /// Same series at a different truncation order.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs: Vec<C> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, C::zero());
        Series { coeffs }
    }

    pub fn try_map<D: Scalar, E>(&self, mut f: impl FnMut(&C) -> Result<D, E>) -> Result<Series<D>, E> {
        Ok(Series { coeffs: self.coeffs.iter().map(&mut f).collect::<Result<_, _>>()? })
    }
}

impl JSeries {
    pub fn specialize(&self, j: &super::JAssign) -> Result<ZSeries, ScalarError> {
        self.try_map(|c| c.specialize(j))
    }
}

impl<'a, C: Scalar> Add<&'a Series<C>> for &'a Series<C> {
    type Output = Series<C>;
    fn add(self, o: &Series<C>) -> Series<C> {
        self.try_add(o).expect("series add")
    }
}

impl<'a, C: Scalar> Sub<&'a Series<C>> for &'a Series<C> {
    type Output = Series<C>;
    fn sub(self, o: &Series<C>) -> Series<C> {
        self.try_sub(o).expect("series sub")
    }
}

impl<'a, C: Scalar> Mul<&'a Series<C>> for &'a Series<C> {
    type Output = Series<C>;
    fn mul(self, o: &Series<C>) -> Series<C> {
        self.try_mul(o).expect("series mul")
    }
}

impl<C: Scalar> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        Series { coeffs: self.coeffs.iter().map(C::neg_ref).collect() }
    }
}

impl<C: Scalar> Add for Series<C> {
    type Output = Series<C>;
    fn add(self, o: Series<C>) -> Series<C> {
        &self + &o
    }
}

impl<C: Scalar> Sub for Series<C> {
    type Output = Series<C>;
    fn sub(self, o: Series<C>) -> Series<C> {
        &self - &o
    }
}

impl<C: Scalar> Mul for Series<C> {
    type Output = Series<C>;
    fn mul(self, o: Series<C>) -> Series<C> {
        &self * &o
    }
}

impl<C: Scalar> Neg for Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        -&self
    }
}

impl<C: Scalar> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let cs = if cs.contains(" + ") { format!("({cs})") } else { cs };
            match k {
                0 => write!(f, "{cs}")?,
                1 => write!(f, "{cs}·z")?,
                _ => write!(f, "{cs}·z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureFn {
    Exp,
    Cosh,
    Sinh,
    /// `sinh(s J z) / J`, expanded without dividing by J.
    Sinhc,
}

/// `1/k!` as an exact rational.
pub fn inv_factorial(k: usize) -> GaussRational {
    let mut f = BigInt::one();
    for m in 2..=k {
        f *= BigInt::from(m);
    }
    GaussRational::new(BigRational::new(BigInt::one(), f), BigRational::from_integer(BigInt::from(0)))
}

/// The transcendental structure constants as exact truncated series in z,
/// with multiplier `mult` (the variant's J) and argument scale `scale`.
pub fn structure_fn<C: Scalar>(kind: StructureFn, scale: &GaussRational, mult: &C, order: usize) -> Series<C> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut sk = GaussRational::one();
    let mut jk = C::one();
    for k in 0..=order {
        let base = || sk.clone().mul_ref(&inv_factorial(k));
        let c = match kind {
            StructureFn::Exp => jk.mul_gauss(&base()),
            StructureFn::Cosh if k % 2 == 0 => jk.mul_gauss(&base()),
            StructureFn::Sinh if k % 2 == 1 => jk.mul_gauss(&base()),
            // J^{k-1} s^k / k!
            StructureFn::Sinhc if k % 2 == 1 => mult.pow((k - 1) as u32).mul_gauss(&base()),
            _ => C::zero(),
        };
        coeffs.push(c);
        sk = &sk * scale;
        jk = jk.mul_ref(mult);
    }
    Series { coeffs }
}

/// `sqrt(1 + s)` by the binomial series; `s` must have no constant term.
pub fn series_sqrt_one_plus<C: Scalar>(s: &Series<C>) -> Result<Series<C>, ScalarError> {
    if !s.coeff(0).is_zero() {
        return Err(ScalarError::NonzeroConstant);
    }
    let n = s.order();
    let mut out = Series::one(n);
    let mut power = Series::one(n);
    // binom(1/2, k) built incrementally.
    let half = GaussRational::ratio(1, 2);
    let mut binom = GaussRational::one();
    for k in 1..=n {
        let num = &half - &GaussRational::int(k as i64 - 1);
        binom = &(&binom * &num) * &GaussRational::ratio(1, k as i64);
        power = &power * s;
        if power.is_zero() {
            break;
        }
        out = &out + &power.scale_gauss(&binom);
    }
    Ok(out)
}
