use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::gauss::{owned_ops, GaussRational};
use super::Scalar;

/// Element of D_2 over Q(i): `c[0] + c[1] ι₁ + c[2] ι₂ + c[3] ι₁ι₂`.
///
/// Component index is a bitmask over (ι₁, ι₂), so a product of basis
/// elements is nonzero exactly when the masks are disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DualCoeff {
    pub c: [GaussRational; 4],
}

impl DualCoeff {
    pub fn new(c0: GaussRational, c1: GaussRational, c2: GaussRational, c12: GaussRational) -> Self {
        DualCoeff { c: [c0, c1, c2, c12] }
    }

    pub fn scalar(c: GaussRational) -> Self {
        let mut d = DualCoeff::default();
        d.c[0] = c;
        d
    }

    pub fn int(n: i64) -> Self {
        Self::scalar(GaussRational::int(n))
    }

    pub fn iota1() -> Self {
        let mut d = DualCoeff::default();
        d.c[1] = GaussRational::one();
        d
    }

    pub fn iota2() -> Self {
        let mut d = DualCoeff::default();
        d.c[2] = GaussRational::one();
        d
    }

    pub fn iota12() -> Self {
        let mut d = DualCoeff::default();
        d.c[3] = GaussRational::one();
        d
    }

    pub fn c0(&self) -> &GaussRational {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(GaussRational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(GaussRational::is_zero)
    }

    /// Inverse exists iff the real-number part `c0` is nonzero.
    pub fn inverse(&self) -> Option<Self> {
        let inv0 = self.c[0].inverse()?;
        // x = c0 (1 + n) with n nilpotent, n^3 = 0.
        let n = DualCoeff::new(
            GaussRational::zero(),
            &self.c[1] * &inv0,
            &self.c[2] * &inv0,
            &self.c[3] * &inv0,
        );
        let n2 = &n * &n;
        let one_plus = &(&DualCoeff::int(1) - &n) + &n2;
        Some(one_plus.mul_gauss(&inv0))
    }
}

impl<'a> Add<&'a DualCoeff> for &'a DualCoeff {
    type Output = DualCoeff;
    fn add(self, o: &DualCoeff) -> DualCoeff {
        DualCoeff { c: std::array::from_fn(|k| &self.c[k] + &o.c[k]) }
    }
}

impl<'a> Sub<&'a DualCoeff> for &'a DualCoeff {
    type Output = DualCoeff;
    fn sub(self, o: &DualCoeff) -> DualCoeff {
        DualCoeff { c: std::array::from_fn(|k| &self.c[k] - &o.c[k]) }
    }
}

impl<'a> Mul<&'a DualCoeff> for &'a DualCoeff {
    type Output = DualCoeff;
    fn mul(self, o: &DualCoeff) -> DualCoeff {
        let mut r = DualCoeff::default();
        for a in 0..4 {
            if self.c[a].is_zero() {
                continue;
            }
            for b in 0..4 {
                if a & b == 0 && !o.c[b].is_zero() {
                    r.c[a | b] = &r.c[a | b] + &(&self.c[a] * &o.c[b]);
                }
            }
        }
        r
    }
}

impl Neg for &DualCoeff {
    type Output = DualCoeff;
    fn neg(self) -> DualCoeff {
        DualCoeff { c: std::array::from_fn(|k| -&self.c[k]) }
    }
}

owned_ops!(DualCoeff);

impl fmt::Display for DualCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const BASIS: [&str; 4] = ["", "ι1", "ι2", "ι1ι2"];
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", BASIS[k])?;
            } else {
                write!(f, "{c}{}", BASIS[k])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Scalar for DualCoeff {
    fn zero() -> Self {
        DualCoeff::default()
    }
    fn one() -> Self {
        DualCoeff::int(1)
    }
    fn from_gauss(c: GaussRational) -> Self {
        DualCoeff::scalar(c)
    }
    fn is_zero(&self) -> bool {
        DualCoeff::is_zero(self)
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
    fn mul_gauss(&self, g: &GaussRational) -> Self {
        DualCoeff { c: std::array::from_fn(|k| &self.c[k] * g) }
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}

/// Value of a single contraction parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JUnit {
    One,
    Dual,
}

/// A concrete choice `j_k ∈ {1, ι_k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JAssign {
    pub j1: JUnit,
    pub j2: JUnit,
}

impl JAssign {
    pub const STANDARD: JAssign = JAssign { j1: JUnit::One, j2: JUnit::One };

    pub fn new(j1: JUnit, j2: JUnit) -> Self {
        JAssign { j1, j2 }
    }

    /// The four assignments in the order (1,1), (ι₁,1), (1,ι₂), (ι₁,ι₂).
    pub fn all() -> [JAssign; 4] {
        use JUnit::*;
        [
            JAssign::new(One, One),
            JAssign::new(Dual, One),
            JAssign::new(One, Dual),
            JAssign::new(Dual, Dual),
        ]
    }

    pub fn j1(&self) -> DualCoeff {
        match self.j1 {
            JUnit::One => DualCoeff::int(1),
            JUnit::Dual => DualCoeff::iota1(),
        }
    }

    pub fn j2(&self) -> DualCoeff {
        match self.j2 {
            JUnit::One => DualCoeff::int(1),
            JUnit::Dual => DualCoeff::iota2(),
        }
    }

    pub fn has_dual(&self) -> bool {
        self.j1 == JUnit::Dual || self.j2 == JUnit::Dual
    }

    /// CLI spelling: `1,1`, `i1,1`, `1,i2`, `i1,i2`.
    pub fn label(&self) -> String {
        let a = if self.j1 == JUnit::Dual { "i1" } else { "1" };
        let b = if self.j2 == JUnit::Dual { "i2" } else { "1" };
        format!("{a},{b}")
    }
}

impl fmt::Display for JAssign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for JAssign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| format!("expected `j1,j2`, got `{s}`"))?;
        let j1 = match a.trim() {
            "1" => JUnit::One,
            "i1" => JUnit::Dual,
            other => return Err(format!("bad j1 token `{other}` (use 1 or i1)")),
        };
        let j2 = match b.trim() {
            "1" => JUnit::One,
            "i2" => JUnit::Dual,
            other => return Err(format!("bad j2 token `{other}` (use 1 or i2)")),
        };
        Ok(JAssign { j1, j2 })
    }
}
