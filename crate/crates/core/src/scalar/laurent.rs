use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::dual::{DualCoeff, JAssign, JUnit};
use super::gauss::{owned_ops, GaussRational};
use super::{Scalar, ScalarError};

/// Exponent pair `(e1, e2)` standing for `j1^e1 j2^e2`.
pub type JMonomial = (i32, i32);

/// Laurent polynomial in the symbols j1, j2 over Q(i).
///
/// Structure constants are derived with j kept symbolic, monomials are
/// cancelled, and only then is a concrete `JAssign` substituted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct JLaurent {
    terms: BTreeMap<JMonomial, GaussRational>,
}

impl JLaurent {
    pub fn constant(c: GaussRational) -> Self {
        Self::term(c, (0, 0))
    }

    pub fn monomial(m: JMonomial) -> Self {
        Self::term(GaussRational::one(), m)
    }

    pub fn term(c: GaussRational, m: JMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        JLaurent { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&JMonomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single monomial of a one-term element.
    pub fn as_monomial(&self) -> Option<(JMonomial, &GaussRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    fn insert_add(&mut self, m: JMonomial, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(GaussRational::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Assign dual or unit values to j1, j2.
    pub fn specialize(&self, j: &JAssign) -> Result<DualCoeff, ScalarError> {
        let mut out = DualCoeff::default();
        for (&(e1, e2), c) in &self.terms {
            let f1 = factor(j.j1, e1, 1);
            let f2 = factor(j.j2, e2, 2);
            let (Some(m1), Some(m2)) = (f1, f2) else {
                return Err(ScalarError::IllDefined {
                    monomial: fmt_monomial((e1, e2)),
                    assign: j.label(),
                });
            };
            // m1, m2 are basis masks or None for a vanishing power.
            if let (Some(b1), Some(b2)) = (m1, m2) {
                let k = b1 | b2;
                out.c[k] = &out.c[k] + c;
            }
        }
        Ok(out)
    }
}

/// Basis mask for `j_k^e`: `Some(Some(mask))` for a nonzero value,
/// `Some(None)` for zero, `None` when undefined.
fn factor(u: JUnit, e: i32, bit: usize) -> Option<Option<usize>> {
    match u {
        JUnit::One => Some(Some(0)),
        JUnit::Dual => match e {
            0 => Some(Some(0)),
            1 => Some(Some(bit)),
            e if e >= 2 => Some(None),
            _ => None,
        },
    }
}

fn fmt_monomial((e1, e2): JMonomial) -> String {
    let mut s = String::new();
    for (name, e) in [("j1", e1), ("j2", e2)] {
        match e {
            0 => {}
            1 => s.push_str(name),
            e => s.push_str(&format!("{name}^{e}")),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

impl<'a> Add<&'a JLaurent> for &'a JLaurent {
    type Output = JLaurent;
    fn add(self, o: &JLaurent) -> JLaurent {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.insert_add(*m, c.clone());
        }
        r
    }
}

impl<'a> Sub<&'a JLaurent> for &'a JLaurent {
    type Output = JLaurent;
    fn sub(self, o: &JLaurent) -> JLaurent {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.insert_add(*m, -c);
        }
        r
    }
}

impl<'a> Mul<&'a JLaurent> for &'a JLaurent {
    type Output = JLaurent;
    fn mul(self, o: &JLaurent) -> JLaurent {
        let mut r = JLaurent::default();
        for (&(a1, a2), x) in &self.terms {
            for (&(b1, b2), y) in &o.terms {
                r.insert_add((a1 + b1, a2 + b2), x * y);
            }
        }
        r
    }
}

impl Neg for &JLaurent {
    type Output = JLaurent;
    fn neg(self) -> JLaurent {
        JLaurent { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

owned_ops!(JLaurent);

impl fmt::Display for JLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *m == (0, 0) {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", fmt_monomial(*m))?;
            } else {
                write!(f, "{c}{}", fmt_monomial(*m))?;
            }
        }
        Ok(())
    }
}

impl Scalar for JLaurent {
    fn zero() -> Self {
        JLaurent::default()
    }
    fn one() -> Self {
        JLaurent::constant(GaussRational::one())
    }
    fn from_gauss(c: GaussRational) -> Self {
        JLaurent::constant(c)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        let mut r = JLaurent::default();
        for (m, c) in &self.terms {
            r.insert_add(*m, c * g);
        }
        r
    }
    /// Only single-term elements are units.
    fn try_inverse(&self) -> Option<Self> {
        let ((e1, e2), c) = self.as_monomial()?;
        Some(JLaurent::term(c.inverse()?, (-e1, -e2)))
    }
}
