use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::word::{Alphabet, Word};
use crate::scalar::{Scalar, Series};

/// Finite linear combination of words with series coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly<C: Scalar> {
    order: usize,
    terms: BTreeMap<Word, Series<C>>,
}

impl<C: Scalar> NCPoly<C> {
    pub fn zero(order: usize) -> Self {
        NCPoly { order, terms: BTreeMap::new() }
    }

    pub fn one(order: usize) -> Self {
        Self::term(Word::empty(), Series::one(order))
    }

    pub fn constant(s: Series<C>) -> Self {
        Self::term(Word::empty(), s)
    }

    pub fn gen(g: u8, order: usize) -> Self {
        Self::term(Word::letter(g), Series::one(order))
    }

    pub fn word(w: Word, order: usize) -> Self {
        Self::term(w, Series::one(order))
    }

    pub fn term(w: Word, s: Series<C>) -> Self {
        let mut p = Self::zero(s.order());
        p.add_term(w, s);
        p
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Series<C>)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Series<C>)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Series<C>> {
        self.terms.get(w)
    }

    /// Coefficient of `w`, zero when absent.
    pub fn coeff_or_zero(&self, w: &Word) -> Series<C> {
        self.terms.get(w).cloned().unwrap_or_else(|| Series::zero(self.order))
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Add `s·w`, merging with an existing term.
    pub fn add_term(&mut self, w: Word, s: Series<C>) {
        assert_eq!(s.order(), self.order, "truncation order mismatch");
        if s.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(s);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_series(&s);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_poly(&mut self, o: &Self) {
        for (w, s) in &o.terms {
            self.add_term(w.clone(), s.clone());
        }
    }

    pub fn scale(&self, s: &Series<C>) -> Self {
        let mut p = Self::zero(self.order);
        for (w, c) in &self.terms {
            p.add_term(w.clone(), c * s);
        }
        p
    }

    pub fn scale_c(&self, c: &C) -> Self {
        let mut p = Self::zero(self.order);
        for (w, s) in &self.terms {
            p.add_term(w.clone(), s.scale(c));
        }
        p
    }

    /// Substitution `z -> c z` in every coefficient.
    pub fn subst_scale(&self, c: &C) -> Self {
        let mut p = Self::zero(self.order);
        for (w, s) in &self.terms {
            p.add_term(w.clone(), s.subst_scale(c));
        }
        p
    }

    pub fn truncate_above(&self, k: usize) -> Self {
        let mut p = Self::zero(self.order);
        for (w, s) in &self.terms {
            p.add_term(w.clone(), s.truncate_above(k));
        }
        p
    }

    pub fn with_order(&self, order: usize) -> Self {
        let mut p = Self::zero(order);
        for (w, s) in &self.terms {
            p.add_term(w.clone(), s.with_order(order));
        }
        p
    }

    pub fn try_map_coeffs<D: Scalar, E>(
        &self,
        mut f: impl FnMut(&Series<C>) -> Result<Series<D>, E>,
    ) -> Result<NCPoly<D>, E> {
        let mut p = NCPoly::zero(self.order);
        for (w, s) in &self.terms {
            p.add_term(w.clone(), f(s)?);
        }
        Ok(p)
    }

    /// Multi-line rendering, one term per line when long.
    pub fn display(&self, alpha: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, s)| format!("[{s}]·{}", alpha.fmt_word(w)))
            .collect::<Vec<_>>()
            .join("\n  + ")
    }
}

impl<'a, C: Scalar> Add<&'a NCPoly<C>> for &'a NCPoly<C> {
    type Output = NCPoly<C>;
    fn add(self, o: &NCPoly<C>) -> NCPoly<C> {
        let mut p = self.clone();
        p.add_assign_poly(o);
        p
    }
}

impl<'a, C: Scalar> Sub<&'a NCPoly<C>> for &'a NCPoly<C> {
    type Output = NCPoly<C>;
    fn sub(self, o: &NCPoly<C>) -> NCPoly<C> {
        let mut p = self.clone();
        for (w, s) in &o.terms {
            p.add_term(w.clone(), -s);
        }
        p
    }
}

impl<'a, C: Scalar> Mul<&'a NCPoly<C>> for &'a NCPoly<C> {
    type Output = NCPoly<C>;
    fn mul(self, o: &NCPoly<C>) -> NCPoly<C> {
        assert_eq!(self.order, o.order, "truncation order mismatch");
        let mut p = NCPoly::zero(self.order);
        for (w1, s1) in &self.terms {
            let v1 = s1.valuation().unwrap_or(0);
            for (w2, s2) in &o.terms {
                if v1 + s2.valuation().unwrap_or(0) > self.order {
                    continue;
                }
                p.add_term(w1.concat(w2), s1 * s2);
            }
        }
        p
    }
}

impl<C: Scalar> Neg for &NCPoly<C> {
    type Output = NCPoly<C>;
    fn neg(self) -> NCPoly<C> {
        NCPoly { order: self.order, terms: self.terms.iter().map(|(w, s)| (w.clone(), -s)).collect() }
    }
}

impl<C: Scalar> Add for NCPoly<C> {
    type Output = NCPoly<C>;
    fn add(mut self, o: NCPoly<C>) -> NCPoly<C> {
        for (w, s) in o.terms {
            self.add_term(w, s);
        }
        self
    }
}

impl<C: Scalar> Sub for NCPoly<C> {
    type Output = NCPoly<C>;
    fn sub(self, o: NCPoly<C>) -> NCPoly<C> {
        &self - &o
    }
}

impl<C: Scalar> Mul for NCPoly<C> {
    type Output = NCPoly<C>;
    fn mul(self, o: NCPoly<C>) -> NCPoly<C> {
        &self * &o
    }
}

impl<C: Scalar> Neg for NCPoly<C> {
    type Output = NCPoly<C>;
    fn neg(self) -> NCPoly<C> {
        -&self
    }
}
