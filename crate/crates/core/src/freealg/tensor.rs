use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::NCPoly;
use super::rewrite::RewriteSystem;
use super::word::{Alphabet, Word};
use super::FreeAlgError;
use crate::scalar::{Scalar, Series};

/// Element of a tensor power `A^{⊗k}` of a free algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly<C: Scalar> {
    arity: usize,
    order: usize,
    terms: BTreeMap<Vec<Word>, Series<C>>,
}

impl<C: Scalar> TensorPoly<C> {
    pub fn zero(arity: usize, order: usize) -> Self {
        TensorPoly { arity, order, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize, order: usize) -> Self {
        let mut t = Self::zero(arity, order);
        t.add_term(vec![Word::empty(); arity], Series::one(order));
        t
    }

    /// Arity-0 tensor holding a scalar.
    pub fn scalar(s: Series<C>) -> Self {
        let mut t = Self::zero(0, s.order());
        t.add_term(Vec::new(), s);
        t
    }

    /// `p_1 ⊗ ... ⊗ p_k`.
    pub fn pure(factors: &[&NCPoly<C>]) -> Self {
        let order = factors.first().map(|p| p.order()).unwrap_or(0);
        let mut t = Self::one(0, order);
        for p in factors {
            t = t.append(&Self::from_poly(p));
        }
        t
    }

    pub fn from_poly(p: &NCPoly<C>) -> Self {
        let mut t = Self::zero(1, p.order());
        for (w, s) in p.terms() {
            t.add_term(vec![w.clone()], s.clone());
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Series<C>)> {
        self.terms.iter()
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

    pub fn add_term(&mut self, key: Vec<Word>, s: Series<C>) {
        assert_eq!(key.len(), self.arity, "tensor arity mismatch");
        assert_eq!(s.order(), self.order, "truncation order mismatch");
        if s.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn add_assign_tensor(&mut self, o: &Self) {
        assert_eq!(self.arity, o.arity, "tensor arity mismatch");
        for (k, s) in &o.terms {
            self.add_term(k.clone(), s.clone());
        }
    }

    pub fn scale(&self, s: &Series<C>) -> Self {
        let mut t = Self::zero(self.arity, self.order);
        for (k, c) in &self.terms {
            t.add_term(k.clone(), c * s);
        }
        t
    }

    /// Outer product: `(x) ⊗ (y)` with arities added.
    pub fn append(&self, o: &Self) -> Self {
        let mut t = Self::zero(self.arity + o.arity, self.order);
        for (k1, s1) in &self.terms {
            for (k2, s2) in &o.terms {
                let mut k = k1.clone();
                k.extend(k2.iter().cloned());
                t.add_term(k, s1 * s2);
            }
        }
        t
    }

    /// Factorwise product `(x⊗y)(u⊗v) = xu⊗yv`.
    pub fn try_mul(&self, o: &Self) -> Result<Self, FreeAlgError> {
        if self.arity != o.arity {
            return Err(FreeAlgError::ArityMismatch { left: self.arity, right: o.arity });
        }
        let mut t = Self::zero(self.arity, self.order);
        for (k1, s1) in &self.terms {
            let v1 = s1.valuation().unwrap_or(0);
            for (k2, s2) in &o.terms {
                if v1 + s2.valuation().unwrap_or(0) > self.order {
                    continue;
                }
                let k = k1.iter().zip(k2).map(|(a, b)| a.concat(b)).collect();
                t.add_term(k, s1 * s2);
            }
        }
        Ok(t)
    }

    /// Swap the two factors of an arity-2 tensor.
    pub fn flip(&self) -> Self {
        assert_eq!(self.arity, 2, "flip needs arity 2");
        let mut t = Self::zero(2, self.order);
        for (k, s) in &self.terms {
            t.add_term(vec![k[1].clone(), k[0].clone()], s.clone());
        }
        t
    }

    /// Concatenate all factors into one word (the multiplication map).
    pub fn multiply_out(&self) -> NCPoly<C> {
        let mut p = NCPoly::zero(self.order);
        for (k, s) in &self.terms {
            let w = k.iter().fold(Word::empty(), |a, b| a.concat(b));
            p.add_term(w, s.clone());
        }
        p
    }

    /// Arity-1 tensor as a polynomial.
    pub fn to_poly(&self) -> NCPoly<C> {
        assert_eq!(self.arity, 1, "to_poly needs arity 1");
        self.multiply_out()
    }

    /// Arity-0 tensor as a scalar.
    pub fn to_scalar(&self) -> Series<C> {
        assert_eq!(self.arity, 0, "to_scalar needs arity 0");
        self.terms.values().next().cloned().unwrap_or_else(|| Series::zero(self.order))
    }

    /// Replace factor `slot` by the tensor `f(word)`, splicing arities.
    pub fn expand_factor<E>(
        &self,
        slot: usize,
        mut f: impl FnMut(&Word) -> Result<TensorPoly<C>, E>,
    ) -> Result<TensorPoly<C>, E> {
        let mut cache: BTreeMap<Word, TensorPoly<C>> = BTreeMap::new();
        let mut out: Option<TensorPoly<C>> = None;
        for (k, s) in &self.terms {
            if !cache.contains_key(&k[slot]) {
                cache.insert(k[slot].clone(), f(&k[slot])?);
            }
            let img = &cache[&k[slot]];
            let acc = out.get_or_insert_with(|| TensorPoly::zero(self.arity - 1 + img.arity, self.order));
            for (ik, is) in &img.terms {
                let mut nk: Vec<Word> = k[..slot].to_vec();
                nk.extend(ik.iter().cloned());
                nk.extend(k[slot + 1..].iter().cloned());
                acc.add_term(nk, s * is);
            }
        }
        Ok(out.unwrap_or_else(|| TensorPoly::zero(self.arity, self.order)))
    }

    /// Normal form in every factor.
    pub fn normal_form(&self, rs: &RewriteSystem<C>) -> Result<Self, FreeAlgError> {
        let mut nf_cache: BTreeMap<Word, NCPoly<C>> = BTreeMap::new();
        let mut out = Self::zero(self.arity, self.order);
        for (k, s) in &self.terms {
            let mut partial = Self::scalar(s.clone());
            for w in k {
                if !nf_cache.contains_key(w) {
                    nf_cache.insert(w.clone(), rs.normal_form_word(w)?);
                }
                partial = partial.append(&Self::from_poly(&nf_cache[w]));
                if partial.is_zero() {
                    break;
                }
            }
            if !partial.is_zero() {
                out.add_assign_tensor(&partial);
            }
        }
        Ok(out)
    }

    pub fn display(&self, alpha: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(k, s)| {
                let f: Vec<String> = k.iter().map(|w| alpha.fmt_word(w)).collect();
                format!("[{s}]·{}", f.join(" ⊗ "))
            })
            .collect::<Vec<_>>()
            .join("\n  + ")
    }
}

impl<'a, C: Scalar> Add<&'a TensorPoly<C>> for &'a TensorPoly<C> {
    type Output = TensorPoly<C>;
    fn add(self, o: &TensorPoly<C>) -> TensorPoly<C> {
        let mut t = self.clone();
        t.add_assign_tensor(o);
        t
    }
}

impl<'a, C: Scalar> Sub<&'a TensorPoly<C>> for &'a TensorPoly<C> {
    type Output = TensorPoly<C>;
    fn sub(self, o: &TensorPoly<C>) -> TensorPoly<C> {
        let mut t = self.clone();
        t.add_assign_tensor(&-o);
        t
    }
}

impl<'a, C: Scalar> Mul<&'a TensorPoly<C>> for &'a TensorPoly<C> {
    type Output = TensorPoly<C>;
    fn mul(self, o: &TensorPoly<C>) -> TensorPoly<C> {
        self.try_mul(o).expect("tensor arity mismatch")
    }
}

impl<C: Scalar> Neg for &TensorPoly<C> {
    type Output = TensorPoly<C>;
    fn neg(self) -> TensorPoly<C> {
        TensorPoly {
            arity: self.arity,
            order: self.order,
            terms: self.terms.iter().map(|(k, s)| (k.clone(), -s)).collect(),
        }
    }
}
