use std::collections::HashMap;
use std::sync::Arc;

use super::poly::NCPoly;
use super::tensor::TensorPoly;
use super::word::{Alphabet, Word};
use super::FreeAlgError;
use crate::scalar::{Scalar, Series};

/// Codomain of a generator map.
pub trait MapTarget<C: Scalar>: Clone {
    fn zero_like(&self) -> Self;
    fn mul_target(&self, o: &Self) -> Self;
    fn add_scaled(&mut self, o: &Self, c: &Series<C>);
}

impl<C: Scalar> MapTarget<C> for NCPoly<C> {
    fn zero_like(&self) -> Self {
        NCPoly::zero(self.order())
    }
    fn mul_target(&self, o: &Self) -> Self {
        self * o
    }
    fn add_scaled(&mut self, o: &Self, c: &Series<C>) {
        self.add_assign_poly(&o.scale(c));
    }
}

impl<C: Scalar> MapTarget<C> for TensorPoly<C> {
    fn zero_like(&self) -> Self {
        TensorPoly::zero(self.arity(), self.order())
    }
    fn mul_target(&self, o: &Self) -> Self {
        self * o
    }
    fn add_scaled(&mut self, o: &Self, c: &Series<C>) {
        self.add_assign_tensor(&o.scale(c));
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Hom,
    AntiHom,
}

/// Images of generators, extended multiplicatively (in order for a
/// homomorphism, reversed for an antihomomorphism).
#[derive(Clone, Debug)]
pub struct GenMap<T> {
    pub kind: MapKind,
    pub source: Arc<Alphabet>,
    unit: T,
    images: Vec<Option<T>>,
}

impl<T: Clone> GenMap<T> {
    /// `unit` is the image of the empty word.
    pub fn new(kind: MapKind, source: Arc<Alphabet>, unit: T) -> Self {
        let n = source.len();
        GenMap { kind, source, unit, images: vec![None; n] }
    }

    pub fn set(&mut self, g: u8, image: T) {
        self.images[g as usize] = Some(image);
    }

    pub fn with(mut self, g: u8, image: T) -> Self {
        self.set(g, image);
        self
    }

    pub fn image(&self, g: u8) -> Option<&T> {
        self.images[g as usize].as_ref()
    }

    pub fn unit(&self) -> &T {
        &self.unit
    }

    /// Image of a word, reducing after every multiplication.
    pub fn word_image<C: Scalar>(
        &self,
        w: &Word,
        reduce: &dyn Fn(T) -> Result<T, FreeAlgError>,
        memo: &mut HashMap<Word, T>,
    ) -> Result<T, FreeAlgError>
    where
        T: MapTarget<C>,
    {
        if w.is_empty() {
            return Ok(self.unit.clone());
        }
        if let Some(t) = memo.get(w) {
            return Ok(t.clone());
        }
        let l = w.letters();
        let last = l[l.len() - 1];
        let img = self
            .image(last)
            .ok_or_else(|| FreeAlgError::MissingImage(self.source.name(last).to_string()))?;
        let out = if l.len() == 1 {
            img.clone()
        } else {
            let head = self.word_image(&Word::from_slice(&l[..l.len() - 1]), reduce, memo)?;
            let prod = match self.kind {
                MapKind::Hom => head.mul_target(img),
                MapKind::AntiHom => img.mul_target(&head),
            };
            reduce(prod)?
        };
        memo.insert(w.clone(), out.clone());
        Ok(out)
    }

    /// Linear extension with a reduction applied to every partial product.
    pub fn apply_with<C: Scalar>(
        &self,
        p: &NCPoly<C>,
        reduce: &dyn Fn(T) -> Result<T, FreeAlgError>,
    ) -> Result<T, FreeAlgError>
    where
        T: MapTarget<C>,
    {
        let mut memo = HashMap::new();
        let mut acc = self.unit.zero_like();
        for (w, c) in p.terms() {
            let img = self.word_image(w, reduce, &mut memo)?;
            acc.add_scaled(&img, c);
        }
        reduce(acc)
    }
}

/// Linear extension of `m` to `p`, without reduction.
pub fn apply_map<C: Scalar, T: MapTarget<C>>(m: &GenMap<T>, p: &NCPoly<C>) -> Result<T, FreeAlgError> {
    m.apply_with(p, &|t| Ok(t))
}
