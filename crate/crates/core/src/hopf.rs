//! Hopf-structure data shared by the group and algebra families, with the
//! generic axiom checks.

use std::sync::Arc;

use crate::error::Result;
use crate::freealg::{GenMap, MapKind, NCPoly, RewriteSystem, TensorPoly, Word};
use crate::report::{CheckOutcome, Residual};
use crate::scalar::{DualCoeff, ZSeries};

pub type Poly = NCPoly<DualCoeff>;
pub type Tensor = TensorPoly<DualCoeff>;

/// Coproduct, counit and antipode on generators of a presented algebra.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub system: Arc<RewriteSystem<DualCoeff>>,
    pub delta: GenMap<Tensor>,
    pub counit: Vec<ZSeries>,
    pub antipode: GenMap<Poly>,
}

impl HopfData {
    pub fn new(system: Arc<RewriteSystem<DualCoeff>>, delta: Vec<Tensor>, counit: Vec<ZSeries>, antipode: Vec<Poly>) -> Self {
        let alpha = system.alphabet().clone();
        let n = system.order();
        let mut d = GenMap::new(MapKind::Hom, alpha.clone(), TensorPoly::one(2, n));
        let mut s = GenMap::new(MapKind::AntiHom, alpha, NCPoly::one(n));
        for (g, t) in delta.into_iter().enumerate() {
            d.set(g as u8, t);
        }
        for (g, p) in antipode.into_iter().enumerate() {
            s.set(g as u8, p);
        }
        HopfData { system, delta: d, counit, antipode: s }
    }

    pub fn order(&self) -> usize {
        self.system.order()
    }

    pub fn ngens(&self) -> u8 {
        self.system.alphabet().len() as u8
    }

    pub fn gen(&self, g: u8) -> Poly {
        NCPoly::gen(g, self.order())
    }

    pub fn nf(&self, p: &Poly) -> Result<Poly> {
        Ok(self.system.normal_form(p)?)
    }

    pub fn nf_tensor(&self, t: &Tensor) -> Result<Tensor> {
        Ok(t.normal_form(&self.system)?)
    }

    pub fn delta_of(&self, p: &Poly) -> Result<Tensor> {
        let rs = self.system.clone();
        Ok(self.delta.apply_with(p, &move |t: Tensor| t.normal_form(&rs))?)
    }

    pub fn antipode_of(&self, p: &Poly) -> Result<Poly> {
        let rs = self.system.clone();
        Ok(self.antipode.apply_with(p, &move |q: Poly| rs.normal_form(&q))?)
    }

    /// Counit of a word: product of generator counits.
    pub fn counit_word(&self, w: &Word) -> ZSeries {
        let mut acc = ZSeries::one(self.order());
        for &g in w.letters() {
            acc = &acc * &self.counit[g as usize];
        }
        acc
    }

    pub fn counit_of(&self, p: &Poly) -> ZSeries {
        let mut acc = ZSeries::zero(self.order());
        for (w, c) in p.terms() {
            acc = &acc + &(c * &self.counit_word(w));
        }
        acc
    }

    /// Apply `Δ` to tensor slot `slot`.
    pub fn delta_at(&self, t: &Tensor, slot: usize) -> Result<Tensor> {
        let out = t.expand_factor(slot, |w| self.delta_of(&NCPoly::word(w.clone(), self.order())))?;
        self.nf_tensor(&out)
    }

    pub fn counit_at(&self, t: &Tensor, slot: usize) -> Tensor {
        t.expand_factor::<()>(slot, |w| Ok(TensorPoly::scalar(self.counit_word(w))))
            .expect("infallible")
    }

    pub fn antipode_at(&self, t: &Tensor, slot: usize) -> Result<Tensor> {
        t.expand_factor(slot, |w| Ok(TensorPoly::from_poly(&self.antipode_of(&NCPoly::word(w.clone(), self.order()))?)))
    }

    /// Δ respects every relation: Δ(r) normal-forms to 0 in A⊗A.
    pub fn check_multiplicative(&self, name: &str, relations: &[Poly]) -> Result<CheckOutcome> {
        let mut r = Residual::zero();
        for rel in relations {
            r = r.merge(Residual::of_tensor(&self.delta_of(rel)?));
        }
        Ok(CheckOutcome::from_residual(name, r))
    }

    /// S respects every relation (antihomomorphism well defined).
    pub fn check_antipode_relations(&self, name: &str, relations: &[Poly]) -> Result<CheckOutcome> {
        let mut r = Residual::zero();
        for rel in relations {
            r = r.merge(Residual::of_poly(&self.antipode_of(rel)?));
        }
        Ok(CheckOutcome::from_residual(name, r))
    }

    pub fn check_coassociative(&self, name: &str) -> Result<CheckOutcome> {
        let mut r = Residual::zero();
        for g in 0..self.ngens() {
            let d = self.delta_of(&self.gen(g))?;
            let left = self.delta_at(&d, 0)?;
            let right = self.delta_at(&d, 1)?;
            r = r.merge(Residual::of_tensor(&(&left - &right)));
        }
        Ok(CheckOutcome::from_residual(name, r))
    }

    pub fn check_counit(&self, name: &str) -> Result<CheckOutcome> {
        let mut r = Residual::zero();
        for g in 0..self.ngens() {
            let d = self.delta_of(&self.gen(g))?;
            let expect = TensorPoly::from_poly(&self.gen(g));
            for slot in 0..2 {
                r = r.merge(Residual::of_tensor(&(&self.counit_at(&d, slot) - &expect)));
            }
        }
        Ok(CheckOutcome::from_residual(name, r))
    }

    /// `m(S⊗id)Δ(g)` and `m(id⊗S)Δ(g)`, normal-formed.
    pub fn antipode_products(&self, g: u8) -> Result<(Poly, Poly)> {
        let d = self.delta_of(&self.gen(g))?;
        let left = self.nf(&self.antipode_at(&d, 0)?.multiply_out())?;
        let right = self.nf(&self.antipode_at(&d, 1)?.multiply_out())?;
        Ok((left, right))
    }

    /// Antipode axiom against `ε(g)·unit`.
    pub fn check_antipode(&self, name: &str, unit: &Poly) -> Result<CheckOutcome> {
        let mut r = Residual::zero();
        for g in 0..self.ngens() {
            let expect = unit.scale(&self.counit[g as usize]);
            let (left, right) = self.antipode_products(g)?;
            r = r.merge(Residual::of_poly(&(&left - &expect)));
            r = r.merge(Residual::of_poly(&(&right - &expect)));
        }
        Ok(CheckOutcome::from_residual(name, r))
    }
}
