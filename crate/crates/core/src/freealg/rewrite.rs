use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::poly::NCPoly;
use super::word::{Alphabet, Word};
use super::FreeAlgError;
use crate::scalar::Scalar;

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Step budget per normal-form call: `CKQ_STEP_BUDGET` if set and valid,
/// otherwise [`DEFAULT_STEP_BUDGET`].
pub fn default_step_budget() -> u64 {
    std::env::var("CKQ_STEP_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_STEP_BUDGET)
}

type Cache<C> = RwLock<HashMap<(Word, usize), Arc<NCPoly<C>>>>;

/// Oriented quadratic relations `xy -> rhs` over a fixed alphabet.
///
/// A right-hand term `c·w` with `v = val(c)` must satisfy
/// `deg(w) - v < 2`, or `deg(w) - v == 2` with `v == 0` and `w < xy`.
/// Words may grow in length only when paid for by powers of z, which
/// keeps reduction finite under truncation.
pub struct RewriteSystem<C: Scalar> {
    alphabet: Arc<Alphabet>,
    order: usize,
    rules: Vec<Option<NCPoly<C>>>,
    budget: u64,
    cache: Cache<C>,
}

impl<C: Scalar> Clone for RewriteSystem<C> {
    fn clone(&self) -> Self {
        RewriteSystem {
            alphabet: self.alphabet.clone(),
            order: self.order,
            rules: self.rules.clone(),
            budget: self.budget,
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl<C: Scalar> std::fmt::Debug for RewriteSystem<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("alphabet", &self.alphabet)
            .field("order", &self.order)
            .field("rules", &self.rules().count())
            .finish()
    }
}

impl<C: Scalar> RewriteSystem<C> {
    pub fn new(alphabet: Arc<Alphabet>, order: usize) -> Self {
        let n = alphabet.len();
        RewriteSystem {
            alphabet,
            order,
            rules: vec![None; n * n],
            budget: default_step_budget(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn slot(&self, a: u8, b: u8) -> usize {
        a as usize * self.alphabet.len() + b as usize
    }

    /// Add or replace the rule `lhs -> rhs`.
    pub fn add_rule(&mut self, lhs: &Word, rhs: NCPoly<C>) -> Result<(), FreeAlgError> {
        if lhs.len() != 2 {
            return Err(FreeAlgError::BadLhs(lhs.len()));
        }
        for (w, s) in rhs.terms() {
            let v = s.valuation().unwrap_or(0) as isize;
            let weight = w.len() as isize - v;
            let ok = weight < 2 || (weight == 2 && v == 0 && w < lhs);
            if !ok {
                return Err(FreeAlgError::NotDecreasing {
                    lhs: self.alphabet.fmt_word(lhs),
                    term: format!("[{s}]·{}", self.alphabet.fmt_word(w)),
                });
            }
        }
        let k = self.slot(lhs.0[0], lhs.0[1]);
        self.rules[k] = Some(rhs.with_order(self.order));
        self.cache.write().expect("cache lock").clear();
        Ok(())
    }

    pub fn rule(&self, a: u8, b: u8) -> Option<&NCPoly<C>> {
        self.rules[self.slot(a, b)].as_ref()
    }

    /// Rules as `(lhs, rhs)` in lhs order.
    pub fn rules(&self) -> impl Iterator<Item = (Word, &NCPoly<C>)> {
        let n = self.alphabet.len();
        self.rules.iter().enumerate().filter_map(move |(k, r)| {
            r.as_ref().map(|p| (Word::from_slice(&[(k / n) as u8, (k % n) as u8]), p))
        })
    }

    /// The defining relations `lhs - rhs`.
    pub fn relations(&self) -> Vec<(Word, NCPoly<C>)> {
        self.rules()
            .map(|(lhs, rhs)| (lhs.clone(), &NCPoly::word(lhs, self.order) - rhs))
            .collect()
    }

    fn leftmost_redex(&self, w: &Word) -> Option<(usize, &NCPoly<C>)> {
        let l = w.letters();
        (0..l.len().saturating_sub(1)).find_map(|i| self.rule(l[i], l[i + 1]).map(|r| (i, r)))
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.leftmost_redex(w).is_none()
    }

    /// Normal form of a single word, valid modulo `z^{avail+1}`.
    fn nf_word(&self, w: &Word, avail: usize, steps: &mut u64) -> Result<Arc<NCPoly<C>>, FreeAlgError> {
        let key = (w.clone(), avail);
        if let Some(hit) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let result = match self.leftmost_redex(w) {
            None => NCPoly::word(w.clone(), self.order),
            Some((i, rhs)) => {
                *steps += 1;
                if *steps > self.budget {
                    return Err(FreeAlgError::BudgetExceeded { budget: self.budget });
                }
                let mut acc = NCPoly::zero(self.order);
                for (rw, rc) in rhs.terms() {
                    let v = rc.valuation().unwrap_or(0);
                    if v > avail {
                        continue;
                    }
                    let sub = self.nf_word(&w.splice(i, 2, rw), avail - v, steps)?;
                    for (sw, sc) in sub.terms() {
                        acc.add_term(sw.clone(), (rc * sc).truncate_above(avail));
                    }
                }
                acc
            }
        };
        let result = Arc::new(result);
        self.cache.write().expect("cache lock").insert(key, result.clone());
        Ok(result)
    }

    /// Reduce until no rule applies. Leftmost redex first.
    pub fn normal_form(&self, p: &NCPoly<C>) -> Result<NCPoly<C>, FreeAlgError> {
        let mut steps = 0u64;
        let mut out = NCPoly::zero(self.order);
        for (w, c) in p.terms() {
            let Some(v) = c.valuation() else { continue };
            if self.is_normal(w) {
                out.add_term(w.clone(), c.clone());
                continue;
            }
            let sub = self.nf_word(w, self.order - v, &mut steps)?;
            for (sw, sc) in sub.terms() {
                out.add_term(sw.clone(), c * sc);
            }
        }
        Ok(out)
    }

    pub fn normal_form_word(&self, w: &Word) -> Result<NCPoly<C>, FreeAlgError> {
        self.normal_form(&NCPoly::word(w.clone(), self.order))
    }

    /// One rewrite at position `at`; `None` if no rule applies there.
    pub fn rewrite_at(&self, w: &Word, at: usize) -> Option<NCPoly<C>> {
        let l = w.letters();
        if at + 1 >= l.len() {
            return None;
        }
        let rhs = self.rule(l[at], l[at + 1])?;
        let mut p = NCPoly::zero(self.order);
        for (rw, rc) in rhs.terms() {
            p.add_term(w.splice(at, 2, rw), rc.clone());
        }
        Some(p)
    }

    /// Product followed by normal form.
    pub fn mul_nf(&self, a: &NCPoly<C>, b: &NCPoly<C>) -> Result<NCPoly<C>, FreeAlgError> {
        self.normal_form(&(a * b))
    }

    /// Replace every rule right side through `f`; the termination check is
    /// not repeated. Used to build deliberately corrupted fixtures.
    pub fn map_rule(&mut self, lhs: &Word, f: impl FnOnce(&NCPoly<C>) -> NCPoly<C>) -> bool {
        let k = self.slot(lhs.0[0], lhs.0[1]);
        let Some(r) = self.rules[k].as_ref() else { return false };
        self.rules[k] = Some(f(r));
        self.cache.write().expect("cache lock").clear();
        true
    }

    pub fn display_rules(&self) -> String {
        self.rules()
            .map(|(lhs, rhs)| format!("{} -> {}", self.alphabet.fmt_word(&lhs), rhs.display(&self.alphabet)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// `normal_form(xy - yx)`.
pub fn nc_commutator<C: Scalar>(x: &NCPoly<C>, y: &NCPoly<C>, rs: &RewriteSystem<C>) -> Result<NCPoly<C>, FreeAlgError> {
    rs.normal_form(&(&(x * y) - &(y * x)))
}

#[derive(Clone, Debug)]
pub struct CriticalPairFailure<C: Scalar> {
    pub word: Word,
    pub positions: (usize, usize),
    pub difference: NCPoly<C>,
}

#[derive(Clone, Debug)]
pub struct CriticalPairReport<C: Scalar> {
    pub checked: usize,
    pub failures: Vec<CriticalPairFailure<C>>,
}

impl<C: Scalar> CriticalPairReport<C> {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reduce every overlap word both ways and compare.
///
/// Two-letter left sides overlap only in three-letter words; for
/// `maxlen > 3` every longer word with two or more redexes is also checked
/// across all pairs of redex positions.
pub fn critical_pairs_check<C: Scalar>(
    rs: &RewriteSystem<C>,
    maxlen: usize,
) -> Result<CriticalPairReport<C>, FreeAlgError> {
    let n = rs.alphabet().len() as u8;
    let mut checked = 0;
    let mut failures = Vec::new();
    for len in 3..=maxlen.max(3) {
        for w in Word::all_of_len(n, len) {
            let redexes: Vec<usize> = (0..len - 1).filter(|&i| rs.rewrite_at(&w, i).is_some()).collect();
            if redexes.len() < 2 {
                continue;
            }
            let first = rs.normal_form(&rs.rewrite_at(&w, redexes[0]).expect("redex"))?;
            for &r in &redexes[1..] {
                checked += 1;
                let other = rs.normal_form(&rs.rewrite_at(&w, r).expect("redex"))?;
                let diff = &first - &other;
                if !diff.is_zero() {
                    failures.push(CriticalPairFailure { word: w.clone(), positions: (redexes[0], r), difference: diff });
                }
            }
        }
    }
    Ok(CriticalPairReport { checked, failures })
}

