use std::collections::HashMap;
use std::sync::RwLock;

use super::table::{PairingTable, T, TI};
use crate::error::Result;
use crate::freealg::{NCPoly, Word};
use crate::funq::{coproduct_generic, Variant, A1};
use crate::scalar::{DualCoeff, JAssign, ZSeries};

type Poly = NCPoly<DualCoeff>;
type Split = Vec<(Word, Word, ZSeries)>;

/// Which side is split first when a word pairing is reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Split the fun word with the L-coproduct whenever it has length ≥ 2.
    FunFirst,
    /// Split the L-word with the fun coproduct whenever it has length ≥ 2.
    SymbolFirst,
}

/// Word-level pairing at a fixed j, extended from the generator table by
/// `⟨gh, x⟩ = Σ⟨g, x₍₁₎⟩⟨h, x₍₂₎⟩` and `⟨g, xy⟩ = Σ⟨g₍₁₎, x⟩⟨g₍₂₎, y⟩`.
#[derive(Debug)]
pub struct Pairing {
    pub table: PairingTable,
    fun_delta: Vec<Split>,
    memo: RwLock<HashMap<(Route, Word, Word), ZSeries>>,
}

fn l_delta(sym: u8) -> Vec<(u8, u8)> {
    match sym {
        T => vec![(T, T)],
        TI => vec![(TI, TI)],
        _ => vec![(T, sym), (sym, TI)],
    }
}

impl Pairing {
    pub fn new(variant: Variant, j: &JAssign, n: usize) -> Result<Self> {
        let table = PairingTable::new(variant, j, n)?;
        let fun_delta = coproduct_generic(&variant.spec(), n)
            .iter()
            .map(|t| {
                let mut out = Vec::new();
                for (k, s) in t.terms() {
                    let s = s.specialize(j)?;
                    if !s.is_zero() {
                        out.push((k[0].clone(), k[1].clone(), s));
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Pairing { table, fun_delta, memo: RwLock::new(HashMap::new()) })
    }

    pub fn order(&self) -> usize {
        self.table.order
    }

    fn fun_counit(&self, w: &Word) -> ZSeries {
        let n = self.order();
        if w.letters().iter().all(|&g| g == A1) {
            ZSeries::one(n)
        } else {
            ZSeries::zero(n)
        }
    }

    fn l_counit(&self, w: &Word) -> ZSeries {
        let n = self.order();
        if w.letters().iter().all(|&s| s == T || s == TI) {
            ZSeries::one(n)
        } else {
            ZSeries::zero(n)
        }
    }

    /// Δ of an L-word, all coefficients 1.
    fn l_delta_word(w: &Word) -> Vec<(Word, Word)> {
        let mut acc = vec![(Word::empty(), Word::empty())];
        for &s in w.letters() {
            let mut next = Vec::with_capacity(acc.len() * 2);
            for (l, r) in &acc {
                for (a, b) in l_delta(s) {
                    next.push((l.concat(&Word::letter(a)), r.concat(&Word::letter(b))));
                }
            }
            acc = next;
        }
        acc
    }

    /// Δ of a fun word in the free tensor square.
    fn fun_delta_word(&self, w: &Word) -> Split {
        let n = self.order();
        let mut acc: HashMap<(Word, Word), ZSeries> = HashMap::new();
        acc.insert((Word::empty(), Word::empty()), ZSeries::one(n));
        for &g in w.letters() {
            let mut next: HashMap<(Word, Word), ZSeries> = HashMap::new();
            for ((l, r), c) in &acc {
                for (a, b, s) in &self.fun_delta[g as usize] {
                    let key = (l.concat(a), r.concat(b));
                    let v = c * s;
                    next.entry(key).and_modify(|e| *e = &*e + &v).or_insert(v);
                }
            }
            acc = next;
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((l, r), c)| (l, r, c)).collect()
    }

    pub fn pair_word(&self, lw: &Word, fw: &Word) -> ZSeries {
        self.pair_word_via(Route::FunFirst, lw, fw)
    }

    pub fn pair_word_via(&self, route: Route, lw: &Word, fw: &Word) -> ZSeries {
        if lw.is_empty() {
            return self.fun_counit(fw);
        }
        if fw.is_empty() {
            return self.l_counit(lw);
        }
        if lw.len() == 1 && fw.len() == 1 {
            return self.table.get(lw.letters()[0], fw.letters()[0]).clone();
        }
        let key = (route, lw.clone(), fw.clone());
        if let Some(v) = self.memo.read().expect("pairing memo").get(&key) {
            return v.clone();
        }
        let split_fun = match route {
            Route::FunFirst => fw.len() >= 2,
            Route::SymbolFirst => lw.len() < 2,
        };
        let mut acc = ZSeries::zero(self.order());
        if split_fun {
            let (x, rest) = (Word::letter(fw.letters()[0]), Word::from_slice(&fw.letters()[1..]));
            for (l1, l2) in Self::l_delta_word(lw) {
                let a = self.pair_word_via(route, &l1, &x);
                if a.is_zero() {
                    continue;
                }
                acc = &acc + &(&a * &self.pair_word_via(route, &l2, &rest));
            }
        } else {
            let (g, rest) = (Word::letter(lw.letters()[0]), Word::from_slice(&lw.letters()[1..]));
            for (w1, w2, c) in self.fun_delta_word(fw) {
                let a = self.pair_word_via(route, &g, &w1);
                if a.is_zero() {
                    continue;
                }
                acc = &acc + &(&(&a * &c) * &self.pair_word_via(route, &rest, &w2));
            }
        }
        self.memo.write().expect("pairing memo").insert(key, acc.clone());
        acc
    }

    /// `⟨lw, p⟩` for a fun polynomial `p`.
    pub fn pair_fun_poly(&self, lw: &Word, p: &Poly) -> ZSeries {
        let mut acc = ZSeries::zero(self.order());
        for (w, c) in p.terms() {
            acc = &acc + &(c * &self.pair_word(lw, w));
        }
        acc
    }

    /// `⟨l, fw⟩` for an L-polynomial `l`.
    pub fn pair_l_poly(&self, l: &Poly, fw: &Word) -> ZSeries {
        let mut acc = ZSeries::zero(self.order());
        for (w, c) in l.terms() {
            acc = &acc + &(c * &self.pair_word(w, fw));
        }
        acc
    }

    pub fn pair_polys(&self, l: &Poly, p: &Poly) -> ZSeries {
        let mut acc = ZSeries::zero(self.order());
        for (w, c) in l.terms() {
            acc = &acc + &(c * &self.pair_fun_poly(w, p));
        }
        acc
    }
}

/// `⟨lword, fword⟩` at j.
pub fn pair_word(variant: Variant, j: &JAssign, lword: &Word, fword: &Word, n: usize) -> Result<ZSeries> {
    Ok(Pairing::new(variant, j, n)?.pair_word(lword, fword))
}

