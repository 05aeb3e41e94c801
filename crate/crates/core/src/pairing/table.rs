use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NCPoly};
use crate::funq::{antipode_generic, Variant, VariantSpec, A1, A2, B1, B2};
use crate::scalar::{GaussRational, JAssign, JLaurent, JMonomial, JSeries, StructureFn, ZSeries};

pub const T: u8 = 0;
pub const TI: u8 = 1;
pub const U1: u8 = 2;
pub const U2: u8 = 3;

pub fn l_alphabet() -> Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| Arc::new(Alphabet::new(&["t", "ti", "u1", "u2"]))).clone()
}

fn ratio(a: JMonomial, b: JMonomial) -> JLaurent {
    JLaurent::monomial((a.0 - b.0, a.1 - b.1))
}

/// Generator pairings with symbolic j, obtained from the j=(1,1) values
/// through `u_k = γ_k ũ_k`, `b_l = b̃_l/β_l`, `a₂ = ã₂/α`, `z̃ = Jz`.
#[derive(Clone, Debug)]
pub struct GenericTable {
    pub spec: VariantSpec,
    pub order: usize,
    vals: [[JSeries; 4]; 4],
}

impl GenericTable {
    pub fn new(variant: Variant, n: usize) -> Self {
        let spec = variant.spec();
        let sf = |k, s: GaussRational| spec.sf(k, s, n);
        let half = GaussRational::ratio(1, 2);
        let i = GaussRational::i();
        let zero = JSeries::zero(n);
        let mut vals: [[JSeries; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| zero.clone()));

        vals[T as usize][A1 as usize] = sf(StructureFn::Cosh, half.clone());
        vals[T as usize][A2 as usize] =
            sf(StructureFn::Sinh, half.clone()).scale(&ratio((0, 0), spec.alpha)).scale_gauss(&-&i);

        let sh = sf(StructureFn::Sinh, GaussRational::one());
        let diag = -&(&sh * &sf(StructureFn::Sinh, half.clone()));
        let off = &sh * &sf(StructureFn::Cosh, half);
        let [g1, g2] = spec.gamma;
        let [be1, be2] = spec.beta;
        vals[U1 as usize][B1 as usize] = diag.scale(&ratio(g1, be1));
        vals[U2 as usize][B2 as usize] = diag.scale(&ratio(g2, be2));
        vals[U1 as usize][B2 as usize] = off.scale(&ratio(g1, be2)).scale_gauss(&-&i);
        vals[U2 as usize][B1 as usize] = off.scale(&ratio(g2, be1)).scale_gauss(&i);

        let mut table = GenericTable { spec, order: n, vals };
        let s = antipode_generic(&spec, n);
        for g in 0..4u8 {
            let v = table.pair_linear(T, &s[g as usize]).expect("antipode images are linear");
            table.vals[TI as usize][g as usize] = v;
        }
        table
    }

    pub fn get(&self, sym: u8, gen: u8) -> &JSeries {
        &self.vals[sym as usize][gen as usize]
    }

    /// Counit of an L-symbol.
    pub fn counit(sym: u8) -> i64 {
        if sym == T || sym == TI {
            1
        } else {
            0
        }
    }

    /// `⟨sym, p⟩` for `p` of degree at most one.
    pub fn pair_linear(&self, sym: u8, p: &NCPoly<JLaurent>) -> Result<JSeries> {
        let mut acc = JSeries::zero(self.order);
        for (w, c) in p.terms() {
            match w.letters() {
                [] => acc = &acc + &c.scale_gauss(&GaussRational::int(Self::counit(sym))),
                [g] => acc = &acc + &(c * self.get(sym, *g)),
                _ => return Err(Error::Unsupported("generator pairing on a word of length > 1".into())),
            }
        }
        Ok(acc)
    }
}

/// Generator pairings at a fixed j.
#[derive(Clone, Debug)]
pub struct PairingTable {
    pub variant: Variant,
    pub j: JAssign,
    pub order: usize,
    vals: [[ZSeries; 4]; 4],
}

impl PairingTable {
    pub fn new(variant: Variant, j: &JAssign, n: usize) -> Result<Self> {
        let g = GenericTable::new(variant, n);
        let mut vals: [[ZSeries; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| ZSeries::zero(n)));
        for s in 0..4u8 {
            for x in 0..4u8 {
                vals[s as usize][x as usize] = g.get(s, x).specialize(j)?;
            }
        }
        Ok(PairingTable { variant, j: *j, order: n, vals })
    }

    pub fn get(&self, sym: u8, gen: u8) -> &ZSeries {
        &self.vals[sym as usize][gen as usize]
    }
}

/// `⟨sym, gen⟩` at j.
pub fn pair_gen(variant: Variant, j: &JAssign, sym: u8, gen: u8, n: usize) -> Result<ZSeries> {
    if sym > U2 || gen > A2 {
        return Err(Error::Unsupported(format!("unknown symbol/generator pair ({sym}, {gen})")));
    }
    Ok(PairingTable::new(variant, j, n)?.get(sym, gen).clone())
}

