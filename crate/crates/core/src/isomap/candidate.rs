use crate::error::{Error, Result};
use crate::freealg::{GenMap, MapKind, NCPoly, TensorPoly, Word};
use crate::hopf::{Poly, Tensor};
use crate::linalg::SeriesMatrix;
use crate::report::{CheckOutcome, Report, Residual};
use crate::scalar::{DualCoeff, GaussRational, Scalar, Series};
use crate::uqalg::{hopf_maps_so, SoAlgebra};

/// A signed permutation of the three so generators, `g ↦ sign·X_{perm[g]}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Candidate {
    pub perm: [u8; 3],
    pub signs: [i8; 3],
}

impl Candidate {
    pub fn to_map(&self, source: &SoAlgebra) -> GenMap<Poly> {
        let n = source.order;
        let mut m = GenMap::new(MapKind::Hom, source.system.alphabet().clone(), NCPoly::one(n));
        for g in 0..3u8 {
            let c = Series::from_gauss(GaussRational::int(self.signs[g as usize] as i64), n);
            m.set(g, NCPoly::term(Word::letter(self.perm[g as usize]), c));
        }
        m
    }

    pub fn describe(&self, source: &SoAlgebra) -> String {
        let a = source.system.alphabet();
        (0..3)
            .map(|g| {
                let s = if self.signs[g] < 0 { "-" } else { "" };
                format!("{}->{}{}", a.name(g as u8), s, a.name(self.perm[g]))
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// All 48 signed permutations of three generators.
pub fn signed_permutations() -> Vec<Candidate> {
    const PERMS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(48);
    for perm in PERMS {
        for bits in 0..8 {
            let s = |k: usize| if bits >> k & 1 == 1 { -1 } else { 1 };
            out.push(Candidate { perm, signs: [s(0), s(1), s(2)] });
        }
    }
    out
}

/// z⁰ coefficients of the degree-one part, rows indexed by source
/// generator.
fn linear_part(map: &GenMap<Poly>, ngens: u8, n: usize) -> Result<SeriesMatrix<DualCoeff>> {
    let mut m = SeriesMatrix::zero(ngens as usize, ngens as usize, n);
    for g in 0..ngens {
        let img = map.image(g).ok_or_else(|| Error::Unsupported(format!("no image for generator {g}")))?;
        for x in 0..ngens {
            let c = img.coeff_or_zero(&Word::letter(x));
            m.set(g as usize, x as usize, Series::constant(c.coeff(0).clone(), n));
        }
    }
    Ok(m)
}

fn map_tensor(map: &GenMap<Poly>, t: &Tensor, target: &SoAlgebra) -> Result<Tensor> {
    let n = target.order;
    let mut out = TensorPoly::zero(t.arity(), n);
    for (k, c) in t.terms() {
        let mut term = TensorPoly::scalar(c.clone());
        for w in k {
            let rs = target.system.clone();
            let img = map.apply_with(&NCPoly::word(w.clone(), n), &move |x: Poly| rs.normal_form(&x))?;
            term = term.append(&TensorPoly::from_poly(&img));
        }
        out.add_assign_tensor(&term);
    }
    Ok(out.normal_form(&target.system)?)
}

/// Check a linear generator map between two so algebras: relations go
/// to zero, the linear part is invertible, and coproducts intertwine.
pub fn check_candidate_iso(map: &GenMap<Poly>, source: &SoAlgebra, target: &SoAlgebra) -> Result<Report> {
    let n = target.order;
    let rs = target.system.clone();
    let reduce = move |x: Poly| rs.normal_form(&x);
    let mut rep = Report::new();

    let mut res = Residual::zero();
    for (_, rel) in source.system.relations() {
        res = res.merge(Residual::of_poly(&map.apply_with(&rel, &reduce)?));
    }
    rep.push(CheckOutcome::from_residual("relations", res));

    let lin = linear_part(map, 3, n)?;
    rep.push(match lin.det().coeff(0).try_inverse() {
        Some(_) => CheckOutcome::from_residual("invertible", Residual::zero()),
        None => CheckOutcome::failed("invertible", "linear part is not invertible"),
    });

    let hs = hopf_maps_so(source)?;
    let ht = hopf_maps_so(target)?;
    let mut res = Residual::zero();
    for g in 0..3u8 {
        let lhs = map_tensor(map, &hs.delta_of(&NCPoly::gen(g, n))?, target)?;
        let rhs = ht.delta_of(&map.apply_with(&NCPoly::gen(g, n), &reduce)?)?;
        res = res.merge(Residual::of_tensor(&(&lhs - &rhs)));
    }
    rep.push(CheckOutcome::from_residual("coproduct", res));
    Ok(rep)
}

/// The inverse of a map whose images are z-constant linear combinations.
pub fn inverse_linear_map(map: &GenMap<Poly>, target: &SoAlgebra) -> Result<GenMap<Poly>> {
    let n = target.order;
    let inv = linear_part(map, 3, n)?.inverse()?;
    let mut m = GenMap::new(MapKind::Hom, target.system.alphabet().clone(), NCPoly::one(n));
    for x in 0..3u8 {
        let mut img = NCPoly::zero(n);
        for g in 0..3u8 {
            img.add_term(Word::letter(g), inv.get(x as usize, g as usize).clone());
        }
        m.set(x, img);
    }
    Ok(m)
}

/// Signed permutations that pass every check of `check_candidate_iso`.
pub fn find_isomorphisms(source: &SoAlgebra, target: &SoAlgebra) -> Result<Vec<Candidate>> {
    let cands = signed_permutations();
    let results = crate::exec::par_map(&cands, |c| check_candidate_iso(&c.to_map(source), source, target).map(|r| r.all_pass()));
    let mut out = Vec::new();
    for (c, ok) in cands.into_iter().zip(results) {
        if ok? {
            out.push(c);
        }
    }
    Ok(out)
}
