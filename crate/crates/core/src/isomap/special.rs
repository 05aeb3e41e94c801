use super::candidate::find_isomorphisms;
use crate::error::Result;
use crate::funq::Primitive;
use crate::report::{CheckOutcome, Report, Residual};
use crate::scalar::{DualCoeff, JAssign, JUnit};
use crate::uqalg::{build_so, X01, X02, X12};

/// The contracted so_q(3;j;P) algebras singled out as Euclidean and
/// Galilean.
pub const SPECIAL_CASES: [(Primitive, JAssign); 5] = [
    (Primitive::X12, JAssign { j1: JUnit::Dual, j2: JUnit::One }),
    (Primitive::X01, JAssign { j1: JUnit::Dual, j2: JUnit::One }),
    (Primitive::X02, JAssign { j1: JUnit::Dual, j2: JUnit::Dual }),
    (Primitive::X12, JAssign { j1: JUnit::Dual, j2: JUnit::Dual }),
    (Primitive::X01, JAssign { j1: JUnit::Dual, j2: JUnit::Dual }),
];

fn rescaled(p: Primitive, j: &JAssign) -> bool {
    let m: DualCoeff = crate::scalar::JLaurent::monomial(p.multiplier()).specialize(j).expect("nonnegative");
    !m.is_one()
}

/// Structure constants of the special cases, the deformation-parameter
/// flags, and the Galilean isomorphism search.
pub fn special_case_report(n: usize) -> Result<Report> {
    let mut rep = Report::new();
    for (p, j) in SPECIAL_CASES {
        let alg = build_so(p, &j, n)?;
        let a = alg.system.alphabet().clone();
        let mut notes = Vec::new();
        for (x, y) in [(X01, X02), (X02, X12), (X12, X01)] {
            let b = alg.bracket(&alg.gen(x), &alg.gen(y))?;
            notes.push(format!("[{},{}] = {}", a.name(x), a.name(y), b.display(&a)));
        }
        notes.push(format!("deformation parameter rescaled: {}", if rescaled(p, &j) { "yes" } else { "no" }));
        let mut o = CheckOutcome::from_residual(format!("structure:{}@{}", p.name(), j.label()), Residual::zero());
        o.notes = notes;
        rep.push(o);
    }

    let eu = JAssign { j1: JUnit::Dual, j2: JUnit::One };
    rep.push(flag("euclidean:X12 parameter untouched", !rescaled(Primitive::X12, &eu)));
    rep.push(flag("euclidean:X01 parameter transformed", rescaled(Primitive::X01, &eu)));

    let ga = JAssign { j1: JUnit::Dual, j2: JUnit::Dual };
    let x01 = build_so(Primitive::X01, &ga, n)?;
    let x12 = build_so(Primitive::X12, &ga, n)?;
    let found = find_isomorphisms(&x01, &x12)?;
    let mut o = flag("galilean:X01 ~ X12", !found.is_empty());
    o.notes.extend(found.iter().map(|c| c.describe(&x01)));
    rep.push(o);

    let x02 = build_so(Primitive::X02, &ga, n)?;
    let found = find_isomorphisms(&x02, &x12)?;
    let note = if found.is_empty() {
        "no signed permutation relates X02 and X12 galilean algebras".to_string()
    } else {
        found.iter().map(|c| c.describe(&x02)).collect::<Vec<_>>().join("; ")
    };
    rep.push(CheckOutcome::from_residual("galilean:X02 vs X12", Residual::zero()).noted(note));
    Ok(rep)
}

fn flag(name: &str, ok: bool) -> CheckOutcome {
    if ok {
        CheckOutcome::from_residual(name, Residual::zero())
    } else {
        CheckOutcome::failed(name, "flag does not hold")
    }
}
