use std::time::Instant;

use ckq_core::exec::par_map;
use ckq_core::freealg::critical_pairs_check;
use ckq_core::funq::{
    build_fun, check_central, fun_alphabet, hopf_axiom_report_fun, relations_from_rtt, relations_from_rtt_generic,
    rtt_residual, verify_contraction_fun, ybe_residual, FunAlgebra, FunMode, Variant,
};
use ckq_core::isomap::{build_iso, special_case_report, verify_iso_coproducts, verify_iso_relations};
use ckq_core::pairing::{verify_ideal_annihilation, verify_lt_pairing, verify_relation_functionals};
use ckq_core::report::{CheckOutcome, Report, Residual};
use ckq_core::scalar::JAssign;
use ckq_core::uqalg::{build_so, build_su, hopf_axiom_report_so, hopf_axiom_report_su, verify_contraction_alg, AlgFamily};

use crate::config::{Check, RunConfig};
use crate::report::{Record, RunReport};

#[derive(Clone, Copy, Debug)]
enum Family {
    Fun,
    Su,
    So,
    Pairing,
    Iso,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Fun => "fun",
            Family::Su => "su",
            Family::So => "so",
            Family::Pairing => "pairing",
            Family::Iso => "iso",
        }
    }
}

/// One independent unit of work.
#[derive(Clone, Copy, Debug)]
struct Task {
    check: Check,
    family: Family,
    case: Option<(Variant, JAssign)>,
}

fn tasks(cfg: &RunConfig) -> Vec<Task> {
    let cases: Vec<(Variant, JAssign)> =
        cfg.variants.iter().flat_map(|v| cfg.js.iter().map(move |j| (*v, *j))).collect();
    let mut out = Vec::new();
    let each = |out: &mut Vec<Task>, check, family, skip_v01: bool| {
        for c in cases.iter().filter(|c| !(skip_v01 && c.0 == Variant::V01)) {
            out.push(Task { check, family, case: Some(*c) });
        }
    };
    for &check in &cfg.checks {
        match check {
            Check::Rtt | Check::Ybe | Check::RelationsFromRtt | Check::Det | Check::HopfFun => {
                each(&mut out, check, Family::Fun, false)
            }
            Check::HopfSu => each(&mut out, check, Family::Su, false),
            Check::HopfSo => each(&mut out, check, Family::So, false),
            Check::Pairing | Check::Ideal => each(&mut out, check, Family::Pairing, false),
            Check::Iso => each(&mut out, check, Family::Iso, true),
            Check::Contraction | Check::Confluence => {
                for fam in [Family::Fun, Family::Su, Family::So] {
                    each(&mut out, check, fam, false);
                }
            }
            Check::SpecialCases => out.push(Task { check, family: Family::So, case: None }),
            Check::All => unreachable!("expanded by RunConfig"),
        }
    }
    out
}

/// The 16 entries of `R T₁ T₂ − T₂ T₁ R`, one outcome each.
pub fn rtt_report(alg: &FunAlgebra) -> ckq_core::Result<Report> {
    let mut rep = Report::new();
    for (k, p) in rtt_residual(alg)?.iter().enumerate() {
        rep.push(CheckOutcome::from_residual(format!("entry({},{})", k / 4, k % 4), Residual::of_poly(p)));
    }
    Ok(rep)
}

fn fun_mode(cfg: &RunConfig, default: FunMode) -> FunMode {
    cfg.mode.unwrap_or(default)
}

fn run_task(t: &Task, cfg: &RunConfig) -> ckq_core::Result<Report> {
    let n = cfg.order;
    if t.check == Check::SpecialCases {
        return special_case_report(n);
    }
    let (v, j) = t.case.expect("per-case task");
    let p = v.spec().primitive;
    let bi = || build_fun(v, &j, n, fun_mode(cfg, FunMode::Bialgebra));
    Ok(match (t.check, t.family) {
        (Check::Rtt, _) => rtt_report(&bi()?)?,
        (Check::Ybe, _) => {
            let m = ybe_residual(v, &j, n)?;
            let mut rep = Report::new();
            for ((r, c), s) in m.entries() {
                rep.push(CheckOutcome::from_residual(format!("entry({r},{c})"), Residual::of_series(s)));
            }
            rep
        }
        (Check::RelationsFromRtt, _) => {
            let derived = relations_from_rtt(v, &j, n)?;
            let alg = build_fun(v, &j, n, FunMode::Bialgebra)?;
            let alpha = fun_alphabet();
            let mut rep = Report::new();
            for (lhs, rhs) in derived.rules() {
                let have = alg.bialgebra.rule(lhs.letters()[0], lhs.letters()[1]);
                let name = format!("rule:{}", alpha.fmt_word(&lhs));
                rep.push(match have {
                    Some(h) => CheckOutcome::from_residual(name, Residual::of_poly(&(rhs - h))),
                    None => CheckOutcome::failed(name, "no such rule in the closed form"),
                });
            }
            let left = relations_from_rtt_generic(&v.spec(), n)?.leftover;
            let r = left.iter().fold(Residual::zero(), |r, p| r.merge(Residual::of_poly(p)));
            rep.push(CheckOutcome::from_residual("leftover", r));
            rep
        }
        (Check::Det, _) => {
            let alg = build_fun(v, &j, n, FunMode::Bialgebra)?;
            let mut rep = Report::new();
            rep.push(if check_central(&alg, &alg.det)? {
                CheckOutcome::from_residual("central", Residual::zero())
            } else {
                CheckOutcome::failed("central", "det does not commute with every generator")
            });
            let h = hopf_axiom_report_fun(&alg)?;
            if let Some(o) = h.get("det-grouplike") {
                rep.push(o.clone());
            }
            rep
        }
        (Check::HopfFun, _) => hopf_axiom_report_fun(&build_fun(v, &j, n, fun_mode(cfg, FunMode::CoordinateRing))?)?,
        (Check::HopfSu, _) => hopf_axiom_report_su(&build_su(v, &j, n)?)?,
        (Check::HopfSo, _) => hopf_axiom_report_so(&build_so(p, &j, n)?)?,
        (Check::Pairing, _) => verify_lt_pairing(v, &j, n)?,
        (Check::Ideal, _) => {
            let mut rep = verify_ideal_annihilation(v, &j, cfg.maxlen, n)?;
            rep.extend(verify_relation_functionals(v, &j, cfg.maxlen, n)?);
            rep
        }
        (Check::Iso, _) => {
            let iso = build_iso(v, &j, n)?;
            let mut rep = verify_iso_relations(&iso)?;
            rep.extend(verify_iso_coproducts(&iso)?);
            rep
        }
        (Check::Contraction, Family::Fun) => verify_contraction_fun(v, &j, n)?,
        (Check::Contraction, Family::Su) => verify_contraction_alg(AlgFamily::Su(v), &j, n)?,
        (Check::Contraction, _) => verify_contraction_alg(AlgFamily::So(p), &j, n)?,
        (Check::Confluence, fam) => {
            let rs = match fam {
                Family::Fun => bi()?.system,
                Family::Su => build_su(v, &j, n)?.system,
                _ => build_so(p, &j, n)?.system,
            };
            let cp = critical_pairs_check(&rs, 3)?;
            let mut rep = Report::new();
            rep.push(CheckOutcome::from_residual("critical-pairs", Residual::zero()).with_note(format!(
                "{} overlaps checked",
                cp.checked
            )));
            for f in &cp.failures {
                rep.push(CheckOutcome::from_residual(
                    format!("overlap:{}", rs.alphabet().fmt_word(&f.word)),
                    Residual::of_poly(&f.difference),
                ));
            }
            rep
        }
        (Check::SpecialCases | Check::All, _) => unreachable!(),
    })
}

fn variant_label(t: &Task) -> String {
    match (t.family, t.case) {
        (_, None) => "-".into(),
        (Family::So, Some((v, _))) => format!("{}/{}", v.name(), v.spec().primitive.name()),
        (_, Some((v, _))) => v.name().into(),
    }
}

/// Run every task of the config and assemble the sorted report.
pub fn run_suite(cfg: &RunConfig) -> RunReport {
    let tasks = tasks(cfg);
    let records = par_map(&tasks, |t| {
        let start = Instant::now();
        let variant = variant_label(t);
        let j = t.case.map_or("-".to_string(), |(_, j)| j.label());
        let mut rec = match run_task(t, cfg) {
            Ok(rep) => Record::from_report(t.check.name(), t.family.name(), &variant, &j, cfg.order, &rep),
            Err(e) => Record::error(t.check.name(), t.family.name(), &variant, &j, cfg.order, e.to_string()),
        };
        rec.wall_time = start.elapsed().as_secs_f64();
        rec
    });
    RunReport::new(records)
}
