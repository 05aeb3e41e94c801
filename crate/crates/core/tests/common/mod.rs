//! Reference series built by recurrence, independent of the library's
//! structure functions.
#![allow(dead_code)]

use ckq_core::freealg::{Alphabet, NCPoly};
use ckq_core::scalar::*;

pub fn g(n: i64) -> GaussRational {
    GaussRational::int(n)
}

pub fn q(num: i64, den: i64) -> GaussRational {
    GaussRational::ratio(num, den)
}

pub fn z(n: usize) -> ZSeries {
    Series::monomial(DualCoeff::int(1), 1, n)
}

pub fn one(n: usize) -> ZSeries {
    Series::one(n)
}

pub fn c(s: &ZSeries, k: GaussRational) -> ZSeries {
    s.scale_gauss(&k)
}

/// e^{a z} from the recurrence c_k = c_{k-1} a / k.
pub fn exp_s(a: &DualCoeff, n: usize) -> ZSeries {
    let mut out = vec![DualCoeff::int(1)];
    for k in 1..=n {
        let prev = out[k - 1].clone();
        out.push((&prev * a).mul_gauss(&q(1, k as i64)));
    }
    Series::from_coeffs(out)
}

pub fn cosh_s(a: &DualCoeff, n: usize) -> ZSeries {
    let s = &exp_s(a, n) + &exp_s(&-a, n);
    s.scale_gauss(&q(1, 2))
}

pub fn sinh_s(a: &DualCoeff, n: usize) -> ZSeries {
    let s = &exp_s(a, n) - &exp_s(&-a, n);
    s.scale_gauss(&q(1, 2))
}

/// sinh(s J z)/J: odd terms t_1 = s, t_{k+2} = t_k (sJ)^2 / ((k+1)(k+2)).
pub fn sinhc_s(s: GaussRational, jm: &DualCoeff, n: usize) -> ZSeries {
    let mut out = vec![DualCoeff::int(0); n + 1];
    let step = (jm * jm).mul_gauss(&(&s * &s));
    let mut t = DualCoeff::scalar(s);
    let mut k = 1;
    while k <= n {
        out[k] = t.clone();
        t = (&t * &step).mul_gauss(&q(1, ((k + 1) * (k + 2)) as i64));
        k += 2;
    }
    Series::from_coeffs(out)
}

pub fn dual(j: &JAssign, m: (i32, i32)) -> DualCoeff {
    let mut out = DualCoeff::int(1);
    for _ in 0..m.0 {
        out = &out * &j.j1();
    }
    for _ in 0..m.1 {
        out = &out * &j.j2();
    }
    out
}

pub fn poly(alpha: &Alphabet, n: usize, terms: &[(&str, ZSeries)]) -> NCPoly<DualCoeff> {
    let mut out = NCPoly::zero(n);
    for (s, cf) in terms {
        out.add_term(alpha.parse_word(s).unwrap(), cf.clone());
    }
    out
}

pub fn rule_at<'a>(
    rs: &'a ckq_core::freealg::RewriteSystem<DualCoeff>,
    w: &ckq_core::freealg::Word,
) -> Option<&'a NCPoly<DualCoeff>> {
    rs.rule(w.letters()[0], w.letters()[1])
}
