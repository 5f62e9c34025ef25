//! Colored Jones polynomial of the trefoil at roots of unity, and the surgery double sums.

use super::defs::{chi0_star_surgery, f0_star_surgery, phi_star_surgery};
use crate::cyclo::{eval_terminating, Cyclo, EvaluationPoint, PochFactor, TermSum};
use crate::error::{Error, Result};
use crate::series::QSeries;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JonesForm {
    /// Σ q^{−k(k+2)} (q^{1−N})_k (q^{1+N})_k
    Cyclotomic,
    /// q^{1−N} Σ q^{−kN} (q^{1−N})_k
    Geometric,
}

impl FromStr for JonesForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclotomic" => Ok(JonesForm::Cyclotomic),
            "geometric" => Ok(JonesForm::Geometric),
            _ => Err(Error::Lookup { kind: "jones form", name: s.to_string() }),
        }
    }
}

/// The sum whose value at q = e^{2πi/N} is the N-colored Jones polynomial.
pub fn jones_trefoil_sum(form: JonesForm, n: u64) -> TermSum {
    let n = n as i64;
    let f = |b| PochFactor { eps: 1, a: 0, b, eta: 1, c: 1, d: 1, e: 0 };
    match form {
        JonesForm::Cyclotomic => TermSum::new(1, -2, -4, 0, vec![f(1 - n), f(1 + n)]),
        JonesForm::Geometric => TermSum::new(1, 0, -2 * n, 1 - n, vec![f(1 - n)]),
    }
}

pub fn jones_trefoil(form: JonesForm, n: u64) -> Result<Cyclo> {
    if n == 0 {
        return Err(Error::Domain("N must be positive".into()));
    }
    eval_terminating(&jones_trefoil_sum(form, n), &EvaluationPoint::new(n, 1))
}

/// The surgery double sums by id.
pub fn surgery_series(id: &str, truncation: i64) -> Result<QSeries> {
    match id {
        "chi0_star_surgery" => chi0_star_surgery(truncation),
        "phi_star_surgery" => phi_star_surgery(truncation),
        "F0_star_surgery" => f0_star_surgery(truncation),
        _ => Err(Error::Lookup { kind: "surgery series", name: id.to_string() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms_agree() {
        for n in 1..=12 {
            let a = jones_trefoil(JonesForm::Cyclotomic, n).unwrap();
            let b = jones_trefoil(JonesForm::Geometric, n).unwrap();
            assert_eq!(a, b, "N = {n}");
        }
        assert_eq!(jones_trefoil(JonesForm::Geometric, 1).unwrap(), Cyclo::one());
    }

    #[test]
    fn n2_numeric() {
        // at q = −1 only k ≤ 1 survives: 1 + (−1)(2)(2)
        let v = jones_trefoil(JonesForm::Cyclotomic, 2).unwrap();
        assert_eq!(v, Cyclo::from_int(-3));
    }
}
