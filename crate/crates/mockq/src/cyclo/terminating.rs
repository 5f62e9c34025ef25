//! Exact evaluation of q-hypergeometric sums that terminate at a root of unity.

use super::hiprec::{self, HiComplex};
use super::{Cyclo, IntRootSum, Q};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

/// The point ζ_M^j (not necessarily primitive).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvaluationPoint {
    pub root_order: u64,
    pub power: i64,
    pub description: String,
}

impl EvaluationPoint {
    pub fn new(root_order: u64, power: i64) -> Self {
        EvaluationPoint { root_order, power, description: format!("q = ζ_{root_order}^{power}") }
    }

    pub fn described(root_order: u64, power: i64, description: impl Into<String>) -> Self {
        EvaluationPoint { root_order, power, description: description.into() }
    }

    /// Multiplicative order of the point.
    pub fn exact_order(&self) -> u64 {
        let m = self.root_order as i64;
        (m / self.power.rem_euclid(m).gcd(&m).max(1)) as u64
    }

    /// The point raised to the k-th power.
    pub fn pow(&self, k: i64) -> EvaluationPoint {
        EvaluationPoint::new(self.root_order, self.power * k)
    }
}

/// The factor (eps·q^{a·k+b}; eta·q^c)_{d·k+e} of the k-th summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PochFactor {
    pub eps: i64,
    pub a: i64,
    pub b: i64,
    pub eta: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
}

impl PochFactor {
    /// (q^{a k + b}; q)_{d k + e}
    pub fn plain(a: i64, b: i64, d: i64, e: i64) -> Self {
        PochFactor { eps: 1, a, b, eta: 1, c: 1, d, e }
    }

    fn len(&self, k: i64) -> i64 {
        (self.d * k + self.e).max(0)
    }
}

/// Σ_{k≥0} sign^k · q^{(α k² + β k)/2 + γ} · Π factors(k).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermSum {
    pub sign: i64,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub factors: Vec<PochFactor>,
}

impl TermSum {
    pub fn new(sign: i64, alpha: i64, beta: i64, gamma: i64, factors: Vec<PochFactor>) -> Self {
        assert!((alpha + beta) % 2 == 0, "exponent (αk²+βk)/2 must be integral");
        TermSum { sign, alpha, beta, gamma, factors }
    }

    fn exponent(&self, k: i64) -> i64 {
        (self.alpha * k * k + self.beta * k) / 2 + self.gamma
    }

    /// Smallest k0 such that every summand with k ≥ k0 vanishes at the point,
    /// proved from the periodic structure of one Pochhammer factor.
    pub fn vanishing_index(&self, pt: &EvaluationPoint) -> Option<i64> {
        let m = pt.root_order as i64;
        let j = pt.power;
        let mut best: Option<i64> = None;
        for f in &self.factors {
            if f.d < 1 {
                continue;
            }
            // factor values eps·eta^i·ζ^{j(a k + b + c i)} are periodic in i with period p
            let p = 2 * m;
            // beyond k_full the window i ∈ [0, d k + e) covers a full period
            let k_full = ((p - f.e) as f64 / f.d as f64).ceil().max(0.0) as i64;
            // the window content depends on k only through (j·a·k) mod m and eps/eta
            let all = (0..2 * m).all(|r| {
                (0..p).any(|i| {
                    let s = f.eps * if i % 2 == 1 { f.eta } else { 1 };
                    let ex = (j * (f.a * r + f.b + f.c * i)).rem_euclid(m);
                    // 1 = s·ζ^ex with ζ^ex = ±1 only at ex = 0 or m/2
                    (ex == 0 && s == 1) || (m % 2 == 0 && ex == m / 2 && s == -1)
                })
            });
            if all {
                best = Some(best.map_or(k_full, |b: i64| b.min(k_full)));
            }
        }
        best
    }
}

/// Evaluate a terminating sum exactly in Q(ζ_M), M = `pt.root_order`.
pub fn eval_terminating(ts: &TermSum, pt: &EvaluationPoint) -> Result<Cyclo> {
    let m = pt.root_order;
    let j = pt.power;
    let k0 = ts.vanishing_index(pt).ok_or_else(|| {
        Error::Divergence(format!("sum does not provably terminate at {}", pt.description))
    })?;
    let mut acc = vec![BigInt::zero(); m as usize];
    for k in 0..k0 {
        let mut prod = IntRootSum::monomial(m, 0, 1);
        'f: for f in &ts.factors {
            for i in 0..f.len(k) {
                let s = f.eps * if i % 2 == 1 { f.eta } else { 1 };
                prod.mul_binomial(s, j * (f.a * k + f.b + f.c * i));
                if prod.is_zero_poly() {
                    break 'f;
                }
            }
        }
        if prod.is_zero_poly() {
            continue;
        }
        let sgn = if ts.sign < 0 && k % 2 == 1 { -1 } else { 1 };
        prod.add_shifted_into(&mut acc, j * ts.exponent(k), sgn);
    }
    Ok(Cyclo::from_poly(m, acc.into_iter().map(Q::from_integer).collect()))
}

/// Direct numeric summation of the same sum at `bits` precision; independent of
/// the group-ring arithmetic and used as its oracle.
pub fn eval_terminating_numeric(ts: &TermSum, pt: &EvaluationPoint, bits: u32) -> Result<HiComplex> {
    let m = pt.root_order;
    let j = pt.power;
    let k0 = ts.vanishing_index(pt).ok_or_else(|| Error::Divergence(pt.description.clone()))?;
    let w = bits + 48;
    let z = hiprec::root_of_unity(m, w);
    let pows: Vec<HiComplex> = {
        let mut v = vec![HiComplex::one(w)];
        for i in 1..m {
            v.push(v[i as usize - 1].mul(&z));
        }
        v
    };
    let at = |e: i64| pows[e.rem_euclid(m as i64) as usize].clone();
    let one = HiComplex::one(w);
    let mut total = HiComplex::zero(w);
    for k in 0..k0 {
        let mut prod = one.clone();
        for f in &ts.factors {
            for i in 0..f.len(k) {
                let s = f.eps * if i % 2 == 1 { f.eta } else { 1 };
                let t = at(j * (f.a * k + f.b + f.c * i));
                prod = prod.mul(&if s == 1 { one.sub(&t) } else { one.add(&t) });
            }
        }
        let term = prod.mul(&at(j * ts.exponent(k)));
        total = if ts.sign < 0 && k % 2 == 1 { total.sub(&term) } else { total.add(&term) };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Σ q^n (q^n; q)_n
    fn finite_b() -> TermSum {
        TermSum::new(1, 0, 2, 0, vec![PochFactor::plain(1, 0, 1, 0)])
    }

    #[test]
    fn le_form_at_one() {
        // at q = 1 only n = 0 survives
        assert_eq!(eval_terminating(&finite_b(), &EvaluationPoint::new(1, 0)).unwrap(), Cyclo::one());
    }

    #[test]
    fn numeric_oracle_agrees() {
        for m in [2u64, 3, 5, 7, 12] {
            let pt = EvaluationPoint::new(m, 1);
            let exact = eval_terminating(&finite_b(), &pt).unwrap().to_complex(128);
            let num = eval_terminating_numeric(&finite_b(), &pt, 128).unwrap();
            assert!((exact.to_c64() - num.to_c64()).norm() < 1e-12);
        }
    }

    #[test]
    fn non_terminating_rejected() {
        // Σ q^n (q; q^2)_n never vanishes at a 4th root of unity
        let ts = TermSum::new(1, 0, 2, 0, vec![PochFactor { eps: 1, a: 0, b: 1, eta: 1, c: 2, d: 1, e: 0 }]);
        assert!(eval_terminating(&ts, &EvaluationPoint::new(4, 1)).is_err());
        assert!(eval_terminating(&ts, &EvaluationPoint::new(5, 1)).is_ok());
    }
}
