//! Bailey pairs relative to x and the reduced Bailey identity.

use crate::cyclo::{Cyclo, Q};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::series::{inv_pochhammer, pochhammer, Monomial, PochLen, Prec, QSeries};

#[derive(Clone, Debug)]
pub struct BaileyPair {
    pub x: Monomial,
    pub alpha: Vec<QSeries>,
    pub beta: Vec<QSeries>,
}

impl BaileyPair {
    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// Check the defining relation for every n below the pair length.
    pub fn check(&self, truncation: i64) -> Result<VerificationReport> {
        let again = beta_from_alpha(self.x.clone(), self.alpha.clone(), truncation)?;
        for (n, (b, c)) in self.beta.iter().zip(&again.beta).enumerate() {
            let r = b.compare(c, "bailey_pair");
            if !r.passed() {
                return Ok(r.with_id(format!("bailey_pair/n={n}")));
            }
        }
        Ok(VerificationReport::pass("bailey_pair", truncation, format!("n < {}", self.len())))
    }
}

fn one() -> Q {
    Q::from_integer(1.into())
}

/// β_n = Σ_{k≤n} α_k / ((q)_{n−k} (xq)_{n+k})
pub fn beta_from_alpha(x: Monomial, alpha: Vec<QSeries>, truncation: i64) -> Result<BaileyPair> {
    let p = Prec::q(truncation).refine(x.den);
    let xq = x.times_q(&one());
    if !xq.is_zero() && xq.exponent() <= Q::from_integer(0.into()) && xq.coeff.is_one() {
        return Err(Error::Domain("(xq)_n vanishes".into()));
    }
    let mut beta = Vec::with_capacity(alpha.len());
    for n in 0..alpha.len() {
        let mut b = QSeries::zero(p);
        for (k, a) in alpha.iter().enumerate().take(n + 1) {
            let d1 = inv_pochhammer(&Monomial::q(1, 1), &one(), PochLen::Finite((n - k) as u64), p)?;
            let d2 = inv_pochhammer(&xq, &one(), PochLen::Finite((n + k) as u64), p)?;
            b = b.add(&a.mul(&d1)?.mul(&d2)?)?;
        }
        beta.push(b);
    }
    Ok(BaileyPair { x, alpha, beta })
}

/// α = (1, 0, 0, …) of the given length.
pub fn delta_pair(x: Monomial, length: usize, truncation: i64) -> Result<BaileyPair> {
    let p = Prec::q(truncation).refine(x.den);
    let alpha = (0..length).map(|k| if k == 0 { QSeries::one(p) } else { QSeries::zero(p) }).collect();
    beta_from_alpha(x, alpha, truncation)
}

/// (1−x) Σ (q)_n/(x)_n xⁿ α_n (−1)ⁿ q^{n(n−1)/2} = Σ (q)_n xⁿ β_n (−1)ⁿ q^{n(n−1)/2}
pub fn bailey_reduced_identity(pair: &BaileyPair, truncation: i64) -> VerificationReport {
    let id = "bailey_reduced";
    let run = || -> Result<VerificationReport> {
        let x = &pair.x;
        let p = Prec::q(truncation).refine(x.den);
        let bound = Q::from_integer(truncation.into());
        // the omitted tail starts at q^{n(n−1)/2 + n·e(x)}
        let n = pair.len() as i64;
        let tail = Q::from_integer((n * (n - 1) / 2).into()) + x.exponent() * Q::from_integer(n.into());
        if pair.alpha.iter().chain(&pair.beta).all(|s| s.is_zero()) {
            return Ok(VerificationReport::pass(id, truncation, "both sides vanish"));
        }
        if tail < bound {
            return Err(Error::Divergence(format!("pair of length {n} does not reach q^{truncation}")));
        }
        let mut lhs = QSeries::zero(p);
        let mut rhs = QSeries::zero(p);
        for (k, (a, b)) in pair.alpha.iter().zip(&pair.beta).enumerate() {
            let k = k as i64;
            let sign = Cyclo::from_int(if k % 2 == 0 { 1 } else { -1 });
            let w = x.pow(k)?.times_q(&Q::from_integer((k * (k - 1) / 2).into()));
            let w = Monomial::new(w.coeff.mul(&sign), w.num, w.den).to_series(p);
            let qn = pochhammer(&Monomial::q(1, 1), &one(), PochLen::Finite(k as u64), p)?;
            let xn = inv_pochhammer(x, &one(), PochLen::Finite(k as u64), p)?;
            lhs = lhs.add(&qn.mul(&xn)?.mul(&w)?.mul(a)?)?;
            rhs = rhs.add(&qn.mul(&w)?.mul(b)?)?;
        }
        let one_minus_x = QSeries::one(p).mul_binomial(&x.coeff, x.num * (p.den / x.den) as i64);
        let lhs = lhs.mul(&one_minus_x)?;
        Ok(lhs.compare(&rhs, id))
    };
    run().unwrap_or_else(|e| VerificationReport::error(id, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_pairs() {
        let t = 40;
        let p = Prec::q(t);
        let pair = delta_pair(Monomial::q(0, 1), 6, t).unwrap();
        for (n, b) in pair.beta.iter().enumerate() {
            let qn = inv_pochhammer(&Monomial::q(1, 1), &one(), PochLen::Finite(n as u64), p).unwrap();
            assert_eq!(b.first_mismatch(&qn.mul(&qn).unwrap()).unwrap(), None);
        }
        let pair = delta_pair(Monomial::q(1, 1), 6, t).unwrap();
        for (n, b) in pair.beta.iter().enumerate() {
            let a = inv_pochhammer(&Monomial::q(1, 1), &one(), PochLen::Finite(n as u64), p).unwrap();
            let c = inv_pochhammer(&Monomial::q(2, 1), &one(), PochLen::Finite(n as u64), p).unwrap();
            assert_eq!(b.first_mismatch(&a.mul(&c).unwrap()).unwrap(), None);
        }
        assert!(pair.check(t).unwrap().passed());
    }

    #[test]
    fn reduced_identity() {
        for e in [1, 2] {
            let pair = delta_pair(Monomial::q(e, 1), 14, 80).unwrap();
            assert!(bailey_reduced_identity(&pair, 80).passed());
        }
        let zero = BaileyPair { x: Monomial::q(1, 1), alpha: vec![QSeries::zero(Prec::q(10)); 3], beta: vec![QSeries::zero(Prec::q(10)); 3] };
        assert!(bailey_reduced_identity(&zero, 10).passed());
        let short = delta_pair(Monomial::q(1, 1), 2, 80).unwrap();
        assert_eq!(bailey_reduced_identity(&short, 80).status, crate::report::Status::Error);
    }
}
