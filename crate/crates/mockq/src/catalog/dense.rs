//! Dense integer series and hypergeometric-type sums with ±1 Pochhammer factors.
//! Integer coefficients only; used for every catalog series without phases.

use crate::cyclo::{Cyclo, PochFactor};
use crate::error::{domain, Error, Result};
use crate::series::{Prec, QSeries};

fn overflow() -> Error {
    Error::Precision("integer coefficient overflow".into())
}

/// Coefficients of q^0 .. q^{len−1}.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Dense {
    pub c: Vec<i128>,
}

impl Dense {
    pub fn zero(len: i64) -> Self {
        Dense { c: vec![0; len.max(0) as usize] }
    }

    pub fn one(len: i64) -> Self {
        let mut d = Dense::zero(len);
        if let Some(x) = d.c.first_mut() {
            *x = 1;
        }
        d
    }

    pub fn len(&self) -> i64 {
        self.c.len() as i64
    }

    /// ×(1 − s·q^e), s = ±1
    pub fn mul_binom(&mut self, s: i64, e: i64) -> Result<()> {
        if e < 0 {
            return domain("negative exponent in a Pochhammer factor");
        }
        if e == 0 {
            let f = 1 - s as i128;
            for x in self.c.iter_mut() {
                *x = x.checked_mul(f).ok_or_else(overflow)?;
            }
            return Ok(());
        }
        let e = e as usize;
        for i in (e..self.c.len()).rev() {
            let t = self.c[i - e] * s as i128;
            self.c[i] = self.c[i].checked_sub(t).ok_or_else(overflow)?;
        }
        Ok(())
    }

    /// ÷(1 − s·q^e), s = ±1
    pub fn div_binom(&mut self, s: i64, e: i64) -> Result<()> {
        if e < 0 {
            return domain("negative exponent in a Pochhammer factor");
        }
        if e == 0 {
            let f = 1 - s as i128;
            if f == 0 {
                return Err(Error::DivisionByZero);
            }
            for x in self.c.iter_mut() {
                if *x % f != 0 {
                    return domain("division by a constant factor leaves the integers");
                }
                *x /= f;
            }
            return Ok(());
        }
        let e = e as usize;
        for i in e..self.c.len() {
            let t = self.c[i - e] * s as i128;
            self.c[i] = self.c[i].checked_add(t).ok_or_else(overflow)?;
        }
        Ok(())
    }

    /// ÷ p(q) for a polynomial with constant term 1, given as (exponent, coeff).
    pub fn div_poly(&mut self, p: &[(usize, i64)]) -> Result<()> {
        if p.first() != Some(&(0, 1)) {
            return domain("polynomial divisor must start with 1");
        }
        for i in 0..self.c.len() {
            let mut v = self.c[i];
            for &(e, a) in &p[1..] {
                if e <= i {
                    v = v.checked_sub(self.c[i - e] * a as i128).ok_or_else(overflow)?;
                }
            }
            self.c[i] = v;
        }
        Ok(())
    }

    /// self += sign·q^shift·o
    pub fn add_shifted(&mut self, o: &Dense, shift: i64, sign: i64) -> Result<()> {
        if shift < 0 {
            return domain("negative shift");
        }
        let n = self.c.len();
        for (i, x) in o.c.iter().enumerate() {
            let j = i + shift as usize;
            if j >= n {
                break;
            }
            self.c[j] = self.c[j].checked_add(x * sign as i128).ok_or_else(overflow)?;
        }
        Ok(())
    }

    pub fn scale(&mut self, k: i128) -> Result<()> {
        for x in self.c.iter_mut() {
            *x = x.checked_mul(k).ok_or_else(overflow)?;
        }
        Ok(())
    }

    pub fn add_const(&mut self, k: i128) {
        if let Some(x) = self.c.first_mut() {
            *x += k;
        }
    }

    pub fn to_series(&self) -> QSeries {
        let terms = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(i, x)| (i as i64, Cyclo::from_q(crate::Q::from_integer((*x).into()))));
        QSeries::from_terms(Prec::q(self.len()), terms).expect("nonnegative exponents")
    }
}

/// Σ_{k≥start} sign^k q^{(αk²+βk)/2+γ} Π num(k) / Π den(k).
#[derive(Clone, Debug)]
pub(crate) struct Hyp {
    pub sign: i64,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub start: i64,
    pub num: Vec<PochFactor>,
    pub den: Vec<PochFactor>,
}

/// (s·q^b; t·q^c)_{d k + e} with the k-dependence of the base a·k.
pub(crate) const fn pf(eps: i64, a: i64, b: i64, eta: i64, c: i64, d: i64, e: i64) -> PochFactor {
    PochFactor { eps, a, b, eta, c, d, e }
}

impl Hyp {
    pub const fn new(sign: i64, alpha: i64, beta: i64, gamma: i64) -> Self {
        Hyp { sign, alpha, beta, gamma, start: 0, num: Vec::new(), den: Vec::new() }
    }

    pub fn from(mut self, k: i64) -> Self {
        self.start = k;
        self
    }

    pub fn num(mut self, f: PochFactor) -> Self {
        self.num.push(f);
        self
    }

    pub fn den(mut self, f: PochFactor) -> Self {
        self.den.push(f);
        self
    }

    pub fn exponent(&self, k: i64) -> i64 {
        (self.alpha * k * k + self.beta * k) / 2 + self.gamma
    }

    /// Expand below q^t.
    pub fn expand(&self, t: i64) -> Result<Dense> {
        if self.alpha < 0 || (self.alpha == 0 && self.beta <= 0) {
            return Err(Error::Divergence("summand exponent does not grow".into()));
        }
        // beyond the vertex the exponent is increasing
        let vertex = if self.alpha > 0 { (-self.beta as f64 / (2.0 * self.alpha as f64)).ceil() as i64 } else { 0 };
        let mut acc = Dense::zero(t);
        let cap = 10 * t.max(1) + 100;
        let mut k = self.start;
        loop {
            let e = self.exponent(k);
            if e >= t && k >= vertex {
                return Ok(acc);
            }
            if k - self.start > cap {
                return Err(Error::Divergence(format!("sum did not reach q^{t} within {cap} terms")));
            }
            if e < t {
                if e < 0 {
                    return domain(format!("negative exponent {e} at k = {k}"));
                }
                let mut term = Dense::one(t - e);
                for f in &self.num {
                    for i in 0..(f.d * k + f.e).max(0) {
                        let s = f.eps * if i % 2 == 1 { f.eta } else { 1 };
                        term.mul_binom(s, f.a * k + f.b + f.c * i)?;
                    }
                }
                for f in &self.den {
                    for i in 0..(f.d * k + f.e).max(0) {
                        let s = f.eps * if i % 2 == 1 { f.eta } else { 1 };
                        term.div_binom(s, f.a * k + f.b + f.c * i)?;
                    }
                }
                let sg = if self.sign < 0 && k.rem_euclid(2) == 1 { -1 } else { 1 };
                acc.add_shifted(&term, e, sg)?;
            }
            k += 1;
        }
    }
}

/// Rows of Gaussian binomials [k n]_q truncated below q^t, k = 0, 1, 2, …
pub(crate) struct GaussRows {
    t: usize,
    row: Vec<Vec<i128>>,
}

impl GaussRows {
    pub fn new(t: i64) -> Self {
        GaussRows { t: t.max(1) as usize, row: Vec::new() }
    }

    /// Advance to the next k and return [k n] for n = 0..=k.
    pub fn next_row(&mut self) -> Result<&[Vec<i128>]> {
        if self.row.is_empty() {
            self.row = vec![vec![1]];
            return Ok(&self.row);
        }
        let k = self.row.len();
        let mut next = Vec::with_capacity(k + 1);
        for n in 0..=k {
            // [k n] = [k−1 n−1] + q^n [k−1 n]
            let mut v: Vec<i128> = if n >= 1 { self.row[n - 1].clone() } else { vec![] };
            if n < k {
                let src = &self.row[n];
                let need = (src.len() + n).min(self.t);
                if v.len() < need {
                    v.resize(need, 0);
                }
                for (i, x) in src.iter().enumerate() {
                    if i + n >= self.t {
                        break;
                    }
                    v[i + n] = v[i + n].checked_add(*x).ok_or_else(overflow)?;
                }
            }
            v.truncate(self.t);
            next.push(v);
        }
        self.row = next;
        Ok(&self.row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_rows_match_exact() {
        let mut g = GaussRows::new(100);
        for k in 0..12 {
            let row = g.next_row().unwrap().to_vec();
            for (n, v) in row.iter().enumerate() {
                let exact = crate::series::q_binomial(k, n as i64).unwrap();
                let got: Vec<i64> = v.iter().map(|x| *x as i64).collect();
                assert_eq!(exact.int_coeffs(got.len()), got);
            }
        }
    }

    #[test]
    fn pentagonal() {
        // (q)_∞ as a product over k of (1 − q^{k+1}): single-term sum with a long factor
        let h = Hyp::new(1, 0, 2, 0).num(pf(1, 0, 1, 1, 1, 0, 30));
        let d = h.expand(1).unwrap();
        assert_eq!(d.c, vec![1]);
        let mut e = Dense::one(16);
        for k in 1..16 {
            e.mul_binom(1, k).unwrap();
        }
        assert_eq!(&e.c[..8], &[1, -1, -1, 0, 0, 1, 0, 1]);
        let mut g = e.clone();
        for k in 1..16 {
            g.div_binom(1, k).unwrap();
        }
        assert_eq!(g, Dense::one(16));
    }
}
