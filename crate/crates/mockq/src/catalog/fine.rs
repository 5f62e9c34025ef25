//! Andrews' and Fine's transformations, checked at concrete specializations.

use super::defs::{nu_star, nu_star_terminating};
use super::dense::{pf, Dense, Hyp};
use crate::error::Result;
use crate::report::VerificationReport;
use crate::series::QSeries;

/// c·q^e with c ∈ {−1, 0, 1}.
#[derive(Clone, Copy, Debug)]
pub struct Mono {
    pub c: i64,
    pub e: i64,
}

const fn m(c: i64, e: i64) -> Mono {
    Mono { c, e }
}

impl Mono {
    fn mul(self, o: Mono) -> Mono {
        m(self.c * o.c, self.e + o.e)
    }
}

/// d ← d·(z; q^step)_n, or d/(z; q^step)_n; n = None is the infinite product.
fn poch(d: &mut Dense, z: Mono, step: i64, n: Option<i64>, inverse: bool) -> Result<()> {
    if z.c == 0 {
        return Ok(());
    }
    let mut i = 0;
    loop {
        let e = z.e + step * i;
        match n {
            Some(n) if i >= n => return Ok(()),
            None if e >= d.len() => return Ok(()),
            _ => {}
        }
        if inverse {
            d.div_binom(z.c, e)?;
        } else {
            d.mul_binom(z.c, e)?;
        }
        i += 1;
    }
}

/// Σ_{n≥0} z^n term(n), with term(n) a power series; stops once n·e(z) ≥ t.
fn geometric_sum<F>(t: i64, z: Mono, mut term: F) -> Result<Dense>
where
    F: FnMut(i64, &mut Dense) -> Result<()>,
{
    let mut acc = Dense::zero(t);
    let mut n = 0;
    loop {
        let (c, e) = (if z.c < 0 && n % 2 == 1 { -1 } else { 1 }, z.e * n);
        if e >= t || z.c == 0 && n > 0 {
            return Ok(acc);
        }
        let mut d = Dense::one(t - e);
        term(n, &mut d)?;
        acc.add_shifted(&d, e, c)?;
        n += 1;
    }
}

/// Both sides of
/// Σ (α;q^{2b})_n (β;q^b)_{2n} / ((q^{2b};q^{2b})_n (γ;q^b)_{2n}) zⁿ
///   = (β;q^b)_∞ (αz;q^{2b})_∞ / ((γ;q^b)_∞ (z;q^{2b})_∞) · Σ (γ/β;q^b)_m (z;q^{2b})_m / ((q^b;q^b)_m (αz;q^{2b})_m) β^m
pub fn andrews_sides(b: i64, a: Mono, bt: Mono, g: Mono, z: Mono, t: i64) -> Result<(QSeries, QSeries)> {
    let az = a.mul(z);
    let lhs = geometric_sum(t, z, |n, d| {
        poch(d, a, 2 * b, Some(n), false)?;
        poch(d, bt, b, Some(2 * n), false)?;
        poch(d, m(1, 2 * b), 2 * b, Some(n), true)?;
        poch(d, g, b, Some(2 * n), true)
    })?;
    let g_over_b = if g.c == 0 { m(0, 0) } else { m(g.c * bt.c, g.e - bt.e) };
    let mut rhs = geometric_sum(t, bt, |n, d| {
        poch(d, g_over_b, b, Some(n), false)?;
        poch(d, z, 2 * b, Some(n), false)?;
        poch(d, m(1, b), b, Some(n), true)?;
        poch(d, az, 2 * b, Some(n), true)
    })?;
    poch(&mut rhs, bt, b, None, false)?;
    poch(&mut rhs, az, 2 * b, None, false)?;
    poch(&mut rhs, g, b, None, true)?;
    poch(&mut rhs, z, 2 * b, None, true)?;
    Ok((lhs.to_series(), rhs.to_series()))
}

/// Both sides of
/// Σ (αq)_{2m} (βq)_m / ((αq)_m (q)_m) z^m
///   = (βzq)_∞/(z)_∞ · Σ (βq)_k (z)_k / ((q)_k (βzq)_{2k}) (−αz)^k q^{k(3k+1)/2}
pub fn fine_sides(a: Mono, bt: Mono, z: Mono, t: i64) -> Result<(QSeries, QSeries)> {
    let aq = m(a.c, a.e + 1);
    let bq = m(bt.c, bt.e + 1);
    let bzq = bq.mul(z);
    let lhs = geometric_sum(t, z, |n, d| {
        poch(d, aq, 1, Some(2 * n), false)?;
        poch(d, bq, 1, Some(n), false)?;
        poch(d, aq, 1, Some(n), true)?;
        poch(d, m(1, 1), 1, Some(n), true)
    })?;
    let maz = m(-a.c * z.c, a.e + z.e);
    let mut rhs = Dense::zero(t);
    let mut k = 0;
    while maz.c != 0 || k == 0 {
        let e = maz.e * k + k * (3 * k + 1) / 2;
        if e >= t {
            break;
        }
        let sign = if maz.c < 0 && k % 2 == 1 { -1 } else { 1 };
        let mut d = Dense::one(t - e);
        poch(&mut d, bq, 1, Some(k), false)?;
        poch(&mut d, z, 1, Some(k), false)?;
        poch(&mut d, m(1, 1), 1, Some(k), true)?;
        poch(&mut d, bzq, 1, Some(2 * k), true)?;
        rhs.add_shifted(&d, e, sign)?;
        k += 1;
    }
    poch(&mut rhs, bzq, 1, None, false)?;
    poch(&mut rhs, z, 1, None, true)?;
    Ok((lhs.to_series(), rhs.to_series()))
}

fn check(id: &str, sides: Result<(QSeries, QSeries)>) -> VerificationReport {
    match sides {
        Ok((l, r)) => l.compare(&r, id),
        Err(e) => VerificationReport::error(id, e.to_string()),
    }
}

/// (1 − q) Σ (q;−q)_n qⁿ = Σ (−1)ⁿ q^{2n} / (q³;q²)_n
fn fine_20_72(t: i64) -> Result<(QSeries, QSeries)> {
    let mut l = Hyp::new(1, 0, 2, 0).num(pf(1, 0, 1, -1, 1, 1, 0)).expand(t)?;
    l.mul_binom(1, 1)?;
    let r = Hyp::new(-1, 0, 4, 0).den(pf(1, 0, 3, 1, 2, 1, 0)).expand(t)?;
    Ok((l.to_series(), r.to_series()))
}

/// Every specialization of the two transformations used for the order-3 and order-6 results.
pub fn verify_fine_andrews_specializations(t: i64) -> Vec<VerificationReport> {
    vec![
        check("andrews(0,q,-q^2,q)", andrews_sides(1, m(0, 0), m(1, 1), m(-1, 2), m(1, 1), t)),
        check("andrews(0,q,-q,q)", andrews_sides(1, m(0, 0), m(1, 1), m(-1, 1), m(1, 1), t)),
        check("andrews(q,-q,0,q^2)", andrews_sides(1, m(1, 1), m(-1, 1), m(0, 0), m(1, 2), t)),
        check("andrews[q^2](0,q^2,-q^4,q^2)", andrews_sides(2, m(0, 0), m(1, 2), m(-1, 4), m(1, 2), t)),
        check("fine(1,0,q)", fine_sides(m(1, 0), m(0, 0), m(1, 1), t)),
        check("fine(q,0,q)", fine_sides(m(1, 1), m(0, 0), m(1, 1), t)),
        check("fine_20_71(nu_star)", (|| Ok((nu_star(t)?, nu_star_terminating(t)?)))()),
        check("fine_20_72(phi_star)", fine_20_72(t)),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn specializations_hold() {
        for r in super::verify_fine_andrews_specializations(60) {
            assert!(r.passed(), "{r}");
        }
    }
}
