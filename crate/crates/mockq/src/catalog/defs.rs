//! Generators for every catalog series: defining sums, false-theta sums,
//! terminating forms and double sums.

use super::dense::{pf, Dense, GaussRows, Hyp};
use crate::chars::{character, eichler_tilde_series, PeriodicFunction};
use crate::cyclo::{Cyclo, Q};
use crate::error::{Error, Result};
use crate::series::{Prec, QSeries};

pub(crate) type Gen = fn(i64) -> Result<QSeries>;

fn hyp(h: Hyp, t: i64) -> Result<QSeries> {
    Ok(h.expand(t)?.to_series())
}

/// c − Σ
fn c_minus(c: i128, h: Hyp, t: i64) -> Result<QSeries> {
    let mut d = h.expand(t)?;
    d.scale(-1)?;
    d.add_const(c);
    Ok(d.to_series())
}

/// c + Σ
fn c_plus(c: i128, h: Hyp, t: i64) -> Result<QSeries> {
    let mut d = h.expand(t)?;
    d.add_const(c);
    Ok(d.to_series())
}

fn false_theta(terms: &[(i64, u64, u64)], den: u64, shift: i64, t: i64) -> Result<QSeries> {
    let chi = PeriodicFunction::combination(terms)?;
    eichler_tilde_series(&chi, den, shift, t)
}

fn named_theta(id: &str, den: u64, shift: i64, t: i64) -> Result<QSeries> {
    eichler_tilde_series(&character(id)?, den, shift, t)
}

fn subst(g: Gen, k: i64, t: i64) -> Result<QSeries> {
    let inner = (t + k - 1) / k;
    Ok(g(inner)?.substitute_power(&Q::from_integer(k.into()))?.truncate(t))
}

// (−q^b; q^c)_{dk+e} etc.
const fn neg(b: i64, c: i64, d: i64, e: i64) -> crate::cyclo::PochFactor {
    pf(-1, 0, b, 1, c, d, e)
}
const fn pos(b: i64, c: i64, d: i64, e: i64) -> crate::cyclo::PochFactor {
    pf(1, 0, b, 1, c, d, e)
}
/// (q^{k+b}; q)_{k+e}
const fn shifted(b: i64, e: i64) -> crate::cyclo::PochFactor {
    pf(1, 1, b, 1, 1, 1, e)
}

// ---- order 5 ----

pub fn chi0(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).den(shifted(1, 0)), t)
}
pub fn chi1(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).den(shifted(1, 1)), t)
}
pub fn chi0_star(t: i64) -> Result<QSeries> {
    c_minus(2, Hyp::new(-1, 3, -1, 0).den(shifted(1, 0)), t)
}
pub fn chi0_star_ft(t: i64) -> Result<QSeries> {
    named_theta("chi60_111", 120, -1, t)
}
pub fn chi0_star_finite_a(t: i64) -> Result<QSeries> {
    c_plus(1, Hyp::new(1, 0, 4, 1).num(shifted(1, 0)), t)
}
pub fn chi0_star_finite_b(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).num(shifted(0, 0)), t)
}
pub fn chi0_star_finite_c(t: i64) -> Result<QSeries> {
    c_plus(1, Hyp::new(1, 0, 2, 1).num(shifted(1, 1)), t)
}
pub fn chi0_star_surgery(t: i64) -> Result<QSeries> {
    // 1 + q Σ_{k≥n≥0} (−1)^n [k n] q^{k(k+1) + n(3n+5)/2 + kn}; exponent ≥ 1 + k(k+1)
    double_sum(t, 1, 1, |k| 1 + k * (k + 1), |k, n| 1 + k * (k + 1) + n * (3 * n + 5) / 2 + k * n, |n| n % 2 == 1, 1)
}
pub fn chi1_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 3, 3, 0).den(shifted(1, 1)), t)
}
pub fn chi1_star_ft(t: i64) -> Result<QSeries> {
    named_theta("chi60_112", 120, -49, t)
}
pub fn chi1_star_finite(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).num(shifted(1, 0)), t)
}

// ---- order 3 ----

pub fn phi(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 2, 0, 0).den(neg(2, 2, 1, 0)), t)
}
pub fn nu(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 2, 2, 0).den(neg(1, 2, 1, 1)), t)
}
pub fn f(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 2, 0, 0).den(neg(1, 1, 1, 0)).den(neg(1, 1, 1, 0)), t)
}
pub fn f_fine(t: i64) -> Result<QSeries> {
    c_minus(2, Hyp::new(-1, 0, 2, 0).den(neg(1, 1, 1, 0)), t)
}
pub fn omega(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 4, 4, 0).den(pos(1, 2, 1, 1)).den(pos(1, 2, 1, 1)), t)
}
pub fn omega_fine(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).den(pos(1, 2, 1, 1)), t)
}
pub fn upchi(t: i64) -> Result<QSeries> {
    // Σ q^{n²} / Π_{k=1}^n (1 − q^k + q^{2k})
    let mut acc = Dense::zero(t);
    let mut n = 0;
    while n * n < t {
        let e = n * n;
        let mut term = Dense::one(t - e);
        for k in 1..=n as usize {
            term.div_poly(&[(0, 1), (k, -1), (2 * k, 1)])?;
        }
        acc.add_shifted(&term, e, 1)?;
        n += 1;
    }
    Ok(acc.to_series())
}
pub fn varrho(t: i64) -> Result<QSeries> {
    // Σ q^{2n(n+1)} / Π_{k=0}^n (1 + q^{2k+1} + q^{4k+2})
    let mut acc = Dense::zero(t);
    let mut n = 0;
    while 2 * n * (n + 1) < t {
        let e = 2 * n * (n + 1);
        let mut term = Dense::one(t - e);
        for k in 0..=n as usize {
            term.div_poly(&[(0, 1), (2 * k + 1, 1), (4 * k + 2, 1)])?;
        }
        acc.add_shifted(&term, e, 1)?;
        n += 1;
    }
    Ok(acc.to_series())
}

fn z12(j: i64) -> Cyclo {
    Cyclo::root(12, j)
}

/// Σ_{n≥start} coeff(n) q^{e(n)} / Π (1 − c_i q^{e_i}) with exponent e(n) eventually increasing.
fn phase_sum<F>(t: i64, start: i64, mut term: F) -> Result<QSeries>
where
    F: FnMut(i64) -> (Cyclo, i64, Vec<(Cyclo, i64)>),
{
    let p = Prec::q(t);
    let mut acc = QSeries::zero(p).with_field(12)?;
    let mut n = start;
    loop {
        let (c, e, den) = term(n);
        if e >= t {
            return Ok(acc);
        }
        if n - start > 10 * t + 100 {
            return Err(Error::Divergence("phase sum did not converge".into()));
        }
        let mut s = QSeries::monomial(c, e, p);
        for (c, e) in den {
            s = s.div_binomial(&c, e)?;
        }
        acc = acc.add(&s)?;
        n += 1;
    }
}

pub fn upchi_fine(t: i64) -> Result<QSeries> {
    // 1 − ζ3 Σ_{n≥1} e^{πin/3} q^n / (−ζ3 q)_n
    let s = phase_sum(t, 1, |n| (z12(2 * n), n, (1..=n).map(|k| (z12(4).neg(), k)).collect()))?;
    QSeries::one(Prec::q(t)).sub(&s.scale(&z12(4))?)
}
pub fn upchi_star(t: i64) -> Result<QSeries> {
    // 1 − ζ3 Σ_{n≥1} e^{−πin/3} q^{n(n−1)/2} / (e^{πi/3} q)_n
    let s = phase_sum(t, 1, |n| (z12(-2 * n), n * (n - 1) / 2, (1..=n).map(|k| (z12(2), k)).collect()))?;
    QSeries::one(Prec::q(t)).sub(&s.scale(&z12(4))?)
}
pub fn upchi_star_ft(t: i64) -> Result<QSeries> {
    // Σ ψ6^(1)(n) q^{(n²−1)/24} (1 + e^{−2πin/3})
    let chi = PeriodicFunction::psi(3, 1)?;
    let terms = (0..).take_while(|n: &i64| (n * n - 1) / 24 < t).filter_map(|n| {
        let v = chi.value(n);
        (v != 0).then(|| ((n * n - 1) / 24, Cyclo::one().add(&z12(-4 * n)).scale(&Q::from_integer(v.into()))))
    });
    QSeries::from_terms(Prec::q(t), terms.collect::<Vec<_>>())?.with_field(12)
}
pub fn varrho_fine(t: i64) -> Result<QSeries> {
    // Σ e^{−2πin/3} q^n / (ζ3 q; q²)_{n+1}
    phase_sum(t, 0, |n| (z12(-4 * n), n, (0..=n).map(|i| (z12(4), 2 * i + 1)).collect()))
}
pub fn varrho_star(t: i64) -> Result<QSeries> {
    // Σ e^{−πin/3} q^{n(n+1)} / (e^{−2πi/3} q; q²)_{n+1}
    phase_sum(t, 0, |n| (z12(-2 * n), n * (n + 1), (0..=n).map(|i| (z12(-4), 2 * i + 1)).collect()))
}
pub fn varrho_star_ft(t: i64) -> Result<QSeries> {
    // Σ (ψ6^(1) + ψ6^(2))(n) q^{(n²−1)/3} e^{2πi(1−n)/3}
    let chi = PeriodicFunction::psi(3, 1)?.add(&PeriodicFunction::psi(3, 2)?)?;
    let terms = (0..).take_while(|n: &i64| (n * n - 1) / 3 < t).filter_map(|n| {
        let v = chi.value(n);
        (v != 0).then(|| ((n * n - 1) / 3, z12(4 * (1 - n)).scale(&Q::from_integer(v.into()))))
    });
    QSeries::from_terms(Prec::q(t), terms.collect::<Vec<_>>())?.with_field(12)
}

pub fn phi_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).den(neg(2, 2, 1, 0)), t)
}
pub fn phi_star_ft(t: i64) -> Result<QSeries> {
    named_theta("chi24_1", 24, -1, t)
}
pub fn phi_star_minus_ft(t: i64) -> Result<QSeries> {
    named_theta("psi6_1", 24, -1, t)
}
pub fn phi_star_terminating(t: i64) -> Result<QSeries> {
    // 1 + q Σ (q; −q)_n q^n
    c_plus(1, Hyp::new(1, 0, 2, 1).num(pf(1, 0, 1, -1, 1, 1, 0)), t)
}
pub fn phi_star_fine(t: i64) -> Result<QSeries> {
    c_plus(1, Hyp::new(-1, 0, 4, 1).den(pos(1, 2, 1, 1)), t)
}
pub fn phi_star_surgery(t: i64) -> Result<QSeries> {
    // 1 + q Σ (−1)^n [k n]_{q²} q^{n(2n+3) + k²}; exponent ≥ 1 + k²
    double_sum(t, 1, 1, |k| 1 + k * k, |k, n| 1 + n * (2 * n + 3) + k * k, |n| n % 2 == 1, 2)
}
pub fn nu_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).den(neg(1, 2, 1, 1)), t)
}
pub fn nu_star_ft(t: i64) -> Result<QSeries> {
    named_theta("chi24_2", 24, -16, t)
}
pub fn nu_star_terminating(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 4, 0).num(pos(2, 4, 1, 0)), t)
}
pub fn nu_star_omega_sq(t: i64) -> Result<QSeries> {
    subst(omega_star, 2, t)
}
pub fn f_star(t: i64) -> Result<QSeries> {
    c_minus(2, Hyp::new(-1, 1, -1, 0).den(neg(1, 1, 1, 0)), t)
}
pub fn f_star_ft(t: i64) -> Result<QSeries> {
    Ok(named_theta("psi6_1", 24, -1, t)?.scale_q(&Q::from_integer(2.into())))
}
pub fn omega_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 2, 2, 0).den(pos(1, 2, 1, 1)), t)
}
pub fn omega_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 3, 1), (1, 3, 2)], 3, -1, t)
}
pub fn omega_star_rogers(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).num(pos(1, 2, 1, 0)), t)
}

// ---- order 7 ----

pub fn f0(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 2, 0, 0).den(shifted(1, 0)), t)
}
pub fn f1(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 2, 0, 0).from(1).den(shifted(0, 0)), t)
}
pub fn f2(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 2, 2, 0).den(shifted(1, 1)), t)
}
pub fn f0_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 1, 1, 0).den(shifted(1, 0)), t)
}
pub fn f0_star_ft(t: i64) -> Result<QSeries> {
    named_theta("chi84_111", 168, -1, t)
}
pub fn f0_star_double_sum(t: i64) -> Result<QSeries> {
    // 1 − q Σ (−1)^n [k n] q^{(n+2)k − n(n+1)/2}; exponent ≥ 1 + 2k
    double_sum(t, 1, -1, |k| 1 + 2 * k, |k, n| 1 + (n + 2) * k - n * (n + 1) / 2, |n| n % 2 == 1, 1)
}
pub fn f0_star_surgery(t: i64) -> Result<QSeries> {
    // 1 − Σ (−1)^n [k n] q^{k + n(n−1)/2 + (k+n+1)²}; exponent ≥ k + (k+1)²
    double_sum(t, 1, -1, |k| k + (k + 1) * (k + 1), |k, n| k + n * (n - 1) / 2 + (k + n + 1) * (k + n + 1), |n| n % 2 == 1, 1)
}
pub fn f1_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 1, -1, 0).from(1).den(shifted(0, 0)), t)
}
pub fn f1_star_ft(t: i64) -> Result<QSeries> {
    named_theta("chi84_112", 168, -25, t)
}
pub fn f2_star(t: i64) -> Result<QSeries> {
    c_minus(0, Hyp::new(-1, 1, 3, 0).den(shifted(1, 1)), t)
}
pub fn f2_star_ft(t: i64) -> Result<QSeries> {
    named_theta("chi84_113", 168, -121, t)
}

// ---- order 6 ----

pub fn phi6(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 2, 0, 0).num(pos(1, 2, 1, 0)).den(neg(1, 1, 2, 0)), t)
}
pub fn psi6(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 2, 4, 1).num(pos(1, 2, 1, 0)).den(neg(1, 1, 2, 1)), t)
}
pub fn rho6(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 1, 1, 0).num(neg(1, 1, 1, 0)).den(pos(1, 2, 1, 1)), t)
}
pub fn phi6_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).num(pos(1, 2, 1, 0)).den(neg(1, 1, 2, 0)), t)
}
pub fn phi6_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 6, 1), (1, 6, 5)], 24, -1, t)
}
pub fn phi6_star_theta(t: i64) -> Result<QSeries> {
    // Σ_{n∈Z} (−1)^n q^{n(3n−1)/2} + 2 Σ_{k≥0} (−1)^k q^{(k+1)(3k+2)/2}
    let mut d = Dense::zero(t);
    let mut n = 0i64;
    loop {
        let mut any = false;
        for m in if n == 0 { vec![0] } else { vec![n, -n] } {
            let e = m * (3 * m - 1) / 2;
            if e < t {
                d.c[e as usize] += if m % 2 == 0 { 1 } else { -1 };
                any = true;
            }
        }
        let e = (n + 1) * (3 * n + 2) / 2;
        if e < t {
            d.c[e as usize] += if n % 2 == 0 { 2 } else { -2 };
            any = true;
        }
        if !any {
            return Ok(d.to_series());
        }
        n += 1;
    }
}
pub fn psi6_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).num(pos(1, 2, 1, 0)).den(neg(1, 1, 2, 1)), t)
}
pub fn psi6_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 6, 3)], 24, -9, t)
}
pub fn psi6_star_theta(t: i64) -> Result<QSeries> {
    // Σ (−1)^k q^{3k(k+1)/2}
    hyp(Hyp::new(-1, 3, 3, 0), t)
}
pub fn rho6_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 0, 2, 0).num(neg(1, 1, 1, 0)).den(pos(1, 2, 1, 1)), t)
}
pub fn rho6_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 12, 6)], 48, -36, t)
}
pub fn rho6_star_even(t: i64) -> Result<QSeries> {
    // Σ q^{2n} (q²; q⁴)_n / (−q²; q²)_{2n+1}
    hyp(Hyp::new(1, 0, 4, 0).num(pos(2, 4, 1, 0)).den(neg(2, 2, 2, 1)), t)
}
pub fn rho6_star_psi_sq(t: i64) -> Result<QSeries> {
    subst(psi6_star, 2, t)
}
pub fn rho6_star_d5_cube(t: i64) -> Result<QSeries> {
    subst(d5_star, 3, t)
}

// ---- order 10 ----

pub fn phi10(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 1, 1, 0).den(pos(1, 2, 1, 1)), t)
}
pub fn psi10(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 1, 3, 1).den(pos(1, 2, 1, 1)), t)
}
pub fn x10(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 2, 0, 0).den(neg(1, 1, 2, 0)), t)
}
pub fn chi10(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 2, 4, 1).den(neg(1, 1, 2, 1)), t)
}
pub fn phi10_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 1, 3, 0).den(pos(1, 2, 1, 1)), t)
}
pub fn phi10_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 5, 2), (1, 5, 3)], 5, -4, t)
}
pub fn psi10_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 1, 1, 0).den(pos(1, 2, 1, 1)), t)
}
pub fn psi10_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 5, 1), (1, 5, 4)], 5, -1, t)
}
pub fn x10_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 2, 2, 0).den(neg(1, 1, 2, 0)), t)
}
pub fn x10_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 5, 1)], 40, -1, t)
}
pub fn chi10_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 2, 2, 0).den(neg(1, 1, 2, 1)), t)
}
pub fn chi10_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 5, 3)], 40, -9, t)
}

// ---- even orders (2, 4, 8) ----

pub fn d5(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).num(neg(1, 1, 1, 0)).den(pos(1, 2, 1, 1)), t)
}
pub fn d6(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).num(neg(2, 2, 1, 0)).den(shifted(1, 1)), t)
}
pub fn i12(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 4, 0).num(neg(1, 2, 1, 0)).den(shifted(1, 1)), t)
}
pub fn i13(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(1, 0, 2, 0).num(neg(1, 2, 1, 0)).den(shifted(1, 1)), t)
}
pub fn d5_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 1, 1, 0).num(neg(1, 1, 1, 0)).den(pos(1, 2, 1, 1)), t)
}
pub fn d5_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 2, 1)], 4, -1, t)
}
pub fn d6_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 1, 1, 0).num(neg(2, 2, 1, 0)).den(shifted(1, 1)), t)
}
pub fn d6_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 4, 1), (1, 4, 3)], 4, -1, t)
}
pub fn i12_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 1, 1, 0).num(neg(1, 2, 1, 0)).den(shifted(1, 1)), t)
}
pub fn i12_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 8, 1), (1, 8, 7)], 16, -1, t)
}
pub fn i13_star(t: i64) -> Result<QSeries> {
    hyp(Hyp::new(-1, 1, 3, 0).num(neg(1, 2, 1, 0)).den(shifted(1, 1)), t)
}
pub fn i13_star_ft(t: i64) -> Result<QSeries> {
    false_theta(&[(1, 8, 3), (1, 8, 5)], 16, -9, t)
}

// ---- double sums ----

/// c + s·Σ_{k≥n≥0} sign(n) [k n]_{q^b} q^{e(k,n)}, stopping at the first k whose
/// lower bound `low(k)` reaches t (`low` must be nondecreasing).
fn double_sum<L, E, S>(t: i64, c: i128, s: i128, low: L, e: E, odd: S, b: i64) -> Result<QSeries>
where
    L: Fn(i64) -> i64,
    E: Fn(i64, i64) -> i64,
    S: Fn(i64) -> bool,
{
    let mut acc = Dense::zero(t);
    acc.add_const(c);
    let mut rows = GaussRows::new((t + b - 1) / b);
    let mut k = 0;
    while low(k) < t {
        let row = rows.next_row()?;
        for (n, poly) in row.iter().enumerate() {
            let ex = e(k, n as i64);
            debug_assert!(ex >= low(k));
            if ex >= t {
                continue;
            }
            let sg = if odd(n as i64) { -s } else { s };
            for (i, v) in poly.iter().enumerate() {
                let j = ex + b * i as i64;
                if j >= t {
                    break;
                }
                let cell = &mut acc.c[j as usize];
                *cell = cell.checked_add(sg * v).ok_or_else(|| Error::Precision("overflow".into()))?;
            }
        }
        k += 1;
    }
    Ok(acc.to_series())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: Result<QSeries>, n: usize) -> Vec<i64> {
        s.unwrap().int_coeffs(n)
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(ints(chi0(5), 4), vec![1, 1, 1, 2]);
        assert_eq!(ints(chi0_star_ft(9), 9), vec![1, 1, 0, 1, 0, 0, 0, 1, -1]);
        assert_eq!(ints(nu_star(11), 11), vec![1, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1]);
        assert_eq!(ints(nu_star_ft(11), 11), vec![1, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1]);
        // constant term of every surgery form is 1
        for g in [chi0_star_surgery, phi_star_surgery, f0_star_surgery] {
            assert_eq!(g(3).unwrap().coeff(0), Cyclo::one());
        }
    }

    #[test]
    fn chi0_direct_sum() {
        // direct double loop over the defining sum, independent of the dense path
        let t = 30usize;
        let mut acc = vec![0i64; t];
        for n in 0..t {
            let mut term = vec![0i64; t];
            term[n] = 1;
            for k in n + 1..=2 * n {
                for i in k..t {
                    term[i] += term[i - k];
                }
            }
            for i in 0..t {
                acc[i] += term[i];
            }
        }
        assert_eq!(ints(chi0(t as i64), t), acc);
    }

    #[test]
    fn phase_series_agree() {
        assert_eq!(upchi_star(40).unwrap().first_mismatch(&upchi_star_ft(40).unwrap()).unwrap(), None);
        assert_eq!(varrho_star(40).unwrap().first_mismatch(&varrho_star_ft(40).unwrap()).unwrap(), None);
        assert_eq!(upchi(40).unwrap().first_mismatch(&upchi_fine(40).unwrap()).unwrap(), None);
        assert_eq!(varrho(40).unwrap().first_mismatch(&varrho_fine(40).unwrap()).unwrap(), None);
    }
}
