//! Odd periodic functions, the weight-3/2 theta series built from them, and
//! their Eichler integrals (formal series, exact values at 1/N and N).

use crate::cyclo::{q_frac, Cyclo, EvaluationPoint, RootSum, Q};
use crate::error::{domain, Error, Result};
use crate::report::VerificationReport;
use crate::series::{Prec, QSeries};
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;
use std::fmt;

/// Integer-valued odd function of period 2P, stored as its value table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicFunction {
    modulus: u64,
    values: Vec<i64>,
}

impl PeriodicFunction {
    /// Build from a full value table; rejects tables that are not odd.
    pub fn from_values(values: Vec<i64>) -> Result<Self> {
        let m = values.len() as u64;
        if m == 0 || m % 2 == 1 {
            return domain("modulus must be a positive even integer");
        }
        let f = PeriodicFunction { modulus: m, values };
        if !f.is_odd() {
            return domain("periodic function is not odd");
        }
        Ok(f)
    }

    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 2 && modulus % 2 == 0);
        PeriodicFunction { modulus, values: vec![0; modulus as usize] }
    }

    /// ψ_{2P}^{(a)}: +1 at n ≡ a, −1 at n ≡ −a (mod 2P).
    pub fn psi(p: u64, a: u64) -> Result<Self> {
        if p < 2 || a < 1 || a >= p {
            return domain(format!("ψ basis needs 1 ≤ a ≤ P−1 (P={p}, a={a})"));
        }
        let m = 2 * p;
        let mut v = vec![0; m as usize];
        v[a as usize] += 1;
        v[(m - a) as usize] -= 1;
        Ok(PeriodicFunction { modulus: m, values: v })
    }

    /// Σ sign·ψ_{2P}^{(a)} over (sign, P, a); all terms must share P.
    pub fn combination(terms: &[(i64, u64, u64)]) -> Result<Self> {
        let Some(&(_, p0, _)) = terms.first() else {
            return Ok(PeriodicFunction::zero(2));
        };
        let mut acc = PeriodicFunction::zero(2 * p0);
        for &(s, p, a) in terms {
            if p != p0 {
                return domain(format!("modulus mismatch: 2·{p} vs 2·{p0}"));
            }
            acc = acc.add(&PeriodicFunction::psi(p, a)?.scale(s))?;
        }
        Ok(acc)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// P = modulus / 2
    pub fn half_period(&self) -> u64 {
        self.modulus / 2
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, n: i64) -> i64 {
        self.values[n.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn is_odd(&self) -> bool {
        let m = self.modulus as i64;
        (0..m).all(|n| self.value(m - n) == -self.value(n))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.modulus != o.modulus {
            return domain(format!("modulus mismatch: {} vs {}", self.modulus, o.modulus));
        }
        let values = self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect();
        Ok(PeriodicFunction { modulus: self.modulus, values })
    }

    pub fn scale(&self, s: i64) -> Self {
        PeriodicFunction { modulus: self.modulus, values: self.values.iter().map(|v| v * s).collect() }
    }

    /// Same function viewed with a multiple of the modulus.
    pub fn lift(&self, modulus: u64) -> Result<Self> {
        if modulus % self.modulus != 0 {
            return domain(format!("cannot lift modulus {} to {}", self.modulus, modulus));
        }
        Ok(PeriodicFunction { modulus, values: (0..modulus as i64).map(|n| self.value(n)).collect() })
    }

    /// Support residues in 0..modulus with their values.
    pub fn support(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.values.iter().enumerate().filter(|(_, v)| **v != 0).map(|(n, v)| (n as i64, *v))
    }
}

impl fmt::Display for PeriodicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.support().map(|(n, v)| format!("{n}:{v}")).collect();
        write!(f, "mod {} [{}]", self.modulus, parts.join(" "))
    }
}

/// Named characters addressable by string id.
pub const CHARACTER_IDS: &[&str] = &[
    "chi60_111", "chi60_112", "chi84_111", "chi84_112", "chi84_113", "chi24_1", "chi24_2", "psi4_1", "psi6_1",
    "psi6_2", "psi8_1", "psi8_3", "psi10_1", "psi10_2", "psi10_3", "psi10_4", "psi12_1", "psi12_3", "psi12_5",
    "psi16_1", "psi16_3", "psi16_5", "psi16_7", "psi24_6",
];

/// Look up a character by id. Besides the named list, any `psi<2P>_<a>` is accepted.
pub fn character(id: &str) -> Result<PeriodicFunction> {
    let c = PeriodicFunction::combination;
    match id {
        "chi60_111" => c(&[(1, 30, 1), (1, 30, 11), (1, 30, 19), (1, 30, 29)]),
        "chi60_112" => c(&[(1, 30, 7), (1, 30, 13), (1, 30, 17), (1, 30, 23)]),
        "chi84_111" => c(&[(1, 42, 1), (-1, 42, 13), (-1, 42, 29), (1, 42, 41)]),
        "chi84_112" => c(&[(-1, 42, 5), (-1, 42, 19), (-1, 42, 23), (-1, 42, 37)]),
        "chi84_113" => c(&[(-1, 42, 11), (-1, 42, 17), (-1, 42, 25), (-1, 42, 31)]),
        "chi24_1" => c(&[(1, 12, 1), (1, 12, 5), (1, 12, 7), (1, 12, 11)]),
        "chi24_2" => c(&[(1, 12, 4), (1, 12, 8)]),
        _ => {
            let lookup = || Error::Lookup { kind: "character", name: id.to_string() };
            let rest = id.strip_prefix("psi").ok_or_else(lookup)?;
            let (m, a) = rest.split_once('_').ok_or_else(lookup)?;
            let m: u64 = m.parse().map_err(|_| lookup())?;
            let a: u64 = a.parse().map_err(|_| lookup())?;
            if m % 2 == 1 {
                return Err(lookup());
            }
            PeriodicFunction::psi(m / 2, a).map_err(|_| lookup())
        }
    }
}

/// Σ_{n≥0} chi(n) q^{(n²+shift)/den}, known for q-exponents below `order`.
pub fn eichler_tilde_series(chi: &PeriodicFunction, den: u64, shift: i64, order: i64) -> Result<QSeries> {
    if den == 0 {
        return domain("exponent denominator must be positive");
    }
    let d = den as i64;
    let trunc = order.saturating_mul(d);
    let mut terms = vec![];
    let mut n: i64 = 0;
    while n * n + shift < trunc {
        let c = chi.value(n);
        if c != 0 {
            let e = n * n + shift;
            if e < 0 {
                return domain(format!("negative exponent ({e})/{den} at n = {n}"));
            }
            terms.push((e, Cyclo::from_int(c)));
        }
        n += 1;
    }
    let mut s = QSeries::from_terms(Prec::new(den, trunc), terms)?;
    s.normalize_den();
    Ok(s)
}

/// Limit of Σ_{n≥0} chi(n) x^{n²+shift} as x → ζ_{M·den}^j radially, where the
/// point is q = ζ_M^j and x = q^{1/den}. Exact, in Q(ζ_M) when every exponent
/// (n²+shift)/den on the support is integral and in Q(ζ_{M·den}) otherwise.
pub fn radial_limit(chi: &PeriodicFunction, den: u64, shift: i64, pt: &EvaluationPoint) -> Result<Cyclo> {
    Ok(radial_limit_sum(chi, den, shift, pt)?.to_cyclo())
}

/// Same as [`radial_limit`] but left as an unreduced sum of roots of unity.
pub fn radial_limit_sum(chi: &PeriodicFunction, den: u64, shift: i64, pt: &EvaluationPoint) -> Result<RootSum> {
    let m = pt.root_order as i64;
    let d = den as i64;
    if d <= 0 || m <= 0 {
        return domain("radial limit needs positive orders");
    }
    let integral = chi.support().all(|(r, _)| (0..d).all(|t| ((r + t * chi.modulus() as i64).pow(2) + shift) % d == 0));
    let order = if integral { m } else { m * d };
    let l = chi.modulus() as i64 * m * d;
    let mut acc = vec![0i128; order as usize];
    for k in 1..=l {
        let c = chi.value(k);
        if c == 0 {
            continue;
        }
        let e = k * k + shift;
        let ex = if integral { (pt.power * (e / d)).rem_euclid(m) } else { (pt.power * e).rem_euclid(m * d) };
        acc[ex as usize] += (k * c) as i128;
    }
    let mut rs = RootSum::new(order as u64);
    for (i, v) in acc.into_iter().enumerate() {
        if v != 0 {
            rs.add_term(i as i64, &Q::new((-v).into(), (l as i128).into()));
        }
    }
    Ok(rs)
}

/// Ψ̃(1/N) = −Σ_{k=0}^{2PN} chi(k) e^{πi k²/(2PN)} B₁(k/(2PN)), as a sum in Q(ζ_{4PN}).
pub fn eichler_tilde_at_inverse_n_sum(chi: &PeriodicFunction, n: u64) -> Result<RootSum> {
    if n == 0 {
        return domain("N must be positive");
    }
    let p = chi.half_period() as i64;
    let l = 2 * p * n as i64;
    let mut rs = RootSum::new(2 * l as u64);
    for k in 0..=l {
        let c = chi.value(k);
        if c == 0 {
            continue;
        }
        // −c·(k/l − 1/2) = c·(l − 2k)/(2l)
        rs.add_term((k * k).rem_euclid(2 * l), &q_frac(c * (l - 2 * k), 2 * l));
    }
    Ok(rs)
}

pub fn eichler_tilde_at_inverse_n(chi: &PeriodicFunction, n: u64) -> Result<Cyclo> {
    Ok(eichler_tilde_at_inverse_n_sum(chi, n)?.to_cyclo())
}

/// Ψ̃_P^{(a)}(N) = (1 − a/P) e^{πi a² N/(2P)} for integer N.
pub fn eichler_tilde_at_integer(p: u64, a: u64, n: i64) -> Result<Cyclo> {
    if p < 2 || a < 1 || a >= p {
        return domain(format!("need 1 ≤ a ≤ P−1 (P={p}, a={a})"));
    }
    let c = Q::from_integer(1.into()) - q_frac(a as i64, p as i64);
    Ok(Cyclo::root(4 * p, (a * a) as i64 * n).scale(&c))
}

/// Exact algebraic matrix entry: numeric value plus a description.
#[derive(Clone, Debug, Serialize)]
pub struct ModularTriple {
    pub p: u64,
    pub labels: Vec<String>,
    pub s: Vec<Vec<f64>>,
    pub s_description: String,
    /// T-phases as rational multiples of π
    #[serde(serialize_with = "ser_rationals")]
    pub t_phases: Vec<Q>,
}

impl ModularTriple {
    pub fn dim(&self) -> usize {
        self.s.len()
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (self.s[i][j] - self.s[j][i]).abs() <= tol))
    }

    /// max |S² − I|
    pub fn involution_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0f64;
        for i in 0..n {
            for j in 0..n {
                let v: f64 = (0..n).map(|k| self.s[i][k] * self.s[k][j]).sum();
                let e = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((v - e).abs());
            }
        }
        worst
    }
}

fn ser_rationals<S: serde::Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

/// M(P)_{ab} = √(2/P) sin(abπ/P) with T-phases a²/(2P)·π.
pub fn m_matrix(p: u64) -> Result<ModularTriple> {
    if p < 2 {
        return domain("M(P) needs P ≥ 2");
    }
    let n = (p - 1) as usize;
    let f = (2.0 / p as f64).sqrt();
    let s = (1..=n)
        .map(|a| (1..=n).map(|b| f * ((a * b) as f64 * PI / p as f64).sin()).collect())
        .collect();
    Ok(ModularTriple {
        p,
        labels: (1..=n).map(|a| format!("psi{}_{}", 2 * p, a)).collect(),
        s,
        s_description: format!("sqrt(2/{p}) sin(a b pi/{p})"),
        t_phases: (1..=n as i64).map(|a| q_frac(a * a, 2 * p as i64)).collect(),
    })
}

/// S/T data for the theorem vectors: "2_3_5", "2_3_7", "2_3_4", "2_3_3".
pub fn theorem_matrices(id: &str) -> Result<(ModularTriple, Vec<PeriodicFunction>)> {
    let sn = |k: f64, m: f64| (k * PI / m).sin();
    match id {
        "2_3_5" => {
            let f = 2.0 / 5f64.sqrt();
            let s = vec![vec![f * sn(1., 5.), f * sn(2., 5.)], vec![f * sn(2., 5.), -f * sn(1., 5.)]];
            Ok((
                ModularTriple {
                    p: 30,
                    labels: vec!["chi60_111".into(), "chi60_112".into()],
                    s,
                    s_description: "2/sqrt5 [[sin pi/5, sin 2pi/5],[sin 2pi/5, -sin pi/5]]".into(),
                    t_phases: vec![q_frac(1, 60), q_frac(49, 60)],
                },
                vec![character("chi60_111")?, character("chi60_112")?],
            ))
        }
        "2_3_7" => {
            let f = -2.0 / 7f64.sqrt();
            let (a, b, c) = (sn(1., 7.), sn(2., 7.), sn(3., 7.));
            let s = vec![vec![f * a, f * b, f * c], vec![f * b, -f * c, f * a], vec![f * c, f * a, -f * b]];
            Ok((
                ModularTriple {
                    p: 42,
                    labels: vec!["chi84_111".into(), "chi84_112".into(), "chi84_113".into()],
                    s,
                    s_description: "-2/sqrt7 [[s1,s2,s3],[s2,-s3,s1],[s3,s1,-s2]], sk = sin(k pi/7)".into(),
                    t_phases: vec![q_frac(1, 84), q_frac(25, 84), q_frac(-47, 84)],
                },
                vec![character("chi84_111")?, character("chi84_112")?, character("chi84_113")?],
            ))
        }
        "2_3_4" => {
            // components at q^{n²/48}: χ24 characters lifted to modulus 24 for a common P = 12
            let s = vec![vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0], vec![0.0, 1.0, 0.0]];
            Ok((
                ModularTriple {
                    p: 12,
                    labels: vec!["chi24_1".into(), "chi24_2".into(), "psi6_1".into()],
                    s,
                    s_description: "[[1,0,0],[0,0,1],[0,1,0]]".into(),
                    t_phases: vec![q_frac(1, 24), q_frac(2, 3), q_frac(1, 24)],
                },
                vec![character("chi24_1")?, character("chi24_2")?, character("psi6_1")?.lift(24)?],
            ))
        }
        "2_3_3" => {
            let r3 = 3f64.sqrt();
            let r2 = 2f64.sqrt();
            let s = vec![vec![1.0 / r3, r2 / r3], vec![r2 / r3, -1.0 / r3]];
            Ok((
                ModularTriple {
                    p: 6,
                    labels: vec!["(psi12_1+psi12_5)/sqrt2".into(), "psi12_3".into()],
                    s,
                    s_description: "1/sqrt3 [[1, sqrt2],[sqrt2, -1]]".into(),
                    t_phases: vec![q_frac(1, 12), q_frac(3, 4)],
                },
                vec![PeriodicFunction::combination(&[(1, 6, 1), (1, 6, 5)])?, character("psi12_3")?],
            ))
        }
        _ => Err(Error::Lookup { kind: "S-matrix", name: id.to_string() }),
    }
}

/// Σ_{n>T} n e^{−c n²} ≤ e^{−c T²}/(2c) + (T+1) e^{−c (T+1)²}, valid once T ≥ 1/√(2c).
fn gaussian_tail(c: f64, t: f64) -> f64 {
    (-c * t * t).exp() / (2.0 * c) + (t + 1.0) * (-c * (t + 1.0) * (t + 1.0)).exp()
}

/// Number of terms needed for the theta sum to reach `tol`.
pub fn theta_terms(chi: &PeriodicFunction, tau: Complex64, tol: f64) -> Result<usize> {
    if tau.im <= 0.0 {
        return domain("theta series needs Im τ > 0");
    }
    let c = 2.0 * PI * tau.im / (4.0 * chi.half_period() as f64);
    let amp = 2.0 * chi.max_abs() as f64;
    let mut t = (1.0 / (2.0 * c)).sqrt().ceil().max(1.0);
    while amp * gaussian_tail(c, t) > tol {
        t *= 1.25;
        if t > 1e7 {
            return Err(Error::Precision(format!("theta tail not below {tol:e} within 10^7 terms")));
        }
    }
    Ok(t.ceil() as usize)
}

/// Ψ(τ) = ½ Σ_{n∈Z} n chi(n) e^{2πiτ n²/(4P)}, summed over n ≥ 1 (the summand is even in n).
pub fn theta_numeric(chi: &PeriodicFunction, tau: Complex64, tol: f64) -> Result<Complex64> {
    let t = theta_terms(chi, tau, tol)?;
    Ok(theta_partial(chi, tau, t, true))
}

/// Partial sum to |n| ≤ terms, either over n ≥ 1 or symmetrically over n ∈ [−terms, terms].
pub fn theta_partial(chi: &PeriodicFunction, tau: Complex64, terms: usize, folded: bool) -> Complex64 {
    let p4 = 4.0 * chi.half_period() as f64;
    let i2pi = Complex64::new(0.0, 2.0 * PI);
    let mut s = Complex64::new(0.0, 0.0);
    let range: Box<dyn Iterator<Item = i64>> =
        if folded { Box::new(1..=terms as i64) } else { Box::new(-(terms as i64)..=terms as i64) };
    for n in range {
        let c = chi.value(n);
        if c == 0 {
            continue;
        }
        let w = (i2pi * tau * ((n * n) as f64 / p4)).exp();
        s += w * (n * c) as f64;
    }
    if folded {
        s
    } else {
        s * 0.5
    }
}

/// (i/τ)^{3/2}, principal branch.
pub fn s_factor(tau: Complex64) -> Complex64 {
    (Complex64::new(0.0, 1.0) / tau).powf(1.5)
}

/// Check Ψ^{(a)}(τ) = (i/τ)^{3/2} Σ_b S_ab Ψ^{(b)}(−1/τ) for a vector of characters.
pub fn verify_s_generic(
    id: &str,
    chars: &[PeriodicFunction],
    s: &[Vec<f64>],
    tau: Complex64,
    tol: f64,
) -> Result<VerificationReport> {
    let inner = tol * 1e-3;
    let lhs: Vec<Complex64> = chars.iter().map(|c| theta_numeric(c, tau, inner)).collect::<Result<_>>()?;
    let tau2 = -1.0 / tau;
    let rhs0: Vec<Complex64> = chars.iter().map(|c| theta_numeric(c, tau2, inner)).collect::<Result<_>>()?;
    let f = s_factor(tau);
    let mut worst = 0f64;
    let mut first = None;
    for (a, l) in lhs.iter().enumerate() {
        let r: Complex64 = f * s[a].iter().zip(&rhs0).map(|(x, y)| y * *x).sum::<Complex64>();
        let d = (l - r).norm();
        if d > worst {
            worst = d;
        }
        if d > tol && first.is_none() {
            first = Some(a);
        }
    }
    let t = format!("tol={tol:e}");
    Ok(match first {
        None => VerificationReport::pass(id, t, format!("max deviation {worst:.3e}")),
        Some(a) => VerificationReport::fail(id, t, None, format!("component {} deviates by {worst:.3e}", a + 1)),
    })
}

/// S-transformation of the P-vector (ψ_{2P}^{(1)}, …, ψ_{2P}^{(P−1)}) at τ.
pub fn verify_s_transform(p: u64, tau: Complex64, tol: f64) -> Result<VerificationReport> {
    let m = m_matrix(p)?;
    let chars: Vec<PeriodicFunction> = (1..p).map(|a| PeriodicFunction::psi(p, a)).collect::<Result<_>>()?;
    verify_s_generic(&format!("psi_under_S P={p} tau={tau}"), &chars, &m.s, tau, tol)
}

/// T-transformation Ψ^{(a)}(τ+1) = e^{πi a²/(2P)} Ψ^{(a)}(τ).
pub fn verify_t_transform(p: u64, a: u64, tau: Complex64, tol: f64) -> Result<VerificationReport> {
    let chi = PeriodicFunction::psi(p, a)?;
    let l = theta_numeric(&chi, tau + 1.0, tol * 1e-3)?;
    let r = Complex64::from_polar(1.0, PI * (a * a) as f64 / (2 * p) as f64) * theta_numeric(&chi, tau, tol * 1e-3)?;
    let d = (l - r).norm();
    let id = format!("psi_under_T P={p} a={a}");
    Ok(if d <= tol {
        VerificationReport::pass(id, format!("tol={tol:e}"), format!("deviation {d:.3e}"))
    } else {
        VerificationReport::fail(id, format!("tol={tol:e}"), None, format!("deviation {d:.3e}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_and_registry() {
        let p = PeriodicFunction::psi(2, 1).unwrap();
        assert_eq!(p.values(), &[0, 1, 0, -1]);
        let p = PeriodicFunction::psi(30, 29).unwrap();
        assert_eq!((p.value(29), p.value(31)), (1, -1));
        assert!(PeriodicFunction::psi(3, 3).is_err());
        for id in CHARACTER_IDS {
            assert!(character(id).unwrap().is_odd(), "{id}");
        }
        let c = character("chi84_112").unwrap();
        assert_eq!((c.value(5), c.value(79), c.value(1)), (-1, 1, 0));
        assert!(character("chi99").is_err());
        assert!(PeriodicFunction::combination(&[(1, 3, 1), (1, 4, 1)]).is_err());
        assert!(PeriodicFunction::combination(&[]).unwrap().is_zero());
    }

    #[test]
    fn tilde_series_examples() {
        let s = eichler_tilde_series(&character("chi60_111").unwrap(), 120, -1, 30).unwrap();
        let v: Vec<i64> = s.int_coeffs(30);
        let nz: Vec<(usize, i64)> = v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i, *c)).collect();
        assert_eq!(nz, vec![(0, 1), (1, 1), (3, 1), (7, 1), (8, -1), (14, -1), (20, -1), (29, -1)]);
        let s = eichler_tilde_series(&character("psi4_1").unwrap(), 4, -1, 13).unwrap();
        assert_eq!(s.int_coeffs(13), vec![1, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1]);
        let z = eichler_tilde_series(&PeriodicFunction::zero(4), 4, 0, 10).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn value_at_inverse_n() {
        let chi = PeriodicFunction::psi(2, 1).unwrap();
        let v = eichler_tilde_at_inverse_n(&chi, 1).unwrap();
        assert_eq!(v, Cyclo::root(8, 1).scale(&q_frac(1, 2)));
        let c = v.to_c64();
        assert!((c.re - 0.3535533905932738).abs() < 1e-15 && (c.im - 0.3535533905932738).abs() < 1e-15);
    }

    #[test]
    fn inverse_n_is_radial_limit() {
        for p in 2..=6u64 {
            for a in 1..p {
                let chi = PeriodicFunction::psi(p, a).unwrap();
                for n in 1..=8u64 {
                    let x = eichler_tilde_at_inverse_n(&chi, n).unwrap();
                    let y = radial_limit(&chi, 4 * p, 0, &EvaluationPoint::new(n, 1)).unwrap();
                    assert_eq!(x, y, "P={p} a={a} N={n}");
                }
            }
        }
    }

    #[test]
    fn value_at_integer() {
        assert_eq!(eichler_tilde_at_integer(30, 1, 2).unwrap(), Cyclo::root(60, 1).scale(&q_frac(29, 30)));
        assert_eq!(eichler_tilde_at_integer(2, 1, 0).unwrap(), Cyclo::from_q(q_frac(1, 2)));
        assert_eq!(eichler_tilde_at_integer(5, 4, 1).unwrap(), Cyclo::root(10, 8).scale(&q_frac(1, 5)));
    }

    #[test]
    fn matrices() {
        assert!((m_matrix(2).unwrap().s[0][0] - 1.0).abs() < 1e-15);
        let m3 = m_matrix(3).unwrap();
        let h = 0.5f64.sqrt();
        assert!((m3.s[0][0] - h).abs() < 1e-15 && (m3.s[0][1] - h).abs() < 1e-15);
        assert!((m3.s[1][1] + h).abs() < 1e-15);
        for p in 2..=12 {
            let m = m_matrix(p).unwrap();
            assert!(m.is_symmetric(1e-15) && m.involution_defect() < 1e-12);
        }
        for id in ["2_3_5", "2_3_7", "2_3_4", "2_3_3"] {
            let (m, _) = theorem_matrices(id).unwrap();
            assert!(m.is_symmetric(1e-15) && m.involution_defect() < 1e-12, "{id}");
        }
    }

    #[test]
    fn theta_symmetric_and_folded_agree() {
        let chi = character("chi60_111").unwrap();
        let tau = Complex64::new(0.0, 1.0);
        let t = theta_terms(&chi, tau, 1e-15).unwrap();
        let a = theta_partial(&chi, tau, t, true);
        let b = theta_partial(&chi, tau, t, false);
        assert!((a - b).norm() < 1e-13);
        assert!(theta_terms(&chi, Complex64::new(0.0, 0.01), 1e-12).unwrap() <= 10_000);
        assert!(theta_numeric(&chi, Complex64::new(0.0, -1.0), 1e-12).is_err());
    }

    #[test]
    fn s_and_t_transforms() {
        let i = Complex64::new(0.0, 1.0);
        assert!(verify_s_transform(2, i, 1e-12).unwrap().passed());
        assert!(verify_s_transform(2, 2.0 * i, 1e-12).unwrap().passed());
        assert!(verify_s_transform(5, Complex64::new(0.2, 0.8), 1e-10).unwrap().passed());
        assert!(verify_t_transform(5, 2, Complex64::new(0.1, 0.7), 1e-12).unwrap().passed());
    }
}
