//! Exact arithmetic in cyclotomic fields Q(ζ_M).
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(M)−1}` reduced modulo
//! the M-th cyclotomic polynomial. Mixed-order arithmetic promotes both operands
//! to the least common multiple of their orders.

pub mod hiprec;
pub mod terminating;

use crate::error::{Error, Result};
use hiprec::HiComplex;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

pub use terminating::{eval_terminating, EvaluationPoint, PochFactor, TermSum};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn poly_cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Φ_M as coefficients from the constant term upward, by dividing x^M − 1 by
/// Φ_d for every proper divisor d of M.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Vec<i64>> {
    assert!(m >= 1, "cyclotomic_polynomial: order must be positive");
    if let Some(p) = poly_cache().read().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = exact_div(&num, &phi_d);
        }
    }
    let p = Arc::new(num);
    poly_cache().write().unwrap().insert(m, p.clone());
    p
}

// division of integer polynomials by a monic divisor
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        if c != 0 {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= c * bj;
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut res = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            res -= res / p;
        }
        p += 1;
    }
    if n > 1 {
        res -= res / n;
    }
    res
}

/// Reduce a dense polynomial in ζ_M (any length) to canonical coordinates.
fn reduce(m: u64, mut a: Vec<Q>) -> Vec<Q> {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    if a.len() > deg {
        for i in (deg..a.len()).rev() {
            if a[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut a[i], Q::zero());
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    let k = i - deg + j;
                    a[k] -= &c * Q::from_integer(BigInt::from(pj));
                }
            }
        }
        a.truncate(deg);
    }
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// An exact element of Q(ζ_M).
#[derive(Clone, Debug)]
pub struct Cyclo {
    order: u64,
    coords: Vec<Q>,
}

impl Cyclo {
    /// Element Σ c_i ζ_M^i from an arbitrary-length coefficient list.
    pub fn from_poly(order: u64, coeffs: Vec<Q>) -> Self {
        assert!(order >= 1);
        Cyclo { order, coords: reduce(order, coeffs) }
    }

    pub fn zero() -> Self {
        Cyclo { order: 1, coords: vec![] }
    }

    pub fn one() -> Self {
        Self::from_q(Q::one())
    }

    pub fn from_q(q: Q) -> Self {
        Cyclo::from_poly(1, vec![q])
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_q(q_int(n))
    }

    /// ζ_m^j for any integer j.
    pub fn root(m: u64, j: i64) -> Self {
        let j = j.rem_euclid(m as i64) as usize;
        let mut c = vec![Q::zero(); j + 1];
        c[j] = Q::one();
        Cyclo::from_poly(m, c)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Some(q) when the element is rational.
    pub fn as_rational(&self) -> Option<Q> {
        match self.coords.len() {
            0 => Some(Q::zero()),
            1 => Some(self.coords[0].clone()),
            _ => None,
        }
    }

    /// Re-express in Q(ζ_m); requires order | m.
    pub fn promote(&self, m: u64) -> Result<Cyclo> {
        if m % self.order != 0 {
            return Err(Error::Domain(format!("cannot promote order {} to {}", self.order, m)));
        }
        if m == self.order {
            return Ok(self.clone());
        }
        let s = (m / self.order) as usize;
        let mut c = vec![Q::zero(); if self.coords.is_empty() { 0 } else { (self.coords.len() - 1) * s + 1 }];
        for (i, x) in self.coords.iter().enumerate() {
            c[i * s] = x.clone();
        }
        Ok(Cyclo::from_poly(m, c))
    }

    fn common(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo, u64) {
        let m = a.order.lcm(&b.order);
        (a.promote(m).unwrap(), b.promote(m).unwrap(), m)
    }

    /// Re-express in the smallest Q(ζ_d), d | M, containing the value.
    pub fn simplify(&self) -> Cyclo {
        if self.coords.len() <= 1 {
            return Cyclo { order: 1, coords: self.coords.clone() };
        }
        let m = self.order;
        for d in (1..m).filter(|d| m % d == 0) {
            let basis: Vec<Vec<Q>> = (0..euler_phi(d) as i64)
                .map(|i| Cyclo::root(d, i).promote(m).unwrap().coords)
                .collect();
            if let Some(c) = solve_in_span(&basis, &self.coords, euler_phi(m) as usize) {
                return Cyclo::from_poly(d, c);
            }
        }
        self.clone()
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo { order: self.order, coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, o: &Cyclo) -> Cyclo {
        let (a, b, m) = Self::common(self, o);
        let n = a.coords.len().max(b.coords.len());
        let mut c = vec![Q::zero(); n];
        for (i, x) in a.coords.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in b.coords.iter().enumerate() {
            c[i] += x;
        }
        Cyclo::from_poly(m, c)
    }

    pub fn sub(&self, o: &Cyclo) -> Cyclo {
        self.add(&o.neg())
    }

    pub fn scale(&self, q: &Q) -> Cyclo {
        if q.is_zero() {
            return Cyclo::zero();
        }
        Cyclo { order: self.order, coords: self.coords.iter().map(|c| c * q).collect() }
    }

    pub fn mul(&self, o: &Cyclo) -> Cyclo {
        if let Some(q) = o.as_rational() {
            return self.scale(&q);
        }
        if let Some(q) = self.as_rational() {
            return o.scale(&q);
        }
        let (a, b, m) = Self::common(self, o);
        let mut c = vec![Q::zero(); a.coords.len() + b.coords.len() - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        Cyclo::from_poly(m, c)
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against Φ_M.
    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Cyclo::from_q(q.recip()));
        }
        // monomial c·ζ^k
        let nz: Vec<usize> = (0..self.coords.len()).filter(|&i| !self.coords[i].is_zero()).collect();
        if nz.len() == 1 {
            let k = nz[0] as i64;
            return Ok(Cyclo::root(self.order, -k).scale(&self.coords[nz[0]].recip()));
        }
        let m = self.order;
        let phi: Vec<Q> = cyclotomic_polynomial(m).iter().map(|&c| q_int(c)).collect();
        // invariant: s·a ≡ r (mod Φ)
        let (mut r0, mut r1) = (phi, self.coords.clone());
        let (mut s0, mut s1): (Vec<Q>, Vec<Q>) = (vec![], vec![Q::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant
        let c = r1[0].recip();
        Ok(Cyclo::from_poly(m, s1.into_iter().map(|x| x * &c).collect()))
    }

    pub fn div(&self, o: &Cyclo) -> Result<Cyclo> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Cyclo> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclo::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Galois action ζ ↦ ζ^k with gcd(k, M) = 1; k = −1 is complex conjugation.
    pub fn galois(&self, k: i64) -> Cyclo {
        let m = self.order as i64;
        debug_assert_eq!(k.rem_euclid(m).gcd(&m), 1 % m.max(1));
        let mut c = vec![Q::zero(); m as usize];
        for (i, x) in self.coords.iter().enumerate() {
            let j = (i as i64 * k).rem_euclid(m) as usize;
            c[j] += x;
        }
        Cyclo::from_poly(self.order, c)
    }

    pub fn conj(&self) -> Cyclo {
        self.galois(-1)
    }

    /// Double-precision embedding ζ_M ↦ e^{2πi/M}.
    pub fn to_c64(&self) -> num_complex::Complex64 {
        let m = self.order as f64;
        self.coords
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let a = 2.0 * std::f64::consts::PI * i as f64 / m;
                num_complex::Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), a)
            })
            .sum()
    }

    /// Embedding at `bits` fractional bits with a rigorous error bound.
    pub fn to_complex(&self, bits: u32) -> HiComplex {
        let w = bits + 32;
        let z = hiprec::root_of_unity(self.order, w);
        let mut acc = HiComplex::zero(w);
        let mut p = HiComplex::one(w);
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                p = p.mul(&z);
            }
            if !c.is_zero() {
                acc = acc.add(&p.scale(c));
            }
        }
        acc
    }

    /// Precision ladder: start at 64 bits, double until the bound meets `tol`.
    pub fn to_complex_tol(&self, tol: f64) -> Result<HiComplex> {
        let mut bits = 64;
        while bits <= 8192 {
            let v = self.to_complex(bits);
            if v.err_bound() <= tol {
                return Ok(v);
            }
            bits *= 2;
        }
        Err(Error::Precision(format!("tolerance {tol:e} not reached at 8192 bits")))
    }
}

// coefficients c with Σ c_i basis_i = target, if any (dense Gaussian elimination)
fn solve_in_span(basis: &[Vec<Q>], target: &[Q], dim: usize) -> Option<Vec<Q>> {
    let n = basis.len();
    // rows = coordinates, columns = basis vectors + target
    let mut a: Vec<Vec<Q>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Q> = basis.iter().map(|b| b.get(r).cloned().unwrap_or_else(Q::zero)).collect();
            row.push(target.get(r).cloned().unwrap_or_else(Q::zero));
            row
        })
        .collect();
    let mut pivots = vec![];
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..dim).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..dim {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..=n {
                    let v = &a[row][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if (row..dim).any(|r| !a[r][n].is_zero()) {
        return None;
    }
    let mut c = vec![Q::zero(); n];
    for (r, &col) in pivots.iter().enumerate() {
        c[col] = a[r][n].clone();
    }
    Some(c)
}

fn poly_trim(mut a: Vec<Q>) -> Vec<Q> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    poly_trim(c)
}

fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut c = vec![Q::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        c[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        c[i] -= x;
    }
    poly_trim(c)
}

fn poly_divmod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![], poly_trim(r));
    }
    let lead = b[db].recip();
    let mut q = vec![Q::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    (poly_trim(q), poly_trim(r))
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Self) -> bool {
        let (a, b, _) = Cyclo::common(self, o);
        a.coords == b.coords
    }
}
impl Eq for Cyclo {}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M={}; [", self.order)?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl FromStr for Cyclo {
    type Err = Error;
    fn from_str(s: &str) -> Result<Cyclo> {
        let bad = |msg: &str| Error::Parse { line: 1, col: 1, msg: format!("cyclotomic text: {msg}") };
        let s = s.trim();
        let rest = s.strip_prefix("M=").ok_or_else(|| bad("expected `M=`"))?;
        let (m, rest) = rest.split_once(';').ok_or_else(|| bad("expected `;`"))?;
        let m: u64 = m.trim().parse().map_err(|_| bad("bad order"))?;
        if m == 0 {
            return Err(bad("order must be positive"));
        }
        let body = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(|| bad("expected [..]"))?;
        let mut coords = vec![];
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            coords.push(part.parse::<Q>().map_err(|_| bad("bad rational"))?);
        }
        Ok(Cyclo::from_poly(m, coords))
    }
}

impl serde::Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

macro_rules! forward_ops {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $m(self, o: &Cyclo) -> Cyclo {
                Cyclo::$f(self, o)
            }
        }
        impl std::ops::$tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, o: Cyclo) -> Cyclo {
                Cyclo::$f(&self, &o)
            }
        }
    };
}
forward_ops!(Add, add, add);
forward_ops!(Sub, sub, sub);
forward_ops!(Mul, mul, mul);

impl std::ops::Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo::neg(&self)
    }
}

/// Σ_r c_r ζ_M^r kept in the group ring Q[x]/(x^M − 1); cheap to accumulate,
/// reduced to a field element only on request.
#[derive(Clone, Debug)]
pub struct RootSum {
    order: u64,
    coeffs: Vec<Q>,
}

impl RootSum {
    pub fn new(order: u64) -> Self {
        RootSum { order, coeffs: vec![Q::zero(); order as usize] }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn add_term(&mut self, r: i64, c: &Q) {
        let i = r.rem_euclid(self.order as i64) as usize;
        self.coeffs[i] += c;
    }

    pub fn scale(&mut self, c: &Q) {
        for x in self.coeffs.iter_mut() {
            *x *= c;
        }
    }

    pub fn to_cyclo(&self) -> Cyclo {
        Cyclo::from_poly(self.order, self.coeffs.clone())
    }

    pub fn to_complex(&self, bits: u32) -> HiComplex {
        let w = bits + 32 + (64 - self.order.leading_zeros());
        let z = hiprec::root_of_unity(self.order, w);
        let mut acc = HiComplex::zero(w);
        let mut p = HiComplex::one(w);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                p = p.mul(&z);
            }
            if !c.is_zero() {
                acc = acc.add(&p.scale(c));
            }
        }
        acc
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        let m = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| num_complex::Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), 2.0 * std::f64::consts::PI * i as f64 / m))
            .sum()
    }
}

/// Integer-coefficient group-ring element used by the terminating-sum evaluator:
/// multiplication by (1 − ε ζ^j) is a shift-and-subtract.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct IntRootSum {
    pub(crate) coeffs: Vec<BigInt>,
}

impl IntRootSum {
    pub(crate) fn monomial(order: u64, r: i64, c: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); order as usize];
        coeffs[r.rem_euclid(order as i64) as usize] = BigInt::from(c);
        IntRootSum { coeffs }
    }

    pub(crate) fn is_zero_poly(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// self ← self·(1 − eps·ζ^j)
    pub(crate) fn mul_binomial(&mut self, eps: i64, j: i64) {
        let m = self.coeffs.len() as i64;
        let j = j.rem_euclid(m) as usize;
        if j == 0 {
            if eps == 1 {
                self.coeffs.iter_mut().for_each(|c| c.set_zero());
            } else {
                self.coeffs.iter_mut().for_each(|c| *c *= 2);
            }
            return;
        }
        let old = self.coeffs.clone();
        let n = old.len();
        for (i, c) in old.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = (i + j) % n;
            if eps == 1 {
                self.coeffs[k] -= c;
            } else {
                self.coeffs[k] += c;
            }
        }
    }

    /// acc += sign·ζ^shift·self
    pub(crate) fn add_shifted_into(&self, acc: &mut [BigInt], shift: i64, sign: i64) {
        let n = acc.len();
        let s = shift.rem_euclid(n as i64) as usize;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if sign > 0 {
                acc[(i + s) % n] += c;
            } else {
                acc[(i + s) % n] -= c;
            }
        }
    }
}

/// Check a value against a complex number, for tests and numeric cross-checks.
pub fn approx_eq_c64(x: &Cyclo, z: num_complex::Complex64, tol: f64) -> bool {
    (x.to_c64() - z).norm() <= tol
}

/// gcd helper over i64, non-negative result.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.abs().gcd(&b.abs())
}

impl Cyclo {
    /// Absolute value bound |x| ≤ Σ|c_i|, used for quick numeric sanity checks.
    pub fn l1(&self) -> Q {
        self.coords.iter().map(|c| c.abs()).fold(Q::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_polys() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
    }

    #[test]
    fn phi_degree() {
        for m in 1..=200u64 {
            assert_eq!(cyclotomic_polynomial(m).len() as u64 - 1, euler_phi(m), "m={m}");
        }
    }

    #[test]
    fn i_squared() {
        let i = Cyclo::root(4, 1);
        assert_eq!(i.mul(&i), Cyclo::from_int(-1));
    }

    #[test]
    fn root_sum_vanishes() {
        let s = Cyclo::one() + Cyclo::root(3, 1) + Cyclo::root(3, 2);
        assert!(s.is_zero());
    }

    #[test]
    fn promotion_compat() {
        assert_eq!(Cyclo::root(12, 4), Cyclo::root(3, 1).promote(12).unwrap());
        assert_eq!(Cyclo::root(12, 4), Cyclo::root(3, 1));
    }

    #[test]
    fn inverse() {
        let x = Cyclo::root(7, 1) - Cyclo::one();
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), Cyclo::one());
        let z = Cyclo::root(15, 2).scale(&q_frac(3, 2)) + Cyclo::root(15, 7) + Cyclo::from_int(5);
        assert_eq!(z.mul(&z.inv().unwrap()), Cyclo::one());
        assert!(Cyclo::zero().inv().is_err());
    }

    #[test]
    fn text_roundtrip() {
        let z = Cyclo::root(12, 5).scale(&q_frac(-2, 3)) + Cyclo::from_int(1);
        let t = z.to_string();
        assert_eq!(t.parse::<Cyclo>().unwrap(), z);
        assert_eq!(Cyclo::zero().to_string(), "M=1; []");
    }

    #[test]
    fn zeta4_numeric() {
        let v = Cyclo::root(4, 1).to_complex(128);
        assert!(v.re_f64().abs() < 1e-30 && (v.im_f64() - 1.0).abs() < 1e-30);
        assert!(v.err_bound() < 1e-30);
    }

    #[test]
    fn simplify_to_subfield() {
        let z = Cyclo::root(3, 1).promote(12).unwrap();
        assert_eq!(z.simplify().order(), 3);
    }

    #[test]
    fn galois_conj() {
        let z = Cyclo::root(8, 1);
        assert_eq!(z.mul(&z.conj()), Cyclo::one());
    }
}
