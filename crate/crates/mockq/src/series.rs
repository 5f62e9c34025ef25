//! Truncated formal power series in q^{1/D} with cyclotomic coefficients.

use crate::cyclo::{q_int, Cyclo, EvaluationPoint, Q};
use crate::error::{domain, Error, Result};
use crate::report::VerificationReport;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Truncation value marking an exact (polynomial) series.
pub const EXACT: i64 = i64::MAX;

/// Working precision: series in q^{1/den}, known for exponent numerators below `trunc`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prec {
    pub den: u64,
    pub trunc: i64,
}

impl Prec {
    pub fn new(den: u64, trunc: i64) -> Self {
        assert!(den >= 1);
        Prec { den, trunc }
    }

    /// Integer powers of q below q^order.
    pub fn q(order: i64) -> Self {
        Prec { den: 1, trunc: order }
    }

    /// Same bound on a finer grid q^{1/(lcm)}.
    pub fn refine(self, d: u64) -> Self {
        let l = self.den.lcm(&d);
        Prec { den: l, trunc: sat_mul(self.trunc, (l / self.den) as i64) }
    }

    /// Truncation bound as a q-exponent.
    pub fn bound(&self) -> Option<Q> {
        (self.trunc != EXACT).then(|| Q::new(self.trunc.into(), (self.den as i64).into()))
    }

    /// Does q^{e} lie below the truncation?
    pub fn below(&self, e: &Q) -> bool {
        match self.bound() {
            None => true,
            Some(b) => *e < b,
        }
    }
}

fn sat_mul(t: i64, s: i64) -> i64 {
    if t == EXACT {
        EXACT
    } else {
        t.saturating_mul(s)
    }
}

fn sat_add(t: i64, s: i64) -> i64 {
    if t == EXACT {
        EXACT
    } else {
        t.saturating_add(s)
    }
}

/// c · q^{num/den}
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial {
    pub coeff: Cyclo,
    pub num: i64,
    pub den: u64,
}

impl Monomial {
    pub fn new(coeff: Cyclo, num: i64, den: u64) -> Self {
        assert!(den >= 1, "monomial denominator must be positive");
        Monomial { coeff, num, den }
    }

    /// q^{num/den}
    pub fn q(num: i64, den: u64) -> Self {
        Monomial::new(Cyclo::one(), num, den)
    }

    /// −q^{num/den}
    pub fn neg_q(num: i64, den: u64) -> Self {
        Monomial::new(Cyclo::from_int(-1), num, den)
    }

    pub fn zero() -> Self {
        Monomial::new(Cyclo::zero(), 0, 1)
    }

    pub fn exponent(&self) -> Q {
        Q::new(self.num.into(), (self.den as i64).into())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let e = self.exponent() + o.exponent();
        Monomial::new(self.coeff.mul(&o.coeff), e.numer().to_i64().unwrap(), e.denom().to_u64().unwrap())
    }

    pub fn times_q(&self, e: &Q) -> Monomial {
        self.mul(&Monomial::new(Cyclo::one(), e.numer().to_i64().unwrap(), e.denom().to_u64().unwrap()))
    }

    pub fn inv(&self) -> Result<Monomial> {
        Ok(Monomial::new(self.coeff.inv()?, -self.num, self.den))
    }

    pub fn pow(&self, k: i64) -> Result<Monomial> {
        let e = self.exponent() * q_int(k);
        Ok(Monomial::new(self.coeff.pow(k)?, e.numer().to_i64().unwrap(), e.denom().to_u64().unwrap()))
    }

    pub fn to_series(&self, p: Prec) -> QSeries {
        let p = p.refine(self.den);
        let n = self.num * (p.den / self.den) as i64;
        QSeries::monomial(self.coeff.clone(), n, p)
    }
}

/// Sparse truncated series Σ c_n q^{n/D}, n < T.
#[derive(Clone, Debug)]
pub struct QSeries {
    den: u64,
    trunc: i64,
    field: u64,
    laurent: bool,
    coeffs: BTreeMap<i64, Cyclo>,
}

impl QSeries {
    pub fn zero(p: Prec) -> Self {
        QSeries { den: p.den, trunc: p.trunc, field: 1, laurent: false, coeffs: BTreeMap::new() }
    }

    pub fn one(p: Prec) -> Self {
        Self::monomial(Cyclo::one(), 0, p)
    }

    pub fn constant(c: Cyclo, p: Prec) -> Self {
        Self::monomial(c, 0, p)
    }

    /// c·q^{n/D}; negative n makes the series Laurent.
    pub fn monomial(c: Cyclo, n: i64, p: Prec) -> Self {
        let mut s = QSeries::zero(p);
        s.field = c.order();
        s.laurent = n < 0;
        if !c.is_zero() && n < p.trunc {
            s.coeffs.insert(n, c);
        }
        s
    }

    /// Build from (exponent numerator, coefficient) pairs; rejects negative exponents.
    pub fn from_terms(p: Prec, terms: impl IntoIterator<Item = (i64, Cyclo)>) -> Result<Self> {
        let s = Self::collect(p, terms);
        if s.coeffs.keys().next().is_some_and(|&n| n < 0) {
            return domain("negative exponent outside a Laurent constructor");
        }
        Ok(s)
    }

    /// Laurent constructor: negative exponents permitted.
    pub fn laurent(p: Prec, terms: impl IntoIterator<Item = (i64, Cyclo)>) -> Self {
        let mut s = Self::collect(p, terms);
        s.laurent = true;
        s
    }

    fn collect(p: Prec, terms: impl IntoIterator<Item = (i64, Cyclo)>) -> Self {
        let mut s = QSeries::zero(p);
        for (n, c) in terms {
            if n >= p.trunc || c.is_zero() {
                continue;
            }
            s.field = s.field.lcm(&c.order());
            let e = s.coeffs.entry(n).or_insert_with(Cyclo::zero);
            *e = e.add(&c);
            if e.is_zero() {
                s.coeffs.remove(&n);
            }
        }
        s
    }

    /// Integer-coefficient series from a dense slice starting at q^0.
    pub fn from_ints(p: Prec, c: &[i64]) -> Self {
        Self::collect(p, c.iter().enumerate().map(|(i, &x)| (i as i64, Cyclo::from_int(x))))
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn prec(&self) -> Prec {
        Prec { den: self.den, trunc: self.trunc }
    }

    pub fn field(&self) -> u64 {
        self.field
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn is_exact(&self) -> bool {
        self.trunc == EXACT
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: i64) -> Cyclo {
        self.coeffs.get(&n).cloned().unwrap_or_else(Cyclo::zero)
    }

    /// Coefficient as a rational, if it is one.
    pub fn coeff_q(&self, n: i64) -> Option<Q> {
        self.coeff(n).as_rational()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Cyclo)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Lowest stored exponent numerator.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest stored exponent numerator.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Declare the coefficient field to be Q(ζ_k) (k must be a multiple of the current one).
    pub fn with_field(mut self, k: u64) -> Result<Self> {
        if k % self.field != 0 {
            return Err(Error::FieldMismatch(self.field, k));
        }
        self.field = k;
        Ok(self)
    }

    /// Mark an exact polynomial (no truncation).
    pub fn exact(mut self) -> Self {
        self.trunc = EXACT;
        self
    }

    pub fn truncate(&self, t: i64) -> Self {
        let mut s = self.clone();
        if t < s.trunc {
            s.trunc = t;
            s.coeffs = s.coeffs.into_iter().filter(|(n, _)| *n < t).collect();
        }
        s
    }

    /// Truncate to q-exponents below `order`.
    pub fn truncate_q(&self, order: &Q) -> Self {
        let t = (order * q_int(self.den as i64)).ceil().to_integer().to_i64().unwrap();
        self.truncate(t)
    }

    /// Re-express over q^{1/d}, d a multiple of the current denominator.
    pub fn rescale(&self, d: u64) -> Result<Self> {
        if d % self.den != 0 {
            return domain(format!("cannot rescale D={} to D={}", self.den, d));
        }
        let s = (d / self.den) as i64;
        Ok(QSeries {
            den: d,
            trunc: sat_mul(self.trunc, s),
            field: self.field,
            laurent: self.laurent,
            coeffs: self.coeffs.iter().map(|(n, c)| (n * s, c.clone())).collect(),
        })
    }

    fn field_join(a: u64, b: u64) -> Result<u64> {
        if a % b == 0 {
            Ok(a)
        } else if b % a == 0 {
            Ok(b)
        } else {
            Err(Error::FieldMismatch(a, b))
        }
    }

    fn common(a: &QSeries, b: &QSeries) -> Result<(QSeries, QSeries, u64)> {
        let k = Self::field_join(a.field, b.field)?;
        let d = a.den.lcm(&b.den);
        Ok((a.rescale(d)?, b.rescale(d)?, k))
    }

    pub fn add(&self, o: &QSeries) -> Result<QSeries> {
        let (a, b, k) = Self::common(self, o)?;
        let t = a.trunc.min(b.trunc);
        let mut coeffs = a.coeffs;
        for (n, c) in b.coeffs {
            if n >= t {
                continue;
            }
            match coeffs.get_mut(&n) {
                Some(e) => {
                    *e = e.add(&c);
                    if e.is_zero() {
                        coeffs.remove(&n);
                    }
                }
                None => {
                    coeffs.insert(n, c);
                }
            }
        }
        coeffs.retain(|n, _| *n < t);
        Ok(QSeries { den: a.den, trunc: t, field: k, laurent: a.laurent || b.laurent, coeffs })
    }

    pub fn neg(&self) -> QSeries {
        let mut s = self.clone();
        for c in s.coeffs.values_mut() {
            *c = c.neg();
        }
        s
    }

    pub fn sub(&self, o: &QSeries) -> Result<QSeries> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Cyclo) -> Result<QSeries> {
        let k = Self::field_join(self.field, c.order()).or_else(|_| {
            // scalar from a bigger field: enlarge
            Ok::<u64, Error>(self.field.lcm(&c.order()))
        })?;
        let mut s = self.clone();
        s.field = k;
        if c.is_zero() {
            s.coeffs.clear();
            return Ok(s);
        }
        for v in s.coeffs.values_mut() {
            *v = v.mul(c);
        }
        Ok(s)
    }

    pub fn scale_q(&self, q: &Q) -> QSeries {
        let mut s = self.clone();
        if q.is_zero() {
            s.coeffs.clear();
            return s;
        }
        for v in s.coeffs.values_mut() {
            *v = v.scale(q);
        }
        s
    }

    /// Multiply by c·q^{n/D} (n on this series' grid).
    pub fn shift(&self, n: i64) -> QSeries {
        let mut s = self.clone();
        s.trunc = sat_add(s.trunc, n);
        s.coeffs = s.coeffs.into_iter().map(|(e, c)| (e + n, c)).collect();
        if n < 0 {
            s.laurent = true;
        }
        s
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<QSeries> {
        let d = self.den.lcm(&m.den);
        let a = self.rescale(d)?;
        let n = m.num * (d / m.den) as i64;
        let s = a.shift(n);
        let mut s = if m.coeff.is_one() { s } else { s.scale(&m.coeff)? };
        if n < 0 && !self.laurent {
            s.laurent = self.coeffs.keys().next().is_some_and(|&v| v * (d / self.den) as i64 + n < 0);
        }
        Ok(s)
    }

    pub fn mul(&self, o: &QSeries) -> Result<QSeries> {
        let (a, b, k) = Self::common(self, o)?;
        let va = a.valuation().unwrap_or(a.trunc);
        let vb = b.valuation().unwrap_or(b.trunc);
        // the product is known below min(Ta + vb, Tb + va)
        let t = sat_add(a.trunc, vb.min(0).max(if a.trunc == EXACT { 0 } else { vb })).min(sat_add(
            b.trunc,
            if b.trunc == EXACT { 0 } else { va },
        ));
        let t = if a.is_zero() || b.is_zero() { a.trunc.min(b.trunc) } else { t };
        let mut acc: BTreeMap<i64, Cyclo> = BTreeMap::new();
        for (i, x) in &a.coeffs {
            for (j, y) in &b.coeffs {
                let n = i + j;
                if n >= t {
                    break;
                }
                let p = x.mul(y);
                match acc.get_mut(&n) {
                    Some(e) => *e = e.add(&p),
                    None => {
                        acc.insert(n, p);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(QSeries { den: a.den, trunc: t, field: k, laurent: a.laurent || b.laurent, coeffs: acc })
    }

    /// self · (1 − c·q^{e/D}) with e on this series' grid.
    pub fn mul_binomial(&self, c: &Cyclo, e: i64) -> QSeries {
        let mut s = self.clone();
        if c.is_zero() {
            return s;
        }
        s.field = s.field.lcm(&c.order());
        let neg_one = c.as_rational().is_some_and(|q| q == -Q::one());
        let one = c.as_rational().is_some_and(|q| q.is_one());
        for (n, v) in self.coeffs.iter() {
            let m = n + e;
            if m >= s.trunc {
                break;
            }
            let t = if one { v.clone() } else if neg_one { v.neg() } else { v.mul(c) };
            let ent = s.coeffs.entry(m).or_insert_with(Cyclo::zero);
            *ent = ent.sub(&t);
            if ent.is_zero() {
                s.coeffs.remove(&m);
            }
        }
        if e < 0 {
            s.laurent = true;
        }
        s
    }

    /// self / (1 − c·q^{e/D}) for e > 0 (geometric expansion).
    pub fn div_binomial(&self, c: &Cyclo, e: i64) -> Result<QSeries> {
        if e <= 0 {
            return domain("division by (1 − c q^e) needs e > 0");
        }
        if self.trunc == EXACT {
            return domain("geometric expansion of an exact series needs a truncation");
        }
        let mut s = self.clone();
        if c.is_zero() {
            return Ok(s);
        }
        s.field = s.field.lcm(&c.order());
        let one = c.as_rational().is_some_and(|q| q.is_one());
        let lo = match self.valuation() {
            Some(v) => v,
            None => return Ok(s),
        };
        // a[n] += c·a[n−e], ascending
        let mut n = lo + e;
        while n < s.trunc {
            if let Some(prev) = s.coeffs.get(&(n - e)).cloned() {
                let t = if one { prev } else { prev.mul(c) };
                let ent = s.coeffs.entry(n).or_insert_with(Cyclo::zero);
                *ent = ent.add(&t);
                if ent.is_zero() {
                    s.coeffs.remove(&n);
                }
            }
            n += 1;
        }
        Ok(s)
    }

    /// Multiplicative inverse; needs a nonzero leading coefficient below the truncation.
    pub fn inverse(&self) -> Result<QSeries> {
        let v = self.valuation().ok_or(Error::DivisionByZero)?;
        if self.trunc == EXACT && self.coeffs.len() > 1 {
            return domain("inverse of an exact polynomial needs a truncation");
        }
        let lead_inv = self.coeffs[&v].inv()?;
        // u = q^{-v}·self / lead, u = 1 + ...
        let t_u = if self.trunc == EXACT { EXACT } else { self.trunc - v };
        if self.coeffs.len() == 1 {
            let mut s = QSeries::monomial(lead_inv, -v, Prec::new(self.den, if t_u == EXACT { EXACT } else { t_u - v }));
            s.field = self.field.lcm(&s.field);
            return Ok(s);
        }
        let u: Vec<(i64, Cyclo)> = self.coeffs.iter().map(|(n, c)| (n - v, c.mul(&lead_inv))).collect();
        let mut w: BTreeMap<i64, Cyclo> = BTreeMap::new();
        w.insert(0, Cyclo::one());
        for n in 1..t_u {
            let mut acc = Cyclo::zero();
            for (k, uk) in u.iter().skip(1) {
                if *k > n {
                    break;
                }
                if let Some(wn) = w.get(&(n - k)) {
                    acc = acc.sub(&uk.mul(wn));
                }
            }
            if !acc.is_zero() {
                w.insert(n, acc);
            }
        }
        let inv_u = QSeries { den: self.den, trunc: t_u, field: self.field, laurent: false, coeffs: w };
        let mut r = inv_u.scale(&lead_inv)?.shift(-v);
        r.trunc = t_u - v;
        r.laurent = self.laurent || v > 0;
        Ok(r)
    }

    pub fn div(&self, o: &QSeries) -> Result<QSeries> {
        self.mul(&o.inverse()?)
    }

    pub fn pow(&self, k: u32) -> Result<QSeries> {
        let mut acc = QSeries::one(Prec::new(self.den, EXACT));
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// q ↦ q^k for rational k ≠ 0; negative k only for exact polynomials.
    pub fn substitute_power(&self, k: &Q) -> Result<QSeries> {
        if k.is_zero() {
            return domain("substitute_power: k must be nonzero");
        }
        if k.is_negative() && self.trunc != EXACT {
            return Err(Error::Divergence("q ↦ q^k with k < 0 on a truncated series".into()));
        }
        // new exponent: (n/D)·k = n·p/(D·r) for k = p/r
        let p = k.numer().to_i64().unwrap();
        let r = k.denom().to_u64().unwrap();
        let d = self.den * r;
        let coeffs: BTreeMap<i64, Cyclo> = self.coeffs.iter().map(|(n, c)| (n * p, c.clone())).collect();
        let trunc = if self.trunc == EXACT { EXACT } else { self.trunc * p };
        let mut s = QSeries { den: d, trunc, field: self.field, laurent: self.laurent || p < 0, coeffs };
        s.normalize_den();
        Ok(s)
    }

    /// q ↦ −q, i.e. q^{1/D} ↦ ζ_{2D}·q^{1/D}; coefficients enter Q(ζ_{2D}) when D > 1.
    pub fn substitute_sign(&self) -> QSeries {
        let m = 2 * self.den;
        let mut s = self.clone();
        let mut k = self.field;
        for (n, c) in s.coeffs.iter_mut() {
            let z = Cyclo::root(m, *n);
            let z = z.simplify();
            k = k.lcm(&z.order());
            *c = c.mul(&z);
        }
        s.field = k;
        s
    }

    /// Use the coarsest grid that holds every stored exponent and the truncation.
    pub fn normalize_den(&mut self) {
        let mut g = self.den as i64;
        for n in self.coeffs.keys() {
            g = g.gcd(n);
        }
        if self.trunc != EXACT {
            // only shrink when the truncation stays representable exactly
            g = g.gcd(&self.trunc);
        }
        if g > 1 {
            self.den /= g as u64;
            if self.trunc != EXACT {
                self.trunc /= g;
            }
            self.coeffs = std::mem::take(&mut self.coeffs).into_iter().map(|(n, c)| (n / g, c)).collect();
        }
    }

    /// First q-exponent below the common truncation where the two series differ.
    pub fn first_mismatch(&self, o: &QSeries) -> Result<Option<Q>> {
        let d = self.den.lcm(&o.den);
        let (a, b) = (self.rescale(d)?, o.rescale(d)?);
        let t = a.trunc.min(b.trunc);
        let keys: std::collections::BTreeSet<i64> =
            a.coeffs.keys().chain(b.coeffs.keys()).copied().filter(|&n| n < t).collect();
        for n in keys {
            if a.coeff(n) != b.coeff(n) {
                return Ok(Some(Q::new(n.into(), (d as i64).into())));
            }
        }
        Ok(None)
    }

    /// Compare two series; the report's truncation is the common q-exponent bound.
    pub fn compare(&self, o: &QSeries, id: &str) -> VerificationReport {
        let d = self.den.lcm(&o.den);
        let t = self.prec().refine(d).trunc.min(o.prec().refine(d).trunc);
        let tq = if t == EXACT { "exact".to_string() } else { Q::new(t.into(), (d as i64).into()).to_string() };
        match self.first_mismatch(o) {
            Ok(None) => VerificationReport::pass(id, tq, ""),
            Ok(Some(e)) => VerificationReport::fail(
                id,
                tq,
                Some(e.to_string()),
                format!("lhs coeff {} vs rhs coeff {}", self.coeff_at(&e), o.coeff_at(&e)),
            ),
            Err(e) => VerificationReport::error(id, e.to_string()),
        }
    }

    /// Coefficient of q^{e} for rational e.
    pub fn coeff_at(&self, e: &Q) -> Cyclo {
        let n = e * q_int(self.den as i64);
        if !n.is_integer() {
            return Cyclo::zero();
        }
        self.coeff(n.to_integer().to_i64().unwrap())
    }

    /// Evaluate a finite sum with q^{1/D} replaced by the point x.
    pub fn eval_poly(&self, x: &EvaluationPoint) -> Result<Cyclo> {
        if self.trunc != EXACT {
            return domain("evaluation at a point needs an exact (terminating) series");
        }
        let m = x.root_order;
        let mut acc = crate::cyclo::RootSum::new(m);
        let mut rest = Cyclo::zero();
        for (n, c) in &self.coeffs {
            match c.as_rational() {
                Some(q) => acc.add_term(n * x.power, &q),
                None => rest = rest.add(&c.mul(&Cyclo::root(m, n * x.power))),
            }
        }
        Ok(acc.to_cyclo().add(&rest))
    }

    /// Dense integer coefficients 0..len (panics on non-integers); test helper.
    pub fn int_coeffs(&self, len: usize) -> Vec<i64> {
        (0..len as i64)
            .map(|n| {
                let q = self.coeff_q(n).expect("rational coefficient");
                assert!(q.is_integer(), "integer coefficient");
                q.to_integer().to_i64().unwrap()
            })
            .collect()
    }
}

impl Cyclo {
    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }
}

impl PartialEq for QSeries {
    fn eq(&self, o: &Self) -> bool {
        let d = self.den.lcm(&o.den);
        self.prec().refine(d).trunc == o.prec().refine(d).trunc && matches!(self.first_mismatch(o), Ok(None))
    }
}

fn fmt_coeff(c: &Cyclo) -> String {
    match c.as_rational() {
        Some(q) => q.to_string(),
        None => {
            let parts: Vec<String> = c.coords().iter().map(|x| x.to_string()).collect();
            format!("[{}|{}]", c.order(), parts.join(","))
        }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = if self.trunc == EXACT { "inf".to_string() } else { self.trunc.to_string() };
        write!(f, "D={}; T={}; K={};", self.den, t, self.field)?;
        for (n, c) in &self.coeffs {
            write!(f, " {}:{}", n, fmt_coeff(c))?;
        }
        Ok(())
    }
}

impl FromStr for QSeries {
    type Err = Error;
    fn from_str(s: &str) -> Result<QSeries> {
        let bad = |m: &str| Error::Parse { line: 1, col: 1, msg: format!("series text: {m}") };
        let mut parts = s.splitn(4, ';');
        let mut field = |key: &str| -> Result<String> {
            let p = parts.next().ok_or_else(|| bad("missing header"))?.trim().to_string();
            p.strip_prefix(key).map(|x| x.to_string()).ok_or_else(|| bad(key))
        };
        let den: u64 = field("D=")?.parse().map_err(|_| bad("D"))?;
        let t = field("T=")?;
        let trunc = if t == "inf" { EXACT } else { t.parse().map_err(|_| bad("T"))? };
        let k: u64 = field("K=")?.parse().map_err(|_| bad("K"))?;
        if den == 0 || k == 0 {
            return Err(bad("D and K must be positive"));
        }
        let body = parts.next().unwrap_or("");
        let mut terms = vec![];
        for tok in body.split_whitespace() {
            let (n, c) = tok.split_once(':').ok_or_else(|| bad("term"))?;
            let n: i64 = n.parse().map_err(|_| bad("exponent"))?;
            let c = if let Some(inner) = c.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
                let (m, xs) = inner.split_once('|').ok_or_else(|| bad("cyclotomic coefficient"))?;
                let m: u64 = m.parse().map_err(|_| bad("order"))?;
                let coords: std::result::Result<Vec<Q>, _> = xs.split(',').map(|x| x.parse::<Q>()).collect();
                Cyclo::from_poly(m, coords.map_err(|_| bad("rational"))?)
            } else {
                Cyclo::from_q(c.parse::<Q>().map_err(|_| bad("rational"))?)
            };
            terms.push((n, c));
        }
        let mut s = QSeries::laurent(Prec::new(den, trunc), terms);
        s.laurent = s.valuation().is_some_and(|v| v < 0);
        s.field = s.field.lcm(&k);
        Ok(s)
    }
}

/// Length of a Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLen {
    Finite(u64),
    Infinite,
}

/// (z; q^step)_n = Π_{k=1..n} (1 − z q^{(k−1)·step}).
pub fn pochhammer(z: &Monomial, step: &Q, n: PochLen, p: Prec) -> Result<QSeries> {
    let d = p.den.lcm(&z.den).lcm(&step.denom().to_u64().unwrap());
    let p = p.refine(d);
    let mut s = QSeries::one(p);
    if z.is_zero() {
        return Ok(s);
    }
    let z0 = z.num * (d / z.den) as i64;
    let st = (step * q_int(d as i64)).to_integer().to_i64().unwrap();
    match n {
        PochLen::Finite(n) => {
            for k in 0..n as i64 {
                s = s.mul_binomial(&z.coeff, z0 + k * st);
                if s.is_zero() {
                    break;
                }
            }
        }
        PochLen::Infinite => {
            if st <= 0 && z0 <= 0 {
                return Err(Error::Divergence("infinite product with non-increasing factors".into()));
            }
            if st <= 0 {
                if z0 < p.trunc {
                    return Err(Error::Divergence("infinite product of a repeated factor".into()));
                }
                return Ok(s);
            }
            if p.trunc == EXACT {
                return domain("infinite product needs a truncation");
            }
            let mut k = 0;
            while z0 + k * st < p.trunc {
                s = s.mul_binomial(&z.coeff, z0 + k * st);
                k += 1;
            }
        }
    }
    if s.valuation().is_some_and(|v| v < 0) {
        s.laurent = true;
    }
    Ok(s)
}

/// 1/(z; q^step)_n, expanded geometrically.
pub fn inv_pochhammer(z: &Monomial, step: &Q, n: PochLen, p: Prec) -> Result<QSeries> {
    let d = p.den.lcm(&z.den).lcm(&step.denom().to_u64().unwrap());
    let p = p.refine(d);
    let mut s = QSeries::one(p);
    if z.is_zero() {
        return Ok(s);
    }
    let z0 = z.num * (d / z.den) as i64;
    let st = (step * q_int(d as i64)).to_integer().to_i64().unwrap();
    let count = match n {
        PochLen::Finite(n) => n as i64,
        PochLen::Infinite => {
            if st <= 0 {
                return Err(Error::Divergence("infinite product with non-increasing factors".into()));
            }
            ((p.trunc - z0).max(0) + st - 1) / st
        }
    };
    for k in 0..count {
        let e = z0 + k * st;
        if e >= p.trunc {
            break;
        }
        if e == 0 {
            // constant factor 1 − c
            let f = Cyclo::one().sub(&z.coeff);
            s = s.scale(&f.inv()?)?;
        } else if e < 0 {
            let f = QSeries::one(p).mul_binomial(&z.coeff, e);
            s = s.div(&f)?;
        } else {
            s = s.div_binomial(&z.coeff, e)?;
        }
    }
    Ok(s)
}

/// (a; q)_n for a = c·q^e with integer e and step 1, the common case.
pub fn poch_q(c: i64, e: i64, n: u64, p: Prec) -> Result<QSeries> {
    pochhammer(&Monomial::new(Cyclo::from_int(c), e, 1), &Q::one(), PochLen::Finite(n), p)
}

/// Gaussian binomial [n m]_q as an exact polynomial.
pub fn q_binomial(n: i64, m: i64) -> Result<QSeries> {
    if m < 0 || n < 0 || m > n {
        return domain(format!("q-binomial [{n} {m}] needs 0 ≤ m ≤ n"));
    }
    // Pascal recurrence [n m] = [n−1 m−1] + q^m [n−1 m] on integer vectors
    let m = m.min(n - m) as usize;
    let n = n as usize;
    let mut rows: Vec<Vec<i64>> = vec![vec![1]; m + 1]; // rows[j] = [i j] as i advances
    for j in 1..=m {
        rows[j] = vec![0];
    }
    let mut cur: Vec<Vec<i128>> = (0..=m).map(|j| if j == 0 { vec![1] } else { vec![] }).collect();
    for _i in 1..=n {
        for j in (1..=m).rev() {
            let a = cur[j - 1].clone();
            let b = &cur[j];
            let len = a.len().max(b.len() + j);
            let mut c = vec![0i128; len];
            for (k, x) in a.iter().enumerate() {
                c[k] += x;
            }
            for (k, x) in b.iter().enumerate() {
                c[k + j] += x;
            }
            while c.last() == Some(&0) {
                c.pop();
            }
            cur[j] = c;
        }
    }
    drop(rows);
    let terms = cur[m].iter().enumerate().map(|(k, &x)| (k as i64, Cyclo::from_q(Q::from_integer(x.into()))));
    Ok(QSeries::collect(Prec::new(1, EXACT), terms))
}

/// Σ_{n≥0} term(n), stopping once `lead(n)` (a lower bound for the q-exponent of
/// term n, nondecreasing from there on) reaches the truncation.
pub fn sum_until<L, F>(p: Prec, mut lead: L, mut term: F) -> Result<QSeries>
where
    L: FnMut(i64) -> Q,
    F: FnMut(i64) -> Result<QSeries>,
{
    let bound = p.bound().ok_or_else(|| Error::Domain("infinite sum needs a truncation".into()))?;
    let cap = 10 * p.trunc.max(1) * p.den as i64 + 10;
    let mut acc = QSeries::zero(p);
    let mut n = 0;
    loop {
        if lead(n) >= bound {
            return Ok(acc);
        }
        if n > cap {
            return Err(Error::Divergence(format!("sum did not reach the truncation after {cap} terms")));
        }
        let t = term(n)?;
        acc = acc.add(&t)?;
        n += 1;
    }
}

/// Euler: Σ_m q^{m(m−1)/2} z^m/(q)_m = (−z; q)_∞.
pub fn selftest_euler(z: &Monomial, order: i64) -> Result<VerificationReport> {
    let p = Prec::q(order).refine(z.den);
    let ez = z.exponent();
    if ez <= Q::zero() {
        return domain("Euler identity needs z with positive exponent");
    }
    let lhs = sum_until(
        p,
        |m| Q::new((m * (m - 1) / 2).into(), 1.into()) + &ez * q_int(m),
        |m| {
            let zm = z.pow(m)?.times_q(&Q::new((m * (m - 1) / 2).into(), 1.into()));
            let inv = inv_pochhammer(&Monomial::q(1, 1), &Q::one(), PochLen::Finite(m as u64), p)?;
            inv.mul_monomial(&zm).map(|s| s.truncate(p.trunc))
        },
    )?;
    let mz = Monomial::new(z.coeff.neg(), z.num, z.den);
    let rhs = pochhammer(&mz, &Q::one(), PochLen::Infinite, p)?;
    Ok(lhs.compare(&rhs, "euler_identity"))
}

/// Jacobi triple product: Σ_k (−1)^k q^{k²/2} z^k = (q, z⁻¹q^{1/2}, z q^{1/2}; q)_∞.
pub fn selftest_triple_product(z: &Monomial, order: i64) -> Result<VerificationReport> {
    if z.is_zero() {
        return domain("triple product needs z ≠ 0");
    }
    let p = Prec::q(order).refine(2).refine(z.den);
    let ez = z.exponent();
    let half = Q::new(1.into(), 2.into());
    let bound = p.bound().unwrap();
    // exponent k²/2 + k·ez is bounded below; sum over k in the window below the bound
    let mut terms = vec![];
    let kmax = {
        let mut k = 0i64;
        loop {
            let e1 = Q::from_integer((k * k).into()) * &half + &ez * q_int(k);
            let e2 = Q::from_integer((k * k).into()) * &half - &ez * q_int(k);
            if e1 >= bound && e2 >= bound && Q::from_integer(k.into()) > ez.abs() {
                break k;
            }
            k += 1;
        }
    };
    for k in -kmax..=kmax {
        let e = Q::from_integer((k * k).into()) * &half + &ez * q_int(k);
        if e >= bound {
            continue;
        }
        let c = z.coeff.pow(k)?.scale(&q_int(if k % 2 == 0 { 1 } else { -1 }));
        let n = (e * q_int(p.den as i64)).to_integer().to_i64().unwrap();
        terms.push((n, c));
    }
    let lhs = QSeries::laurent(p, terms);
    let f1 = pochhammer(&Monomial::q(1, 1), &Q::one(), PochLen::Infinite, p)?;
    let zi = z.inv()?.times_q(&half);
    let zq = z.times_q(&half);
    let f2 = laurent_poch_inf(&zi, p)?;
    let f3 = laurent_poch_inf(&zq, p)?;
    let rhs = f1.mul(&f2)?.mul(&f3)?;
    Ok(lhs.compare(&rhs, "jacobi_triple_product"))
}

// (z; q)_∞ where z may have a non-positive exponent: finitely many Laurent factors
fn laurent_poch_inf(z: &Monomial, p: Prec) -> Result<QSeries> {
    let e = z.exponent();
    let mut head = QSeries::one(Prec::new(p.den, EXACT));
    let mut zz = z.clone();
    while zz.exponent() <= Q::zero() {
        let f = QSeries::one(Prec::new(p.den, EXACT)).mul_monomial(&Monomial::q(0, 1))?;
        let f = f.sub(&zz.to_series(Prec::new(p.den, EXACT)))?;
        head = head.mul(&f)?;
        zz = zz.times_q(&Q::one());
    }
    let _ = e;
    let tail = pochhammer(&zz, &Q::one(), PochLen::Infinite, p)?;
    let v = head.valuation().unwrap_or(0).min(0);
    // extend the tail's truncation so the product is known below the original bound
    let tail = if v < 0 { pochhammer(&zz, &Q::one(), PochLen::Infinite, Prec::new(p.den, p.trunc - v))? } else { tail };
    Ok(head.mul(&tail)?.truncate(p.trunc))
}

/// Σ_{n≥0} (−1)^n (2n+1) q^{(2n+1)²/8} = q^{1/8} (q; q)_∞³, checked in powers of q^{1/8}.
pub fn selftest_eta_cubed(order_eighths: i64) -> Result<VerificationReport> {
    let p = Prec::new(8, order_eighths);
    let mut terms = vec![];
    let mut n = 0i64;
    while (2 * n + 1) * (2 * n + 1) < order_eighths {
        terms.push(((2 * n + 1) * (2 * n + 1), Cyclo::from_int(if n % 2 == 0 { 2 * n + 1 } else { -(2 * n + 1) })));
        n += 1;
    }
    let lhs = QSeries::from_terms(p, terms)?;
    let e = pochhammer(&Monomial::q(1, 1), &Q::one(), PochLen::Infinite, p)?;
    let rhs = e.pow(3)?.mul_monomial(&Monomial::q(1, 8))?.truncate(order_eighths);
    Ok(lhs.compare(&rhs, "eta_cubed"))
}

/// q-binomial theorem: (−z; q)_N = Σ_m q^{m(m−1)/2} [N m]_q z^m, exact.
pub fn selftest_q_binomial_theorem(n: u64, z: &Monomial) -> Result<VerificationReport> {
    let p = Prec::new(z.den, EXACT);
    let mz = Monomial::new(z.coeff.neg(), z.num, z.den);
    let lhs = pochhammer(&mz, &Q::one(), PochLen::Finite(n), p)?;
    let mut rhs = QSeries::zero(p);
    for m in 0..=n as i64 {
        let b = q_binomial(n as i64, m)?;
        let zm = z.pow(m)?.times_q(&Q::new((m * (m - 1) / 2).into(), 1.into()));
        rhs = rhs.add(&b.mul_monomial(&zm)?)?;
    }
    Ok(lhs.compare(&rhs, "q_binomial_theorem"))
}

/// q-binomial series: 1/(z; q)_N = Σ_m [N+m−1 m]_q z^m.
pub fn selftest_q_binomial_series(n: u64, z: &Monomial, order: i64) -> Result<VerificationReport> {
    let p = Prec::q(order).refine(z.den);
    let lhs = inv_pochhammer(z, &Q::one(), PochLen::Finite(n), p)?;
    if n == 0 {
        return Ok(lhs.compare(&QSeries::one(p), "q_binomial_series"));
    }
    let ez = z.exponent();
    let rhs = sum_until(p, |m| &ez * q_int(m), |m| {
        let b = q_binomial(n as i64 + m - 1, m)?;
        Ok(b.mul_monomial(&z.pow(m)?)?.truncate(p.trunc))
    })?;
    Ok(lhs.compare(&rhs, "q_binomial_series"))
}

/// q-binomial formula: Σ_n (a; q)_n z^n/(q; q)_n = (az; q)_∞/(z; q)_∞.
pub fn selftest_q_binomial_formula(a: &Monomial, z: &Monomial, order: i64) -> Result<VerificationReport> {
    let p = Prec::q(order).refine(a.den).refine(z.den);
    let ez = z.exponent();
    let lhs = sum_until(p, |n| &ez * q_int(n), |n| {
        let num = pochhammer(a, &Q::one(), PochLen::Finite(n as u64), p)?;
        let den = inv_pochhammer(&Monomial::q(1, 1), &Q::one(), PochLen::Finite(n as u64), p)?;
        num.mul(&den)?.mul_monomial(&z.pow(n)?).map(|s| s.truncate(p.trunc))
    })?;
    let az = a.mul(z);
    let rhs = pochhammer(&az, &Q::one(), PochLen::Infinite, p)?.mul(&inv_pochhammer(z, &Q::one(), PochLen::Infinite, p)?)?;
    Ok(lhs.compare(&rhs, "q_binomial_formula"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QSeries {
        QSeries::from_ints(Prec::q(50), c)
    }

    #[test]
    fn cancellation() {
        let s = poly(&[1, 1]).add(&poly(&[1, -1])).unwrap();
        assert_eq!(s, poly(&[2]));
    }

    #[test]
    fn rescaling_on_add() {
        let a = QSeries::from_ints(Prec::new(2, 100), &[1, 1]);
        let b = QSeries::from_ints(Prec::q(50), &[0, 1]);
        let s = a.add(&b).unwrap();
        assert_eq!(s.den(), 2);
        assert_eq!(s.to_string(), "D=2; T=100; K=1; 0:1 1:1 2:1");
    }

    #[test]
    fn geometric_inverse() {
        let g = poly(&[1, -1]).inverse().unwrap();
        assert_eq!(poly(&[1, -1]).mul(&g).unwrap(), poly(&[1]));
    }

    #[test]
    fn sqrt_q_squared() {
        let h = QSeries::monomial(Cyclo::one(), 1, Prec::new(2, 20));
        let s = h.mul(&h).unwrap();
        assert_eq!(s.coeff_at(&Q::one()), Cyclo::one());
    }

    #[test]
    fn pochhammer_small() {
        let s = pochhammer(&Monomial::q(1, 1), &Q::one(), PochLen::Finite(2), Prec::q(10)).unwrap();
        assert_eq!(s.int_coeffs(5), vec![1, -1, -1, 1, 0]);
        let e = pochhammer(&Monomial::q(1, 1), &Q::one(), PochLen::Infinite, Prec::q(6)).unwrap();
        assert_eq!(e.int_coeffs(6), vec![1, -1, -1, 0, 0, 1]);
        let one = pochhammer(&Monomial::q(3, 1), &Q::one(), PochLen::Finite(0), Prec::q(6)).unwrap();
        assert_eq!(one, QSeries::one(Prec::q(6)));
        assert!(pochhammer(&Monomial::q(0, 1), &Q::zero(), PochLen::Infinite, Prec::q(6)).is_err());
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(2, 1).unwrap().int_coeffs(3), vec![1, 1, 0]);
        assert_eq!(q_binomial(4, 2).unwrap().int_coeffs(6), vec![1, 1, 2, 1, 1, 0]);
        assert_eq!(q_binomial(7, 0).unwrap().int_coeffs(2), vec![1, 0]);
        assert!(q_binomial(2, 3).is_err());
    }

    #[test]
    fn substitutions() {
        let s = poly(&[1, 1]).substitute_power(&q_int(2)).unwrap();
        assert_eq!(s.int_coeffs(3), vec![1, 0, 1]);
        let h = QSeries::from_ints(Prec::new(2, 40), &[1, 1]);
        let s = h.substitute_power(&q_int(2)).unwrap();
        assert_eq!(s.den(), 1);
        assert_eq!(s.int_coeffs(2), vec![1, 1]);
        assert_eq!(poly(&[1, 1]).substitute_sign().int_coeffs(2), vec![1, -1]);
        assert_eq!(poly(&[1, 0, 1]).substitute_sign().int_coeffs(3), vec![1, 0, 1]);
        assert!(poly(&[1, 1]).substitute_power(&q_int(-1)).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let s = QSeries::from_terms(
            Prec::new(3, 30),
            vec![(0, Cyclo::from_int(2)), (4, Cyclo::root(12, 1)), (7, Cyclo::from_q(Q::new(1.into(), 3.into())))],
        )
        .unwrap();
        let t = s.to_string();
        let back: QSeries = t.parse().unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_string(), t);
    }

    #[test]
    fn classical_selftests() {
        assert!(selftest_euler(&Monomial::q(1, 1), 50).unwrap().passed());
        assert!(selftest_euler(&Monomial::neg_q(1, 1), 50).unwrap().passed());
        assert!(selftest_euler(&Monomial::q(1, 1), 1).unwrap().passed());
        assert!(selftest_triple_product(&Monomial::q(1, 2), 40).unwrap().passed());
        assert!(selftest_triple_product(&Monomial::neg_q(1, 2), 40).unwrap().passed());
        assert!(selftest_eta_cubed(200).unwrap().passed());
        assert!(selftest_q_binomial_theorem(0, &Monomial::q(1, 1)).unwrap().passed());
        assert!(selftest_q_binomial_theorem(2, &Monomial::q(1, 1)).unwrap().passed());
        assert!(selftest_q_binomial_theorem(5, &Monomial::q(3, 1)).unwrap().passed());
        assert!(selftest_q_binomial_series(4, &Monomial::q(2, 1), 40).unwrap().passed());
        assert!(selftest_q_binomial_formula(&Monomial::neg_q(1, 1), &Monomial::q(1, 1), 40).unwrap().passed());
    }
}
