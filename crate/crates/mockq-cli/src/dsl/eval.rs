//! Evaluation of DSL trees to truncated q-series.

use super::ast::{BinOp, Expr, Stmt};
use mockq::catalog;
use mockq::chars::{character, eichler_tilde_series};
use mockq::cyclo::q_int;
use mockq::series::{pochhammer, q_binomial, PochLen};
use mockq::{Cyclo, Error, Monomial, Prec, QSeries, Result, VerificationReport, Q};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;

/// c·q^e kept symbolic as long as possible, or a truncated series.
#[derive(Clone, Debug)]
pub enum Value {
    Mono(Q, Q),
    Series(QSeries),
}

#[derive(Debug)]
pub enum Outcome {
    Series(QSeries),
    Report(VerificationReport),
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

fn to_i64(q: &Q) -> Result<i64> {
    if !q.is_integer() {
        return Err(bad(format!("expected an integer, got {q}")));
    }
    q.to_integer().to_i64().ok_or_else(|| bad("integer out of range"))
}

pub struct Evaluator {
    trunc: i64,
    env: HashMap<String, i64>,
    calls: HashMap<(String, Option<String>, i64, Q), QSeries>,
}

impl Evaluator {
    pub fn new(truncation: i64) -> Self {
        Evaluator { trunc: truncation, env: HashMap::new(), calls: HashMap::new() }
    }

    fn prec(&self) -> Prec {
        Prec::q(self.trunc)
    }

    fn series(&self, v: Value) -> Result<QSeries> {
        match v {
            Value::Series(s) => Ok(s),
            Value::Mono(c, e) => {
                let m = Monomial::new(
                    Cyclo::from_q(c),
                    e.numer().to_i64().ok_or_else(|| bad("exponent out of range"))?,
                    e.denom().to_u64().ok_or_else(|| bad("exponent out of range"))?,
                );
                Ok(m.to_series(self.prec()))
            }
        }
    }

    fn scalar(&mut self, e: &Expr) -> Result<Q> {
        match self.eval(e)? {
            Value::Mono(c, x) if x.is_zero() || c.is_zero() => Ok(c),
            _ => Err(bad(format!("`{e}` must be a number"))),
        }
    }

    fn int(&mut self, e: &Expr) -> Result<i64> {
        to_i64(&self.scalar(e)?)
    }

    pub fn eval(&mut self, e: &Expr) -> Result<Value> {
        Ok(match e {
            Expr::Int(n) => Value::Mono(q_int(*n), Q::zero()),
            Expr::Q => Value::Mono(Q::one(), Q::one()),
            Expr::Var(v) => {
                let n = self.env.get(v).ok_or_else(|| bad(format!("unbound variable `{v}`")))?;
                Value::Mono(q_int(*n), Q::zero())
            }
            Expr::Neg(x) => match self.eval(x)? {
                Value::Mono(c, e) => Value::Mono(-c, e),
                Value::Series(s) => Value::Series(s.neg()),
            },
            Expr::Bin(op, a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                self.binary(*op, a, b)?
            }
            Expr::Pow(b, x) => {
                let r = self.scalar(x)?;
                let b = self.eval(b)?;
                self.power(b, &r)?
            }
            Expr::Poch { z, step, n } => {
                let z = match self.eval(z)? {
                    Value::Mono(c, e) => (c, e),
                    Value::Series(_) => return Err(bad("poch base must be a monomial c·q^e")),
                };
                let step = self.scalar(step)?;
                let len = match n {
                    None => PochLen::Infinite,
                    Some(n) => {
                        let n = self.int(n)?;
                        if n < 0 {
                            return Err(bad("poch length must be nonnegative"));
                        }
                        PochLen::Finite(n as u64)
                    }
                };
                let m = Monomial::new(
                    Cyclo::from_q(z.0),
                    z.1.numer().to_i64().ok_or_else(|| bad("exponent out of range"))?,
                    z.1.denom().to_u64().ok_or_else(|| bad("exponent out of range"))?,
                );
                Value::Series(pochhammer(&m, &step, len, self.prec())?)
            }
            Expr::QBin(n, m) => {
                let (n, m) = (self.int(n)?, self.int(m)?);
                Value::Series(q_binomial(n, m)?)
            }
            Expr::Sum { var, lo, hi, body } => {
                let lo = self.int(lo)?;
                let hi = match hi {
                    Some(h) => Some(self.int(h)?),
                    None => None,
                };
                Value::Series(self.sum(var, lo, hi, body)?)
            }
            Expr::QTheta { chi, den, shift } => {
                let chi = character(chi)?;
                let den = self.int(den)?;
                if den <= 0 {
                    return Err(bad("qtheta denominator must be positive"));
                }
                let shift = self.int(shift)?;
                Value::Series(eichler_tilde_series(&chi, den as u64, shift, self.trunc)?)
            }
            Expr::Call { name, variant, arg } => {
                let (c, e) = match self.eval(arg)? {
                    Value::Mono(c, e) if (c.is_one() || c == -Q::one()) && e.is_positive() => (c, e),
                    _ => return Err(bad(format!("argument of `{name}` must be ±q^e with e > 0"))),
                };
                let sign = if c.is_one() { 1 } else { -1 };
                let key = (name.clone(), variant.clone(), sign, e.clone());
                if let Some(s) = self.calls.get(&key) {
                    return Ok(Value::Series(s.clone()));
                }
                let inner = (q_int(self.trunc) / &e).ceil().to_integer().to_i64().unwrap_or(i64::MAX);
                let mut s = catalog::expand(name, inner, variant.as_deref())?;
                if sign < 0 {
                    s = s.substitute_sign();
                }
                let s = s.substitute_power(&e)?.truncate_q(&q_int(self.trunc));
                self.calls.insert(key, s.clone());
                Value::Series(s)
            }
        })
    }

    fn binary(&self, op: BinOp, a: Value, b: Value) -> Result<Value> {
        use Value::Mono as M;
        Ok(match (op, a, b) {
            (BinOp::Add, M(c1, e1), M(c2, e2)) if e1 == e2 || c1.is_zero() || c2.is_zero() => {
                let e = if c1.is_zero() { e2 } else { e1 };
                mono(c1 + c2, e)
            }
            (BinOp::Sub, M(c1, e1), M(c2, e2)) if e1 == e2 || c1.is_zero() || c2.is_zero() => {
                let e = if c1.is_zero() { e2 } else { e1 };
                mono(c1 - c2, e)
            }
            (BinOp::Mul, M(c1, e1), M(c2, e2)) => mono(c1 * c2, e1 + e2),
            (BinOp::Div, M(c1, e1), M(c2, e2)) => {
                if c2.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                mono(c1 / c2, e1 - e2)
            }
            (op, a, b) => {
                let (a, b) = (self.series(a)?, self.series(b)?);
                Value::Series(match op {
                    BinOp::Add => a.add(&b)?,
                    BinOp::Sub => a.sub(&b)?,
                    BinOp::Mul => a.mul(&b)?,
                    BinOp::Div => a.div(&b)?,
                })
            }
        })
    }

    fn power(&self, b: Value, r: &Q) -> Result<Value> {
        match b {
            Value::Mono(c, e) => {
                if r.is_integer() {
                    let k = to_i64(r)?;
                    if c.is_zero() && k < 0 {
                        return Err(Error::DivisionByZero);
                    }
                    let ck = if k >= 0 {
                        num_traits::pow(c, k as usize)
                    } else {
                        num_traits::pow(c.recip(), (-k) as usize)
                    };
                    Ok(mono(ck, e * r))
                } else if c.is_one() {
                    Ok(mono(c, e * r))
                } else {
                    Err(bad(format!("fractional power of a coefficient {c}")))
                }
            }
            Value::Series(s) => {
                let k = to_i64(r)?;
                let u = u32::try_from(k.unsigned_abs()).map_err(|_| bad("power too large"))?;
                let p = s.pow(u)?;
                Ok(Value::Series(if k < 0 { p.inverse()? } else { p }))
            }
        }
    }

    fn leading(&self, v: &Value) -> Option<Q> {
        match v {
            Value::Mono(c, e) => (!c.is_zero()).then(|| e.clone()),
            Value::Series(s) => s.valuation().map(|n| Q::new(n.into(), (s.den() as i64).into())),
        }
    }

    /// Truncation-driven sum: an infinite sum ends at the first term vanishing below q^T;
    /// a run of cap = 4·T·D terms whose leading exponent fails to increase is divergence.
    fn sum(&mut self, var: &str, lo: i64, hi: Option<i64>, body: &Expr) -> Result<QSeries> {
        let saved = self.env.get(var).copied();
        let mut acc = QSeries::zero(self.prec());
        let mut best: Option<Q> = None;
        let mut stall = 0i64;
        let mut n = lo;
        let result = loop {
            if hi.is_some_and(|h| n > h) {
                break Ok(acc);
            }
            self.env.insert(var.to_string(), n);
            let t = match self.eval(body) {
                Ok(t) => t,
                Err(e) => break Err(e),
            };
            let lead = self.leading(&t);
            let s = match self.series(t) {
                Ok(s) => s,
                Err(e) => break Err(e),
            };
            if hi.is_none() {
                let Some(l) = lead.filter(|l| *l < q_int(self.trunc)) else {
                    break Ok(acc);
                };
                if best.as_ref().is_some_and(|b| l <= *b) {
                    stall += 1;
                    let cap = 4 * self.trunc.max(1) * acc.den().max(s.den()) as i64;
                    if stall > cap {
                        break Err(Error::Divergence(format!(
                            "leading exponent of `{body}` did not increase for {cap} terms"
                        )));
                    }
                } else {
                    best = Some(l);
                    stall = 0;
                }
            }
            acc = match acc.add(&s) {
                Ok(a) => a,
                Err(e) => break Err(e),
            };
            n += 1;
        };
        match saved {
            Some(v) => self.env.insert(var.to_string(), v),
            None => self.env.remove(var),
        };
        result
    }
}

fn mono(c: Q, e: Q) -> Value {
    if c.is_zero() {
        Value::Mono(c, Q::zero())
    } else {
        Value::Mono(c, e)
    }
}

/// Evaluate a statement below q^truncation; identities become reports under `id`.
pub fn eval_stmt(stmt: &Stmt, truncation: i64, id: &str) -> Result<Outcome> {
    let mut ev = Evaluator::new(truncation);
    match stmt {
        Stmt::Value(e) => {
            let v = ev.eval(e)?;
            Ok(Outcome::Series(ev.series(v)?))
        }
        Stmt::Eq(a, b) => {
            let l = ev.eval(a)?;
            let l = ev.series(l)?;
            let r = ev.eval(b)?;
            let r = ev.series(r)?;
            Ok(Outcome::Report(l.compare(&r, id)))
        }
    }
}
