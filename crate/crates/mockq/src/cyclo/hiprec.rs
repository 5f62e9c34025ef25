//! Fixed-point complex numbers with an explicit absolute error bound.
//!
//! A value is `(re + i·im) / 2^bits` with `re`, `im` integers; `err` bounds the
//! distance to the true value (same for both components, in absolute units).

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, Debug)]
pub struct HiComplex {
    re: BigInt,
    im: BigInt,
    bits: u32,
    /// absolute error bound, in ulps (units of 2^-bits)
    err_ulps: f64,
}

fn shr_round(x: &BigInt, s: u32) -> BigInt {
    if s == 0 {
        return x.clone();
    }
    let half = BigInt::one() << (s - 1);
    if x.sign() == Sign::Minus {
        -((-x + &half) >> s)
    } else {
        (x + &half) >> s
    }
}

fn big_to_f64(x: &BigInt, bits: u32) -> f64 {
    // keep ~60 significant bits before converting
    let len = x.bits() as i64;
    let drop = (len - 60).max(0) as u32;
    let m = (x >> drop).to_f64().unwrap_or(0.0);
    m * 2f64.powi(drop as i32 - bits as i32)
}

impl HiComplex {
    pub fn zero(bits: u32) -> Self {
        HiComplex { re: BigInt::zero(), im: BigInt::zero(), bits, err_ulps: 0.0 }
    }

    pub fn one(bits: u32) -> Self {
        HiComplex { re: BigInt::one() << bits, im: BigInt::zero(), bits, err_ulps: 0.0 }
    }

    pub fn from_rational(q: &BigRational, bits: u32) -> Self {
        let num = q.numer() << bits;
        let (d, r) = num.div_rem(q.denom());
        let err = if r.is_zero() { 0.0 } else { 1.0 };
        HiComplex { re: d, im: BigInt::zero(), bits, err_ulps: err }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Absolute error bound of each component.
    pub fn err_bound(&self) -> f64 {
        self.err_ulps * 2f64.powi(-(self.bits as i32))
    }

    pub fn re_f64(&self) -> f64 {
        big_to_f64(&self.re, self.bits)
    }

    pub fn im_f64(&self) -> f64 {
        big_to_f64(&self.im, self.bits)
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re_f64(), self.im_f64())
    }

    /// Round to `bits` fractional bits; never increases precision.
    pub fn with_bits(&self, bits: u32) -> Self {
        if bits >= self.bits {
            return self.clone();
        }
        let s = self.bits - bits;
        HiComplex {
            re: shr_round(&self.re, s),
            im: shr_round(&self.im, s),
            bits,
            err_ulps: self.err_ulps * 2f64.powi(-(s as i32)) + 0.5,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.bits != o.bits {
            let b = self.bits.min(o.bits);
            return self.with_bits(b).add(&o.with_bits(b));
        }
        HiComplex {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
            bits: self.bits,
            err_ulps: self.err_ulps + o.err_ulps,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        if self.bits != o.bits {
            let b = self.bits.min(o.bits);
            return self.with_bits(b).sub(&o.with_bits(b));
        }
        HiComplex {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
            bits: self.bits,
            err_ulps: self.err_ulps + o.err_ulps,
        }
    }

    fn mag_ulps_bound(&self) -> f64 {
        // |z| in units of one (not ulps), generous
        (self.re_f64().abs() + self.im_f64().abs()) + self.err_bound()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.bits, o.bits);
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        let a = self.mag_ulps_bound();
        let b = o.mag_ulps_bound();
        HiComplex {
            re: shr_round(&re, self.bits),
            im: shr_round(&im, self.bits),
            bits: self.bits,
            err_ulps: 2.0 * (a * o.err_ulps + b * self.err_ulps + self.err_ulps * o.err_ulps * 2f64.powi(-(self.bits as i32)))
                + 1.0,
        }
    }

    /// Multiply by an exact rational.
    pub fn scale(&self, q: &BigRational) -> Self {
        let qa = q.abs().to_f64().unwrap_or(f64::INFINITY);
        HiComplex {
            re: div_round(&(&self.re * q.numer()), q.denom()),
            im: div_round(&(&self.im * q.numer()), q.denom()),
            bits: self.bits,
            err_ulps: self.err_ulps * qa + 1.0,
        }
    }

    /// Crude magnitude |z| as f64.
    pub fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }

    /// Decimal rendering with `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        (fixed_to_decimal(&self.re, self.bits, digits), fixed_to_decimal(&self.im, self.bits, digits))
    }
}

fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_mod_floor(d);
    if (r << 1) >= *d {
        q + 1
    } else {
        q
    }
}

fn fixed_to_decimal(x: &BigInt, bits: u32, digits: usize) -> String {
    let scaled = shr_round(&(x * BigInt::from(10u32).pow(digits as u32)), bits);
    let neg = scaled.sign() == Sign::Minus;
    let s = scaled.abs().to_string();
    let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
    let (int, frac) = s.split_at(s.len() - digits);
    format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
}

impl fmt::Display for HiComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.bits as f64) * 0.30103) as usize;
        let digits = digits.clamp(1, 60);
        let (r, i) = self.to_decimal(digits);
        write!(f, "{} + {}i (±{:.1e})", r, i, self.err_bound())
    }
}

/// π with `bits` fractional bits; returns (value, error in ulps).
pub fn pi_fixed(bits: u32) -> (BigInt, f64) {
    fn atan_inv(x: u64, bits: u32) -> (BigInt, f64) {
        let one = BigInt::one() << bits;
        let x = BigInt::from(x);
        let x2 = &x * &x;
        let mut power = &one / &x; // 1/x^(2k+1)
        let mut sum = BigInt::zero();
        let mut k: u64 = 0;
        let mut n = 0f64;
        while !power.is_zero() {
            let term = &power / BigInt::from(2 * k + 1);
            if k % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            power = &power / &x2;
            k += 1;
            n += 2.0;
        }
        (sum, n + 1.0)
    }
    let (a, ea) = atan_inv(5, bits);
    let (b, eb) = atan_inv(239, bits);
    (((a << 2) - b) << 2, 16.0 * ea + 4.0 * eb)
}

/// e^{2πi/m} at `bits` fractional bits.
pub fn root_of_unity(m: u64, bits: u32) -> HiComplex {
    let one = BigInt::one() << bits;
    match m {
        1 => return HiComplex::one(bits),
        2 => return HiComplex { re: -one, im: BigInt::zero(), bits, err_ulps: 0.0 },
        4 => return HiComplex { re: BigInt::zero(), im: one, bits, err_ulps: 0.0 },
        _ => {}
    }
    let (pi, epi) = pi_fixed(bits);
    let m_big = BigInt::from(m);
    let theta = div_round(&(pi << 1), &m_big);
    let etheta = 2.0 * epi / m as f64 + 1.0;
    let theta2 = shr_round(&(&theta * &theta), bits);
    // cos and sin by Taylor series; θ ≤ 2π/3
    let mut c = one.clone();
    let mut s = theta.clone();
    let mut tc = one.clone();
    let mut ts = theta.clone();
    let mut k: u64 = 1;
    let mut nterms = 0f64;
    loop {
        tc = div_round(&shr_round(&(&tc * &theta2), bits), &BigInt::from((2 * k - 1) * (2 * k)));
        ts = div_round(&shr_round(&(&ts * &theta2), bits), &BigInt::from((2 * k) * (2 * k + 1)));
        if tc.is_zero() && ts.is_zero() {
            break;
        }
        if k % 2 == 1 {
            c -= &tc;
            s -= &ts;
        } else {
            c += &tc;
            s += &ts;
        }
        k += 1;
        nterms += 1.0;
    }
    HiComplex { re: c, im: s, bits, err_ulps: etheta + 3.0 * nterms + 4.0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let (p, _) = pi_fixed(200);
        let s = fixed_to_decimal(&p, 200, 40);
        assert_eq!(s, "3.1415926535897932384626433832795028841972");
    }

    #[test]
    fn eighth_root() {
        let z = root_of_unity(8, 160);
        let h = (0.5f64).sqrt();
        assert!((z.re_f64() - h).abs() < 1e-15 && (z.im_f64() - h).abs() < 1e-15);
        let z8 = (0..3).fold(z.clone(), |acc, _| acc.mul(&acc));
        assert!((z8.re_f64() - 1.0).abs() < 1e-40 + z8.err_bound());
        assert!(z8.err_bound() < 1e-40);
    }

    #[test]
    fn decimal_rendering() {
        let q = BigRational::new(BigInt::from(-1), BigInt::from(8));
        let h = HiComplex::from_rational(&q, 64);
        assert_eq!(h.to_decimal(4).0, "-0.1250");
    }
}
