use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`. Panics when `q == 0`; meant for literals.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "rat: zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

pub fn checked_inv(a: &Rational) -> Result<Rational> {
    checked_div(&Rational::one(), a)
}

/// `a^e` for a signed integer exponent.
pub fn powi(a: &Rational, e: i64) -> Result<Rational> {
    if e < 0 {
        let p = powu(a, e.unsigned_abs());
        checked_inv(&p)
    } else {
        Ok(powu(a, e as u64))
    }
}

pub fn powu(a: &Rational, e: u64) -> Rational {
    let mut acc = Rational::one();
    let mut base = a.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Exact `q`-th root when it exists in the rationals.
pub fn exact_root(a: &Rational, q: u32) -> Option<Rational> {
    if q == 0 {
        return None;
    }
    if q == 1 {
        return Some(a.clone());
    }
    if a.is_negative() && q % 2 == 0 {
        return None;
    }
    let sign = if a.is_negative() { -1 } else { 1 };
    let num = a.numer().abs();
    let den = a.denom().clone();
    let rn = num.nth_root(q);
    let rd = den.nth_root(q);
    if num_traits::pow::<BigInt>(rn.clone(), q as usize) == num
        && num_traits::pow::<BigInt>(rd.clone(), q as usize) == den
    {
        Some(Rational::new(rn * sign, rd))
    } else {
        None
    }
}

/// Whether `a` is an integer `<= 0` (a pole of the Gamma function).
pub fn is_nonpositive_integer(a: &Rational) -> bool {
    a.is_integer() && !a.is_positive()
}

/// Rational serialization: `"p/q"`, or `"p"` when the denominator is 1.
pub fn fmt_rational(a: &Rational) -> String {
    a.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational::new(p, q))
    } else {
        BigInt::from_str(t)
            .map(Rational::from_integer)
            .map_err(|_| bad())
    }
}

pub fn to_f64(a: &Rational) -> f64 {
    a.to_f64().unwrap_or(f64::NAN)
}
