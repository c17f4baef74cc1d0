use std::collections::BTreeMap;

use num_traits::Zero;

use super::gaussian::GaussianRational;
use super::rational::{powi, Rational};
use crate::error::{Error, Result};

/// A Gaussian rational times a product of half-integer powers of rationals,
/// `coeff · ∏ base^(e/2)`.
///
/// Each `base^(1/2)` is one fixed square root of `base` (imaginary for negative
/// bases), so exponents simply add under multiplication. The product resolves
/// to a Gaussian rational exactly when every exponent is even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub coeff: GaussianRational,
    half_exponents: BTreeMap<Rational, i64>,
}

impl Surd {
    pub fn new(coeff: GaussianRational) -> Self {
        Self {
            coeff,
            half_exponents: BTreeMap::new(),
        }
    }

    pub fn rational(r: Rational) -> Self {
        Self::new(GaussianRational::real(r))
    }

    /// `base^(half_exponent/2)`.
    pub fn half_power(base: Rational, half_exponent: i64) -> Self {
        let mut s = Self::rational(Rational::from_integer(1.into()));
        s.push(base, half_exponent);
        s
    }

    fn push(&mut self, base: Rational, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.half_exponents.entry(base.clone()).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.half_exponents.remove(&base);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::new(&self.coeff * &other.coeff);
        out.half_exponents = self.half_exponents.clone();
        for (b, e) in &other.half_exponents {
            out.push(b.clone(), *e);
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = self.clone();
        out.coeff = &out.coeff * c;
        out
    }

    pub fn half_exponent(&self, base: &Rational) -> i64 {
        self.half_exponents.get(base).copied().unwrap_or(0)
    }

    /// Folds every even power into the coefficient; fails on any odd power.
    pub fn resolve(&self) -> Result<GaussianRational> {
        if self.coeff.is_zero() {
            return Ok(GaussianRational::zero());
        }
        let mut acc = self.coeff.clone();
        for (base, e) in &self.half_exponents {
            if e % 2 != 0 {
                return Err(Error::UnresolvedHalfPower(format!("{base}^({e}/2)")));
            }
            if base.is_zero() && *e < 0 {
                return Err(Error::DivisionByZero);
            }
            acc = acc.scale(&powi(base, e / 2)?);
        }
        Ok(acc)
    }

    /// Resolves and insists on a real value.
    pub fn resolve_real(&self) -> Result<Rational> {
        let g = self.resolve()?;
        if !g.is_real() {
            return Err(Error::ImaginaryPart(g.to_string()));
        }
        Ok(g.re)
    }
}
