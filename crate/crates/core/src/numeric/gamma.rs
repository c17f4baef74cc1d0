//! Symbolic products of Gamma functions in a parameter `N`.
//!
//! A [`GammaRatio`] stands for
//!
//! ```text
//! rational_factor · 2^(pow2_slope·N + pow2_offset) · π^(sqrt_pi_exponent/2)
//!     · ∏ Γ(numerator args) / ∏ Γ(denominator args)
//! ```
//!
//! Arguments are affine in `N` with slope 1 or 2. Normalization removes the
//! slope-2 arguments with Legendre's duplication formula and then cancels
//! numerator/denominator pairs whose offsets differ by an integer, folding the
//! resulting Pochhammer factor (evaluated at a concrete `N`) into the rational
//! factor. What remains after normalization is exactly the irrational part.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::combinatorics::pochhammer;
use super::rational::{checked_inv, int, is_nonpositive_integer, powi, Rational};
use crate::error::{Error, Result};

/// `Γ(slope·N + offset)` with `slope ∈ {1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaArg {
    slope: u8,
    offset: Rational,
}

impl GammaArg {
    pub fn new(slope: u8, offset: Rational) -> Result<Self> {
        if slope != 1 && slope != 2 {
            return Err(Error::InvalidParameter(format!(
                "gamma argument slope {slope} not in {{1, 2}}"
            )));
        }
        Ok(Self { slope, offset })
    }

    /// `Γ(N + offset)`.
    pub fn shifted(offset: Rational) -> Self {
        Self { slope: 1, offset }
    }

    /// `Γ(2N + offset)`.
    pub fn doubled(offset: Rational) -> Self {
        Self { slope: 2, offset }
    }

    pub fn slope(&self) -> u8 {
        self.slope
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn value_at(&self, n: &Rational) -> Rational {
        int(self.slope as i64) * n + &self.offset
    }

    fn sort_key(&self, other: &Self) -> Ordering {
        self.slope
            .cmp(&other.slope)
            .then_with(|| self.offset.cmp(&other.offset))
    }
}

impl fmt::Display for GammaArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = if self.slope == 1 {
            "N".to_string()
        } else {
            "2N".to_string()
        };
        if self.offset.is_zero() {
            write!(f, "Γ({lead})")
        } else if self.offset.is_negative() {
            write!(f, "Γ({lead}{})", self.offset)
        } else {
            write!(f, "Γ({lead}+{})", self.offset)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRatio {
    pub numerator_args: Vec<GammaArg>,
    pub denominator_args: Vec<GammaArg>,
    pub pow2_slope: i64,
    pub pow2_offset: Rational,
    pub sqrt_pi_exponent: i64,
    pub rational_factor: Rational,
}

impl Default for GammaRatio {
    fn default() -> Self {
        Self::one()
    }
}

impl GammaRatio {
    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(r: Rational) -> Self {
        Self {
            numerator_args: Vec::new(),
            denominator_args: Vec::new(),
            pow2_slope: 0,
            pow2_offset: Rational::zero(),
            sqrt_pi_exponent: 0,
            rational_factor: r,
        }
    }

    pub fn gamma(arg: GammaArg) -> Self {
        let mut g = Self::one();
        g.numerator_args.push(arg);
        g
    }

    /// `(arg)_count = Γ(arg + count) / Γ(arg)`; `count` may be fractional.
    pub fn pochhammer(arg: GammaArg, count: Rational) -> Self {
        let upper = GammaArg {
            slope: arg.slope,
            offset: &arg.offset + count,
        };
        let mut g = Self::gamma(upper);
        g.denominator_args.push(arg);
        g
    }

    /// `E b^s` for `b` Gamma distributed with shape `slope·N + offset`.
    pub fn gamma_moment(shape: GammaArg, s: Rational) -> Self {
        Self::pochhammer(shape, s)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.numerator_args
            .extend(other.numerator_args.iter().cloned());
        out.denominator_args
            .extend(other.denominator_args.iter().cloned());
        out.pow2_slope += other.pow2_slope;
        out.pow2_offset += &other.pow2_offset;
        out.sqrt_pi_exponent += other.sqrt_pi_exponent;
        out.rational_factor *= &other.rational_factor;
        out
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self {
            numerator_args: self.denominator_args.clone(),
            denominator_args: self.numerator_args.clone(),
            pow2_slope: -self.pow2_slope,
            pow2_offset: -&self.pow2_offset,
            sqrt_pi_exponent: -self.sqrt_pi_exponent,
            rational_factor: checked_inv(&self.rational_factor)?,
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        out.rational_factor *= r;
        out
    }

    /// Brings the ratio to normal form for the concrete parameter value `n`.
    ///
    /// Slope-2 arguments are split with `Γ(2z) = 2^(2z−1) π^(−1/2) Γ(z) Γ(z+1/2)`;
    /// then every numerator/denominator pair with equal slope and integer
    /// offset difference is replaced by the corresponding Pochhammer factor.
    pub fn normalize(&self, n: &Rational) -> Result<Self> {
        let mut out = Self::rational(self.rational_factor.clone());
        out.pow2_slope = self.pow2_slope;
        out.pow2_offset = self.pow2_offset.clone();
        out.sqrt_pi_exponent = self.sqrt_pi_exponent;

        let half = Rational::new(1.into(), 2.into());
        for (args, sign) in [
            (&self.numerator_args, 1i64),
            (&self.denominator_args, -1i64),
        ] {
            for arg in args {
                let split = if arg.slope == 2 {
                    // Γ(2N + o) = Γ(2(N + o/2))
                    let z = &arg.offset / int(2);
                    out.pow2_slope += 2 * sign;
                    out.pow2_offset += (&arg.offset - Rational::one()) * int(sign);
                    out.sqrt_pi_exponent -= sign;
                    vec![GammaArg::shifted(z.clone()), GammaArg::shifted(z + &half)]
                } else {
                    vec![arg.clone()]
                };
                if sign > 0 {
                    out.numerator_args.extend(split);
                } else {
                    out.denominator_args.extend(split);
                }
            }
        }

        let mut numer = std::mem::take(&mut out.numerator_args);
        let mut denom = std::mem::take(&mut out.denominator_args);
        let mut i = 0;
        while i < numer.len() {
            let partner = denom.iter().position(|d| {
                d.slope == numer[i].slope && (&numer[i].offset - &d.offset).is_integer()
            });
            match partner {
                Some(j) => {
                    let top = numer.swap_remove(i);
                    let bottom = denom.swap_remove(j);
                    let factor = cancel_pair(&top, &bottom, n)?;
                    out.rational_factor *= factor;
                    i = 0;
                }
                None => i += 1,
            }
        }
        numer.sort_by(GammaArg::sort_key);
        denom.sort_by(GammaArg::sort_key);
        out.numerator_args = numer;
        out.denominator_args = denom;
        Ok(out)
    }

    /// The rational value, when the normalized ratio carries no Gamma
    /// functions, no `π` and no `N`-dependent or fractional power of two.
    pub fn is_rational(&self) -> Option<Rational> {
        if !self.numerator_args.is_empty()
            || !self.denominator_args.is_empty()
            || self.sqrt_pi_exponent != 0
            || self.pow2_slope != 0
            || !self.pow2_offset.is_integer()
        {
            return None;
        }
        let e: i64 = self.pow2_offset.to_integer().try_into().ok()?;
        let p = powi(&int(2), e).ok()?;
        Some(&self.rational_factor * p)
    }

    /// Normalizes at `n` and insists on a rational result.
    pub fn reduce(&self, n: &Rational) -> Result<Rational> {
        let g = self.normalize(n)?;
        g.is_rational()
            .ok_or_else(|| Error::NonRationalGamma(g.to_string()))
    }
}

/// `Γ(top)/Γ(bottom)` for equal slopes and integer offset difference.
fn cancel_pair(top: &GammaArg, bottom: &GammaArg, n: &Rational) -> Result<Rational> {
    let diff = &top.offset - &bottom.offset;
    if diff.is_zero() {
        return Ok(Rational::one());
    }
    let t = top.value_at(n);
    let b = bottom.value_at(n);
    if is_nonpositive_integer(&t) || is_nonpositive_integer(&b) {
        return Err(Error::Pole(format!("{top}/{bottom} at N = {n}")));
    }
    let steps: i64 = diff
        .to_integer()
        .try_into()
        .map_err(|_| Error::TooLarge("gamma offset".into()))?;
    if steps > 0 {
        Ok(pochhammer(&b, steps as usize))
    } else {
        checked_inv(&pochhammer(&t, steps.unsigned_abs() as usize))
    }
}

impl fmt::Display for GammaRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational_factor)?;
        if self.pow2_slope != 0 || !self.pow2_offset.is_zero() {
            write!(f, "·2^({}N+{})", self.pow2_slope, self.pow2_offset)?;
        }
        if self.sqrt_pi_exponent != 0 {
            write!(f, "·π^({}/2)", self.sqrt_pi_exponent)?;
        }
        for a in &self.numerator_args {
            write!(f, "·{a}")?;
        }
        for a in &self.denominator_args {
            write!(f, "/{a}")?;
        }
        Ok(())
    }
}
