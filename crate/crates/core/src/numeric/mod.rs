//! Exact scalar arithmetic.

mod combinatorics;
mod gamma;
mod gaussian;
mod rational;
mod surd;

use std::fmt;

use num_traits::Zero;

pub use combinatorics::{binomial, compositions, factorial, multinomial, pochhammer};
pub use gamma::{GammaArg, GammaRatio};
pub use gaussian::GaussianRational;
pub use rational::{
    checked_div, checked_inv, exact_root, fmt_rational, int, is_nonpositive_integer,
    parse_rational, powi, powu, rat, to_f64, Rational,
};
pub use surd::Surd;

use crate::error::{Error, Result};

/// The nonzero family parameter `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamN(Rational);

impl ParamN {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::InvalidParameter("N must be nonzero".into()));
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// `N + shift`, itself required to be nonzero.
    pub fn shifted(&self, shift: &Rational) -> Result<Self> {
        Self::new(&self.0 + shift)
    }
}

impl fmt::Display for ParamN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::str::FromStr for ParamN {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_rational(s)?)
    }
}
