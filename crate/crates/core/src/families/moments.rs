use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fault;
use crate::numeric::{checked_div, factorial, int, pochhammer, powu, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MomentKind {
    GaussianHalf,
    StudentR,
    GammaShape,
    PointMass,
}

/// Moments `k ↦ E Z^k` of the random variables used in the moment
/// representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MomentSequence {
    /// Centered Gaussian with variance 1/2: `E Z^{2k} = (2k)!/(k!·4^k)`.
    GaussianHalf,
    /// Density ∝ `(1−Z²)^{N−1}` on `[−1, 1]`:
    /// `E Z^{2k} = (2k)!/(k!·4^k·(N+1/2)_k)`.
    StudentR(Rational),
    /// Gamma law with the given shape: `E b^l = (shape)_l`.
    GammaShape(Rational),
    PointMass(Rational),
}

impl MomentSequence {
    pub fn kind(&self) -> MomentKind {
        match self {
            MomentSequence::GaussianHalf => MomentKind::GaussianHalf,
            MomentSequence::StudentR(_) => MomentKind::StudentR,
            MomentSequence::GammaShape(_) => MomentKind::GammaShape,
            MomentSequence::PointMass(_) => MomentKind::PointMass,
        }
    }

    pub fn moment(&self, k: u32) -> Result<Rational> {
        let v = self.exact_moment(k)?;
        Ok(fault::perturb_moment(self.kind(), k, v))
    }

    fn exact_moment(&self, k: u32) -> Result<Rational> {
        let ku = k as usize;
        Ok(match self {
            MomentSequence::GaussianHalf => {
                if k % 2 == 1 {
                    Rational::zero()
                } else {
                    let j = ku / 2;
                    factorial(ku) / (factorial(j) * powu(&int(4), j as u64))
                }
            }
            MomentSequence::StudentR(n) => {
                if k % 2 == 1 {
                    Rational::zero()
                } else {
                    let j = ku / 2;
                    let poch = pochhammer(&(n + rat(1, 2)), j);
                    if poch.is_zero() {
                        return Err(Error::Pole(format!("(N+1/2)_{j} = 0 at N = {n}")));
                    }
                    checked_div(
                        &factorial(ku),
                        &(factorial(j) * powu(&int(4), j as u64) * poch),
                    )?
                }
            }
            MomentSequence::GammaShape(a) => pochhammer(a, ku),
            MomentSequence::PointMass(x) => powu(x, k as u64),
        })
    }

    /// `k ↦ E Z^k` for `k = 0..=max`.
    pub fn table(&self, max: u32) -> Result<Vec<Rational>> {
        (0..=max).map(|k| self.moment(k)).collect()
    }
}

impl fmt::Display for MomentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentSequence::GaussianHalf => write!(f, "gaussian(var=1/2)"),
            MomentSequence::StudentR(n) => write!(f, "student-r(N={n})"),
            MomentSequence::GammaShape(a) => write!(f, "gamma(shape={a})"),
            MomentSequence::PointMass(x) => write!(f, "point-mass({x})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_moments() {
        let g = MomentSequence::GaussianHalf;
        assert_eq!(
            g.table(6).unwrap(),
            vec![
                int(1),
                int(0),
                rat(1, 2),
                int(0),
                rat(3, 4),
                int(0),
                rat(15, 8)
            ]
        );
    }

    #[test]
    fn student_moments() {
        let s = MomentSequence::StudentR(int(2));
        assert_eq!(s.moment(2).unwrap(), rat(1, 5));
        // E Z^4 = 4!/(2!·16·(5/2)(7/2)) = 3/35
        assert_eq!(s.moment(4).unwrap(), rat(3, 35));
        assert_eq!(s.moment(3).unwrap(), int(0));
        // N = 1 is the uniform law on [−1, 1]
        assert_eq!(
            MomentSequence::StudentR(int(1)).moment(2).unwrap(),
            rat(1, 3)
        );
        assert!(MomentSequence::StudentR(rat(-1, 2)).moment(2).is_err());
    }

    #[test]
    fn gamma_and_point_moments() {
        assert_eq!(
            MomentSequence::GammaShape(rat(3, 2)).moment(2).unwrap(),
            rat(15, 4)
        );
        assert_eq!(
            MomentSequence::PointMass(rat(-2, 3)).moment(3).unwrap(),
            rat(-8, 27)
        );
        assert_eq!(MomentSequence::PointMass(int(0)).moment(0).unwrap(), int(1));
    }
}
