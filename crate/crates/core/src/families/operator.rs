use num_traits::{One, Zero};

use super::MomentSequence;
use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::numeric::{
    checked_div, factorial, int, pochhammer, powi, rat, GaussianRational, Rational,
};

/// A power series `Σ c_k u^k` applied as the differential operator
/// `Σ c_k (d/dX)^k` to a monomial basis element `(scale·X)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorSeries {
    /// `exp(−u²/4)` on `(2X)^n`, giving `H_n`.
    HermiteGaussian,
    /// The normalized Bessel series `j_ν(u) = Σ (−1)^k u^{2k} / (k! (ν+1)_k 4^k)`
    /// on `X^n`.
    NormalizedBessel { nu: Rational },
    /// The characteristic function `E exp(iuZ)` of a symmetric law, on `X^n`.
    Characteristic(MomentSequence),
}

impl OperatorSeries {
    /// The Bessel order that reproduces the normalized relativistic Hermite
    /// polynomials for parameter `N`: `ν = N − 1/2`.
    pub fn rhp_bessel(big_n: &Rational) -> Self {
        OperatorSeries::NormalizedBessel {
            nu: big_n - rat(1, 2),
        }
    }

    pub fn basis_scale(&self) -> Rational {
        match self {
            OperatorSeries::HermiteGaussian => int(2),
            _ => Rational::one(),
        }
    }

    pub fn coefficient(&self, k: usize) -> Result<Rational> {
        match self {
            OperatorSeries::HermiteGaussian => {
                if k % 2 == 1 {
                    return Ok(Rational::zero());
                }
                let j = k / 2;
                Ok(powi(&rat(-1, 4), j as i64)? / factorial(j))
            }
            OperatorSeries::NormalizedBessel { nu } => {
                if k % 2 == 1 {
                    return Ok(Rational::zero());
                }
                let j = k / 2;
                let poch = pochhammer(&(nu + int(1)), j);
                if poch.is_zero() {
                    return Err(Error::Pole(format!("(ν+1)_{j} = 0 at ν = {nu}")));
                }
                let sign = if j % 2 == 0 { int(1) } else { int(-1) };
                checked_div(&sign, &(factorial(j) * poch * powi(&int(4), j as i64)?))
            }
            OperatorSeries::Characteristic(mom) => {
                let c = GaussianRational::i_pow(k as i64)
                    .scale(&(mom.moment(k as u32)? / factorial(k)));
                if !c.is_real() {
                    return Err(Error::ImaginaryPart(format!(
                        "characteristic coefficient {k} of {mom}"
                    )));
                }
                Ok(c.re)
            }
        }
    }

    /// `Σ_{k ≤ deg} c_k p^{(k)}`; only finitely many terms act on a polynomial.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let mut acc = Poly::zero();
        let mut d = p.clone();
        let mut k = 0;
        while !d.is_zero() {
            let c = self.coefficient(k)?;
            if !c.is_zero() {
                acc = &acc + &d.scale(&c);
            }
            d = d.derivative();
            k += 1;
        }
        Ok(acc)
    }
}

/// The operator applied to its basis monomial `(scale·X)^n`.
pub fn apply_operator(op: &OperatorSeries, n: usize) -> Result<Poly> {
    op.apply(&Poly::monomial(powi(&op.basis_scale(), n as i64)?, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::classical::hermite;

    #[test]
    fn hermite_operator() {
        assert_eq!(
            apply_operator(&OperatorSeries::HermiteGaussian, 2).unwrap(),
            Poly::from_ints(&[-2, 0, 4])
        );
        for n in 0..10 {
            assert_eq!(
                apply_operator(&OperatorSeries::HermiteGaussian, n).unwrap(),
                hermite(n)
            );
        }
    }

    #[test]
    fn degree_zero_gives_constant_term() {
        let op = OperatorSeries::NormalizedBessel { nu: rat(5, 2) };
        assert_eq!(apply_operator(&op, 0).unwrap(), Poly::one());
    }

    #[test]
    fn bessel_order_at_degree_two() {
        // X² − 1/(2N+1) requires ν = N − 1/2
        let big_n = int(3);
        let p = apply_operator(&OperatorSeries::rhp_bessel(&big_n), 2).unwrap();
        assert_eq!(p, Poly::new(vec![rat(-1, 7), int(0), int(1)]));
        let shifted = OperatorSeries::NormalizedBessel {
            nu: &big_n + rat(1, 2),
        };
        assert_ne!(apply_operator(&shifted, 2).unwrap(), p);
    }

    #[test]
    fn characteristic_function_matches_bessel_for_student_law() {
        let big_n = rat(7, 2);
        let chi = OperatorSeries::Characteristic(MomentSequence::StudentR(big_n.clone()));
        let bes = OperatorSeries::rhp_bessel(&big_n);
        for k in 0..12 {
            assert_eq!(chi.coefficient(k).unwrap(), bes.coefficient(k).unwrap());
        }
    }
}
