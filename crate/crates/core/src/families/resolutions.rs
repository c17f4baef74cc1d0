//! Brute-force pinning of constants that admit more than one plausible
//! reading: each candidate is checked against the explicit construction.

use super::{
    apply_operator, double_pochhammer, rhp_explicit, rhp_moment_gamma_gauss_with, sqrt_n_scale,
    OperatorSeries,
};
use crate::error::Result;
use crate::numeric::{int, powi, rat, GammaArg, GammaRatio, ParamN, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub label: &'static str,
    pub matches: bool,
}

/// Bessel orders `N − 1/2` and `N + 1/2` tested for `n ≤ max_n`.
pub fn bessel_order_candidates(big_n: &ParamN, max_n: usize) -> Result<Vec<Candidate>> {
    let nv = big_n.value();
    let options: [(&'static str, Rational); 2] =
        [("N-1/2", nv - rat(1, 2)), ("N+1/2", nv + rat(1, 2))];
    let mut out = Vec::new();
    for (label, nu) in options {
        let op = OperatorSeries::NormalizedBessel { nu };
        let mut matches = true;
        for n in 0..=max_n {
            let expected = sqrt_n_scale(&rhp_explicit(n, big_n)?, n, big_n)?;
            let d = double_pochhammer(n, big_n)?;
            let got = apply_operator(&op, n)?.scale(&d);
            matches &= got == expected;
        }
        out.push(Candidate { label, matches });
    }
    Ok(out)
}

/// Prefactors `2^n (N)_{n/2}` and `2^n (2N)_n` for the gamma/Gaussian
/// representation, tested for `n ≤ max_n`. A candidate that does not even
/// reduce to a rational counts as a mismatch.
pub fn gamma_gauss_prefactor_candidates(big_n: &ParamN, max_n: usize) -> Result<Vec<Candidate>> {
    let mut half = true;
    let mut double = true;
    for n in 0..=max_n {
        let expected = sqrt_n_scale(&rhp_explicit(n, big_n)?, n, big_n)?;
        let two_n = powi(&int(2), n as i64)?;
        let half_n = rat(n as i64, 2);
        let p_half = GammaRatio::pochhammer(GammaArg::shifted(int(0)), half_n).scale(&two_n);
        let p_double =
            GammaRatio::pochhammer(GammaArg::doubled(int(0)), int(n as i64)).scale(&two_n);
        half &= rhp_moment_gamma_gauss_with(n, big_n, &p_half).map_or(false, |p| p == expected);
        double &= rhp_moment_gamma_gauss_with(n, big_n, &p_double).map_or(false, |p| p == expected);
    }
    Ok(vec![
        Candidate {
            label: "2^n (N)_{n/2}",
            matches: half,
        },
        Candidate {
            label: "2^n (2N)_n",
            matches: double,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bessel_order_is_n_minus_half() {
        for big in [int(2), int(3), rat(7, 2), rat(1, 3)] {
            let c = bessel_order_candidates(&ParamN::new(big).unwrap(), 4).unwrap();
            assert!(c[0].matches);
            assert!(!c[1].matches);
        }
    }

    #[test]
    fn prefactor_is_half_pochhammer() {
        for big in [int(2), int(10), rat(7, 2), rat(1, 3)] {
            let c = gamma_gauss_prefactor_candidates(&ParamN::new(big).unwrap(), 4).unwrap();
            assert!(c[0].matches);
            assert!(!c[1].matches);
        }
    }
}
