//! Constructions through moment representations: each polynomial is an
//! expectation of a polynomial in independent random variables, expanded as
//! a finite exact sum over their moments.

use num_traits::Zero;

use super::MomentSequence;
use crate::algebra::{Poly, QuadExtPoly};
use crate::error::{Error, Result};
use crate::numeric::{
    binomial, checked_div, factorial, int, pochhammer, powi, GammaArg, GammaRatio,
    GaussianRational, ParamN, Rational,
};

/// `prefactor · Σ_k C(n,k) X^{n−k} i^k m_k`, computed over the Gaussian
/// rationals; the imaginary part must vanish.
///
/// With `2^n` and Gaussian moments this is `H_n = 2^n E(X + iZ)^n`; with
/// `(2N)_n` and Student-r moments it is `N^{n/2} H_n^N(X√N) = (2N)_n E(X + iZ_N)^n`.
pub fn from_moment_binomial(n: usize, prefactor: &Rational, mom: &MomentSequence) -> Result<Poly> {
    let mut re = vec![Rational::zero(); n + 1];
    for k in 0..=n {
        let m = mom.moment(k as u32)?;
        if m.is_zero() {
            continue;
        }
        let term = GaussianRational::i_pow(k as i64).scale(&(binomial(n, k) * m * prefactor));
        if !term.is_real() {
            return Err(Error::ImaginaryPart(format!(
                "moment expansion n={n}, k={k} with {mom}"
            )));
        }
        re[n - k] += term.re;
    }
    Ok(Poly::new(re))
}

/// `C_n^N = (1/n!) E[(X+s)U + (X−s)V]^n` with `s² = X² − 1` and `U`, `V`
/// independent Gamma(N).
pub fn gegenbauer_moment_uv(n: usize, big_n: &ParamN) -> Result<Poly> {
    let modulus = Poly::from_ints(&[-1, 0, 1]);
    let x = QuadExtPoly::from_poly(Poly::x(), &modulus);
    let s = QuadExtPoly::root(&modulus);
    let u_coeff = x.add(&s)?;
    let v_coeff = x.sub(&s)?;
    let total = uv_expectation(n, &u_coeff, &v_coeff, big_n.value())?;
    let p = total.into_base("gegenbauer U/V representation")?;
    checked_div_poly(&p, &factorial(n))
}

/// `N^{n/2} H_n^N(X√N) = E[(i+X)U + (−i+X)V]^n` with `U`, `V` independent
/// Gamma(N).
pub fn rhp_moment_uv(n: usize, big_n: &ParamN) -> Result<Poly> {
    let modulus = QuadExtPoly::gaussian_modulus();
    let x = QuadExtPoly::from_poly(Poly::x(), &modulus);
    let i = QuadExtPoly::root(&modulus);
    let total = uv_expectation(n, &x.add(&i)?, &x.sub(&i)?, big_n.value())?;
    total.into_base("relativistic Hermite U/V representation")
}

/// `E[αU + βV]^n = Σ_j C(n,j) α^j β^{n−j} (N)_j (N)_{n−j}`.
fn uv_expectation(
    n: usize,
    alpha: &QuadExtPoly,
    beta: &QuadExtPoly,
    shape: &Rational,
) -> Result<QuadExtPoly> {
    let gamma = MomentSequence::GammaShape(shape.clone());
    let mut acc = QuadExtPoly::from_poly(Poly::zero(), alpha.modulus());
    for j in 0..=n {
        let w = binomial(n, j) * gamma.moment(j as u32)? * gamma.moment((n - j) as u32)?;
        let term = alpha.pow(j).mul(&beta.pow(n - j))?.scale(&w);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `C_n^N = ((2N)_n/n!) E[X + i√(1−X²) Z_N]^n`. The product `w = i√(1−X²)`
/// is carried as the root of `w² = X² − 1`.
pub fn gegenbauer_moment_studentr(n: usize, big_n: &ParamN) -> Result<Poly> {
    let nv = big_n.value();
    let modulus = Poly::from_ints(&[-1, 0, 1]);
    let x = QuadExtPoly::from_poly(Poly::x(), &modulus);
    let w = QuadExtPoly::root(&modulus);
    let mom = MomentSequence::StudentR(nv.clone());
    let mut acc = QuadExtPoly::from_poly(Poly::zero(), &modulus);
    for k in 0..=n {
        let m = mom.moment(k as u32)?;
        if m.is_zero() {
            continue;
        }
        let term = x.pow(n - k).mul(&w.pow(k))?.scale(&(binomial(n, k) * m));
        acc = acc.add(&term)?;
    }
    let p = acc.into_base("gegenbauer Student-r representation")?;
    let pre = checked_div(&pochhammer(&(nv * int(2)), n), &factorial(n))?;
    Ok(p.scale(&pre))
}

/// `E_b b^{s}` for `b` Gamma distributed with shape `N + n/2`, times
/// `(N)_{n/2}`, reduced to a rational at the concrete `N`.
fn half_shape_moment_with_pochhammer(n: usize, s: Rational, big_n: &ParamN) -> Result<Rational> {
    let half_n = Rational::new((n as i64).into(), 2.into());
    let prefactor = GammaRatio::pochhammer(GammaArg::shifted(int(0)), half_n.clone());
    let moment = GammaRatio::gamma_moment(GammaArg::shifted(half_n), s);
    prefactor.mul(&moment).reduce(big_n.value())
}

/// `C_n^N = (2^n (N)_{n/2}/n!) E_{Z,b}(X√b + iZ)^n` with `Z` Gaussian of
/// variance 1/2 and `b ~ Gamma(N + n/2)`. Each term pairs `(N)_{n/2}` with
/// `E b^{(n−k)/2}` and is certified rational through [`GammaRatio`].
pub fn gegenbauer_moment_gamma_gauss(n: usize, big_n: &ParamN) -> Result<Poly> {
    let gauss = MomentSequence::GaussianHalf;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=n {
        let m = gauss.moment(k as u32)?;
        if m.is_zero() {
            continue;
        }
        let ik = GaussianRational::i_pow(k as i64);
        if !ik.is_real() {
            return Err(Error::ImaginaryPart(format!(
                "gamma/gauss expansion n={n}, k={k}"
            )));
        }
        let b_part = half_shape_moment_with_pochhammer(
            n,
            Rational::new(((n - k) as i64).into(), 2.into()),
            big_n,
        )?;
        coeffs[n - k] += ik.re * binomial(n, k) * m * b_part;
    }
    let pre = checked_div(&powi(&int(2), n as i64)?, &factorial(n))?;
    Ok(Poly::new(coeffs).scale(&pre))
}

/// `P · E_{b,Z}(X√b + i√(1+X²) Z)^n` with `Z` Gaussian of variance 1/2 and
/// `b ~ Gamma(N + n/2)`, where the prefactor `P` is supplied symbolically.
/// The product `w = i√(1+X²)` is the root of `w² = −(1+X²)`.
pub fn rhp_moment_gamma_gauss_with(
    n: usize,
    big_n: &ParamN,
    prefactor: &GammaRatio,
) -> Result<Poly> {
    let half_n = Rational::new((n as i64).into(), 2.into());
    let modulus = Poly::from_ints(&[-1, 0, -1]);
    let x = QuadExtPoly::from_poly(Poly::x(), &modulus);
    let w = QuadExtPoly::root(&modulus);
    let gauss = MomentSequence::GaussianHalf;
    let mut acc = QuadExtPoly::from_poly(Poly::zero(), &modulus);
    for k in 0..=n {
        let m = gauss.moment(k as u32)?;
        if m.is_zero() {
            continue;
        }
        let s = Rational::new(((n - k) as i64).into(), 2.into());
        let b_part = prefactor
            .mul(&GammaRatio::gamma_moment(
                GammaArg::shifted(half_n.clone()),
                s,
            ))
            .reduce(big_n.value())?;
        let term = x
            .pow(n - k)
            .mul(&w.pow(k))?
            .scale(&(binomial(n, k) * m * b_part));
        acc = acc.add(&term)?;
    }
    acc.into_base("relativistic Hermite gamma/gauss representation")
}

/// The prefactor `2^n (N)_{n/2}` for the gamma/Gaussian representation of
/// `N^{n/2} H_n^N(X√N)`, as pinned by brute-force comparison.
pub fn rhp_gamma_gauss_prefactor(n: usize) -> GammaRatio {
    let half_n = Rational::new((n as i64).into(), 2.into());
    GammaRatio::pochhammer(GammaArg::shifted(int(0)), half_n)
        .scale(&powi(&int(2), n as i64).expect("power of two"))
}

/// `N^{n/2} H_n^N(X√N)` through the gamma/Gaussian representation.
pub fn rhp_moment_gamma_gauss(n: usize, big_n: &ParamN) -> Result<Poly> {
    rhp_moment_gamma_gauss_with(n, big_n, &rhp_gamma_gauss_prefactor(n))
}

fn checked_div_poly(p: &Poly, d: &Rational) -> Result<Poly> {
    let inv = checked_div(&Rational::from_integer(1.into()), d)?;
    Ok(p.scale(&inv))
}
