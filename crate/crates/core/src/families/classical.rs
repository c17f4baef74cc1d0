//! Closed-form and Rodrigues constructions.

use num_traits::{One, Zero};

use super::FamilyKind;
use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::fault;
use crate::numeric::{checked_div, factorial, int, pochhammer, powi, rat, ParamN, Rational, Surd};

/// Hermite `H_n` from `H_{n+1} = 2X·H_n − H_n′`, the one-step consequence of
/// the Rodrigues formula.
pub fn hermite(n: usize) -> Poly {
    let two_x = Poly::from_ints(&[0, 2]);
    let mut h = Poly::one();
    for _ in 0..n {
        h = &(&two_x * &h) - &h.derivative();
    }
    fault::perturb_poly(FamilyKind::Hermite, n, h)
}

/// `H_n = n! Σ_k (−1)^k (2X)^{n−2k} / (k!(n−2k)!)`.
pub fn hermite_explicit(n: usize) -> Poly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let two_pow = powi(&int(2), (n - 2 * k) as i64).expect("nonnegative power");
        coeffs[n - 2 * k] = sign * factorial(n) * two_pow / (factorial(k) * factorial(n - 2 * k));
    }
    Poly::new(coeffs)
}

/// `C_n^N = Σ_k (−1)^k (N)_{n−k} (2X)^{n−2k} / ((n−2k)! k!)`.
pub fn gegenbauer_explicit(n: usize, big_n: &ParamN) -> Poly {
    let nv = big_n.value();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let two_pow = powi(&int(2), (n - 2 * k) as i64).expect("nonnegative power");
        coeffs[n - 2 * k] =
            sign * pochhammer(nv, n - k) * two_pow / (factorial(n - 2 * k) * factorial(k));
    }
    fault::perturb_poly(FamilyKind::Gegenbauer, n, Poly::new(coeffs))
}

/// Relativistic Hermite `H_n^N` from the explicit sum with the powers of
/// `√N` cancelled: the coefficient of `X^{n−2k}` is
/// `(2N)_n n! (−1)^k 2^{−2k} N^{k−n} / ((N+1/2)_k (n−2k)! k!)`.
pub fn rhp_explicit(n: usize, big_n: &ParamN) -> Result<Poly> {
    let nv = big_n.value();
    let lead = pochhammer(&(nv * int(2)), n) * factorial(n);
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=n / 2 {
        let poch = pochhammer(&(nv + rat(1, 2)), k);
        if poch.is_zero() {
            return Err(Error::Pole(format!("(N+1/2)_{k} = 0 at N = {nv}")));
        }
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let num = sign * &lead * powi(&int(2), -2 * k as i64)? * powi(nv, k as i64 - n as i64)?;
        coeffs[n - 2 * k] = checked_div(&num, &(poch * factorial(n - 2 * k) * factorial(k)))?;
    }
    Ok(fault::perturb_poly(FamilyKind::Rhp, n, Poly::new(coeffs)))
}

/// `H_n^N = (−1)^n P_n` with `P_0 = 1` and
/// `P_{k+1} = (1 + X²/N) P_k′ − (N+k)(2X/N) P_k`, obtained by differentiating
/// `(1+X²/N)^{−N−k} P_k` once.
pub fn rhp_rodrigues(n: usize, big_n: &ParamN) -> Result<Poly> {
    let nv = big_n.value();
    let inv_n = checked_div(&Rational::one(), nv)?;
    let weight = Poly::new(vec![int(1), int(0), inv_n.clone()]);
    let two_x_over_n = Poly::new(vec![int(0), &inv_n * int(2)]);
    let mut p = Poly::one();
    for k in 0..n {
        let shift = nv + int(k as i64);
        p = &(&weight * &p.derivative()) - &(&two_x_over_n * &p).scale(&shift);
    }
    Ok(if n % 2 == 1 { -p } else { p })
}

/// `C_n^N = γ_n^N (−1)^n Q_n` where `d^k/dX^k (1−X²)^a = (1−X²)^{a−k} Q_k`,
/// `a = n + N − 1/2`, so `Q_{k+1} = (1−X²) Q_k′ − 2(a−k) X Q_k`, and
/// `γ_n^N = (2N)_n / (2^n n! (N+1/2)_n)`.
pub fn gegenbauer_rodrigues(n: usize, big_n: &ParamN) -> Result<Poly> {
    let nv = big_n.value();
    let poch = pochhammer(&(nv + rat(1, 2)), n);
    if poch.is_zero() {
        return Err(Error::Pole(format!("(N+1/2)_{n} = 0 at N = {nv}")));
    }
    let gamma = checked_div(
        &pochhammer(&(nv * int(2)), n),
        &(powi(&int(2), n as i64)? * factorial(n) * poch),
    )?;
    let a = int(n as i64) + nv - rat(1, 2);
    let one_minus_x2 = Poly::from_ints(&[1, 0, -1]);
    let x = Poly::x();
    let mut q = Poly::one();
    for k in 0..n {
        let c = (&a - int(k as i64)) * int(2);
        q = &(&one_minus_x2 * &q.derivative()) - &(&x * &q).scale(&c);
    }
    let sign = if n % 2 == 1 { -gamma } else { gamma };
    Ok(q.scale(&sign))
}

/// `N^{n/2} p(X√N)` for a polynomial of parity `n`; the half powers pair up
/// as `N^{(n+j)/2}` on the coefficient of `X^j`.
pub fn sqrt_n_scale(p: &Poly, n: usize, big_n: &ParamN) -> Result<Poly> {
    scale_half_powers(p, n, big_n.value(), 1)
}

/// Inverse of [`sqrt_n_scale`].
pub fn sqrt_n_unscale(p: &Poly, n: usize, big_n: &ParamN) -> Result<Poly> {
    scale_half_powers(p, n, big_n.value(), -1)
}

fn scale_half_powers(p: &Poly, n: usize, base: &Rational, sign: i64) -> Result<Poly> {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            if c.is_zero() {
                return Ok(Rational::zero());
            }
            Surd::rational(c.clone())
                .mul(&Surd::half_power(base.clone(), sign * (n + j) as i64))
                .resolve_real()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n_of(p: i64, q: i64) -> ParamN {
        ParamN::new(rat(p, q)).unwrap()
    }

    #[test]
    fn hermite_low_degrees() {
        assert_eq!(hermite(0), Poly::one());
        assert_eq!(hermite(1), Poly::from_ints(&[0, 2]));
        assert_eq!(hermite(2), Poly::from_ints(&[-2, 0, 4]));
        assert_eq!(hermite(3), Poly::from_ints(&[0, -12, 0, 8]));
        for n in 0..10 {
            assert_eq!(hermite(n), hermite_explicit(n));
        }
    }

    #[test]
    fn gegenbauer_low_degrees_symbolic() {
        for big in [n_of(1, 1), n_of(2, 1), n_of(7, 2), n_of(-1, 3)] {
            let nv = big.value().clone();
            assert_eq!(gegenbauer_explicit(0, &big), Poly::one());
            assert_eq!(
                gegenbauer_explicit(1, &big),
                Poly::new(vec![int(0), &nv * int(2)])
            );
            let c2 = Poly::new(vec![-nv.clone(), int(0), &nv * (&nv + int(1)) * int(2)]);
            assert_eq!(gegenbauer_explicit(2, &big), c2);
            // 2N(N+1)((2(N+2)/3)X³ − X)
            let pre = &nv * (&nv + int(1)) * int(2);
            let c3 = Poly::new(vec![
                int(0),
                -pre.clone(),
                int(0),
                &pre * (&nv + int(2)) * rat(2, 3),
            ]);
            assert_eq!(gegenbauer_explicit(3, &big), c3);
        }
    }

    #[test]
    fn rhp_low_degrees_symbolic() {
        for big in [n_of(1, 1), n_of(2, 1), n_of(3, 1), n_of(7, 2)] {
            let inv = checked_div(&int(1), big.value()).unwrap();
            assert_eq!(rhp_explicit(0, &big).unwrap(), Poly::one());
            assert_eq!(rhp_explicit(1, &big).unwrap(), Poly::from_ints(&[0, 2]));
            // 2(−1 + X²(2 + 1/N))
            let h2 = Poly::new(vec![int(-2), int(0), (int(2) + &inv) * int(2)]);
            assert_eq!(rhp_explicit(2, &big).unwrap(), h2);
            // 4(1 + 1/N)(X³(2 + 1/N) − 3X)
            let pre = (int(1) + &inv) * int(4);
            let h3 = Poly::new(vec![int(0), &pre * int(-3), int(0), &pre * (int(2) + &inv)]);
            assert_eq!(rhp_explicit(3, &big).unwrap(), h3);
        }
        assert_eq!(
            rhp_explicit(3, &n_of(1, 1)).unwrap(),
            Poly::from_ints(&[0, -24, 0, 24])
        );
    }

    #[test]
    fn rodrigues_matches_explicit() {
        for big in [n_of(2, 1), n_of(7, 2), n_of(1, 3), n_of(-7, 3)] {
            for n in 0..9 {
                assert_eq!(
                    rhp_rodrigues(n, &big).unwrap(),
                    rhp_explicit(n, &big).unwrap(),
                    "rhp n={n} N={big}"
                );
                assert_eq!(
                    gegenbauer_rodrigues(n, &big).unwrap(),
                    gegenbauer_explicit(n, &big),
                    "geg n={n} N={big}"
                );
            }
        }
    }

    #[test]
    fn rhp_pole() {
        // (N+1/2)_1 = 0 at N = −1/2
        assert!(matches!(rhp_explicit(2, &n_of(-1, 2)), Err(Error::Pole(_))));
        assert!(rhp_explicit(1, &n_of(-1, 2)).is_ok());
        assert!(matches!(
            gegenbauer_rodrigues(2, &n_of(-3, 2)),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn scaled_form() {
        // N H_2^N(X√N) at N = 2 is 20X² − 4
        let big = n_of(2, 1);
        let h2 = rhp_explicit(2, &big).unwrap();
        let s = sqrt_n_scale(&h2, 2, &big).unwrap();
        assert_eq!(s, Poly::from_ints(&[-4, 0, 20]));
        assert_eq!(sqrt_n_unscale(&s, 2, &big).unwrap(), h2);
        // odd n: N^{1/2}·2X√N = 2NX
        let h1 = rhp_explicit(1, &big).unwrap();
        assert_eq!(
            sqrt_n_scale(&h1, 1, &big).unwrap(),
            Poly::from_ints(&[0, 4])
        );
        // wrong parity leaves an unpaired √N
        assert!(sqrt_n_scale(&Poly::from_ints(&[1, 1]), 1, &big).is_err());
    }
}
