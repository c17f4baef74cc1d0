use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::numeric::{checked_div, exact_root, fmt_rational, int, powi, Rational};

/// Power series in `t` truncated after `t^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
    order: usize,
}

impl TruncSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are kept.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs, order }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    /// `t` itself.
    pub fn variable(order: usize) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], order)
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Result<Rational>) -> Result<Self> {
        let coeffs = (0..=order).map(f).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs, order))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs.iter().take(order + 1).cloned().collect(),
            order.min(self.order),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        Self::new(
            (0..=order)
                .map(|k| &self.coeffs[k] + &o.coeffs[k])
                .collect(),
            order,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        Self::new(
            (0..=order)
                .map(|k| &self.coeffs[k] - &o.coeffs[k])
                .collect(),
            order,
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out, order)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.order)
    }

    /// `f(c·t)`.
    pub fn rescale_variable(&self, c: &Rational) -> Self {
        let mut p = Rational::one();
        let mut out = Vec::with_capacity(self.order + 1);
        for a in &self.coeffs {
            out.push(a * &p);
            p *= c;
        }
        Self::new(out, self.order)
    }

    /// `f^e` through `m·f₀·g_m = Σ_{k=1..m} ((e+1)k − m)·f_k·g_{m−k}`, which
    /// follows from `g′f = e·g·f′`.
    pub fn pow(&self, e: &Rational) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Series(
                "power of a series with zero constant term".into(),
            ));
        }
        let g0 = rational_power(c0, e)?;
        let mut g = vec![g0];
        let e1 = e + Rational::one();
        for m in 1..=self.order {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let fk = &self.coeffs[k];
                if fk.is_zero() {
                    continue;
                }
                let w = &e1 * int(k as i64) - int(m as i64);
                acc += w * fk * &g[m - k];
            }
            g.push(checked_div(&acc, &(c0 * int(m as i64)))?);
        }
        Ok(Self::new(g, self.order))
    }

    /// `exp(f)` for `f(0) = 0`, via `m·g_m = Σ_{k=1..m} k·f_k·g_{m−k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series(
                "exp of a series with nonzero constant term".into(),
            ));
        }
        let mut g = vec![Rational::one()];
        for m in 1..=self.order {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let fk = &self.coeffs[k];
                if !fk.is_zero() {
                    acc += int(k as i64) * fk * &g[m - k];
                }
            }
            g.push(acc / int(m as i64));
        }
        Ok(Self::new(g, self.order))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fmt_rational).collect()
    }
}

/// `c^e` when it is rational.
fn rational_power(c: &Rational, e: &Rational) -> Result<Rational> {
    if c.is_one() {
        return Ok(Rational::one());
    }
    let q: u32 = e
        .denom()
        .try_into()
        .map_err(|_| Error::Series("exponent denominator too large".into()))?;
    let p: i64 = e
        .numer()
        .try_into()
        .map_err(|_| Error::Series("exponent numerator too large".into()))?;
    let root = exact_root(c, q).ok_or_else(|| Error::Series(format!("{c}^({e}) is irrational")))?;
    powi(&root, p)
}

impl Serialize for TruncSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use proptest::prelude::*;

    fn ints(cs: &[i64], order: usize) -> TruncSeries {
        TruncSeries::new(cs.iter().map(|&c| int(c)).collect(), order)
    }

    #[test]
    fn binomial_series() {
        let f = ints(&[1, 1], 3);
        assert_eq!(f.pow(&int(-2)).unwrap(), ints(&[1, -2, 3, -4], 3));
        assert_eq!(f.pow(&int(0)).unwrap(), TruncSeries::one(3));
        // (1 + t²/2)^−2 = 1 − t² + 3t⁴/4
        let g = TruncSeries::new(vec![int(1), int(0), rat(1, 2)], 4);
        let expect = TruncSeries::new(vec![int(1), int(0), int(-1), int(0), rat(3, 4)], 4);
        assert_eq!(g.pow(&int(-2)).unwrap(), expect);
    }

    #[test]
    fn fractional_power_needs_rational_constant() {
        let f = ints(&[4, 1], 2);
        let h = f.pow(&rat(1, 2)).unwrap();
        assert_eq!(h.coeff(0), int(2));
        assert_eq!(h.mul(&h), f);
        assert!(ints(&[2, 1], 2).pow(&rat(1, 2)).is_err());
        assert!(ints(&[0, 1], 2).pow(&int(2)).is_err());
    }

    #[test]
    fn exponential() {
        let t = TruncSeries::variable(3);
        let e = t.exp().unwrap();
        assert_eq!(
            e,
            TruncSeries::new(vec![int(1), int(1), rat(1, 2), rat(1, 6)], 3)
        );
        assert_eq!(TruncSeries::zero(4).exp().unwrap(), TruncSeries::one(4));
        let e35 = TruncSeries::variable(2).scale(&rat(3, 5)).exp().unwrap();
        assert_eq!(
            e35,
            TruncSeries::new(vec![int(1), rat(3, 5), rat(9, 50)], 2)
        );
        assert!(TruncSeries::one(2).exp().is_err());
    }

    #[test]
    fn orders_combine_to_minimum() {
        let a = ints(&[1, 2, 3, 4], 3);
        let b = ints(&[1, 1], 1);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.add(&b).order(), 1);
    }

    fn unit_series() -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec((-9i64..9, 1i64..5), 0..6).prop_map(|cs| {
            let mut v = vec![int(1)];
            v.extend(cs.into_iter().map(|(p, q)| rat(p, q)));
            TruncSeries::new(v, 6)
        })
    }

    proptest! {
        #[test]
        fn powers_are_inverse(f in unit_series(), p in -7i64..7, q in 1i64..4) {
            let e = rat(p, q);
            let prod = f.pow(&e).unwrap().mul(&f.pow(&-e.clone()).unwrap());
            prop_assert_eq!(prod, TruncSeries::one(6));
            prop_assert_eq!(f.pow(&int(1)).unwrap(), f);
        }

        #[test]
        fn powers_add(f in unit_series(), a in -5i64..5, b in -5i64..5) {
            let (a, b) = (rat(a, 3), rat(b, 2));
            let lhs = f.pow(&(&a + &b)).unwrap();
            let rhs = f.pow(&a).unwrap().mul(&f.pow(&b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
