use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::numeric::Rational;

/// Sparse polynomial in variables `Z_0 … Z_{nvars−1}`. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.insert(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        assert!(j < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[j] = 1;
        let mut p = Self::zero(nvars);
        p.insert(e, Rational::one());
        p
    }

    fn insert(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(exps.clone())
            .or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Largest exponent of any single variable.
    pub fn max_exponent(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            out.insert(e.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, c1 * c2);
            }
        }
        out
    }

    /// Expectation under independent, identically distributed variables with
    /// the given moments: each monomial `∏ Z_j^{e_j}` becomes `∏ m(e_j)`.
    pub fn expectation(&self, moment: impl Fn(u32) -> Result<Rational>) -> Result<Rational> {
        let mut cache: BTreeMap<u32, Rational> = BTreeMap::new();
        let mut total = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for &e in exps {
                let m = match cache.get(&e) {
                    Some(m) => m.clone(),
                    None => {
                        let m = moment(e)?;
                        cache.insert(e, m.clone());
                        m
                    }
                };
                term *= m;
                if term.is_zero() {
                    break;
                }
            }
            total += term;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};
    use proptest::prelude::*;

    fn gaussian_half(k: u32) -> Result<Rational> {
        // E Z^{2j} = (2j)!/(j! 4^j) for variance 1/2
        if k % 2 == 1 {
            return Ok(int(0));
        }
        let j = k / 2;
        let mut v = int(1);
        for i in 0..j {
            v *= rat(2 * i as i64 + 1, 2);
        }
        Ok(v)
    }

    #[test]
    fn squared_difference_expectation() {
        let d = MultiPoly::var(2, 0).sub(&MultiPoly::var(2, 1));
        let sq = d.mul(&d);
        assert_eq!(sq.expectation(gaussian_half).unwrap(), int(1));
        // Student-r with N = 2: E Z² = 1/(2N+1)
        let student = |k: u32| -> Result<Rational> {
            Ok(match k {
                0 => int(1),
                2 => rat(1, 5),
                _ => int(0),
            })
        };
        assert_eq!(sq.expectation(student).unwrap(), rat(2, 5));
        assert_eq!(
            MultiPoly::constant(3, rat(7, 3))
                .expectation(gaussian_half)
                .unwrap(),
            rat(7, 3)
        );
    }

    #[test]
    fn cancellation_drops_terms() {
        let z = MultiPoly::var(2, 0);
        assert!(z.sub(&z).is_empty());
    }

    proptest! {
        #[test]
        fn expectation_is_linear(a in -9i64..9, b in -9i64..9, e1 in 0u32..4, e2 in 0u32..4) {
            let z0 = MultiPoly::var(2, 0);
            let z1 = MultiPoly::var(2, 1);
            let mut p = MultiPoly::constant(2, int(1));
            for _ in 0..e1 { p = p.mul(&z0); }
            let mut q = MultiPoly::constant(2, int(1));
            for _ in 0..e2 { q = q.mul(&z1.sub(&z0)); }
            let combo = p.scale(&int(a)).add(&q.scale(&int(b)));
            let lhs = combo.expectation(gaussian_half).unwrap();
            let rhs = int(a) * p.expectation(gaussian_half).unwrap() + int(b) * q.expectation(gaussian_half).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
