use super::poly::Poly;
use crate::error::{Error, Result};
use crate::numeric::Rational;

/// `a(X) + b(X)·s` where `s² = modulus(X)`.
///
/// With a constant modulus `−1` this is a polynomial with Gaussian
/// coefficients; with `1 + X²` or `X² − 1` it carries the square roots
/// appearing in the Nagel-type relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExtPoly {
    pub a: Poly,
    pub b: Poly,
    modulus: Poly,
}

impl QuadExtPoly {
    pub fn new(a: Poly, b: Poly, modulus: Poly) -> Self {
        Self { a, b, modulus }
    }

    pub fn from_poly(a: Poly, modulus: &Poly) -> Self {
        Self::new(a, Poly::zero(), modulus.clone())
    }

    pub fn one(modulus: &Poly) -> Self {
        Self::from_poly(Poly::one(), modulus)
    }

    /// The adjoined root `s` itself.
    pub fn root(modulus: &Poly) -> Self {
        Self::new(Poly::zero(), Poly::one(), modulus.clone())
    }

    /// Polynomials over the Gaussian rationals: `s = i`.
    pub fn gaussian_modulus() -> Poly {
        Poly::constant(Rational::from_integer((-1).into()))
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    fn same_modulus(&self, o: &Self) -> Result<()> {
        if self.modulus != o.modulus {
            return Err(Error::ModulusMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_modulus(o)?;
        Ok(Self::new(
            &self.a + &o.a,
            &self.b + &o.b,
            self.modulus.clone(),
        ))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_modulus(o)?;
        Ok(Self::new(
            &self.a - &o.a,
            &self.b - &o.b,
            self.modulus.clone(),
        ))
    }

    /// `(a₁+b₁s)(a₂+b₂s) = (a₁a₂ + b₁b₂·modulus) + (a₁b₂ + a₂b₁)s`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_modulus(o)?;
        let a = &(&self.a * &o.a) + &(&(&self.b * &o.b) * &self.modulus);
        let b = &(&self.a * &o.b) + &(&o.a * &self.b);
        Ok(Self::new(a, b, self.modulus.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.a.scale(c), self.b.scale(c), self.modulus.clone())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.modulus.clone())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.modulus);
        for _ in 0..e {
            // moduli agree by construction
            acc = acc.mul(self).expect("same modulus");
        }
        acc
    }

    /// The `a` part, provided the `s` part vanishes.
    pub fn into_base(self, context: &str) -> Result<Poly> {
        if !self.b.is_zero() {
            let msg = format!("{context}: {}", self.b);
            return Err(if self.modulus == Self::gaussian_modulus() {
                Error::ImaginaryPart(msg)
            } else {
                Error::RadicalPart(msg)
            });
        }
        Ok(self.a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn conjugate_norm() {
        let m = Poly::from_ints(&[-1, 0, 1]);
        let u = QuadExtPoly::new(Poly::x(), Poly::one(), m.clone());
        let v = u.conj();
        assert_eq!(u.mul(&v).unwrap(), QuadExtPoly::one(&m));
    }

    #[test]
    fn root_squares_to_modulus() {
        let m = Poly::from_ints(&[1, 0, 1]);
        let s = QuadExtPoly::root(&m);
        assert_eq!(s.mul(&s).unwrap(), QuadExtPoly::from_poly(m.clone(), &m));
        let one_plus_s = QuadExtPoly::new(Poly::one(), Poly::one(), m.clone());
        let sq = one_plus_s.pow(2);
        assert_eq!(sq.a, Poly::from_ints(&[2, 0, 1]));
        assert_eq!(sq.b, Poly::from_ints(&[2]));
    }

    #[test]
    fn mixed_moduli_are_rejected() {
        let a = QuadExtPoly::root(&Poly::from_ints(&[1, 0, 1]));
        let b = QuadExtPoly::root(&Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(a.mul(&b), Err(Error::ModulusMismatch));
        assert_eq!(a.add(&b), Err(Error::ModulusMismatch));
    }

    #[test]
    fn gaussian_part_reports_imaginary() {
        let i = QuadExtPoly::root(&QuadExtPoly::gaussian_modulus());
        assert_eq!(i.pow(2).into_base("i^2").unwrap(), Poly::constant(int(-1)));
        assert!(matches!(i.into_base("i"), Err(Error::ImaginaryPart(_))));
    }

    proptest! {
        #[test]
        fn norm_has_no_root_part(a in prop::collection::vec(-9i64..9, 0..4), b in prop::collection::vec(-9i64..9, 0..4), q in 1i64..4) {
            let m = Poly::new(vec![rat(1, q), int(0), int(1)]);
            let u = QuadExtPoly::new(Poly::from_ints(&a), Poly::from_ints(&b), m);
            let n = u.mul(&u.conj()).unwrap();
            prop_assert!(n.b.is_zero());
        }
    }
}
