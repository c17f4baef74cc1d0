//! Hankel determinants of family members and of moment sequences.

use num_traits::{One, Zero};

use crate::algebra::{MultiPoly, Poly};
use crate::error::{Error, Result};
use crate::families::{construct, FamilyId, FamilyKind, MomentSequence, Normalization};
use crate::numeric::{checked_div, factorial, int, pochhammer, powi, rat, ParamN, Rational};
use crate::report::{CheckResult, Params, Witness};

/// `(n+1)×(n+1)` matrix with entry `(i, j)` equal to `P_{i+j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelPolyMatrix {
    sequence: Vec<Poly>,
}

impl HankelPolyMatrix {
    /// Built from `P_0, …, P_{2n}`; the sequence length must be odd.
    pub fn from_sequence(sequence: Vec<Poly>) -> Result<Self> {
        if sequence.len() % 2 == 0 {
            return Err(Error::InvalidParameter(
                "Hankel sequence needs 2n+1 entries".into(),
            ));
        }
        Ok(Self { sequence })
    }

    pub fn size(&self) -> usize {
        self.sequence.len() / 2 + 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.sequence[i + j]
    }

    pub fn rows(&self) -> Vec<Vec<Poly>> {
        let m = self.size();
        (0..m)
            .map(|i| (0..m).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }
}

/// Hankel matrix of the normalized family (`ℋ` or `𝒞`) up to degree `2n`.
pub fn hankel(kind: FamilyKind, n: usize, big_n: &ParamN) -> Result<HankelPolyMatrix> {
    let id = |k| FamilyId {
        kind,
        n: k,
        param: Some(big_n.clone()),
        normalization: Normalization::PaperNormalized,
    };
    let seq = (0..=2 * n)
        .map(|k| construct(&id(k)))
        .collect::<Result<Vec<_>>>()?;
    HankelPolyMatrix::from_sequence(seq)
}

/// Fraction-free (Bareiss) elimination over `Q[X]`: every division is exact.
pub fn poly_determinant(rows: &[Vec<Poly>]) -> Result<Poly> {
    let m = rows.len();
    if rows.iter().any(|r| r.len() != m) {
        return Err(Error::InvalidParameter(
            "determinant of a non-square matrix".into(),
        ));
    }
    if m == 0 {
        return Ok(Poly::one());
    }
    let mut a = rows.to_vec();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..m - 1 {
        if a[k][k].is_zero() {
            match (k + 1..m).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Poly::zero()),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[m - 1][m - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Laplace expansion along the first row; for cross-checking small sizes.
pub fn cofactor_determinant(rows: &[Vec<Poly>]) -> Poly {
    let m = rows.len();
    if m == 0 {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for j in 0..m {
        let minor: Vec<Vec<Poly>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &rows[0][j] * &cofactor_determinant(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// `∏_{j=1}^n j! (2N−1)_j / ((N−1/2)_j (N+1/2)_j)`.
fn turan_product(n: usize, big_n: &ParamN) -> Result<Rational> {
    let nv = big_n.value();
    let mut acc = Rational::one();
    for j in 1..=n {
        let den = pochhammer(&(nv - rat(1, 2)), j) * pochhammer(&(nv + rat(1, 2)), j);
        if den.is_zero() {
            return Err(Error::Pole(format!("(N∓1/2)_{j} = 0 at N = {nv}")));
        }
        acc *= factorial(j) * pochhammer(&(nv * int(2) - int(1)), j) / den;
    }
    Ok(acc)
}

fn triangle(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Closed form of the `ℋ` Turán determinant:
/// `(−1)^{n(n+1)/2} 2^{−n(n+1)} ∏ j!(2N−1)_j/((N−1/2)_j(N+1/2)_j)`.
pub fn turan_closed_rhp(n: usize, big_n: &ParamN) -> Result<Rational> {
    let sign = if triangle(n) % 2 == 0 {
        int(1)
    } else {
        int(-1)
    };
    Ok(sign * powi(&int(2), -((n * (n + 1)) as i64))? * turan_product(n, big_n)?)
}

/// Closed form of the `𝒞` Turán determinant: `((X²−1)/4)^{n(n+1)/2}` times
/// the same product.
pub fn turan_closed_gegenbauer(n: usize, big_n: &ParamN) -> Result<Poly> {
    let base = Poly::new(vec![rat(-1, 4), int(0), rat(1, 4)]);
    Ok(base.pow(triangle(n)).scale(&turan_product(n, big_n)?))
}

/// Largest `n` for which the squared Vandermonde is expanded.
pub const WILKS_MAX_N: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilksValue {
    /// `E ∏_{j<k}(Z_j − Z_k)² / (n+1)!`, the Hankel moment determinant.
    pub plain: Rational,
    /// `(−1)^{n(n+1)/2}` times `plain`.
    pub signed: Rational,
}

/// Expands `∏_{0≤j<k≤n}(Z_j − Z_k)²` over i.i.d. copies of the law.
pub fn wilks_expectation(n: usize, mom: &MomentSequence) -> Result<WilksValue> {
    if n > WILKS_MAX_N {
        return Err(Error::TooLarge(format!(
            "Vandermonde expansion with n = {n} > {WILKS_MAX_N}"
        )));
    }
    let vars = n + 1;
    let mut vdm = MultiPoly::constant(vars, int(1));
    for j in 0..vars {
        for k in j + 1..vars {
            let d = MultiPoly::var(vars, j).sub(&MultiPoly::var(vars, k));
            vdm = vdm.mul(&d.mul(&d));
        }
    }
    let e = vdm.expectation(|k| mom.moment(k))?;
    let plain = checked_div(&e, &factorial(vars))?;
    let signed = if triangle(n) % 2 == 0 {
        plain.clone()
    } else {
        -plain.clone()
    };
    Ok(WilksValue { plain, signed })
}

/// `det[m_{i+j}]_{0≤i,j≤n}`.
pub fn moment_hankel_determinant(n: usize, mom: &MomentSequence) -> Result<Rational> {
    let seq = (0..=2 * n as u32)
        .map(|k| Ok(Poly::constant(mom.moment(k)?)))
        .collect::<Result<Vec<_>>>()?;
    let det = poly_determinant(&HankelPolyMatrix::from_sequence(seq)?.rows())?;
    Ok(det.coeff(0))
}

fn determinant_with_cross_check(m: &HankelPolyMatrix) -> Result<(Poly, Option<Poly>)> {
    let rows = m.rows();
    let det = poly_determinant(&rows)?;
    if m.size() <= 3 {
        let cof = cofactor_determinant(&rows);
        if cof != det {
            return Ok((det.clone(), Some(&det - &cof)));
        }
    }
    Ok((det, None))
}

/// The `ℋ` Hankel determinant is the constant [`turan_closed_rhp`]; a
/// nonconstant determinant leaves a nonconstant witness.
pub fn check_turan_rhp(n: usize, big_n: &ParamN) -> CheckResult {
    let mut note = String::new();
    let r = CheckResult::run("turan-rhp", Params::new().n(n).big_n(big_n), || {
        let (det, mismatch) = determinant_with_cross_check(&hankel(FamilyKind::Rhp, n, big_n)?)?;
        if let Some(w) = mismatch {
            note = "elimination and cofactor expansion disagree".into();
            return Ok(Witness::Poly(w));
        }
        if det.degree().unwrap_or(0) > 0 {
            note = format!("determinant has degree {}", det.degree().unwrap_or(0));
        }
        Ok(Witness::Poly(
            &det - &Poly::constant(turan_closed_rhp(n, big_n)?),
        ))
    });
    r.with_notes(note)
}

/// The `𝒞` Hankel determinant equals [`turan_closed_gegenbauer`].
pub fn check_turan_gegenbauer(n: usize, big_n: &ParamN) -> CheckResult {
    let mut note = String::new();
    let r = CheckResult::run("turan-gegenbauer", Params::new().n(n).big_n(big_n), || {
        let (det, mismatch) =
            determinant_with_cross_check(&hankel(FamilyKind::Gegenbauer, n, big_n)?)?;
        if let Some(w) = mismatch {
            note = "elimination and cofactor expansion disagree".into();
            return Ok(Witness::Poly(w));
        }
        Ok(Witness::Poly(&det - &turan_closed_gegenbauer(n, big_n)?))
    });
    r.with_notes(note)
}

/// With Student-r moments the signed Vandermonde expectation equals the `ℋ`
/// closed form, and the unsigned one equals the moment Hankel determinant.
/// Witness: `[signed − closed, plain − det]`.
pub fn check_wilks(n: usize, big_n: &ParamN) -> CheckResult {
    CheckResult::run("wilks", Params::new().n(n).big_n(big_n), || {
        let mom = MomentSequence::StudentR(big_n.value().clone());
        let w = wilks_expectation(n, &mom)?;
        let closed = turan_closed_rhp(n, big_n)?;
        let det = moment_hankel_determinant(n, &mom)?;
        Ok(Witness::Values(vec![&w.signed - &closed, &w.plain - &det]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: i64, b: i64) -> ParamN {
        ParamN::new(rat(a, b)).unwrap()
    }

    #[test]
    fn hankel_shapes() {
        let big = p(2, 1);
        let h = hankel(FamilyKind::Rhp, 1, &big).unwrap();
        assert_eq!(h.size(), 2);
        assert_eq!(h.entry(0, 1), &Poly::x());
        assert_eq!(h.entry(1, 1), &Poly::new(vec![rat(-1, 5), int(0), int(1)]));
        assert_eq!(
            hankel(FamilyKind::Rhp, 0, &big).unwrap().rows(),
            vec![vec![Poly::one()]]
        );
        let g = hankel(FamilyKind::Gegenbauer, 1, &big).unwrap();
        assert_eq!(
            g.entry(1, 1),
            &Poly::new(vec![rat(-1, 5), int(0), rat(6, 5)])
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(poly_determinant(&[vec![Poly::one()]]).unwrap(), Poly::one());
        let h = hankel(FamilyKind::Rhp, 1, &p(2, 1)).unwrap();
        assert_eq!(
            poly_determinant(&h.rows()).unwrap(),
            Poly::constant(rat(-1, 5))
        );
        let diag = vec![
            vec![Poly::x(), Poly::zero(), Poly::zero()],
            vec![Poly::zero(), Poly::from_ints(&[1, 1]), Poly::zero()],
            vec![Poly::zero(), Poly::zero(), Poly::constant(int(3))],
        ];
        assert_eq!(
            poly_determinant(&diag).unwrap(),
            Poly::from_ints(&[0, 3, 3])
        );
        // zero leading pivot forces a row swap
        let swap = vec![
            vec![Poly::zero(), Poly::one()],
            vec![Poly::one(), Poly::x()],
        ];
        assert_eq!(poly_determinant(&swap).unwrap(), Poly::constant(int(-1)));
        assert_eq!(cofactor_determinant(&swap), Poly::constant(int(-1)));
    }

    #[test]
    fn closed_forms_small() {
        for big in [p(2, 1), p(7, 2), p(1, 3)] {
            let nv = big.value().clone();
            assert_eq!(turan_closed_rhp(0, &big).unwrap(), int(1));
            assert_eq!(
                turan_closed_rhp(1, &big).unwrap(),
                int(-1) / (&nv * int(2) + int(1))
            );
            assert_eq!(turan_closed_gegenbauer(0, &big).unwrap(), Poly::one());
            let g1 = Poly::from_ints(&[-1, 0, 1]).scale(&(int(1) / (&nv * int(2) + int(1))));
            assert_eq!(turan_closed_gegenbauer(1, &big).unwrap(), g1);
        }
    }

    #[test]
    fn turan_checks_pass() {
        for n in 0..=3 {
            assert!(check_turan_rhp(n, &p(3, 1)).passed, "rhp n={n}");
            assert!(check_turan_gegenbauer(n, &p(3, 1)).passed, "geg n={n}");
        }
        assert!(check_turan_gegenbauer(2, &p(2, 1)).passed);
    }

    #[test]
    fn wilks_values() {
        let g = wilks_expectation(1, &MomentSequence::GaussianHalf).unwrap();
        assert_eq!(g.plain, rat(1, 2));
        assert_eq!(
            wilks_expectation(0, &MomentSequence::GaussianHalf)
                .unwrap()
                .plain,
            int(1)
        );
        let s = wilks_expectation(1, &MomentSequence::StudentR(int(2))).unwrap();
        assert_eq!((s.plain, s.signed), (rat(1, 5), rat(-1, 5)));
        assert!(wilks_expectation(4, &MomentSequence::GaussianHalf).is_err());
        for n in 0..=3 {
            for mom in [
                MomentSequence::GaussianHalf,
                MomentSequence::GammaShape(rat(3, 2)),
            ] {
                assert_eq!(
                    wilks_expectation(n, &mom).unwrap().plain,
                    moment_hankel_determinant(n, &mom).unwrap()
                );
            }
            assert!(check_wilks(n, &p(7, 2)).passed);
        }
    }
}
