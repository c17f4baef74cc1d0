//! The Hermite, Gegenbauer and relativistic Hermite families, each
//! constructible by several independent routes at a fixed rational `N`.

mod classical;
mod moment_routes;
mod moments;
mod operator;
pub mod resolutions;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use classical::{
    gegenbauer_explicit, gegenbauer_rodrigues, hermite, hermite_explicit, rhp_explicit,
    rhp_rodrigues, sqrt_n_scale, sqrt_n_unscale,
};
pub use moment_routes::{
    from_moment_binomial, gegenbauer_moment_gamma_gauss, gegenbauer_moment_studentr,
    gegenbauer_moment_uv, rhp_gamma_gauss_prefactor, rhp_moment_gamma_gauss,
    rhp_moment_gamma_gauss_with, rhp_moment_uv,
};
pub use moments::{MomentKind, MomentSequence};
pub use operator::{apply_operator, OperatorSeries};

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::numeric::{checked_div, factorial, int, pochhammer, powi, ParamN};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Hermite,
    Gegenbauer,
    Rhp,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Hermite => "hermite",
            FamilyKind::Gegenbauer => "gegenbauer",
            FamilyKind::Rhp => "rhp",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hermite" => Ok(FamilyKind::Hermite),
            "gegenbauer" => Ok(FamilyKind::Gegenbauer),
            "rhp" => Ok(FamilyKind::Rhp),
            _ => Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        }
    }
}

/// Which scaling of a family member is meant.
///
/// * `Raw`: `H_n`, `C_n^N`, `H_n^N`.
/// * `SqrtNScaled` (relativistic Hermite only): `N^{n/2} H_n^N(X√N)`.
/// * `PaperNormalized`: `N^{n/2} H_n^N(X√N)/(2N)_n` (monic) for the
///   relativistic Hermite family and `n!/(2N)_n · C_n^N` for Gegenbauer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Normalization {
    #[default]
    Raw,
    PaperNormalized,
    SqrtNScaled,
}

impl FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(Normalization::Raw),
            "normalized" | "paper" => Ok(Normalization::PaperNormalized),
            "scaled" | "sqrt-n" => Ok(Normalization::SqrtNScaled),
            _ => Err(Error::InvalidParameter(format!(
                "unknown normalization {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub n: usize,
    pub param: Option<ParamN>,
    pub normalization: Normalization,
}

impl FamilyId {
    pub fn hermite(n: usize) -> Self {
        Self {
            kind: FamilyKind::Hermite,
            n,
            param: None,
            normalization: Normalization::Raw,
        }
    }

    pub fn gegenbauer(n: usize, big_n: ParamN, normalization: Normalization) -> Self {
        Self {
            kind: FamilyKind::Gegenbauer,
            n,
            param: Some(big_n),
            normalization,
        }
    }

    pub fn rhp(n: usize, big_n: ParamN, normalization: Normalization) -> Self {
        Self {
            kind: FamilyKind::Rhp,
            n,
            param: Some(big_n),
            normalization,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match (self.kind, &self.param, self.normalization) {
            (FamilyKind::Hermite, None, Normalization::Raw) => Ok(()),
            (FamilyKind::Hermite, Some(_), _) => {
                Err(Error::InvalidParameter("hermite takes no parameter".into()))
            }
            (FamilyKind::Hermite, None, _) => Err(Error::InvalidParameter(
                "hermite has only the raw normalization".into(),
            )),
            (_, None, _) => Err(Error::InvalidParameter(format!(
                "{} needs a parameter N",
                self.kind
            ))),
            (FamilyKind::Gegenbauer, Some(_), Normalization::SqrtNScaled) => Err(
                Error::InvalidParameter("the sqrt-N scaling applies only to rhp".into()),
            ),
            _ => Ok(()),
        }
    }

    fn param(&self) -> Result<&ParamN> {
        self.param
            .as_ref()
            .ok_or_else(|| Error::InvalidParameter(format!("{} needs a parameter N", self.kind)))
    }
}

/// The family member through its canonical construction (Rodrigues recurrence
/// for Hermite, explicit sums otherwise), in the requested normalization.
pub fn construct(id: &FamilyId) -> Result<Poly> {
    id.validate()?;
    let raw = match id.kind {
        FamilyKind::Hermite => return Ok(hermite(id.n)),
        FamilyKind::Gegenbauer => gegenbauer_explicit(id.n, id.param()?),
        FamilyKind::Rhp => rhp_explicit(id.n, id.param()?)?,
    };
    normalize(&raw, id)
}

/// Converts a raw family member to the normalization named by `id`.
pub fn normalize(raw: &Poly, id: &FamilyId) -> Result<Poly> {
    id.validate()?;
    let n = id.n;
    match (id.kind, id.normalization) {
        (_, Normalization::Raw) => Ok(raw.clone()),
        (FamilyKind::Rhp, Normalization::SqrtNScaled) => sqrt_n_scale(raw, n, id.param()?),
        (FamilyKind::Rhp, Normalization::PaperNormalized) => {
            let big_n = id.param()?;
            let scaled = sqrt_n_scale(raw, n, big_n)?;
            let d = double_pochhammer(n, big_n)?;
            Ok(scaled.scale(&checked_div(&int(1), &d)?))
        }
        (FamilyKind::Gegenbauer, Normalization::PaperNormalized) => {
            let d = double_pochhammer(n, id.param()?)?;
            Ok(raw.scale(&checked_div(&factorial(n), &d)?))
        }
        _ => Err(Error::InvalidParameter(
            "normalization not defined for this family".into(),
        )),
    }
}

/// `(2N)_n`, required nonzero.
pub(crate) fn double_pochhammer(n: usize, big_n: &ParamN) -> Result<crate::numeric::Rational> {
    let d = pochhammer(&(big_n.value() * int(2)), n);
    if num_traits::Zero::is_zero(&d) {
        return Err(Error::Pole(format!("(2N)_{n} = 0 at N = {big_n}")));
    }
    Ok(d)
}

/// Independent construction routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Explicit,
    Rodrigues,
    MomentBinomial,
    MomentUv,
    MomentStudentR,
    MomentGammaGauss,
    Operator,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Explicit => "explicit",
            Route::Rodrigues => "rodrigues",
            Route::MomentBinomial => "moment-binomial",
            Route::MomentUv => "moment-uv",
            Route::MomentStudentR => "moment-student-r",
            Route::MomentGammaGauss => "moment-gamma-gauss",
            Route::Operator => "operator",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The routes available for each family.
pub fn routes(kind: FamilyKind) -> &'static [Route] {
    match kind {
        FamilyKind::Hermite => &[
            Route::Rodrigues,
            Route::Explicit,
            Route::MomentBinomial,
            Route::Operator,
        ],
        FamilyKind::Gegenbauer => &[
            Route::Explicit,
            Route::Rodrigues,
            Route::MomentUv,
            Route::MomentStudentR,
            Route::MomentGammaGauss,
        ],
        FamilyKind::Rhp => &[
            Route::Explicit,
            Route::Rodrigues,
            Route::MomentBinomial,
            Route::MomentUv,
            Route::MomentGammaGauss,
            Route::Operator,
        ],
    }
}

/// The family member through `route`, in the comparison normalization: raw
/// for Hermite and Gegenbauer, `N^{n/2} H_n^N(X√N)` for relativistic Hermite.
pub fn route_poly(
    kind: FamilyKind,
    n: usize,
    big_n: Option<&ParamN>,
    route: Route,
) -> Result<Poly> {
    let need =
        || big_n.ok_or_else(|| Error::InvalidParameter(format!("{kind} needs a parameter N")));
    let unsupported = || {
        Err(Error::InvalidParameter(format!(
            "route {route} not available for {kind}"
        )))
    };
    match kind {
        FamilyKind::Hermite => match route {
            Route::Rodrigues => Ok(hermite(n)),
            Route::Explicit => Ok(hermite_explicit(n)),
            Route::MomentBinomial => {
                from_moment_binomial(n, &powi(&int(2), n as i64)?, &MomentSequence::GaussianHalf)
            }
            Route::Operator => apply_operator(&OperatorSeries::HermiteGaussian, n),
            _ => unsupported(),
        },
        FamilyKind::Gegenbauer => {
            let big_n = need()?;
            match route {
                Route::Explicit => Ok(gegenbauer_explicit(n, big_n)),
                Route::Rodrigues => gegenbauer_rodrigues(n, big_n),
                Route::MomentUv => gegenbauer_moment_uv(n, big_n),
                Route::MomentStudentR => gegenbauer_moment_studentr(n, big_n),
                Route::MomentGammaGauss => gegenbauer_moment_gamma_gauss(n, big_n),
                _ => unsupported(),
            }
        }
        FamilyKind::Rhp => {
            let big_n = need()?;
            match route {
                Route::Explicit => sqrt_n_scale(&rhp_explicit(n, big_n)?, n, big_n),
                Route::Rodrigues => sqrt_n_scale(&rhp_rodrigues(n, big_n)?, n, big_n),
                Route::MomentBinomial => from_moment_binomial(
                    n,
                    &double_pochhammer_unchecked(n, big_n),
                    &MomentSequence::StudentR(big_n.value().clone()),
                ),
                Route::MomentUv => rhp_moment_uv(n, big_n),
                Route::MomentGammaGauss => rhp_moment_gamma_gauss(n, big_n),
                Route::Operator => {
                    let monic = apply_operator(&OperatorSeries::rhp_bessel(big_n.value()), n)?;
                    Ok(monic.scale(&double_pochhammer_unchecked(n, big_n)))
                }
                _ => unsupported(),
            }
        }
    }
}

fn double_pochhammer_unchecked(n: usize, big_n: &ParamN) -> crate::numeric::Rational {
    pochhammer(&(big_n.value() * int(2)), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn n_of(p: i64, q: i64) -> ParamN {
        ParamN::new(rat(p, q)).unwrap()
    }

    #[test]
    fn normalized_low_degrees() {
        let big = n_of(7, 2);
        let nv = big.value().clone();
        let h1 = construct(&FamilyId::rhp(
            1,
            big.clone(),
            Normalization::PaperNormalized,
        ))
        .unwrap();
        assert_eq!(h1, Poly::x());
        let h2 = construct(&FamilyId::rhp(
            2,
            big.clone(),
            Normalization::PaperNormalized,
        ))
        .unwrap();
        let c = checked_div(&int(-1), &(&nv * int(2) + int(1))).unwrap();
        assert_eq!(h2, Poly::new(vec![c.clone(), int(0), int(1)]));
        let g2 = construct(&FamilyId::gegenbauer(
            2,
            big.clone(),
            Normalization::PaperNormalized,
        ))
        .unwrap();
        let denom = &nv * int(2) + int(1);
        let expect = Poly::new(vec![
            int(-1) / &denom,
            int(0),
            (&nv + int(1)) * int(2) / &denom,
        ]);
        assert_eq!(g2, expect);
    }

    #[test]
    fn normalized_rhp_is_monic() {
        for big in [n_of(2, 1), n_of(1, 3), n_of(-7, 3)] {
            for n in 0..9 {
                let p = construct(&FamilyId::rhp(
                    n,
                    big.clone(),
                    Normalization::PaperNormalized,
                ))
                .unwrap();
                assert_eq!(p.degree(), Some(n));
                assert_eq!(p.leading(), int(1));
            }
        }
    }

    #[test]
    fn invalid_ids() {
        let bad = FamilyId {
            kind: FamilyKind::Hermite,
            n: 2,
            param: Some(n_of(1, 1)),
            normalization: Normalization::Raw,
        };
        assert!(construct(&bad).is_err());
        let scaled_geg = FamilyId::gegenbauer(2, n_of(1, 1), Normalization::SqrtNScaled);
        assert!(construct(&scaled_geg).is_err());
        // (2N)_2 = 0 at N = −1/2
        let pole = FamilyId::gegenbauer(2, n_of(-1, 2), Normalization::PaperNormalized);
        assert!(matches!(construct(&pole), Err(Error::Pole(_))));
    }

    #[test]
    fn all_routes_agree_small() {
        for big in [n_of(2, 1), n_of(1, 3)] {
            for kind in [FamilyKind::Hermite, FamilyKind::Gegenbauer, FamilyKind::Rhp] {
                for n in 0..6 {
                    let p = if kind == FamilyKind::Hermite {
                        None
                    } else {
                        Some(&big)
                    };
                    let polys: Vec<Poly> = routes(kind)
                        .iter()
                        .map(|&r| route_poly(kind, n, p, r).unwrap())
                        .collect();
                    assert!(polys.windows(2).all(|w| w[0] == w[1]), "{kind} n={n}");
                }
            }
        }
    }
}
