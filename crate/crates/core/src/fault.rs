//! Test hook for mutation testing: perturb one coefficient of one canonical
//! family member, or one moment of one moment law, process-wide.
//!
//! Only the canonical constructors (`hermite`, `gegenbauer_explicit`,
//! `rhp_explicit`) and [`MomentSequence::moment`](crate::families::MomentSequence::moment)
//! consult the hook. Checks that depend on the perturbed value must then fail.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::RwLock;

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::families::{FamilyKind, MomentKind};
use crate::numeric::{int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaultSite {
    /// Coefficient `index` of the degree-`n` member, for every parameter.
    Family {
        kind: FamilyKind,
        n: usize,
        index: usize,
    },
    /// The `k`-th moment of every law of the given kind.
    Moment { kind: MomentKind, k: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fault {
    pub site: FaultSite,
    pub delta: Rational,
}

static ACTIVE: AtomicBool = AtomicBool::new(false);
static FAULT: RwLock<Option<Fault>> = RwLock::new(None);

/// Installs `fault` until the returned guard is dropped.
#[must_use = "the fault is removed when the guard is dropped"]
pub fn inject(fault: Fault) -> FaultGuard {
    *FAULT.write().unwrap_or_else(|e| e.into_inner()) = Some(fault);
    ACTIVE.store(true, Ordering::SeqCst);
    FaultGuard(())
}

pub fn clear() {
    ACTIVE.store(false, Ordering::SeqCst);
    *FAULT.write().unwrap_or_else(|e| e.into_inner()) = None;
}

pub struct FaultGuard(());

impl Drop for FaultGuard {
    fn drop(&mut self) {
        clear();
    }
}

fn current() -> Option<Fault> {
    if !ACTIVE.load(Ordering::Relaxed) {
        return None;
    }
    FAULT.read().unwrap_or_else(|e| e.into_inner()).clone()
}

pub(crate) fn perturb_poly(kind: FamilyKind, n: usize, p: Poly) -> Poly {
    match current() {
        Some(Fault {
            site:
                FaultSite::Family {
                    kind: k,
                    n: m,
                    index,
                },
            delta,
        }) if k == kind && m == n => p.add_to_coeff(index, &delta),
        _ => p,
    }
}

pub(crate) fn perturb_moment(kind: MomentKind, k: u32, v: Rational) -> Rational {
    match current() {
        Some(Fault {
            site: FaultSite::Moment { kind: mk, k: j },
            delta,
        }) if mk == kind && j == k => v + delta,
        _ => v,
    }
}

impl std::str::FromStr for Fault {
    type Err = Error;

    /// `family:<hermite|gegenbauer|rhp>:<n>:<index>[:<delta>]` or
    /// `moment:<gaussian|student-r|gamma|point>:<k>[:<delta>]`; `delta`
    /// defaults to 1.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad fault spec {s:?}"));
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let delta = |t: Option<&&str>| t.map_or(Ok(int(1)), |d| parse_rational(d));
        match parts.as_slice() {
            ["family", kind, n, index, rest @ ..] if rest.len() <= 1 => Ok(Fault {
                site: FaultSite::Family {
                    kind: kind.parse()?,
                    n: num(n)?,
                    index: num(index)?,
                },
                delta: delta(rest.first())?,
            }),
            ["moment", kind, k, rest @ ..] if rest.len() <= 1 => {
                let kind = match *kind {
                    "gaussian" => MomentKind::GaussianHalf,
                    "student-r" => MomentKind::StudentR,
                    "gamma" => MomentKind::GammaShape,
                    "point" => MomentKind::PointMass,
                    _ => return Err(bad()),
                };
                Ok(Fault {
                    site: FaultSite::Moment {
                        kind,
                        k: num(k)? as u32,
                    },
                    delta: delta(rest.first())?,
                })
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn parses_specs() {
        let f: Fault = "family:rhp:2:0".parse().unwrap();
        assert_eq!(
            f.site,
            FaultSite::Family {
                kind: FamilyKind::Rhp,
                n: 2,
                index: 0
            }
        );
        assert_eq!(f.delta, int(1));
        let f: Fault = "moment:student-r:2:-1/3".parse().unwrap();
        assert_eq!(
            f.site,
            FaultSite::Moment {
                kind: MomentKind::StudentR,
                k: 2
            }
        );
        assert_eq!(f.delta, rat(-1, 3));
        for bad in [
            "",
            "family:rhp:2",
            "moment:cauchy:2",
            "family:rhp:x:0",
            "moment:gamma:1:2:3",
        ] {
            assert!(bad.parse::<Fault>().is_err(), "{bad}");
        }
    }
}
