//! Named check suites over an `(n, N)` grid.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilyKind;
use crate::identities::*;
use crate::numeric::{fmt_rational, int, rat, ParamN, Rational};
use crate::report::{CheckResult, Summary};
use crate::turan::{check_turan_gegenbauer, check_turan_rhp, check_wilks, WILKS_MAX_N};

/// Largest `n` for the Turán determinant suites.
pub const TURAN_MAX_N: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Nagel,
    Cnix,
    SubordinationHermite,
    SubordinationGegenbauer,
    Derivative,
    HermiteAddition,
    RhpAddition,
    Scaling,
    GenfuncRhp,
    Moment3665,
    Feldheim,
    FeldheimRhp,
    ShiftedGenfunc,
    TuranRhp,
    TuranGegenbauer,
    Wilks,
    Routes,
}

impl Suite {
    pub const ALL: [Suite; 17] = [
        Suite::Nagel,
        Suite::Cnix,
        Suite::SubordinationHermite,
        Suite::SubordinationGegenbauer,
        Suite::Derivative,
        Suite::HermiteAddition,
        Suite::RhpAddition,
        Suite::Scaling,
        Suite::GenfuncRhp,
        Suite::Moment3665,
        Suite::Feldheim,
        Suite::FeldheimRhp,
        Suite::ShiftedGenfunc,
        Suite::TuranRhp,
        Suite::TuranGegenbauer,
        Suite::Wilks,
        Suite::Routes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Nagel => "nagel",
            Suite::Cnix => "cnix",
            Suite::SubordinationHermite => "subordination-hermite",
            Suite::SubordinationGegenbauer => "subordination-gegenbauer",
            Suite::Derivative => "derivative",
            Suite::HermiteAddition => "hermite-addition",
            Suite::RhpAddition => "rhp-addition",
            Suite::Scaling => "scaling",
            Suite::GenfuncRhp => "genfunc-rhp",
            Suite::Moment3665 => "moment-3665",
            Suite::Feldheim => "feldheim",
            Suite::FeldheimRhp => "feldheim-rhp",
            Suite::ShiftedGenfunc => "shifted-genfunc",
            Suite::TuranRhp => "turan-rhp",
            Suite::TuranGegenbauer => "turan-gegenbauer",
            Suite::Wilks => "wilks",
            Suite::Routes => "routes",
        }
    }

    /// Parses a comma-separated list; `all` selects every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidParameter("no suites selected".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub params: Vec<ParamN>,
    pub order: usize,
    pub suites: Vec<Suite>,
    pub fail_fast: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            n_max: 8,
            params: default_params(),
            order: 12,
            suites: Suite::ALL.to_vec(),
            fail_fast: false,
        }
    }
}

pub fn default_params() -> Vec<ParamN> {
    [int(2), int(3), int(10), rat(7, 2), rat(1, 3)]
        .into_iter()
        .map(|v| ParamN::new(v).expect("nonzero"))
        .collect()
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.params.is_empty() {
            return Err(Error::InvalidParameter("parameter set is empty".into()));
        }
        if self.suites.is_empty() {
            return Err(Error::InvalidParameter("no suites selected".into()));
        }
        Ok(())
    }
}

impl Serialize for SuiteConfig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SuiteConfig", 5)?;
        st.serialize_field("n_max", &self.n_max)?;
        let params: Vec<String> = self
            .params
            .iter()
            .map(|p| fmt_rational(p.value()))
            .collect();
        st.serialize_field("params", &params)?;
        st.serialize_field("order", &self.order)?;
        let suites: Vec<&str> = self.suites.iter().map(|s| s.name()).collect();
        st.serialize_field("suites", &suites)?;
        st.serialize_field("fail_fast", &self.fail_fast)?;
        st.end()
    }
}

type Task = Box<dyn Fn() -> CheckResult + Send + Sync>;

fn addition_vectors() -> Vec<Vec<Rational>> {
    vec![
        vec![int(1)],
        vec![rat(3, 5), rat(4, 5)],
        vec![int(1), int(2)],
        vec![int(1), int(1), int(1)],
        vec![rat(1, 2), int(-1), rat(2, 3)],
    ]
}

const FAMILIES: [FamilyKind; 3] = [FamilyKind::Hermite, FamilyKind::Gegenbauer, FamilyKind::Rhp];

/// The checks of one suite, in a fixed order.
fn tasks(suite: Suite, cfg: &SuiteConfig) -> Vec<Task> {
    let ns = 0..=cfg.n_max;
    let order = cfg.order;
    let mut out: Vec<Task> = Vec::new();
    // one task per (n, N)
    let per_n_param = |out: &mut Vec<Task>,
                       ns: std::ops::RangeInclusive<usize>,
                       f: fn(usize, &ParamN) -> CheckResult| {
        for n in ns {
            for p in &cfg.params {
                let p = p.clone();
                out.push(Box::new(move || f(n, &p)));
            }
        }
    };
    match suite {
        Suite::Nagel => per_n_param(&mut out, ns, check_nagel),
        Suite::Cnix => per_n_param(&mut out, ns, check_cnix),
        Suite::SubordinationHermite => per_n_param(&mut out, ns, check_subordination_hermite),
        Suite::SubordinationGegenbauer => per_n_param(&mut out, ns, check_subordination_gegenbauer),
        Suite::RhpAddition => per_n_param(&mut out, ns, check_rhp_addition),
        Suite::TuranRhp => per_n_param(&mut out, 0..=cfg.n_max.min(TURAN_MAX_N), check_turan_rhp),
        Suite::TuranGegenbauer => per_n_param(
            &mut out,
            0..=cfg.n_max.min(TURAN_MAX_N),
            check_turan_gegenbauer,
        ),
        Suite::Wilks => per_n_param(&mut out, 0..=cfg.n_max.min(WILKS_MAX_N), check_wilks),
        Suite::Derivative => {
            for kind in FAMILIES {
                for n in 1..=cfg.n_max {
                    for p in param_slots(kind, cfg) {
                        out.push(Box::new(move || check_derivative(kind, n, p.as_ref())));
                    }
                }
            }
        }
        Suite::Routes => {
            for kind in FAMILIES {
                for n in ns.clone() {
                    for p in param_slots(kind, cfg) {
                        out.push(Box::new(move || check_routes(kind, n, p.as_ref())));
                    }
                }
            }
        }
        Suite::Scaling => {
            for kind in FAMILIES {
                for n in ns.clone() {
                    for p in param_slots(kind, cfg) {
                        for c in [int(1), rat(1, 2), rat(2, 3)] {
                            let p = p.clone();
                            out.push(Box::new(move || check_scaling(kind, n, p.as_ref(), &c)));
                        }
                    }
                }
            }
        }
        Suite::HermiteAddition => {
            for n in ns {
                for a in addition_vectors() {
                    out.push(Box::new(move || check_hermite_addition(n, &a)));
                }
            }
        }
        Suite::GenfuncRhp => {
            for p in cfg.params.clone() {
                for x in [int(0), rat(1, 2), rat(-2, 3)] {
                    let p = p.clone();
                    out.push(Box::new(move || check_genfunc_rhp(&p, &x, order)));
                }
            }
        }
        Suite::Moment3665 => {
            for p in cfg.params.clone() {
                for a in [int(1), rat(2, 3)] {
                    let p = p.clone();
                    out.push(Box::new(move || check_moment_3665(&p, &a, order)));
                }
            }
        }
        Suite::Feldheim => {
            for p in cfg.params.clone() {
                for (c, s) in [
                    (rat(3, 5), rat(4, 5)),
                    (int(1), int(0)),
                    (rat(-5, 13), rat(12, 13)),
                ] {
                    let p = p.clone();
                    out.push(Box::new(move || check_feldheim(&p, &c, &s, order)));
                }
            }
        }
        Suite::FeldheimRhp => {
            for p in cfg.params.clone() {
                for x in [int(0), rat(2, 3), rat(-3, 2)] {
                    let p = p.clone();
                    out.push(Box::new(move || check_feldheim_rhp(&p, &x, order)));
                }
            }
        }
        Suite::ShiftedGenfunc => {
            for p in cfg.params.clone() {
                for k in 0..=3 {
                    for x in [int(0), rat(1, 2)] {
                        let p = p.clone();
                        out.push(Box::new(move || check_shifted_genfunc(&p, k, &x, order)));
                    }
                }
            }
        }
    }
    out
}

/// `[None]` for Hermite, every configured `N` otherwise.
fn param_slots(kind: FamilyKind, cfg: &SuiteConfig) -> Vec<Option<ParamN>> {
    match kind {
        FamilyKind::Hermite => vec![None],
        _ => cfg.params.iter().cloned().map(Some).collect(),
    }
}

/// Runs one suite; checks run in parallel and come back in task order.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckResult> {
    tasks(suite, cfg).par_iter().map(|t| t()).collect()
}

/// Runs every selected suite in order. With `fail_fast`, output stops at the
/// first failing check.
pub fn run(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &suite in &cfg.suites {
        let results = run_suite(suite, cfg);
        if cfg.fail_fast {
            if let Some(pos) = results.iter().position(CheckResult::failed) {
                out.extend(results.into_iter().take(pos + 1));
                return out;
            }
        }
        out.extend(results);
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub version: &'static str,
    pub config: SuiteConfig,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(config: SuiteConfig, results: Vec<CheckResult>) -> Self {
        let summary = Summary::of(&results);
        Self {
            version: env!("CARGO_PKG_VERSION"),
            config,
            results,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(Suite::parse_list("none").is_err());
        assert!(Suite::parse_list("").is_err());
        assert_eq!(
            Suite::parse_list("cnix,nagel,cnix").unwrap(),
            vec![Suite::Nagel, Suite::Cnix]
        );
        assert_eq!(Suite::parse_list("all").unwrap().len(), Suite::ALL.len());
    }

    #[test]
    fn nagel_grid_count() {
        let cfg = SuiteConfig {
            n_max: 4,
            params: vec![ParamN::new(int(2)).unwrap(), ParamN::new(int(3)).unwrap()],
            suites: vec![Suite::Nagel],
            ..Default::default()
        };
        let r = run(&cfg);
        assert_eq!(r.len(), 10);
        assert!(r.iter().all(|c| c.passed));
        // deterministic order
        assert_eq!(r, run(&cfg));
    }
}
