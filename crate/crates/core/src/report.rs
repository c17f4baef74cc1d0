//! Check outcomes and their serialized form.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::algebra::{Poly, TruncSeries};
use crate::error::{Error, Result};
use crate::numeric::{fmt_rational, ParamN, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Rational(Rational),
    Vector(Vec<Rational>),
    Text(String),
}

impl ParamValue {
    pub fn render(&self) -> String {
        match self {
            ParamValue::Int(i) => i.to_string(),
            ParamValue::Rational(r) => fmt_rational(r),
            ParamValue::Vector(v) => v.iter().map(fmt_rational).collect::<Vec<_>>().join(";"),
            ParamValue::Text(s) => s.clone(),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(i) => s.serialize_i64(*i),
            ParamValue::Rational(r) => s.serialize_str(&fmt_rational(r)),
            ParamValue::Vector(v) => s.collect_seq(v.iter().map(fmt_rational)),
            ParamValue::Text(t) => s.serialize_str(t),
        }
    }
}

/// Ordered parameter map with a small builder.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, ParamValue>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn int(mut self, key: &str, v: impl Into<i64>) -> Self {
        self.0.insert(key.into(), ParamValue::Int(v.into()));
        self
    }

    pub fn n(self, n: usize) -> Self {
        self.int("n", n as i64)
    }

    pub fn big_n(self, big_n: &ParamN) -> Self {
        self.rational("N", big_n.value())
    }

    pub fn rational(mut self, key: &str, v: &Rational) -> Self {
        self.0.insert(key.into(), ParamValue::Rational(v.clone()));
        self
    }

    pub fn vector(mut self, key: &str, v: &[Rational]) -> Self {
        self.0.insert(key.into(), ParamValue::Vector(v.to_vec()));
        self
    }

    pub fn text(mut self, key: &str, v: &str) -> Self {
        self.0.insert(key.into(), ParamValue::Text(v.into()));
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &ParamValue)> {
        self.0.iter()
    }

    pub fn get(&self, key: &str) -> Option<&ParamValue> {
        self.0.get(key)
    }
}

/// `LHS − RHS` of a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Poly(Poly),
    Series(TruncSeries),
    /// Differences at evaluation points or of scalar quantities.
    Values(Vec<Rational>),
}

impl Witness {
    pub fn is_zero(&self) -> bool {
        match self {
            Witness::Poly(p) => p.is_zero(),
            Witness::Series(s) => s.is_zero(),
            Witness::Values(v) => v.iter().all(num_traits::Zero::is_zero),
        }
    }

    pub fn to_strings(&self) -> Vec<String> {
        match self {
            Witness::Poly(p) => p.to_strings(),
            Witness::Series(s) => s.to_strings(),
            Witness::Values(v) => v.iter().map(fmt_rational).collect(),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.to_strings())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub params: Params,
    pub passed: bool,
    /// A precondition excluded this parameter combination.
    pub skipped: bool,
    /// Present only for failures with a computed difference.
    pub witness: Option<Witness>,
    pub notes: String,
}

impl CheckResult {
    pub fn from_witness(name: &str, params: Params, witness: Witness) -> Self {
        let passed = witness.is_zero();
        Self {
            name: name.into(),
            params,
            passed,
            skipped: false,
            witness: (!passed).then_some(witness),
            notes: String::new(),
        }
    }

    pub fn from_error(name: &str, params: Params, err: &Error) -> Self {
        let skipped = err.is_precondition();
        Self {
            name: name.into(),
            params,
            passed: false,
            skipped,
            witness: None,
            notes: if skipped {
                format!("skipped: {err}")
            } else {
                err.to_string()
            },
        }
    }

    /// Runs `f`, mapping errors to skipped or failed results.
    pub fn run(name: &str, params: Params, f: impl FnOnce() -> Result<Witness>) -> Self {
        match f() {
            Ok(w) => Self::from_witness(name, params, w),
            Err(e) => Self::from_error(name, params, &e),
        }
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        let notes = notes.into();
        if self.notes.is_empty() {
            self.notes = notes;
        } else if !notes.is_empty() {
            self.notes = format!("{}; {notes}", self.notes);
        }
        self
    }

    pub fn failed(&self) -> bool {
        !self.passed && !self.skipped
    }

    pub fn status(&self) -> &'static str {
        match (self.passed, self.skipped) {
            (true, _) => "pass",
            (false, true) => "skip",
            (false, false) => "fail",
        }
    }
}

impl Serialize for CheckResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(6))?;
        m.serialize_entry("name", &self.name)?;
        m.serialize_entry("params", &self.params)?;
        m.serialize_entry("passed", &self.passed)?;
        m.serialize_entry("skipped", &self.skipped)?;
        m.serialize_entry("witness", &self.witness)?;
        m.serialize_entry("notes", &self.notes)?;
        m.end()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = Summary {
            total: results.len(),
            ..Default::default()
        };
        for r in results {
            match r.status() {
                "pass" => s.passed += 1,
                "skip" => s.skipped += 1,
                _ => s.failed += 1,
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    #[test]
    fn zero_witness_passes() {
        let r = CheckResult::from_witness("x", Params::new().n(2), Witness::Poly(Poly::zero()));
        assert!(r.passed && r.witness.is_none());
        let r =
            CheckResult::from_witness("x", Params::new(), Witness::Values(vec![int(0), rat(1, 2)]));
        assert!(r.failed());
        assert_eq!(r.witness.unwrap().to_strings(), vec!["0", "1/2"]);
    }

    #[test]
    fn precondition_errors_skip() {
        let r = CheckResult::from_error("x", Params::new(), &Error::Pole("p".into()));
        assert!(r.skipped && !r.failed());
        let r = CheckResult::from_error("x", Params::new(), &Error::ImaginaryPart("i".into()));
        assert!(r.failed());
    }

    #[test]
    fn summary_counts() {
        let rs = vec![
            CheckResult::from_witness("a", Params::new(), Witness::Values(vec![])),
            CheckResult::from_error("b", Params::new(), &Error::Pole("p".into())),
            CheckResult::from_witness("c", Params::new(), Witness::Values(vec![int(1)])),
        ];
        assert_eq!(
            Summary::of(&rs),
            Summary {
                total: 3,
                passed: 1,
                failed: 1,
                skipped: 1
            }
        );
    }
}
