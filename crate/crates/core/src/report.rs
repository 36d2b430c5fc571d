//! Structured pass/fail records for identity checks.

use std::collections::BTreeMap;
use std::fmt::Display;

use crate::scalar::ParamScalar;
use crate::sparse::Sparse;

/// One mismatching coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    /// Which instance of the identity (e.g. `n=3`).
    pub case: String,
    /// The offending basis key.
    pub key: String,
    pub expected: ParamScalar,
    pub actual: ParamScalar,
}

impl Discrepancy {
    /// `actual - expected`.
    pub fn delta(&self) -> ParamScalar {
        &self.actual - &self.expected
    }
}

/// The outcome of checking one identity over a finite window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub window: BTreeMap<String, i64>,
    pub discrepancies: Vec<Discrepancy>,
    pub notes: Vec<String>,
    /// Verified eigenvalue, when the identity is an eigen-equation.
    pub eigenvalue: Option<ParamScalar>,
    /// Informational reports never fail a suite.
    pub required: bool,
    pub cases: usize,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, window: &[(&str, i64)]) -> Self {
        Self {
            identity: identity.into(),
            window: window.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            discrepancies: Vec::new(),
            notes: Vec::new(),
            eigenvalue: None,
            required: true,
            cases: 0,
        }
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }

    pub fn with_eigenvalue(mut self, e: ParamScalar) -> Self {
        self.eigenvalue = Some(e);
        self
    }

    pub fn pass(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Compares two sparse elements key by key.
    pub fn check<K: Ord + Clone + Display>(&mut self, case: impl Display, expected: &Sparse<K>, actual: &Sparse<K>) {
        self.check_with(case, expected, actual, |k| k.to_string());
    }

    /// [`check`](Self::check) with an explicit key formatter.
    pub fn check_with<K: Ord + Clone>(
        &mut self,
        case: impl Display,
        expected: &Sparse<K>,
        actual: &Sparse<K>,
        show: impl Fn(&K) -> String,
    ) {
        self.cases += 1;
        if expected == actual {
            return;
        }
        let case = case.to_string();
        let mut keys: Vec<&K> = expected.keys().chain(actual.keys()).collect();
        keys.sort();
        keys.dedup();
        for key in keys {
            let (e, a) = (expected.coeff(key), actual.coeff(key));
            if e != a {
                self.discrepancies.push(Discrepancy { case: case.clone(), key: show(key), expected: e, actual: a });
            }
        }
    }

    pub fn check_scalar(&mut self, case: impl Display, key: impl Display, expected: &ParamScalar, actual: &ParamScalar) {
        self.cases += 1;
        if expected != actual {
            self.discrepancies.push(Discrepancy {
                case: case.to_string(),
                key: key.to_string(),
                expected: expected.clone(),
                actual: actual.clone(),
            });
        }
    }

    /// Records a boolean property; a failure is stored as expected 1, actual 0.
    pub fn check_true(&mut self, case: impl Display, key: impl Display, ok: bool) {
        let actual = if ok { ParamScalar::one() } else { ParamScalar::zero() };
        self.check_scalar(case, key, &ParamScalar::one(), &actual);
    }
}

/// True when every required report passes.
pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| !r.required || r.pass())
}
