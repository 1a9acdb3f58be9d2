//! Structured pass/fail records shared by every verification routine.

use serde::Serialize;

use crate::linalg::Real3;

/// One verified property: the worst residual seen over a sample set and the
/// momentum at which it occurred.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub kind: Option<String>,
    pub max_residual: f64,
    pub pass: bool,
    pub expected_pass: bool,
    pub worst_momentum: Real3,
    /// For expected failures: the smallest residual that counts as the
    /// predicted violation.
    #[serde(skip)]
    pub min_violation: Option<f64>,
}

impl CheckRecord {
    /// `pass ⇔ max_residual ≤ tol`.
    pub fn from_residual(name: impl Into<String>, residual: f64, tol: f64, worst: Real3) -> Self {
        Self {
            name: name.into(),
            kind: None,
            max_residual: residual,
            pass: residual <= tol,
            expected_pass: true,
            worst_momentum: worst,
            min_violation: None,
        }
    }

    pub fn with_kind(mut self, kind: impl Into<String>) -> Self {
        self.kind = Some(kind.into());
        self
    }

    pub fn expecting(mut self, expected_pass: bool) -> Self {
        self.expected_pass = expected_pass;
        self
    }

    /// Declares the check an expected failure that must exceed `min_violation`.
    pub fn expecting_violation(mut self, min_violation: f64) -> Self {
        self.expected_pass = false;
        self.min_violation = Some(min_violation);
        self
    }

    /// An expected pass must pass; an expected failure must fail, by at
    /// least `min_violation` when one is set.
    pub fn as_expected(&self) -> bool {
        if self.expected_pass {
            self.pass
        } else {
            !self.pass && self.min_violation.is_none_or(|v| self.max_residual >= v)
        }
    }
}

/// A named group of checks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    #[serde(rename = "id")]
    pub suite: String,
    pub checks: Vec<CheckRecord>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn all_as_expected(&self) -> bool {
        self.checks.iter().all(CheckRecord::as_expected)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.max_residual).fold(0.0, f64::max)
    }

    pub fn get(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Running maximum of a residual over a sample set.
#[derive(Debug, Clone, Copy, Default)]
pub struct Worst {
    pub residual: f64,
    pub momentum: Real3,
}

impl Worst {
    pub fn observe(&mut self, residual: f64, momentum: Real3) {
        // NaN never compares greater; force it to win so it cannot hide.
        if residual > self.residual || residual.is_nan() && !self.residual.is_nan() {
            self.residual = residual;
            self.momentum = momentum;
        }
    }

    pub fn merge(&mut self, other: Worst) {
        self.observe(other.residual, other.momentum);
    }

    pub fn record(&self, name: impl Into<String>, tol: f64) -> CheckRecord {
        CheckRecord::from_residual(name, self.residual, tol, self.momentum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let ok = CheckRecord::from_residual("a", 1e-12, 1e-10, [0.0; 3]);
        assert!(ok.pass && ok.as_expected());
        assert!(!ok.clone().expecting(false).as_expected());

        let bad = CheckRecord::from_residual("b", 0.05, 1e-10, [0.0; 3]);
        assert!(!bad.pass);
        assert!(bad.clone().expecting(false).as_expected());
        assert!(!bad.clone().expecting_violation(0.1).as_expected());
        assert!(bad.expecting_violation(0.01).as_expected());

        let nan = CheckRecord::from_residual("c", f64::NAN, 1e-10, [0.0; 3]);
        assert!(!nan.pass);
        assert!(!nan.expecting_violation(0.1).as_expected());
    }

    #[test]
    fn worst_keeps_maximum_and_nan() {
        let mut w = Worst::default();
        w.observe(1.0, [1.0, 0.0, 0.0]);
        w.observe(0.5, [2.0, 0.0, 0.0]);
        assert_eq!((w.residual, w.momentum), (1.0, [1.0, 0.0, 0.0]));
        let mut other = Worst::default();
        other.observe(f64::NAN, [3.0, 0.0, 0.0]);
        w.merge(other);
        assert!(w.residual.is_nan());
        w.observe(7.0, [4.0, 0.0, 0.0]);
        assert!(w.residual.is_nan());
        assert_eq!(w.momentum, [3.0, 0.0, 0.0]);
    }

    #[test]
    fn serialized_shape() {
        let mut r = CheckReport::new("demo");
        r.push(CheckRecord::from_residual("x", 0.0, 1e-10, [1.0, 2.0, 3.0]).with_kind("nw"));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["id"], "demo");
        let c = &v["checks"][0];
        let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 6);
        for k in [
            "name",
            "kind",
            "max_residual",
            "pass",
            "expected_pass",
            "worst_momentum",
        ] {
            assert!(keys.contains(&k), "{k}");
        }
        assert_eq!(c["kind"], "nw");
        assert_eq!(r.max_residual(), 0.0);
        assert!(r.get("x").is_some() && r.get("y").is_none());
    }
}
