use serde::{Deserialize, Serialize};

/// One identity that was evaluated: a label (e.g. the pair (i, j)) and the
/// index range it was checked on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub k_range: Option<(i64, i64)>,
}

/// A nonzero residual at a specific index, rendered exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub label: String,
    pub k: i64,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub pass: bool,
    pub checked: Vec<Check>,
    pub residuals: Vec<Residual>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Report { pass: true, ..Default::default() }
    }

    pub fn check(&mut self, label: impl Into<String>, k_range: Option<(i64, i64)>) {
        self.checked.push(Check { label: label.into(), k_range });
    }

    pub fn fail(&mut self, label: impl Into<String>, k: i64, value: impl ToString) {
        self.pass = false;
        self.residuals.push(Residual { label: label.into(), k, value: value.to_string() });
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn merge(&mut self, other: Report) {
        self.pass &= other.pass;
        self.checked.extend(other.checked);
        self.residuals.extend(other.residuals);
        self.notes.extend(other.notes);
    }

    /// First failure as (label, k), handy in tests.
    pub fn first_failure(&self) -> Option<(&str, i64)> {
        self.residuals.first().map(|r| (r.label.as_str(), r.k))
    }
}
