//! Pass/fail reports shared by all verification suites.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass: true,
            witness: None,
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass: false,
            witness: Some(witness.into()),
        });
    }

    /// Records `Ok` as a pass and `Err(witness)` as a failure.
    pub fn record(&mut self, name: impl Into<String>, outcome: Result<(), String>) {
        match outcome {
            Ok(()) => self.pass(name),
            Err(w) => self.fail(name, w),
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str("AXIOM ");
            out.push_str(&c.name);
            out.push_str(if c.pass { " PASS" } else { " FAIL" });
            if let Some(w) = &c.witness {
                out.push_str(" witness=");
                out.push_str(w);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Runs `check` on every item, stopping at the first failure.
pub fn first_failure<T, F>(items: impl IntoIterator<Item = T>, mut check: F) -> Result<(), String>
where
    F: FnMut(T) -> Result<(), String>,
{
    for item in items {
        check(item)?;
    }
    Ok(())
}
