//! Outcome of an exact verification sweep.

use std::fmt;

use serde_json::Value;

/// Result of checking a family of identities. `witness` holds the first
/// counterexample in machine-readable form.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub name: String,
    pub checked: u64,
    pub witness: Option<Value>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), checked: 0, witness: None }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// Count one check; records `witness` if it is the first failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) -> bool {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
        ok
    }

    pub fn fail(&mut self, witness: Value) {
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
    }

    /// Fold another report's counts and first witness into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        if self.witness.is_none() {
            if let Some(w) = other.witness {
                self.witness = Some(serde_json::json!({ "check": other.name, "witness": w }));
            }
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "name": self.name,
            "passed": self.passed(),
            "checked": self.checked,
            "witness": self.witness,
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "PASS {} ({} checks)", self.name, self.checked),
            Some(w) => write!(f, "FAIL {} after {} checks: {}", self.name, self.checked, w),
        }
    }
}
