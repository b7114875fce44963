//! Structured pass/fail records produced by the verifiers.

use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::matrix::format_f64;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub description: String,
    pub ok: bool,
    pub value: Value,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Tolerance {
    Exact,
    Abs(f64),
}

impl Serialize for Tolerance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Tolerance::Exact => s.serialize_str("exact"),
            Tolerance::Abs(t) => s.serialize_str(&format_f64(*t)),
        }
    }
}

impl<'de> Deserialize<'de> for Tolerance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "exact" {
            return Ok(Tolerance::Exact);
        }
        s.parse().map(Tolerance::Abs).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    pub tolerance: Tolerance,
}

impl VerificationReport {
    pub fn new(claim_id: impl Into<String>, tolerance: Tolerance) -> Self {
        Self {
            claim_id: claim_id.into(),
            passed: true,
            witnesses: Vec::new(),
            tolerance,
        }
    }

    /// Records a sub-check; the claim fails if any sub-check fails.
    pub fn check(&mut self, description: impl Into<String>, ok: bool, value: impl Serialize) {
        self.passed &= ok;
        self.witnesses.push(Witness {
            description: description.into(),
            ok,
            value: serde_json::to_value(value).unwrap_or(Value::Null),
        });
    }

    /// Informational witness that does not affect `passed`.
    pub fn note(&mut self, description: impl Into<String>, value: impl Serialize) {
        self.witnesses.push(Witness {
            description: description.into(),
            ok: true,
            value: serde_json::to_value(value).unwrap_or(Value::Null),
        });
    }

    /// Records an error from a sub-computation as a failed witness.
    pub fn fail(&mut self, description: impl Into<String>, err: impl std::fmt::Display) {
        self.check(description, false, err.to_string());
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub claims: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn new(name: impl Into<String>, claims: Vec<VerificationReport>) -> Self {
        Self {
            name: name.into(),
            claims,
        }
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn claim(&self, id: &str) -> Option<&VerificationReport> {
        self.claims.iter().find(|c| c.claim_id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_subcheck_fails_claim() {
        let mut r = VerificationReport::new("x", Tolerance::Exact);
        r.check("a", true, 1);
        r.note("info", "n/a");
        assert!(r.passed);
        r.check("b", false, "2");
        assert!(!r.passed);
        assert_eq!(r.witnesses.len(), 3);
    }

    #[test]
    fn tolerance_json() {
        assert_eq!(serde_json::to_string(&Tolerance::Exact).unwrap(), "\"exact\"");
        assert_eq!(
            serde_json::to_string(&Tolerance::Abs(1e-9)).unwrap(),
            "\"1.0000000000000001e-9\""
        );
        let back: Tolerance = serde_json::from_str("\"1.0000000000000001e-9\"").unwrap();
        assert_eq!(back, Tolerance::Abs(1e-9));
    }
}
