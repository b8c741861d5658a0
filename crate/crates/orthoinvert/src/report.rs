//! Outcome records for identity checks.
//!
//! Every mechanical verification in this crate reduces to an exact residual.
//! A `CheckReport` names the identity that was checked, binds the parameters
//! it ran at, and carries the residual as a witness when the check fails.
//! One report serializes to one JSON object, e.g.
//!
//!   {"identity":"Eq17","params":{"alpha":"1/2","beta":"-1/3","n":"3"},"status":"ok"}

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::poly::Poly;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Ok,
    Fail,
    /// Used by check runners for parameter points where a denominator
    /// vanished; library checkers themselves only produce `Ok` or `Fail`.
    SkippedPole,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub status: CheckStatus,
    /// Residual witness, present exactly when the check failed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<Poly>,
    /// Exact left-hand value, for scalar summation checks.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    /// Exact right-hand value, for scalar summation checks.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
    /// Human-readable note, e.g. the pole that caused a skip.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl CheckReport {
    /// Pass/fail from an exact residual: ok iff the residual is the zero
    /// polynomial, which is then dropped from the record.
    pub fn from_residual(
        identity: impl Into<String>,
        params: BTreeMap<String, String>,
        residual: Poly,
    ) -> Self {
        let ok = residual.is_zero();
        CheckReport {
            identity: identity.into(),
            params,
            status: if ok {
                CheckStatus::Ok
            } else {
                CheckStatus::Fail
            },
            residual: if ok { None } else { Some(residual) },
            lhs: None,
            rhs: None,
            detail: None,
        }
    }

    pub fn skipped_pole(
        identity: impl Into<String>,
        params: BTreeMap<String, String>,
        detail: impl Into<String>,
    ) -> Self {
        CheckReport {
            identity: identity.into(),
            params,
            status: CheckStatus::SkippedPole,
            residual: None,
            lhs: None,
            rhs: None,
            detail: Some(detail.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Ok
    }
}

/// Parameter map in insertion-independent (sorted) order.
pub fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}
