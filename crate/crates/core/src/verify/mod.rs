//! Executable checks for the lemmas and theorems, plus the grid runner and
//! report writers.
//!
//! Every check yields a [`VerificationOutcome`] whose status follows the
//! margin rule: a gap above the tolerance passes, a gap in `[0, tol]` is
//! inconclusive, a negative gap fails. Checks that hold with equality, or
//! hold vacuously, carry an infinite margin.

mod checks;
mod report;
mod suite;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::enumeration::EnumError;
use crate::families::FamilyError;
use crate::graph::{Graph6Error, GraphError};
use crate::spectral::SpectralError;
use crate::structure::StructureError;
use crate::transforms::TransformError;

pub use checks::{
    smith_dichotomy, verify_lemma1_sample, verify_lemma2, verify_non_smith, verify_theorem1,
    verify_theorem2, verify_theorem3, verify_transformation_a, LEMMA2_RHO_FLOOR,
};
pub use report::{ClaimSummary, Report};
pub use suite::{default_n_range, run_claim, run_suite, VerifyConfig};

/// Default strict-inequality tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("{claim} needs n <= {max}, requested {n}")]
    OverBudget { claim: Claim, n: usize, max: usize },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Claim {
    Lemma1,
    Lemma2,
    Theorem1,
    Theorem2,
    Theorem3,
    TransformationA,
    SmithRadii,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::Lemma1,
        Claim::Lemma2,
        Claim::Theorem1,
        Claim::Theorem2,
        Claim::Theorem3,
        Claim::TransformationA,
        Claim::SmithRadii,
    ];

    /// Command-line identifier.
    pub fn id(self) -> &'static str {
        match self {
            Claim::Lemma1 => "lemma1",
            Claim::Lemma2 => "lemma2",
            Claim::Theorem1 => "theorem1",
            Claim::Theorem2 => "theorem2",
            Claim::Theorem3 => "theorem3",
            Claim::TransformationA => "transformation-a",
            Claim::SmithRadii => "smith",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Claim::Lemma1 => "Lemma1",
            Claim::Lemma2 => "Lemma2",
            Claim::Theorem1 => "Theorem1",
            Claim::Theorem2 => "Theorem2",
            Claim::Theorem3 => "Theorem3",
            Claim::TransformationA => "TransformationA",
            Claim::SmithRadii => "SmithRadii",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim '{0}', expected one of lemma1, lemma2, theorem1, theorem2, theorem3, transformation-a, smith")]
pub struct UnknownClaim(pub String);

impl FromStr for Claim {
    type Err = UnknownClaim;

    fn from_str(text: &str) -> Result<Self, UnknownClaim> {
        let key: String = text.chars().filter(|c| *c != '-' && *c != '_').collect::<String>().to_lowercase();
        Claim::ALL
            .into_iter()
            .find(|c| c.id().replace('-', "") == key || c.name().to_lowercase() == key)
            .ok_or_else(|| UnknownClaim(text.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    pub fn from_margin(margin: f64, tol: f64) -> Status {
        if margin > tol {
            Status::Pass
        } else if margin >= 0.0 {
            Status::Inconclusive
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Inconclusive => "inconclusive",
            Status::Fail => "fail",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The parameters of one verified cell; unused fields stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    /// Number of instances actually compared.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checked: Option<usize>,
    /// Sampled instances discarded because a hypothesis did not hold.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<usize>,
}

type ParamKey<'a> = (
    Option<&'a str>,
    Option<&'a str>,
    Option<usize>,
    Option<usize>,
    Option<usize>,
    Option<usize>,
    Option<usize>,
    Option<u64>,
);

impl Params {
    fn sort_key(&self) -> ParamKey<'_> {
        // alpha is never negative, so bit order is numeric order
        (
            self.family.as_deref(),
            self.core.as_deref(),
            self.n,
            self.k,
            self.s,
            self.q,
            self.p,
            self.alpha.map(f64::to_bits),
        )
    }
}

fn serialize_margin<S: Serializer>(margin: &f64, s: S) -> Result<S::Ok, S::Error> {
    if margin.is_finite() {
        s.serialize_f64(*margin)
    } else {
        s.serialize_str(&format_margin(*margin))
    }
}

pub(crate) fn format_margin(margin: f64) -> String {
    if margin.is_nan() {
        "nan".into()
    } else if margin == f64::INFINITY {
        "inf".into()
    } else if margin == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{margin:e}")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub claim: Claim,
    pub params: Params,
    pub status: Status,
    #[serde(serialize_with = "serialize_margin")]
    pub margin: f64,
    pub witness: Vec<String>,
    /// Wall time in seconds; `None` when timing is disabled.
    pub elapsed: Option<f64>,
}

impl VerificationOutcome {
    pub(crate) fn new(
        claim: Claim,
        params: Params,
        margin: f64,
        tol: f64,
        witness: Vec<String>,
        started: Instant,
    ) -> Self {
        VerificationOutcome {
            claim,
            params,
            status: Status::from_margin(margin, tol),
            margin,
            witness,
            elapsed: Some(started.elapsed().as_secs_f64()),
        }
    }

    fn sort_cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.claim, self.params.sort_key())
            .cmp(&(other.claim, other.params.sort_key()))
            .then(self.margin.total_cmp(&other.margin))
    }
}
