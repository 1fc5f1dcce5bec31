use std::io::Write;

use serde::Serialize;

use super::{format_margin, Claim, Status, VerificationOutcome, VerifyConfig};

pub const TOOL_NAME: &str = "alpha-spectra";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: VerifyConfig,
    pub claims: Vec<Claim>,
    pub outcomes: Vec<VerificationOutcome>,
}

/// Per-claim tally with the smallest margin observed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimSummary {
    pub claim: Claim,
    pub cells: usize,
    pub pass: usize,
    pub inconclusive: usize,
    pub fail: usize,
    pub min_margin: f64,
}

impl ClaimSummary {
    pub fn status(&self) -> Status {
        if self.fail > 0 {
            Status::Fail
        } else if self.inconclusive > 0 {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    version: &'a str,
    claim: Claim,
    n: Option<usize>,
    k: Option<usize>,
    p: Option<usize>,
    s: Option<usize>,
    q: Option<usize>,
    core: Option<&'a str>,
    family: Option<&'a str>,
    alpha: Option<f64>,
    checked: Option<usize>,
    skipped: Option<usize>,
    status: Status,
    margin: String,
    witness: String,
    elapsed: Option<f64>,
}

impl Report {
    pub fn new(config: VerifyConfig, claims: Vec<Claim>, outcomes: Vec<VerificationOutcome>) -> Self {
        Report { tool: TOOL_NAME, version: crate::VERSION, config, claims, outcomes }
    }

    pub fn sort(&mut self) {
        self.outcomes.sort_by(|a, b| a.sort_cmp(b));
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report fields are always serializable");
        text.push('\n');
        text
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        out.write_all(self.to_json().as_bytes())
    }

    /// One row per outcome; witnesses are space separated.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        for o in &self.outcomes {
            w.serialize(CsvRow {
                version: self.version,
                claim: o.claim,
                n: o.params.n,
                k: o.params.k,
                p: o.params.p,
                s: o.params.s,
                q: o.params.q,
                core: o.params.core.as_deref(),
                family: o.params.family.as_deref(),
                alpha: o.params.alpha,
                checked: o.params.checked,
                skipped: o.params.skipped,
                status: o.status,
                margin: format_margin(o.margin),
                witness: o.witness.join(" "),
                elapsed: o.elapsed,
            })?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn summaries(&self) -> Vec<ClaimSummary> {
        self.claims
            .iter()
            .map(|&claim| {
                let mine = self.outcomes.iter().filter(|o| o.claim == claim);
                let mut s = ClaimSummary {
                    claim,
                    cells: 0,
                    pass: 0,
                    inconclusive: 0,
                    fail: 0,
                    min_margin: f64::INFINITY,
                };
                for o in mine {
                    s.cells += 1;
                    match o.status {
                        Status::Pass => s.pass += 1,
                        Status::Inconclusive => s.inconclusive += 1,
                        Status::Fail => s.fail += 1,
                    }
                    s.min_margin = s.min_margin.min(o.margin);
                }
                s
            })
            .collect()
    }

    /// Worst status over all outcomes.
    pub fn status(&self) -> Status {
        self.outcomes.iter().map(|o| o.status).max().unwrap_or(Status::Pass)
    }
}
