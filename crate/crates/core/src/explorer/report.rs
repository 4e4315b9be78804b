use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::io::matrix_to_csv;
use crate::metric::FiniteUltrametricSpace;

use super::Dendrogram;

pub const REPORT_SCHEMA: u32 = 1;

/// Theorem checks end in `PASS`/`FAIL`; conjecture checks never fail and end
/// in `CONSISTENT`/`COUNTEREXAMPLE`. `SKIPPED` means no instance applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    Consistent,
    Counterexample,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
            Verdict::Consistent => "CONSISTENT",
            Verdict::Counterexample => "COUNTEREXAMPLE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub verdict: Verdict,
    pub conjecture: bool,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckTally {
    pub fn new(name: &str, conjecture: bool) -> Self {
        CheckTally {
            name: name.to_owned(),
            verdict: Verdict::Skipped,
            conjecture,
            passed: 0,
            failed: 0,
            skipped: 0,
            note: None,
        }
    }

    /// `None` records a skip.
    pub fn record(&mut self, outcome: Option<bool>) {
        match outcome {
            Some(true) => self.passed += 1,
            Some(false) => self.failed += 1,
            None => self.skipped += 1,
        }
        self.verdict = match (self.conjecture, self.failed > 0, self.passed > 0) {
            (false, true, _) => Verdict::Fail,
            (false, false, true) => Verdict::Pass,
            (true, true, _) => Verdict::Counterexample,
            (true, false, true) => Verdict::Consistent,
            (_, false, false) => Verdict::Skipped,
        };
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// An instance backing a verdict, stored as matrix CSV so it can be replayed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: String,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dendrogram: Option<String>,
    pub matrix_csv: String,
}

impl Witness {
    pub fn new(check: &str, label: impl Into<String>, s: &FiniteUltrametricSpace) -> Self {
        Witness { check: check.to_owned(), label: label.into(), dendrogram: None, matrix_csv: matrix_to_csv(s) }
    }

    pub fn of_class(check: &str, label: impl Into<String>, d: &Dendrogram) -> Self {
        Witness { dendrogram: Some(d.encoding().to_owned()), ..Witness::new(check, label, &d.to_space()) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub schema: u32,
    pub campaign: String,
    pub n: Option<usize>,
    pub classes_checked: u64,
    pub checks: Vec<CheckTally>,
    pub stats: BTreeMap<String, u64>,
    pub witnesses: Vec<Witness>,
}

impl CampaignReport {
    pub fn new(campaign: &str, n: Option<usize>) -> Self {
        CampaignReport {
            schema: REPORT_SCHEMA,
            campaign: campaign.to_owned(),
            n,
            classes_checked: 0,
            checks: Vec::new(),
            stats: BTreeMap::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn stat(&self, name: &str) -> Option<u64> {
        self.stats.get(name).copied()
    }

    /// No theorem check failed. Conjecture counterexamples are findings,
    /// not failures.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &CheckTally> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Counterexample)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_verdicts() {
        let mut t = CheckTally::new("t", false);
        assert_eq!(t.verdict, Verdict::Skipped);
        t.record(None);
        assert_eq!(t.verdict, Verdict::Skipped);
        t.record(Some(true));
        assert_eq!(t.verdict, Verdict::Pass);
        t.record(Some(false));
        assert_eq!(t.verdict, Verdict::Fail);
        let mut c = CheckTally::new("c", true);
        c.record(Some(true));
        assert_eq!(c.verdict, Verdict::Consistent);
        c.record(Some(false));
        assert_eq!(c.verdict, Verdict::Counterexample);
        assert_eq!((c.passed, c.failed, c.skipped), (1, 1, 0));
    }

    #[test]
    fn json_shape() {
        let mut r = CampaignReport::new("demo", Some(3));
        let mut t = CheckTally::new("x", false);
        t.record(Some(true));
        r.checks.push(t);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(
            r#"{"schema":1,"campaign":"demo","n":3,"classes_checked":0,"checks":[{"name":"x","verdict":"PASS""#
        ));
        let back: CampaignReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
