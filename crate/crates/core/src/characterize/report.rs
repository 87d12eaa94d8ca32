//! Stable JSON records: one object per check with keys `check`, `status`,
//! `upTo`, `witness`, `saturatedLengths`, `n`, always in that order.

use serde::Serialize;

use super::balance::ImbalanceWitness;
use super::complexity::{ComplexityMismatch, PeriodicityCertificate, Recurrence};
use super::harness::HarnessReport;
use super::sturmian::{Judgment, SturmianReport};
use super::verdict::{AdjacentPair, Status, Verdict};
use crate::factor_index::FactorTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckRecord {
    pub check: String,
    pub status: &'static str,
    pub up_to: Option<usize>,
    pub witness: Vec<String>,
    pub saturated_lengths: Vec<usize>,
    pub n: Option<usize>,
}

/// Witness factors and the length they live at.
pub trait Witness {
    fn factors(&self) -> Vec<String>;
    fn length(&self) -> Option<usize>;
}

impl<D> Witness for AdjacentPair<D> {
    fn factors(&self) -> Vec<String> {
        vec![self.left.to_string(), self.right.to_string()]
    }

    fn length(&self) -> Option<usize> {
        Some(self.n)
    }
}

impl Witness for ImbalanceWitness {
    fn factors(&self) -> Vec<String> {
        let (zero, one) = self.pair();
        vec![zero.to_string(), one.to_string()]
    }

    fn length(&self) -> Option<usize> {
        Some(self.u.len() + 2)
    }
}

impl Witness for ComplexityMismatch {
    fn factors(&self) -> Vec<String> {
        Vec::new()
    }

    fn length(&self) -> Option<usize> {
        Some(self.n)
    }
}

impl CheckRecord {
    pub fn from_verdict<W: Witness>(
        check: &str,
        verdict: &Verdict<W>,
        saturated_lengths: Vec<usize>,
    ) -> CheckRecord {
        let (up_to, witness, n) = match verdict {
            Verdict::Violated(w) => (None, w.factors(), w.length()),
            Verdict::ConsistentUpTo(k) => (Some(*k), Vec::new(), None),
            Verdict::Indeterminate { .. } => (None, Vec::new(), None),
        };
        CheckRecord {
            check: check.to_string(),
            status: verdict.status().as_str(),
            up_to,
            witness,
            saturated_lengths,
            n,
        }
    }

    /// A periodicity certificate counts as a violation of aperiodicity.
    pub fn from_periodicity(cert: &PeriodicityCertificate, saturated_lengths: Vec<usize>) -> CheckRecord {
        let (status, up_to, n) = match cert {
            PeriodicityCertificate::UltimatelyPeriodic { n, .. } => (Status::Violated, None, Some(*n)),
            PeriodicityCertificate::ApparentlyAperiodicUpTo(k) => (Status::Consistent, Some(*k), None),
        };
        CheckRecord {
            check: "periodicity".into(),
            status: status.as_str(),
            up_to,
            witness: Vec::new(),
            saturated_lengths,
            n,
        }
    }

    pub fn from_recurrence(rec: &Recurrence, max_n: usize, saturated_lengths: Vec<usize>) -> CheckRecord {
        let witness: Vec<String> = rec.witness().map(|w| w.to_string()).into_iter().collect();
        let (status, up_to) =
            if rec.is_recurrent() { (Status::Consistent, Some(max_n)) } else { (Status::Violated, None) };
        CheckRecord {
            check: "recurrence".into(),
            status: status.as_str(),
            up_to,
            n: rec.witness().map(|w| w.len()),
            witness,
            saturated_lengths,
        }
    }

    pub fn from_judgment(judgment: &Judgment, saturated_lengths: Vec<usize>) -> CheckRecord {
        let (status, up_to, witness, n) = match judgment {
            Judgment::SturmianConsistentUpTo(k) => (Status::Consistent, Some(*k), Vec::new(), None),
            Judgment::NotSturmian(e) => {
                (Status::Violated, None, e.factors().iter().map(ToString::to_string).collect(), Some(e.n()))
            }
            Judgment::Indeterminate(_) => (Status::Indeterminate, None, Vec::new(), None),
        };
        CheckRecord {
            check: "sturmian".into(),
            status: status.as_str(),
            up_to,
            witness,
            saturated_lengths,
            n,
        }
    }
}

/// All records of a composite report, ending with the combined judgment.
pub fn sturmian_records(report: &SturmianReport) -> Vec<CheckRecord> {
    let sat = report.saturation.saturated_lengths();
    let mut out = vec![CheckRecord::from_verdict("nfop", &report.nfop, sat.clone())];
    if let Some(v) = &report.balance {
        out.push(CheckRecord::from_verdict("balance", v, sat.clone()));
    }
    if let Some(v) = &report.hamming2 {
        out.push(CheckRecord::from_verdict("hamming2", v, sat.clone()));
    }
    if let Some(v) = &report.ones_monotone {
        out.push(CheckRecord::from_verdict("ones", v, sat.clone()));
    }
    out.push(CheckRecord::from_verdict("complexity", &report.complexity, sat.clone()));
    out.push(CheckRecord::from_periodicity(&report.periodicity, sat.clone()));
    out.push(CheckRecord::from_recurrence(&report.recurrence, report.max_n, sat.clone()));
    out.push(CheckRecord::from_judgment(&report.judgment, sat));
    out
}

pub fn saturated_lengths(table: &FactorTable) -> Vec<usize> {
    table.saturation().saturated_lengths()
}

/// One harness assertion, keys in the order `spec`, `assertion`, `outcome`, `detail`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssertionRecord {
    pub spec: String,
    pub assertion: String,
    pub outcome: &'static str,
    pub detail: String,
}

/// One record per (word, assertion), in corpus order. A word that could not
/// be generated yields a single failing `generate` record.
pub fn harness_json(report: &HarnessReport) -> Vec<AssertionRecord> {
    use super::harness::Outcome;
    let mut out = Vec::new();
    for entry in &report.entries {
        let record = |assertion: &str, outcome, detail: String| AssertionRecord {
            spec: entry.spec.clone(),
            assertion: assertion.to_string(),
            outcome,
            detail,
        };
        if let Err(e) = &entry.report {
            out.push(record("generate", "fail", e.clone()));
        }
        for a in &entry.assertions {
            let (outcome, detail) = match &a.outcome {
                Outcome::Pass => ("pass", String::new()),
                Outcome::Fail(d) => ("fail", d.clone()),
                Outcome::NotApplicable(d) => ("n/a", d.clone()),
            };
            out.push(record(a.name, outcome, detail));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::FiniteWord;

    #[test]
    fn key_order_is_stable() {
        let v: Verdict<AdjacentPair<()>> = Verdict::Violated(AdjacentPair {
            n: 3,
            left: "010".parse::<FiniteWord>().unwrap(),
            right: "101".parse().unwrap(),
            detail: (),
        });
        let json = serde_json::to_string(&CheckRecord::from_verdict("nfop", &v, vec![1, 2, 3])).unwrap();
        assert_eq!(
            json,
            r#"{"check":"nfop","status":"violated","upTo":null,"witness":["010","101"],"saturatedLengths":[1,2,3],"n":3}"#
        );
    }
}
