//! Differential harness: for each word of a corpus, asserts the implications
//! between checks that must hold on any window.

use std::fmt;

use rayon::prelude::*;

use super::balance::extension_pair;
use super::nfop::{check_nfop, nfop_shape, NfopVariant};
use super::sturmian::{analyze_table, prepare_table, SturmianReport, DEFAULT_BUDGET};
use super::verdict::{Status, Verdict};
use crate::factor_index::FactorTable;
use crate::word::{render, FiniteWord, Letter};
use crate::wordgen::{WordGenError, WordSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The premise of the implication does not hold for this word.
    NotApplicable(String),
}

impl Outcome {
    pub fn passed(&self) -> bool {
        !matches!(self, Outcome::Fail(_))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => f.write_str("pass"),
            Outcome::Fail(why) => write!(f, "FAIL {why}"),
            Outcome::NotApplicable(why) => write!(f, "n/a ({why})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assertion {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct HarnessEntry {
    pub spec: String,
    /// `Err` when the word could not be generated or indexed.
    pub report: Result<SturmianReport, String>,
    pub assertions: Vec<Assertion>,
}

impl HarnessEntry {
    pub fn passed(&self) -> bool {
        self.report.is_ok() && self.assertions.iter().all(|a| a.outcome.passed())
    }
}

#[derive(Clone, Debug)]
pub struct HarnessReport {
    pub max_n: usize,
    pub entries: Vec<HarnessEntry>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(HarnessEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &Assertion)> {
        self.entries.iter().flat_map(|e| {
            e.assertions.iter().filter(|a| !a.outcome.passed()).map(move |a| (e.spec.as_str(), a))
        })
    }
}

/// Parses a corpus file: one word spec per line, `#` starts a comment.
pub fn parse_corpus(text: &str) -> Result<Vec<WordSpec>, (usize, WordGenError)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i + 1, line))
        })
        .map(|(line_no, line)| line.parse().map_err(|e| (line_no, e)))
        .collect()
}

/// Evaluates every corpus entry (concurrently) and reports in corpus order.
pub fn equivalence_harness(corpus: &[WordSpec], max_n: usize) -> HarnessReport {
    let entries = corpus.par_iter().map(|spec| run_entry(spec, max_n)).collect();
    HarnessReport { max_n, entries }
}

fn run_entry(spec: &WordSpec, max_n: usize) -> HarnessEntry {
    let table = match prepare_table(spec, None, max_n, DEFAULT_BUDGET) {
        Ok(t) => t,
        Err(e) => {
            return HarnessEntry { spec: spec.to_string(), report: Err(e.to_string()), assertions: vec![] }
        }
    };
    let report = analyze_table(&table, Some(spec));
    let assertions = assertions_for(spec, &table, &report);
    HarnessEntry { spec: spec.to_string(), report: Ok(report), assertions }
}

/// Generators whose words are Sturmian by construction.
pub fn is_sturmian_generator(spec: &WordSpec) -> bool {
    matches!(spec, WordSpec::StandardSequence(_)) || *spec == WordSpec::fibonacci()
}

fn assertions_for(spec: &WordSpec, table: &FactorTable, report: &SturmianReport) -> Vec<Assertion> {
    let mut out = Vec::new();
    let mut push = |name, outcome| out.push(Assertion { name, outcome });
    let nfop_ok = report.nfop.is_consistent();
    let premise = |holds: bool, why: &str| -> Option<Outcome> {
        (!holds).then(|| Outcome::NotApplicable(why.to_string()))
    };
    let no_nfop = "ordering property not established";

    push(
        "nfop_implies_balanced",
        premise(nfop_ok, no_nfop).unwrap_or_else(|| match &report.balance {
            Some(Verdict::Violated(w)) => Outcome::Fail(format!("imbalanced {w}")),
            _ => Outcome::Pass,
        }),
    );
    push(
        "nfop_excludes_extension_pair",
        premise(nfop_ok, no_nfop).unwrap_or_else(|| match extension_pair(table) {
            Some(u) => Outcome::Fail(format!("10u0 and 01u1 both occur for u={u}")),
            None => Outcome::Pass,
        }),
    );
    push(
        "nfop_implies_aperiodic",
        premise(nfop_ok, no_nfop).unwrap_or_else(|| {
            if report.periodicity.is_periodic() {
                Outcome::Fail(report.periodicity.to_string())
            } else {
                Outcome::Pass
            }
        }),
    );
    push(
        "nfop_implies_adjacent_conditions",
        premise(nfop_ok, no_nfop).unwrap_or_else(|| match (&report.hamming2, &report.ones_monotone) {
            (Some(Verdict::Violated(v)), _) => Outcome::Fail(format!("hamming {v}")),
            (_, Some(Verdict::Violated(v))) => Outcome::Fail(format!("ones {v}")),
            _ => Outcome::Pass,
        }),
    );
    push(
        "nfop_adjacency_characterization",
        premise(nfop_ok, no_nfop).unwrap_or_else(|| match non_adjacent_shape_pair(table) {
            Some((n, v, w)) => Outcome::Fail(format!("n={n} {v} {w} present but not adjacent")),
            None => Outcome::Pass,
        }),
    );
    push(
        "sturmian_generator_has_nfop",
        premise(is_sturmian_generator(spec), "not a Sturmian generator").unwrap_or_else(|| {
            match &report.nfop {
                Verdict::Violated(v) => Outcome::Fail(format!("{v}")),
                _ => Outcome::Pass,
            }
        }),
    );
    push(
        "adjacent_conditions_agree",
        premise(report.adjacency_hypotheses, "not known recurrent and aperiodic").unwrap_or_else(|| {
            let statuses = [
                report.nfop.status(),
                report.hamming2.as_ref().map_or(Status::Indeterminate, Verdict::status),
                report.ones_monotone.as_ref().map_or(Status::Indeterminate, Verdict::status),
            ];
            if statuses.contains(&Status::Indeterminate) {
                Outcome::NotApplicable("indeterminate window".into())
            } else if statuses.iter().all(|s| *s == statuses[0]) {
                Outcome::Pass
            } else {
                let names: Vec<&str> = statuses.iter().map(|s| s.as_str()).collect();
                Outcome::Fail(format!("nfop/hamming2/ones = {}", names.join("/")))
            }
        }),
    );
    push(
        "nfop_variants_agree",
        premise(table.is_binary(), "not binary").unwrap_or_else(|| {
            let verdicts: Vec<_> = NfopVariant::ALL
                .iter()
                .map(|&v| strip_variant(check_nfop(table, v).expect("binary")))
                .collect();
            if verdicts.iter().all(|v| *v == verdicts[0]) {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("{verdicts:?}"))
            }
        }),
    );
    out
}

/// Verdict with the variant-specific detail dropped, for cross-variant comparison.
pub fn strip_variant(
    verdict: Verdict<super::nfop::NfopViolation>,
) -> Verdict<(usize, FiniteWord, FiniteWord)> {
    let strip = |v: super::nfop::NfopViolation| (v.n, v.left, v.right);
    match verdict {
        Verdict::Violated(v) => Verdict::Violated(strip(v)),
        Verdict::ConsistentUpTo(n) => Verdict::ConsistentUpTo(n),
        Verdict::Indeterminate { reason, hint } => Verdict::Indeterminate { reason, hint: hint.map(strip) },
    }
}

/// A pair `(λ01μ, λ10μ)` or `(λ0, λ1)` of factors that are not adjacent, at a
/// saturated length.
pub fn non_adjacent_shape_pair(table: &FactorTable) -> Option<(usize, String, String)> {
    for n in (1..=table.max_len()).filter(|&n| table.is_saturated(n)) {
        for (i, v) in table.factors(n).enumerate() {
            let mut partners = Vec::new();
            for k in 0..n.saturating_sub(1) {
                if v[k] == Letter::ZERO && v[k + 1] == Letter::ONE {
                    let mut w = v.to_vec();
                    w.swap(k, k + 1);
                    partners.push(w);
                }
            }
            if v[n - 1] == Letter::ZERO {
                let mut w = v.to_vec();
                w[n - 1] = Letter::ONE;
                partners.push(w);
            }
            for w in partners {
                debug_assert!(nfop_shape(v, &w, NfopVariant::Binary).is_ok());
                if let Some(j) = table.index_of(&w) {
                    if j != i + 1 {
                        return Some((n, render(v), render(&w)));
                    }
                }
            }
        }
    }
    None
}
