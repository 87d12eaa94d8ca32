use std::fmt;

use super::adjacency::{check_hamming2, check_ones_monotone, HammingViolation, OnesViolation};
use super::balance::{check_balance, classify_imbalance, ImbalanceCase, ImbalanceWitness};
use super::complexity::{
    check_complexity, periodicity_certificate, recurrence_heuristic, ComplexityMismatch,
    PeriodicityCertificate, Recurrence,
};
use super::nfop::{check_nfop, default_variant, NfopViolation};
use super::verdict::{Reason, Verdict};
use super::CheckError;
use crate::factor_index::{FactorTable, SaturationReport};
use crate::word::FiniteWord;
use crate::wordgen::{generate_prefix, known_flags, KnownFlags, Tri, WordSpec};

/// Largest prefix the doubling loop will generate.
pub const DEFAULT_BUDGET: usize = 1 << 22;

pub fn default_prefix_len(max_n: usize) -> usize {
    4096.max(64 * max_n)
}

/// Generates a prefix and indexes it, doubling the prefix until every length
/// up to `max_n` is saturated or `budget` would be exceeded. Literal specs
/// stop at the literal's length.
pub fn prepare_table(
    spec: &WordSpec,
    prefix_len: Option<usize>,
    max_n: usize,
    budget: usize,
) -> Result<FactorTable, CheckError> {
    let cap = match spec {
        WordSpec::Literal(w) => Some(w.len()),
        _ => None,
    };
    let mut len = match (prefix_len, cap) {
        (Some(len), _) => len,
        (None, Some(cap)) => default_prefix_len(max_n).min(cap),
        (None, None) => default_prefix_len(max_n),
    };
    if len > budget {
        return Err(CheckError::BudgetExceeded { requested: len, budget });
    }
    loop {
        let table = FactorTable::build(generate_prefix(spec, len)?, max_n)?;
        let at_cap = cap.is_some_and(|c| len >= c);
        if at_cap || len * 2 > budget || table.saturation().all_saturated() {
            return Ok(table);
        }
        len = match cap {
            Some(c) => (len * 2).min(c),
            None => len * 2,
        };
    }
}

/// The check that produced a definitive negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    Nfop(NfopViolation),
    Balance(ImbalanceWitness),
    Complexity(ComplexityMismatch),
}

impl Evidence {
    pub fn check_name(&self) -> &'static str {
        match self {
            Evidence::Nfop(_) => "nfop",
            Evidence::Balance(_) => "balance",
            Evidence::Complexity(_) => "complexity",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Evidence::Nfop(v) => v.n,
            Evidence::Balance(w) => w.u.len() + 2,
            Evidence::Complexity(c) => c.n,
        }
    }

    pub fn factors(&self) -> Vec<FiniteWord> {
        match self {
            Evidence::Nfop(v) => vec![v.left.clone(), v.right.clone()],
            Evidence::Balance(w) => {
                let (zero, one) = w.pair();
                vec![zero, one]
            }
            Evidence::Complexity(_) => Vec::new(),
        }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Nfop(v) => write!(f, "nfop {v}"),
            Evidence::Balance(w) => write!(f, "balance {w}"),
            Evidence::Complexity(c) => write!(f, "complexity {c}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Judgment {
    SturmianConsistentUpTo(usize),
    NotSturmian(Evidence),
    Indeterminate(String),
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Judgment::SturmianConsistentUpTo(n) => write!(f, "SturmianConsistentUpTo {n}"),
            Judgment::NotSturmian(e) => write!(f, "NotSturmian ({e})"),
            Judgment::Indeterminate(why) => write!(f, "Indeterminate ({why})"),
        }
    }
}

/// Every check on one word, plus the combined judgment.
#[derive(Clone, Debug)]
pub struct SturmianReport {
    pub spec: String,
    pub prefix_len: usize,
    pub max_n: usize,
    pub flags: KnownFlags,
    pub saturation: SaturationReport,
    /// Binary variant on binary words, any-letters variant otherwise.
    pub nfop: Verdict<NfopViolation>,
    /// The remaining checks only apply to binary words.
    pub balance: Option<Verdict<ImbalanceWitness>>,
    pub imbalance_case: Option<ImbalanceCase>,
    pub hamming2: Option<Verdict<HammingViolation>>,
    pub ones_monotone: Option<Verdict<OnesViolation>>,
    pub complexity: Verdict<ComplexityMismatch>,
    pub periodicity: PeriodicityCertificate,
    pub recurrence: Recurrence,
    /// Recurrence and aperiodicity both hold (a priori, else by heuristic),
    /// so the adjacent-pair conditions are equivalent to the ordering property.
    pub adjacency_hypotheses: bool,
    pub judgment: Judgment,
}

/// Recurrent and aperiodic, taking a-priori flags over window evidence.
pub fn hypotheses_hold(
    flags: &KnownFlags,
    recurrence: &Recurrence,
    periodicity: &PeriodicityCertificate,
) -> bool {
    let aperiodic = match flags.aperiodic {
        Tri::Yes => true,
        Tri::No => false,
        Tri::Unknown => !periodicity.is_periodic(),
    };
    recurrence.is_recurrent() && aperiodic
}

/// Runs every check on one table. `spec` supplies a-priori flags when known.
pub fn analyze_table(table: &FactorTable, spec: Option<&WordSpec>) -> SturmianReport {
    let flags =
        spec.map(known_flags).unwrap_or(KnownFlags { recurrent: Tri::Unknown, aperiodic: Tri::Unknown });
    let binary = table.is_binary();
    let nfop = check_nfop(table, default_variant(table)).expect("variant matches alphabet");
    let balance = binary.then(|| check_balance(table).expect("binary"));
    let imbalance_case = match &balance {
        Some(Verdict::Violated(_)) => classify_imbalance(table).ok(),
        _ => None,
    };
    let hamming2 = binary.then(|| check_hamming2(table).expect("binary"));
    let ones_monotone = binary.then(|| check_ones_monotone(table).expect("binary"));
    let complexity = check_complexity(table);
    let periodicity = periodicity_certificate(table);
    let recurrence = recurrence_heuristic(table, spec.map(|_| &flags));
    let adjacency_hypotheses = binary && hypotheses_hold(&flags, &recurrence, &periodicity);

    let judgment = if let Verdict::Violated(v) = &nfop {
        Judgment::NotSturmian(Evidence::Nfop(v.clone()))
    } else if let Some(Verdict::Violated(w)) = &balance {
        Judgment::NotSturmian(Evidence::Balance(w.clone()))
    } else if let Verdict::Violated(c) = &complexity {
        Judgment::NotSturmian(Evidence::Complexity(*c))
    } else if nfop.is_consistent() && complexity.is_consistent() {
        Judgment::SturmianConsistentUpTo(table.max_len())
    } else {
        let reason = match &nfop {
            Verdict::Indeterminate { reason, .. } => reason.clone(),
            _ => match &complexity {
                Verdict::Indeterminate { reason, .. } => reason.clone(),
                _ => Reason::WindowTooSmall,
            },
        };
        Judgment::Indeterminate(reason.to_string())
    };

    SturmianReport {
        spec: spec.map_or_else(|| "table".to_string(), WordSpec::to_string),
        prefix_len: table.prefix().len(),
        max_n: table.max_len(),
        flags,
        saturation: table.saturation(),
        nfop,
        balance,
        imbalance_case,
        hamming2,
        ones_monotone,
        complexity,
        periodicity,
        recurrence,
        adjacency_hypotheses,
        judgment,
    }
}

/// Generates, indexes and checks `spec`; see [`prepare_table`].
pub fn sturmian_verdict(
    spec: &WordSpec,
    prefix_len: Option<usize>,
    max_n: usize,
) -> Result<SturmianReport, CheckError> {
    let table = prepare_table(spec, prefix_len, max_n, DEFAULT_BUDGET)?;
    Ok(analyze_table(&table, Some(spec)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(spec: &str, max_n: usize) -> SturmianReport {
        sturmian_verdict(&spec.parse().unwrap(), None, max_n).unwrap()
    }

    #[test]
    fn fibonacci_is_consistent() {
        let r = report("fib", 40);
        assert_eq!(r.judgment, Judgment::SturmianConsistentUpTo(40));
        assert!(r.nfop.is_consistent());
        assert_eq!(r.balance, Some(Verdict::ConsistentUpTo(38)));
        assert_eq!(r.hamming2, Some(Verdict::ConsistentUpTo(40)));
        assert_eq!(r.ones_monotone, Some(Verdict::ConsistentUpTo(40)));
        assert!(!r.periodicity.is_periodic());
        assert!(r.recurrence.is_recurrent());
    }

    #[test]
    fn periodic_is_not_sturmian() {
        let r = report("periodic:01", 10);
        let Judgment::NotSturmian(Evidence::Nfop(v)) = &r.judgment else { panic!("{:?}", r.judgment) };
        assert_eq!((v.n, v.left.to_string(), v.right.to_string()), (3, "010".into(), "101".into()));
        assert_eq!(r.periodicity, PeriodicityCertificate::UltimatelyPeriodic { n: 2, complexity: 2 });
        assert!(!r.adjacency_hypotheses);
    }

    #[test]
    fn thue_morse_is_not_sturmian() {
        let r = report("morphic:0->01,1->10;seed=0", 12);
        assert!(matches!(r.judgment, Judgment::NotSturmian(Evidence::Nfop(ref v)) if v.n == 3));
        let witness = r.balance.as_ref().and_then(Verdict::witness).unwrap();
        assert!(witness.u.is_empty());
        assert_eq!(r.imbalance_case, Some(ImbalanceCase::BothExtensions));
    }

    #[test]
    fn ternary_word() {
        let r = report("periodic:012", 6);
        assert!(r.balance.is_none());
        assert!(matches!(r.judgment, Judgment::NotSturmian(Evidence::Nfop(_))));
    }

    #[test]
    fn literal_windows_are_capped() {
        let literal = "0100101001001010010100100101001001";
        let spec: WordSpec = format!("literal:{literal}").parse().unwrap();
        let table = prepare_table(&spec, None, 10, DEFAULT_BUDGET).unwrap();
        assert_eq!(table.prefix().len(), literal.len());
        assert!(!table.is_saturated(10));
        let r = analyze_table(&table, Some(&spec));
        assert!(matches!(r.judgment, Judgment::Indeterminate(_)));
    }

    #[test]
    fn budget() {
        let spec = WordSpec::fibonacci();
        assert!(matches!(
            prepare_table(&spec, Some(100), 5, 50),
            Err(CheckError::BudgetExceeded { requested: 100, budget: 50 })
        ));
        // the loop stops doubling at the budget even when unsaturated
        let t = prepare_table(&"prefixed:0000000000|fib".parse().unwrap(), Some(16), 5, 40).unwrap();
        assert_eq!(t.prefix().len(), 32);
    }
}
