//! Factor complexity, the periodicity certificate and the recurrence hint.

use std::fmt;

use super::verdict::{Reason, Verdict};
use crate::factor_index::FactorTable;
use crate::word::FiniteWord;
use crate::wordgen::{KnownFlags, Tri};

/// A saturated length where `p(n) != n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexityMismatch {
    pub n: usize,
    pub observed: usize,
}

impl fmt::Display for ComplexityMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} p(n)={} expected {}", self.n, self.observed, self.n + 1)
    }
}

/// `p(n) = n + 1` at every saturated length.
pub fn check_complexity(table: &FactorTable) -> Verdict<ComplexityMismatch> {
    let mut skipped = Vec::new();
    for n in 1..=table.max_len() {
        if !table.is_saturated(n) {
            skipped.push(n);
            continue;
        }
        let observed = table.complexity(n);
        if observed != n + 1 {
            return Verdict::Violated(ComplexityMismatch { n, observed });
        }
    }
    if skipped.is_empty() {
        Verdict::ConsistentUpTo(table.max_len())
    } else {
        Verdict::Indeterminate { reason: Reason::Unsaturated(skipped), hint: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriodicityCertificate {
    /// `p(n) <= n` at this saturated length.
    UltimatelyPeriodic {
        n: usize,
        complexity: usize,
    },
    ApparentlyAperiodicUpTo(usize),
}

impl PeriodicityCertificate {
    pub fn is_periodic(&self) -> bool {
        matches!(self, PeriodicityCertificate::UltimatelyPeriodic { .. })
    }
}

impl fmt::Display for PeriodicityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodicityCertificate::UltimatelyPeriodic { n, complexity } => {
                write!(f, "UltimatelyPeriodic n={n} p(n)={complexity}")
            }
            PeriodicityCertificate::ApparentlyAperiodicUpTo(n) => {
                write!(f, "ApparentlyAperiodicUpTo {n}")
            }
        }
    }
}

/// Smallest saturated `n` with `p(n) <= n`.
pub fn periodicity_certificate(table: &FactorTable) -> PeriodicityCertificate {
    (1..=table.max_len())
        .filter(|&n| table.is_saturated(n))
        .find(|&n| table.complexity(n) <= n)
        .map_or(PeriodicityCertificate::ApparentlyAperiodicUpTo(table.max_len()), |n| {
            PeriodicityCertificate::UltimatelyPeriodic { n, complexity: table.complexity(n) }
        })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recurrence {
    /// No early unioccurrent factor was found.
    RecurrentConsistent,
    /// A factor occurring once and ending in the first half of the window.
    NonRecurrentWitness(FiniteWord),
    /// Recurrent by construction of the generator.
    KnownRecurrent,
    /// Not recurrent by construction; the heuristic witness is kept if found.
    KnownNonRecurrent(Option<FiniteWord>),
}

impl Recurrence {
    pub fn is_recurrent(&self) -> bool {
        matches!(self, Recurrence::RecurrentConsistent | Recurrence::KnownRecurrent)
    }

    pub fn witness(&self) -> Option<&FiniteWord> {
        match self {
            Recurrence::NonRecurrentWitness(w) | Recurrence::KnownNonRecurrent(Some(w)) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recurrence::RecurrentConsistent => f.write_str("RecurrentConsistent"),
            Recurrence::NonRecurrentWitness(w) => write!(f, "NonRecurrentWitness {w}"),
            Recurrence::KnownRecurrent => f.write_str("KnownRecurrent"),
            Recurrence::KnownNonRecurrent(None) => f.write_str("KnownNonRecurrent"),
            Recurrence::KnownNonRecurrent(Some(w)) => write!(f, "KnownNonRecurrent {w}"),
        }
    }
}

/// Shortest, then lexicographically least, unioccurrent factor that ends in
/// the first half of the prefix. A-priori flags take precedence.
pub fn recurrence_heuristic(table: &FactorTable, flags: Option<&KnownFlags>) -> Recurrence {
    let half = table.prefix().len() / 2;
    let witness = (1..=table.max_len()).find_map(|n| {
        table
            .entries(n)
            .iter()
            .position(|e| e.count == 1 && e.first + n <= half)
            .map(|i| FiniteWord::from(table.factor(n, i)))
    });
    match (flags.map(|f| f.recurrent), witness) {
        (Some(Tri::Yes), _) => Recurrence::KnownRecurrent,
        (Some(Tri::No), witness) => Recurrence::KnownNonRecurrent(witness),
        (_, Some(w)) => Recurrence::NonRecurrentWitness(w),
        (_, None) => Recurrence::RecurrentConsistent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordgen::{generate_prefix, known_flags, WordSpec};

    fn table(spec: &str, len: usize, max_len: usize) -> FactorTable {
        let spec: WordSpec = spec.parse().unwrap();
        FactorTable::build(generate_prefix(&spec, len).unwrap(), max_len).unwrap()
    }

    fn w(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    #[test]
    fn periodicity_examples() {
        assert_eq!(
            periodicity_certificate(&table("periodic:01", 4096, 10)),
            PeriodicityCertificate::UltimatelyPeriodic { n: 2, complexity: 2 }
        );
        let fib = table("fib", 20_000, 50);
        assert_eq!(periodicity_certificate(&fib), PeriodicityCertificate::ApparentlyAperiodicUpTo(50));
        assert!((1..=50).all(|n| fib.complexity(n) == n + 1));
        assert_eq!(
            periodicity_certificate(&table("periodic:0", 64, 5)),
            PeriodicityCertificate::UltimatelyPeriodic { n: 1, complexity: 1 }
        );
    }

    #[test]
    fn complexity_check() {
        assert_eq!(check_complexity(&table("fib", 20_000, 50)), Verdict::ConsistentUpTo(50));
        assert_eq!(
            check_complexity(&table("periodic:01", 4096, 10)),
            Verdict::Violated(ComplexityMismatch { n: 2, observed: 2 })
        );
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(
            recurrence_heuristic(&table("ultper:0|1", 4096, 10), None),
            Recurrence::NonRecurrentWitness(w("0"))
        );
        assert_eq!(
            recurrence_heuristic(&table("periodic:01", 4096, 10), None),
            Recurrence::RecurrentConsistent
        );
        assert_eq!(
            recurrence_heuristic(&table("prefixed:00|fib", 4096, 10), None),
            Recurrence::NonRecurrentWitness(w("000"))
        );
        assert_eq!(recurrence_heuristic(&table("fib", 4096, 40), None), Recurrence::RecurrentConsistent);
    }

    #[test]
    fn a_priori_flags_override() {
        let spec: WordSpec = "ultper:0|1".parse().unwrap();
        let flags = known_flags(&spec);
        assert_eq!(
            recurrence_heuristic(&table("ultper:0|1", 4096, 10), Some(&flags)),
            Recurrence::KnownNonRecurrent(Some(w("0")))
        );
        let spec: WordSpec = "periodic:01".parse().unwrap();
        assert_eq!(
            recurrence_heuristic(&table("periodic:01", 4096, 10), Some(&known_flags(&spec))),
            Recurrence::KnownRecurrent
        );
    }
}
