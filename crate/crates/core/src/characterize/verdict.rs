use std::fmt;

use crate::factor_index::FactorTable;
use crate::word::{FiniteWord, Letter};

/// Why a finite window could not settle a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    /// Lengths whose factor lists were skipped because they are not saturated.
    Unsaturated(Vec<usize>),
    UnknownRecurrence,
    WindowTooSmall,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Unsaturated(lengths) => {
                let lengths: Vec<String> = lengths.iter().map(usize::to_string).collect();
                write!(f, "unsaturated lengths {}", lengths.join(","))
            }
            Reason::UnknownRecurrence => f.write_str("recurrence unknown"),
            Reason::WindowTooSmall => f.write_str("window too small"),
        }
    }
}

/// Three-valued finite-window result.
///
/// `Violated` carries factors of the prefix, so it holds for the infinite
/// word as well. `ConsistentUpTo(n)` only speaks about lengths up to `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Violated(W),
    ConsistentUpTo(usize),
    /// `hint` is a finding at a length that could not be trusted.
    Indeterminate {
        reason: Reason,
        hint: Option<W>,
    },
}

impl<W> Verdict<W> {
    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, Verdict::ConsistentUpTo(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Violated(w) => Some(w),
            _ => None,
        }
    }

    pub fn status(&self) -> Status {
        match self {
            Verdict::Violated(_) => Status::Violated,
            Verdict::ConsistentUpTo(_) => Status::Consistent,
            Verdict::Indeterminate { .. } => Status::Indeterminate,
        }
    }
}

impl<W: fmt::Display> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Violated(w) => write!(f, "Violated {w}"),
            Verdict::ConsistentUpTo(n) => write!(f, "ConsistentUpTo {n}"),
            Verdict::Indeterminate { reason, hint: None } => write!(f, "Indeterminate ({reason})"),
            Verdict::Indeterminate { reason, hint: Some(h) } => {
                write!(f, "Indeterminate ({reason}; unconfirmed {h})")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Consistent,
    Violated,
    Indeterminate,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Consistent => "consistent",
            Status::Violated => "violated",
            Status::Indeterminate => "indeterminate",
        }
    }
}

/// A pair of lexicographically adjacent factors that fails a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacentPair<D> {
    pub n: usize,
    pub left: FiniteWord,
    pub right: FiniteWord,
    pub detail: D,
}

impl<D: fmt::Display> fmt::Display for AdjacentPair<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {} {} ({})", self.n, self.left, self.right, self.detail)
    }
}

/// Walks adjacent pairs at lengths `1..=max_len`, smallest length first and
/// then lexicographically least left factor. Only saturated lengths can
/// produce `Violated`; findings at unsaturated lengths become hints.
pub(crate) fn scan_adjacent<D>(
    table: &FactorTable,
    mut check: impl FnMut(&[Letter], &[Letter]) -> Option<D>,
) -> Verdict<AdjacentPair<D>> {
    let mut skipped = Vec::new();
    let mut hint = None;
    for n in 1..=table.max_len() {
        let saturated = table.is_saturated(n);
        if !saturated {
            skipped.push(n);
            if hint.is_some() {
                continue;
            }
        }
        let factors: Vec<&[Letter]> = table.factors(n).collect();
        let found = factors.windows(2).find_map(|pair| {
            check(pair[0], pair[1]).map(|detail| AdjacentPair {
                n,
                left: FiniteWord::from(pair[0]),
                right: FiniteWord::from(pair[1]),
                detail,
            })
        });
        match found {
            Some(pair) if saturated => return Verdict::Violated(pair),
            Some(pair) => hint = Some(pair),
            None => {}
        }
    }
    if skipped.is_empty() {
        Verdict::ConsistentUpTo(table.max_len())
    } else {
        Verdict::Indeterminate { reason: Reason::Unsaturated(skipped), hint }
    }
}
