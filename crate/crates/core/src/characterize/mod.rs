//! Finite-window decisions of the lexicographic characterizations of
//! Sturmian words, with witnesses.
//!
//! Every check works on a [`FactorTable`](crate::factor_index::FactorTable)
//! and returns a three-valued [`Verdict`]. Violations are always genuine
//! (their factors occur in the prefix); consistency only covers the lengths
//! that were checked, and lengths whose factor lists are not saturated are
//! never trusted for a violation.

mod adjacency;
mod balance;
mod complexity;
mod harness;
mod nfop;
pub mod report;
mod sturmian;
mod verdict;

use thiserror::Error;

use crate::factor_index::FactorError;
use crate::wordgen::WordGenError;

pub use adjacency::{
    check_hamming2, check_ones_monotone, Distance, HammingViolation, OnesDescent, OnesViolation,
};
pub use balance::{
    check_balance, classify_imbalance, extension_pair, ExtremalKind, ImbalanceCase, ImbalanceWitness,
};
pub use complexity::{
    check_complexity, periodicity_certificate, recurrence_heuristic, ComplexityMismatch,
    PeriodicityCertificate, Recurrence,
};
pub use harness::{
    equivalence_harness, is_sturmian_generator, non_adjacent_shape_pair, parse_corpus, strip_variant,
    Assertion, HarnessEntry, HarnessReport, Outcome,
};
pub use nfop::{check_nfop, default_variant, nfop_shape, Mismatch, NfopDetail, NfopVariant, NfopViolation};
pub use sturmian::{
    analyze_table, default_prefix_len, hypotheses_hold, prepare_table, sturmian_verdict, Evidence, Judgment,
    SturmianReport, DEFAULT_BUDGET,
};
pub use verdict::{AdjacentPair, Reason, Status, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("check requires a binary word")]
    NonBinaryAlphabet,
    #[error("binary variant requires the alphabet {{0, 1}}")]
    AlphabetTooLarge,
    #[error("the word is balanced on this window")]
    NotImbalanced,
    #[error("prefix of {requested} letters exceeds the budget of {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
    #[error(transparent)]
    WordGen(#[from] WordGenError),
    #[error(transparent)]
    Factor(#[from] FactorError),
}
