//! Adjacent-pair conditions that characterize Sturmian words among
//! recurrent aperiodic binary words.

use std::fmt;

use super::verdict::{scan_adjacent, AdjacentPair, Verdict};
use super::CheckError;
use crate::factor_index::FactorTable;
use crate::word::{count_letter, hamming, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Distance(pub usize);

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "differ in {} positions", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OnesDescent {
    pub left_ones: usize,
    pub right_ones: usize,
}

impl fmt::Display for OnesDescent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ones {} > {}", self.left_ones, self.right_ones)
    }
}

pub type HammingViolation = AdjacentPair<Distance>;
pub type OnesViolation = AdjacentPair<OnesDescent>;

/// Adjacent factors differ in at most two positions.
pub fn check_hamming2(table: &FactorTable) -> Result<Verdict<HammingViolation>, CheckError> {
    if !table.is_binary() {
        return Err(CheckError::NonBinaryAlphabet);
    }
    Ok(scan_adjacent(table, |v, w| {
        let d = hamming(v, w);
        (d > 2).then_some(Distance(d))
    }))
}

/// The number of ones never decreases along the sorted factor list; by
/// transitivity the adjacent pairs suffice.
pub fn check_ones_monotone(table: &FactorTable) -> Result<Verdict<OnesViolation>, CheckError> {
    if !table.is_binary() {
        return Err(CheckError::NonBinaryAlphabet);
    }
    Ok(scan_adjacent(table, |v, w| {
        let (left_ones, right_ones) = (count_letter(v, Letter::ONE), count_letter(w, Letter::ONE));
        (left_ones > right_ones).then_some(OnesDescent { left_ones, right_ones })
    }))
}
