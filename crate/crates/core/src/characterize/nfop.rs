//! The factor-ordering property: every pair of lexicographically adjacent
//! factors of equal length is `(λabμ, λbaμ)` or `(λa, λb)` with `a < b`.

use std::fmt;

use super::verdict::{scan_adjacent, AdjacentPair, Verdict};
use super::CheckError;
use crate::factor_index::FactorTable;
use crate::word::{mismatches, Letter};

/// Which of the three equivalent formulations to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NfopVariant {
    /// Any letters `a < b`.
    AnyLetters,
    /// Consecutive letters `m, m+1`.
    ConsecutiveLetters,
    /// Binary alphabet, letters `0, 1`.
    Binary,
}

impl NfopVariant {
    pub const ALL: [NfopVariant; 3] =
        [NfopVariant::AnyLetters, NfopVariant::ConsecutiveLetters, NfopVariant::Binary];

    pub fn number(self) -> u8 {
        match self {
            NfopVariant::AnyLetters => 1,
            NfopVariant::ConsecutiveLetters => 2,
            NfopVariant::Binary => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<NfopVariant> {
        NfopVariant::ALL.into_iter().find(|v| v.number() == n)
    }

    fn letters_allowed(self, a: Letter, b: Letter) -> bool {
        match self {
            NfopVariant::AnyLetters => a < b,
            NfopVariant::ConsecutiveLetters => b.value() == a.value() + 1,
            NfopVariant::Binary => a == Letter::ZERO && b == Letter::ONE,
        }
    }
}

/// How an adjacent pair misses every allowed shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// The pair differs in this many positions (neither one nor two).
    Positions(usize),
    /// Two differing positions that are not neighbours.
    Apart(usize, usize),
    /// One differing position that is not the last.
    Interior(usize),
    /// Right shape, but the letters are not allowed for the variant.
    Letters { at: usize, low: Letter, high: Letter },
    /// Neighbouring positions that do not swap.
    NotTransposed(usize),
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Positions(k) => write!(f, "differ in {k} positions"),
            Mismatch::Apart(i, j) => write!(f, "differ at non-adjacent positions {i} and {j}"),
            Mismatch::Interior(i) => write!(f, "differ only at interior position {i}"),
            Mismatch::Letters { at, low, high } => {
                write!(f, "letters {low}<{high} at position {at} not allowed")
            }
            Mismatch::NotTransposed(i) => {
                write!(f, "positions {i},{} are not a transposition", i + 1)
            }
        }
    }
}

/// Detail attached to a violation: the variant tested and the mismatch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NfopDetail {
    pub variant: NfopVariant,
    pub mismatch: Mismatch,
}

impl fmt::Display for NfopDetail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "variant {}: {}", self.variant.number(), self.mismatch)
    }
}

pub type NfopViolation = AdjacentPair<NfopDetail>;

/// Tests one ordered pair `left < right` of equal length against the shapes
/// allowed by `variant`.
pub fn nfop_shape(left: &[Letter], right: &[Letter], variant: NfopVariant) -> Result<(), Mismatch> {
    let diff = mismatches(left, right);
    match diff.as_slice() {
        [i] if *i + 1 == left.len() => {
            if variant.letters_allowed(left[*i], right[*i]) {
                Ok(())
            } else {
                Err(Mismatch::Letters { at: *i, low: left[*i], high: right[*i] })
            }
        }
        [i] => Err(Mismatch::Interior(*i)),
        [i, j] if *j == *i + 1 => {
            let (a, b) = (left[*i], left[*j]);
            if right[*i] != b || right[*j] != a {
                Err(Mismatch::NotTransposed(*i))
            } else if !variant.letters_allowed(a, b) {
                Err(Mismatch::Letters { at: *i, low: a, high: b })
            } else {
                Ok(())
            }
        }
        [i, j] => Err(Mismatch::Apart(*i, *j)),
        other => Err(Mismatch::Positions(other.len())),
    }
}

/// Checks the ordering property at every saturated length of the table.
pub fn check_nfop(table: &FactorTable, variant: NfopVariant) -> Result<Verdict<NfopViolation>, CheckError> {
    if variant == NfopVariant::Binary && !table.is_binary() {
        return Err(CheckError::AlphabetTooLarge);
    }
    Ok(scan_adjacent(table, |v, w| {
        nfop_shape(v, w, variant).err().map(|mismatch| NfopDetail { variant, mismatch })
    }))
}

/// The variant a composite check uses: binary when possible.
pub fn default_variant(table: &FactorTable) -> NfopVariant {
    if table.is_binary() {
        NfopVariant::Binary
    } else {
        NfopVariant::AnyLetters
    }
}
