//! Letters and finite words over the ordered alphabet `{0, 1, ..., 9}`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

/// Largest letter value supported by the crate.
pub const MAX_LETTER: u8 = 9;

/// A letter of the ordered alphabet. The order is the integer order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Letter(u8);

impl Letter {
    pub const ZERO: Letter = Letter(0);
    pub const ONE: Letter = Letter(1);

    pub fn new(value: u8) -> Option<Letter> {
        (value <= MAX_LETTER).then_some(Letter(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn from_digit(c: char) -> Option<Letter> {
        c.to_digit(10).and_then(|d| Letter::new(d as u8))
    }

    pub fn to_digit(self) -> char {
        char::from(b'0' + self.0)
    }

    /// `1 - x` on the binary alphabet.
    pub fn flip(self) -> Letter {
        debug_assert!(self.0 <= 1);
        Letter(1 - self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_digit())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid letter {found:?} at offset {offset}; expected a digit 0-9")]
pub struct ParseWordError {
    pub found: char,
    pub offset: usize,
}

/// A finite word. Equal-length words compare lexicographically through
/// the derived `Ord`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWord(Vec<Letter>);

impl FiniteWord {
    pub fn new() -> FiniteWord {
        FiniteWord(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> FiniteWord {
        FiniteWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from_slice(&mut self, letters: &[Letter]) {
        self.0.extend_from_slice(letters);
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    pub fn prefix(&self, len: usize) -> FiniteWord {
        FiniteWord(self.0[..len].to_vec())
    }

    pub fn concat(&self, other: &[Letter]) -> FiniteWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(other);
        FiniteWord(letters)
    }

    /// Number of occurrences of `letter`, written `|w|_x`.
    pub fn count(&self, letter: Letter) -> usize {
        count_letter(&self.0, letter)
    }

    /// The sorted set of letters occurring in the word.
    pub fn alphabet(&self) -> Vec<Letter> {
        alphabet_of(&self.0)
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|l| l.0 <= 1)
    }

    pub fn is_unbordered(&self) -> bool {
        is_unbordered(&self.0)
    }

    /// Rotation that moves the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> FiniteWord {
        let mut letters = self.0.clone();
        if !letters.is_empty() {
            letters.rotate_left(k % self.len());
        }
        FiniteWord(letters)
    }
}

impl Deref for FiniteWord {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&[Letter]> for FiniteWord {
    fn from(letters: &[Letter]) -> FiniteWord {
        FiniteWord(letters.to_vec())
    }
}

impl FromIterator<Letter> for FiniteWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> FiniteWord {
        FiniteWord(iter.into_iter().collect())
    }
}

impl FromStr for FiniteWord {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<FiniteWord, ParseWordError> {
        s.chars()
            .enumerate()
            .map(|(offset, c)| Letter::from_digit(c).ok_or(ParseWordError { found: c, offset }))
            .collect()
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| l.to_digit()).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteWord({self})")
    }
}

/// Renders a letter slice as a digit string.
pub fn render(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_digit()).collect()
}

pub fn count_letter(letters: &[Letter], letter: Letter) -> usize {
    letters.iter().filter(|&&l| l == letter).count()
}

pub fn alphabet_of(letters: &[Letter]) -> Vec<Letter> {
    let mut seen = [false; MAX_LETTER as usize + 1];
    for l in letters {
        seen[l.0 as usize] = true;
    }
    (0..=MAX_LETTER).filter(|&v| seen[v as usize]).map(Letter).collect()
}

/// True when the only borders of `w` are `w` itself and the empty word.
pub fn is_unbordered(letters: &[Letter]) -> bool {
    let n = letters.len();
    (1..n).all(|k| letters[..k] != letters[n - k..])
}

/// Number of positions where two equal-length words differ.
pub fn hamming(a: &[Letter], b: &[Letter]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Positions where two equal-length words differ.
pub fn mismatches(a: &[Letter], b: &[Letter]) -> Vec<usize> {
    a.iter().zip(b).enumerate().filter(|(_, (x, y))| x != y).map(|(i, _)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("0120").to_string(), "0120");
        assert_eq!(w("").len(), 0);
        let err = "01a".parse::<FiniteWord>().unwrap_err();
        assert_eq!(err.offset, 2);
    }

    #[test]
    fn lex_order_on_equal_length() {
        assert!(w("011") < w("100"));
        assert!(w("001") < w("010"));
        assert!(w("12") < w("20"));
    }

    #[test]
    fn borders() {
        assert!(w("001").is_unbordered());
        assert!(w("01").is_unbordered());
        assert!(!w("00").is_unbordered());
        assert!(!w("010").is_unbordered());
        assert!(!w("0110").is_unbordered());
        assert!(w("0").is_unbordered());
        assert!(w("").is_unbordered());
    }

    #[test]
    fn counts_and_alphabet() {
        let x = w("0102");
        assert_eq!(x.count(Letter::ZERO), 2);
        assert_eq!(x.alphabet(), vec![Letter(0), Letter(1), Letter(2)]);
        assert!(!x.is_binary());
        assert_eq!(hamming(&w("011"), &w("100")), 3);
        assert_eq!(mismatches(&w("0101"), &w("0110")), vec![2, 3]);
    }

    #[test]
    fn rotation() {
        assert_eq!(w("00101").rotate(2).to_string(), "10100");
        assert_eq!(w("").rotate(3).len(), 0);
    }
}
