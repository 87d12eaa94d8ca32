//! Balance and the shape of the shortest imbalanced pair `(0u0, 1u1)`.

use std::cmp::Ordering;
use std::fmt;

use super::verdict::Verdict;
use super::CheckError;
use crate::factor_index::FactorTable;
use crate::word::{FiniteWord, Letter};

/// The shortest `u` with both `0u0` and `1u1` factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImbalanceWitness {
    pub u: FiniteWord,
}

impl ImbalanceWitness {
    pub fn framed(&self, x: Letter) -> FiniteWord {
        let mut out = FiniteWord::from_letters(vec![x]);
        out.extend_from_slice(&self.u);
        out.push(x);
        out
    }

    /// `(0u0, 1u1)`.
    pub fn pair(&self) -> (FiniteWord, FiniteWord) {
        (self.framed(Letter::ZERO), self.framed(Letter::ONE))
    }
}

impl fmt::Display for ImbalanceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (zero, one) = self.pair();
        let u = if self.u.is_empty() { "ε".to_string() } else { self.u.to_string() };
        write!(f, "u={u} ({zero}, {one})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalKind {
    Min,
    Max,
}

impl fmt::Display for ExtremalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremalKind::Min => "min",
            ExtremalKind::Max => "max",
        })
    }
}

/// Where the shortest imbalanced pair comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImbalanceCase {
    /// `10u0` and `01u1` are both factors.
    BothExtensions,
    /// `xux` is a prefix occurring only near the start, and every prefix of
    /// the window is extremal of `kind`.
    PrefixCase { x: Letter, occurrences: usize, kind: ExtremalKind },
    /// The window cannot confirm either alternative.
    WindowIndeterminate(String),
}

impl fmt::Display for ImbalanceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImbalanceCase::BothExtensions => f.write_str("BothExtensions"),
            ImbalanceCase::PrefixCase { x, occurrences, kind } => {
                write!(f, "PrefixCase x={x} occurrences={occurrences} kind={kind}")
            }
            ImbalanceCase::WindowIndeterminate(why) => write!(f, "WindowIndeterminate ({why})"),
        }
    }
}

fn require_binary(table: &FactorTable) -> Result<(), CheckError> {
    if table.is_binary() {
        Ok(())
    } else {
        Err(CheckError::NonBinaryAlphabet)
    }
}

/// Searches `u` by increasing length, lexicographically within a length.
pub fn check_balance(table: &FactorTable) -> Result<Verdict<ImbalanceWitness>, CheckError> {
    require_binary(table)?;
    let max = table.max_len();
    for len in 2..=max {
        let mut probe = FiniteWord::new();
        for f in table.factors(len) {
            if f[0] != Letter::ZERO {
                break;
            }
            if f[len - 1] != Letter::ZERO {
                continue;
            }
            probe.truncate(0);
            probe.push(Letter::ONE);
            probe.extend_from_slice(&f[1..len - 1]);
            probe.push(Letter::ONE);
            if table.index_of(&probe).is_some() {
                return Ok(Verdict::Violated(ImbalanceWitness { u: FiniteWord::from(&f[1..len - 1]) }));
            }
        }
    }
    Ok(Verdict::ConsistentUpTo(max.saturating_sub(2)))
}

/// Factors `10u0` or `01u1` of the shortest imbalanced pair, searched in the
/// whole prefix when longer than the window.
fn extension_count(table: &FactorTable, witness: &ImbalanceWitness, x: Letter) -> usize {
    let mut word = FiniteWord::from_letters(vec![x.flip()]);
    word.extend_from_slice(&witness.framed(x));
    table.count_occurrences(&word)
}

/// Decides which alternative of the imbalance dichotomy the window shows.
pub fn classify_imbalance(table: &FactorTable) -> Result<ImbalanceCase, CheckError> {
    let witness = match check_balance(table)? {
        Verdict::Violated(w) => w,
        _ => return Err(CheckError::NotImbalanced),
    };
    let preceded_by_one = extension_count(table, &witness, Letter::ZERO) > 0; // 10u0
    let preceded_by_zero = extension_count(table, &witness, Letter::ONE) > 0; // 01u1
    if preceded_by_one && preceded_by_zero {
        return Ok(ImbalanceCase::BothExtensions);
    }
    let prefix = table.prefix();
    let is_prefix = |x: Letter| prefix.starts_with(&witness.framed(x));
    let x = match (preceded_by_one, preceded_by_zero) {
        (false, true) => Letter::ZERO,
        (true, false) => Letter::ONE,
        _ if is_prefix(Letter::ZERO) => Letter::ZERO,
        _ => Letter::ONE,
    };
    let indeterminate = |why: String| Ok(ImbalanceCase::WindowIndeterminate(why));
    let xux = witness.framed(x);
    if !is_prefix(x) {
        return indeterminate(format!("{xux} is not a prefix of the window"));
    }

    // Every occurrence of xux sits in an initial run of positions 0, 1, ...,
    // and the run must end well inside the window for finiteness to be credible.
    let positions: Vec<usize> =
        prefix.windows(xux.len()).enumerate().filter(|(_, w)| *w == &xux[..]).map(|(i, _)| i).collect();
    let occurrences = positions.len();
    if positions.iter().enumerate().any(|(i, &p)| i != p) {
        return indeterminate(format!("occurrences of {xux} are not an initial run"));
    }
    if positions[occurrences - 1] + xux.len() > prefix.len() / 2 {
        return indeterminate(format!("{xux} still occurs in the second half of the window"));
    }

    let kind = if x == Letter::ZERO { ExtremalKind::Min } else { ExtremalKind::Max };
    for n in 1..=table.max_len() {
        let extremal = match table.extremal_kind(&prefix[..n]) {
            Some(Ordering::Equal) => true,
            Some(Ordering::Less) => kind == ExtremalKind::Min,
            Some(Ordering::Greater) => kind == ExtremalKind::Max,
            None => false,
        };
        if !extremal {
            return indeterminate(format!("prefix of length {n} is not {kind}imal"));
        }
        if !table.is_saturated(n) {
            return indeterminate(format!("length {n} is not saturated"));
        }
    }
    Ok(ImbalanceCase::PrefixCase { x, occurrences, kind })
}

/// Whether some `u` with `|u| + 3 <= max_len` has both `10u0` and `01u1` as factors.
pub fn extension_pair(table: &FactorTable) -> Option<FiniteWord> {
    for len in 3..=table.max_len() {
        let mut probe = FiniteWord::new();
        for f in table.factors(len) {
            if f[0] != Letter::ONE || f[1] != Letter::ZERO || f[len - 1] != Letter::ZERO {
                continue;
            }
            probe.truncate(0);
            probe.extend_from_slice(&[Letter::ZERO, Letter::ONE]);
            probe.extend_from_slice(&f[2..len - 1]);
            probe.push(Letter::ONE);
            if table.index_of(&probe).is_some() {
                return Some(FiniteWord::from(&f[2..len - 1]));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordgen::{generate_prefix, WordSpec};

    fn table(spec: &str, len: usize, max_len: usize) -> FactorTable {
        let spec: WordSpec = spec.parse().unwrap();
        FactorTable::build(generate_prefix(&spec, len).unwrap(), max_len).unwrap()
    }

    fn witness(t: &FactorTable) -> String {
        check_balance(t).unwrap().witness().unwrap().u.to_string()
    }

    #[test]
    fn balance_examples() {
        assert_eq!(witness(&table("morphic:0->01,1->10;seed=0", 4096, 12)), "");
        assert_eq!(witness(&table("prefixed:00|fib", 4096, 12)), "0");
        assert_eq!(check_balance(&table("fib", 4096, 40)).unwrap(), Verdict::ConsistentUpTo(38));
    }

    #[test]
    fn balance_rejects_ternary() {
        let t = table("periodic:012", 64, 3);
        assert_eq!(check_balance(&t).unwrap_err(), CheckError::NonBinaryAlphabet);
    }

    #[test]
    fn classify_examples() {
        let tm = table("morphic:0->01,1->10;seed=0", 4096, 12);
        assert_eq!(classify_imbalance(&tm).unwrap(), ImbalanceCase::BothExtensions);

        let shifted = table("prefixed:00|fib", 4096, 30);
        assert_eq!(
            classify_imbalance(&shifted).unwrap(),
            ImbalanceCase::PrefixCase { x: Letter::ZERO, occurrences: 1, kind: ExtremalKind::Min }
        );

        let balanced = table("prefixed:0|periodic:01", 4096, 10);
        assert_eq!(classify_imbalance(&balanced).unwrap_err(), CheckError::NotImbalanced);
    }

    #[test]
    fn classify_max_kind() {
        // complement of 00·fib: 111 is a prefix and every prefix is maximal
        let t = table("prefixed:11|morphic:0->1,1->10;seed=1", 4096, 20);
        assert_eq!(
            classify_imbalance(&t).unwrap(),
            ImbalanceCase::PrefixCase { x: Letter::ONE, occurrences: 1, kind: ExtremalKind::Max }
        );
    }

    #[test]
    fn extension_pairs() {
        assert_eq!(extension_pair(&table("fib", 4096, 20)), None);
        let tm = table("morphic:0->01,1->10;seed=0", 4096, 8);
        assert_eq!(extension_pair(&tm), Some(FiniteWord::new()));
    }
}
