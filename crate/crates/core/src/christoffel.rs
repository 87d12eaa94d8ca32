//! Christoffel words of rational slope, their conjugates, singular words, and
//! the checks tying them to a factor table.
//!
//! Slope convention: `p` counts the ones and `p + q` is the length, so the
//! lower Christoffel word of `(p, q)` codes the slope `p / (p + q)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::characterize::ExtremalKind;
use crate::factor_index::FactorTable;
use crate::word::{FiniteWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChristoffelError {
    #[error("p={p} and q={q} must both be positive and coprime")]
    NotCoprime { p: u64, q: u64 },
    #[error("length {n} is not indexed by the table (max {max_len})")]
    WindowTooSmall { n: usize, max_len: usize },
    #[error("length {0} is not saturated")]
    Unsaturated(usize),
    #[error("no factor of length {0} outside the conjugacy class")]
    NotFound(usize),
    #[error("several factors outside the conjugacy class: {0:?}")]
    Ambiguous(Vec<String>),
    #[error("{word} is not a singular word: {reason}")]
    NotSingular { word: String, reason: String },
}

/// `(0u1, 1u0)` with the shared core `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChristoffelPair {
    pub lower: FiniteWord,
    pub upper: FiniteWord,
    pub core: FiniteWord,
}

impl ChristoffelPair {
    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }
}

impl fmt::Display for ChristoffelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.lower, self.upper)
    }
}

/// `xux` of Christoffel length that is not a conjugate of `0u1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularWord {
    pub word: FiniteWord,
    pub x: Letter,
    pub kind: ExtremalKind,
}

fn check_slope(p: u64, q: u64) -> Result<(), ChristoffelError> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        Err(ChristoffelError::NotCoprime { p, q })
    } else {
        Ok(())
    }
}

/// `w(i) = floor((i+1)p/(p+q)) - floor(ip/(p+q))` for `i < p + q`.
pub fn lower_christoffel(p: u64, q: u64) -> Result<FiniteWord, ChristoffelError> {
    check_slope(p, q)?;
    let n = p + q;
    Ok((0..n).map(|i| if (i + 1) * p / n > i * p / n { Letter::ONE } else { Letter::ZERO }).collect())
}

/// All rotations of `w`, deduplicated and sorted.
pub fn conjugates(w: &FiniteWord) -> Vec<FiniteWord> {
    let set: BTreeSet<FiniteWord> = (0..w.len()).map(|k| w.rotate(k)).collect();
    set.into_iter().collect()
}

/// The lower word and its only other unbordered conjugate.
pub fn christoffel_pair(p: u64, q: u64) -> Result<ChristoffelPair, ChristoffelError> {
    let lower = lower_christoffel(p, q)?;
    let mut others = conjugates(&lower).into_iter().filter(|c| *c != lower && c.is_unbordered());
    let upper = others.next().expect("a Christoffel word has an unbordered conjugate 1u0");
    debug_assert!(others.next().is_none());
    let core = FiniteWord::from(&lower[1..lower.len() - 1]);
    Ok(ChristoffelPair { lower, upper, core })
}

fn framed(x: Letter, core: &FiniteWord) -> FiniteWord {
    let mut w = FiniteWord::from_letters(vec![x]);
    w.extend_from_slice(core);
    w.push(x);
    w
}

/// The unique length-`(p+q)` factor outside the conjugacy class of the
/// Christoffel word.
pub fn singular_word(p: u64, q: u64, table: &FactorTable) -> Result<SingularWord, ChristoffelError> {
    let pair = christoffel_pair(p, q)?;
    let n = pair.len();
    if n > table.max_len() {
        return Err(ChristoffelError::WindowTooSmall { n, max_len: table.max_len() });
    }
    if !table.is_saturated(n) {
        return Err(ChristoffelError::Unsaturated(n));
    }
    let class: BTreeSet<FiniteWord> = conjugates(&pair.lower).into_iter().collect();
    let outside: Vec<FiniteWord> =
        table.factors(n).map(FiniteWord::from).filter(|f| !class.contains(f)).collect();
    let word = match outside.as_slice() {
        [] => return Err(ChristoffelError::NotFound(n)),
        [w] => w.clone(),
        many => return Err(ChristoffelError::Ambiguous(many.iter().map(|w| w.to_string()).collect())),
    };
    let not_singular =
        |reason: &str| ChristoffelError::NotSingular { word: word.to_string(), reason: reason.to_string() };
    let x = word[0];
    if word != framed(x, &pair.core) {
        return Err(not_singular("not of the form xux with the Christoffel core"));
    }
    let kind = match table.extremal_kind(&word) {
        Some(Ordering::Less) => ExtremalKind::Min,
        Some(Ordering::Greater) => ExtremalKind::Max,
        _ => return Err(not_singular("not extremal")),
    };
    Ok(SingularWord { word, x, kind })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub item: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChristoffelReport {
    pub p: u64,
    pub q: u64,
    pub lower: String,
    pub upper: String,
    pub items: Vec<PropertyCheck>,
}

impl ChristoffelReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

fn join(words: impl IntoIterator<Item = FiniteWord>) -> String {
    words.into_iter().map(|w| w.to_string()).collect::<Vec<_>>().join(",")
}

/// The five properties of Christoffel factors at length `p + q`.
pub fn verify_christoffel_properties(
    p: u64,
    q: u64,
    table: &FactorTable,
) -> Result<ChristoffelReport, ChristoffelError> {
    let pair = christoffel_pair(p, q)?;
    let n = pair.len();
    let mut items = Vec::with_capacity(5);
    let mut item = |item: u8, name: &'static str, passed: bool, detail: String| {
        items.push(PropertyCheck { item, name, passed, detail })
    };
    let report = |items| ChristoffelReport {
        p,
        q,
        lower: pair.lower.to_string(),
        upper: pair.upper.to_string(),
        items,
    };

    if n > table.max_len() {
        let detail = format!("length {n} exceeds the table window {}", table.max_len());
        for (i, name) in ITEM_NAMES.iter().enumerate() {
            item(i as u8 + 1, name, false, detail.clone());
        }
        return Ok(report(items));
    }
    let note = if table.is_saturated(n) { "" } else { " (length unsaturated)" };
    let factors: BTreeSet<FiniteWord> = table.factors(n).map(FiniteWord::from).collect();
    let class: BTreeSet<FiniteWord> = conjugates(&pair.lower).into_iter().collect();

    let unbordered: BTreeSet<FiniteWord> =
        table.unbordered_factors(n).expect("n within window").into_iter().collect();
    let expected: BTreeSet<FiniteWord> = [pair.lower.clone(), pair.upper.clone()].into();
    item(1, ITEM_NAMES[0], unbordered == expected, format!("unbordered: {}{note}", join(unbordered.clone())));

    item(
        2,
        ITEM_NAMES[1],
        class.contains(&pair.upper),
        format!("{} and {} conjugate", pair.lower, pair.upper),
    );

    let missing: Vec<FiniteWord> = class.difference(&factors).cloned().collect();
    item(3, ITEM_NAMES[2], missing.is_empty(), format!("missing: {}{note}", join(missing)));

    let singulars: Vec<FiniteWord> = [Letter::ZERO, Letter::ONE]
        .into_iter()
        .map(|x| framed(x, &pair.core))
        .filter(|w| factors.contains(w))
        .collect();
    let (passed, detail) = match singulars.as_slice() {
        [w] => match table.extremal_kind(w) {
            Some(Ordering::Less) => (true, format!("{w} minimal")),
            Some(Ordering::Greater) => (true, format!("{w} maximal")),
            _ => (false, format!("{w} not extremal")),
        },
        [] => (false, "neither 0u0 nor 1u1 occurs".to_string()),
        _ => (false, format!("both {} occur", join(singulars.clone()))),
    };
    item(4, ITEM_NAMES[3], passed, format!("{detail}{note}"));

    let mut allowed = class.clone();
    allowed.extend(singulars.iter().cloned());
    let extra: Vec<FiniteWord> = factors.difference(&allowed).cloned().collect();
    let complexity = table.complexity(n);
    item(
        5,
        ITEM_NAMES[4],
        extra.is_empty() && complexity == n + 1,
        format!("p({n})={complexity}, other factors: {}{note}", join(extra)),
    );
    Ok(report(items))
}

const ITEM_NAMES: [&str; 5] = [
    "only_unbordered_are_pair",
    "pair_conjugate",
    "all_conjugates_present",
    "one_extremal_singular",
    "factors_are_conjugates_or_singular",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordgen::{generate_prefix, WordSpec};

    fn w(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    fn table(spec: &str, len: usize, max_len: usize) -> FactorTable {
        let spec: WordSpec = spec.parse().unwrap();
        FactorTable::build(generate_prefix(&spec, len).unwrap(), max_len).unwrap()
    }

    #[test]
    fn lower_words() {
        assert_eq!(lower_christoffel(1, 1).unwrap(), w("01"));
        assert_eq!(lower_christoffel(2, 3).unwrap(), w("00101"));
        assert_eq!(lower_christoffel(1, 2).unwrap(), w("001"));
        assert_eq!(lower_christoffel(2, 4), Err(ChristoffelError::NotCoprime { p: 2, q: 4 }));
        assert!(lower_christoffel(0, 1).is_err());
    }

    #[test]
    fn conjugate_lists() {
        assert_eq!(conjugates(&w("01")), vec![w("01"), w("10")]);
        assert_eq!(conjugates(&w("00101")), vec![w("00101"), w("01001"), w("01010"), w("10010"), w("10100")]);
        assert_eq!(conjugates(&w("0000")), vec![w("0000")]);
    }

    #[test]
    fn pairs() {
        let pair = christoffel_pair(2, 3).unwrap();
        assert_eq!((pair.lower, pair.upper, pair.core), (w("00101"), w("10100"), w("010")));
        assert_eq!(christoffel_pair(1, 1).unwrap().upper, w("10"));
    }

    #[test]
    fn singular_words() {
        let fib = table("fib", 4096, 10);
        assert_eq!(
            singular_word(1, 1, &fib).unwrap(),
            SingularWord { word: w("00"), x: Letter::ZERO, kind: ExtremalKind::Min }
        );
        let tm = table("morphic:0->01,1->10;seed=0", 4096, 4);
        assert_eq!(
            singular_word(1, 1, &tm),
            Err(ChristoffelError::Ambiguous(vec!["00".into(), "11".into()]))
        );
        // a rational mechanical word has only the conjugates at its period
        let mech = table("mech:1/3@0", 4096, 4);
        assert_eq!(singular_word(1, 2, &mech), Err(ChristoffelError::NotFound(3)));
        assert!(matches!(singular_word(5, 6, &fib), Err(ChristoffelError::WindowTooSmall { .. })));
    }

    #[test]
    fn properties_on_fibonacci() {
        let fib = table("fib", 4096, 10);
        let report = verify_christoffel_properties(1, 1, &fib).unwrap();
        assert!(report.passed(), "{report:?}");
        // 3/5 = |01001|_1 / |01001|; 2/5 ones in Fibonacci factors of length 5
        let report = verify_christoffel_properties(2, 3, &fib).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn properties_fail_on_thue_morse() {
        let tm = table("morphic:0->01,1->10;seed=0", 4096, 4);
        let report = verify_christoffel_properties(1, 1, &tm).unwrap();
        let failed: Vec<u8> = report.items.iter().filter(|i| !i.passed).map(|i| i.item).collect();
        assert!(failed.contains(&4));
    }

    #[test]
    fn singular_differs_from_the_pair_in_one_position() {
        let fib = table("fib", 8192, 13);
        for (p, q) in [(1, 1), (1, 2), (2, 3), (3, 5), (5, 8)] {
            let singular = singular_word(p, q, &fib).unwrap();
            let pair = christoffel_pair(p, q).unwrap();
            assert_eq!(crate::word::hamming(&pair.lower, &singular.word), 1);
            assert_eq!(crate::word::hamming(&pair.upper, &singular.word), 1);
        }
    }
}
