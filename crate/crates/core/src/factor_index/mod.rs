//! Per-length factor sets of a finite prefix.
//!
//! A [`FactorTable`] holds, for every length `n` in `1..=max_len`, the sorted
//! duplicate-free list of length-`n` factors of the prefix together with
//! their occurrence counts and first/last start positions. Lexicographic
//! successor and predecessor are positional within that list.
//!
//! # Saturation
//!
//! A length `n` is *saturated* when every length-`n` factor first occurs
//! ending at or before `len / 2`, i.e. `first + n <= len / 2`. Checks only
//! trust factor lists at saturated lengths.

mod suffix_array;

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::word::{is_unbordered, render, FiniteWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("window of {max_len} exceeds the prefix length {prefix_len}")]
    WindowTooLarge { max_len: usize, prefix_len: usize },
    #[error("factor lengths start at 1")]
    EmptyWindow,
    #[error("{0} is not a factor of the prefix")]
    NotAFactor(String),
    #[error("length {n} is outside the indexed range 1..={max_len}")]
    LengthOutOfRange { n: usize, max_len: usize },
}

/// One distinct factor of a fixed length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorEntry {
    /// Start of the first occurrence.
    pub first: usize,
    /// Start of the last occurrence.
    pub last: usize,
    /// Number of (possibly overlapping) occurrences, `|w|_v`.
    pub count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LengthSaturation {
    pub n: usize,
    pub saturated: bool,
    /// Start position of the latest first occurrence among length-`n` factors.
    pub last_new_factor: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub lengths: Vec<LengthSaturation>,
}

impl SaturationReport {
    pub fn saturated_lengths(&self) -> Vec<usize> {
        self.lengths.iter().filter(|l| l.saturated).map(|l| l.n).collect()
    }

    pub fn unsaturated_lengths(&self) -> Vec<usize> {
        self.lengths.iter().filter(|l| !l.saturated).map(|l| l.n).collect()
    }

    pub fn all_saturated(&self) -> bool {
        self.lengths.iter().all(|l| l.saturated)
    }
}

#[derive(Clone, Debug)]
pub struct FactorTable {
    prefix: FiniteWord,
    max_len: usize,
    levels: Vec<Vec<FactorEntry>>,
}

impl FactorTable {
    pub fn build(prefix: FiniteWord, max_len: usize) -> Result<FactorTable, FactorError> {
        if max_len == 0 {
            return Err(FactorError::EmptyWindow);
        }
        if max_len > prefix.len() {
            return Err(FactorError::WindowTooLarge { max_len, prefix_len: prefix.len() });
        }
        let text: Vec<u8> = prefix.iter().map(|l| l.value()).collect();
        let sa = suffix_array::suffix_array(&text);
        let lcp = suffix_array::lcp_array(&text, &sa);
        let len = text.len();

        let levels = (1..=max_len)
            .map(|n| {
                let mut entries: Vec<FactorEntry> = Vec::new();
                let mut run_min = usize::MAX;
                let mut have_prev = false;
                for (i, &pos) in sa.iter().enumerate() {
                    run_min = run_min.min(lcp[i]);
                    if len - pos < n {
                        continue;
                    }
                    match entries.last_mut() {
                        Some(e) if have_prev && run_min >= n => {
                            e.count += 1;
                            e.first = e.first.min(pos);
                            e.last = e.last.max(pos);
                        }
                        _ => entries.push(FactorEntry { first: pos, last: pos, count: 1 }),
                    }
                    have_prev = true;
                    run_min = usize::MAX;
                }
                entries
            })
            .collect();

        Ok(FactorTable { prefix, max_len, levels })
    }

    pub fn prefix(&self) -> &FiniteWord {
        &self.prefix
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn is_binary(&self) -> bool {
        self.prefix.is_binary()
    }

    /// Letters of the prefix, i.e. the length-1 factors.
    pub fn alphabet(&self) -> Vec<Letter> {
        self.factors(1).map(|f| f[0]).collect()
    }

    fn check_len(&self, n: usize) -> Result<(), FactorError> {
        if n == 0 || n > self.max_len {
            Err(FactorError::LengthOutOfRange { n, max_len: self.max_len })
        } else {
            Ok(())
        }
    }

    fn level(&self, n: usize) -> &[FactorEntry] {
        &self.levels[n - 1]
    }

    /// Factor `index` of length `n` in lexicographic order.
    pub fn factor(&self, n: usize, index: usize) -> &[Letter] {
        let start = self.level(n)[index].first;
        &self.prefix[start..start + n]
    }

    /// Sorted length-`n` factors. Panics if `n` is outside `1..=max_len`.
    pub fn factors(&self, n: usize) -> impl ExactSizeIterator<Item = &[Letter]> + '_ {
        self.level(n).iter().map(move |e| &self.prefix[e.first..e.first + n])
    }

    pub fn entries(&self, n: usize) -> &[FactorEntry] {
        self.level(n)
    }

    /// `p(n)`, the number of distinct length-`n` factors.
    pub fn complexity(&self, n: usize) -> usize {
        self.level(n).len()
    }

    /// Position of `v` in its length's sorted list.
    pub fn index_of(&self, v: &[Letter]) -> Option<usize> {
        let n = v.len();
        if n == 0 || n > self.max_len {
            return None;
        }
        self.level(n).binary_search_by(|e| self.prefix[e.first..e.first + n].cmp(v)).ok()
    }

    pub fn contains(&self, v: &[Letter]) -> bool {
        if v.len() > self.max_len {
            return self.count_occurrences(v) > 0;
        }
        v.is_empty() || self.index_of(v).is_some()
    }

    /// `|w|_v` over the prefix; lengths beyond the window are scanned directly.
    pub fn count_occurrences(&self, v: &[Letter]) -> usize {
        if v.is_empty() {
            return self.prefix.len() + 1;
        }
        if v.len() <= self.max_len {
            return self.index_of(v).map_or(0, |i| self.level(v.len())[i].count);
        }
        self.prefix.windows(v.len()).filter(|w| *w == v).count()
    }

    pub fn entry(&self, v: &[Letter]) -> Option<FactorEntry> {
        self.index_of(v).map(|i| self.level(v.len())[i])
    }

    /// Next factor of the same length, `None` when `v` is maximal.
    pub fn successor(&self, v: &[Letter]) -> Result<Option<&[Letter]>, FactorError> {
        let i = self.index_of(v).ok_or_else(|| FactorError::NotAFactor(render(v)))?;
        Ok((i + 1 < self.complexity(v.len())).then(|| self.factor(v.len(), i + 1)))
    }

    pub fn predecessor(&self, v: &[Letter]) -> Result<Option<&[Letter]>, FactorError> {
        let i = self.index_of(v).ok_or_else(|| FactorError::NotAFactor(render(v)))?;
        Ok((i > 0).then(|| self.factor(v.len(), i - 1)))
    }

    /// Lexicographically least and greatest factors of length `n`.
    pub fn extremal(&self, n: usize) -> Result<(&[Letter], &[Letter]), FactorError> {
        self.check_len(n)?;
        let count = self.complexity(n);
        Ok((self.factor(n, 0), self.factor(n, count - 1)))
    }

    /// Whether `v` is minimal (`Less`) or maximal (`Greater`) among factors of
    /// its length; `Equal` when both (a single factor). `None` otherwise.
    pub fn extremal_kind(&self, v: &[Letter]) -> Option<Ordering> {
        let i = self.index_of(v)?;
        let last = self.complexity(v.len()) - 1;
        match (i == 0, i == last) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// Length-`n` words `v` with at least two distinct letters `a` such that
    /// `av` is a factor (for binary words: both `0v` and `1v`).
    pub fn left_special(&self, n: usize) -> Result<Vec<FiniteWord>, FactorError> {
        self.check_len(n + 1)?;
        let mut extended: Vec<(&[Letter], Letter)> = self.factors(n + 1).map(|f| (&f[1..], f[0])).collect();
        extended.sort_unstable();
        let mut out: Vec<FiniteWord> = Vec::new();
        for pair in extended.windows(2) {
            let (v, _) = pair[0];
            if pair[1].0 == v && out.last().map(|w| &w[..]) != Some(v) {
                out.push(FiniteWord::from(v));
            }
        }
        Ok(out)
    }

    /// Length-`n` factors with no border other than themselves and the empty word.
    pub fn unbordered_factors(&self, n: usize) -> Result<Vec<FiniteWord>, FactorError> {
        self.check_len(n)?;
        Ok(self.factors(n).filter(|f| is_unbordered(f)).map(FiniteWord::from).collect())
    }

    pub fn saturation(&self) -> SaturationReport {
        let half = self.prefix.len() / 2;
        let lengths = (1..=self.max_len)
            .map(|n| {
                let last_new_factor = self.level(n).iter().map(|e| e.first).max().unwrap_or(0);
                LengthSaturation { n, saturated: last_new_factor + n <= half, last_new_factor }
            })
            .collect();
        SaturationReport { lengths }
    }

    pub fn is_saturated(&self, n: usize) -> bool {
        let half = self.prefix.len() / 2;
        n >= 1 && n <= self.max_len && self.level(n).iter().all(|e| e.first + n <= half)
    }

    /// One line per factor: `<n>\t<factor>\t<count>`, lengths ascending, then
    /// lexicographic.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for n in 1..=self.max_len {
            for (i, e) in self.level(n).iter().enumerate() {
                let _ = writeln!(out, "{n}\t{}\t{}", render(self.factor(n, i)), e.count);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordgen::{generate_prefix, WordSpec};

    fn table(word: &str, max_len: usize) -> FactorTable {
        FactorTable::build(word.parse().unwrap(), max_len).unwrap()
    }

    fn spec_table(spec: &str, len: usize, max_len: usize) -> FactorTable {
        let spec: WordSpec = spec.parse().unwrap();
        FactorTable::build(generate_prefix(&spec, len).unwrap(), max_len).unwrap()
    }

    fn strings<'a>(it: impl Iterator<Item = &'a [Letter]>) -> Vec<String> {
        it.map(render).collect()
    }

    fn w(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    const FIB32: &str = "01001010010010100101001001010010";

    #[test]
    fn build_examples() {
        let fib = table(FIB32, 3);
        assert_eq!(strings(fib.factors(3)), ["001", "010", "100", "101"]);
        assert_eq!(fib.complexity(3), 4);

        let constant = table("00000", 2);
        assert_eq!(strings(constant.factors(2)), ["00"]);
        assert_eq!(constant.entries(2)[0].count, 4);

        let t = table("0110", 2);
        assert_eq!(strings(t.factors(2)), ["01", "10", "11"]);
        assert_eq!(t.complexity(2), 3);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            FactorTable::build(w("01"), 3).unwrap_err(),
            FactorError::WindowTooLarge { max_len: 3, prefix_len: 2 }
        );
        assert_eq!(FactorTable::build(w("01"), 0).unwrap_err(), FactorError::EmptyWindow);
    }

    #[test]
    fn occurrence_positions() {
        let t = table("0110100110010110", 3);
        let e = t.entry(&w("011")).unwrap();
        assert_eq!((e.first, e.last, e.count), (0, 12, 3));
        assert_eq!(t.count_occurrences(&w("0110")), 3);
        assert_eq!(t.count_occurrences(&w("111")), 0);
    }

    #[test]
    fn successor_examples() {
        let fib = table(FIB32, 3);
        assert_eq!(fib.successor(&w("001")).unwrap(), Some(&w("010")[..]));
        assert_eq!(fib.successor(&w("101")).unwrap(), None);
        assert_eq!(fib.predecessor(&w("001")).unwrap(), None);
        assert_eq!(table("0110", 2).successor(&w("01")).unwrap(), Some(&w("10")[..]));
        assert_eq!(fib.successor(&w("111")).unwrap_err(), FactorError::NotAFactor("111".into()));
    }

    #[test]
    fn extremal_examples() {
        let fib = table(FIB32, 3);
        assert_eq!(fib.extremal(3).unwrap(), (&w("001")[..], &w("101")[..]));
        assert_eq!(fib.extremal(1).unwrap(), (&w("0")[..], &w("1")[..]));
        let periodic = spec_table("periodic:01", 64, 4);
        assert_eq!(periodic.extremal(2).unwrap(), (&w("01")[..], &w("10")[..]));
        assert!(fib.extremal(4).is_err());
        assert_eq!(fib.extremal_kind(&w("001")), Some(Ordering::Less));
        assert_eq!(fib.extremal_kind(&w("010")), None);
    }

    #[test]
    fn left_special_examples() {
        let fib = table(FIB32, 4);
        assert_eq!(fib.left_special(3).unwrap(), vec![w("010")]);
        let periodic = spec_table("periodic:01", 64, 3);
        assert!(periodic.left_special(2).unwrap().is_empty());
        let tm = table("0110100110010110", 2);
        assert_eq!(tm.left_special(1).unwrap(), vec![w("0"), w("1")]);
        assert!(fib.left_special(4).is_err());
    }

    #[test]
    fn left_special_factors_are_nested_on_fibonacci() {
        let fib = spec_table("fib", 4096, 30);
        let mut previous = FiniteWord::new();
        for n in 1..30 {
            let special = fib.left_special(n).unwrap();
            assert_eq!(special.len(), 1, "n = {n}");
            assert!(special[0].starts_with(&previous));
            previous = special[0].clone();
        }
    }

    #[test]
    fn unbordered_examples() {
        let fib = table(FIB32, 3);
        assert_eq!(fib.unbordered_factors(3).unwrap(), vec![w("001"), w("100")]);
        assert_eq!(fib.unbordered_factors(2).unwrap(), vec![w("01"), w("10")]);
        assert!(!fib.unbordered_factors(2).unwrap().contains(&w("00")));
    }

    #[test]
    fn saturation_examples() {
        let fib = spec_table("fib", 10_000, 10);
        assert!(fib.saturation().lengths[9].saturated);
        assert!(fib.saturation().all_saturated());

        let short = table("01", 2);
        assert!(!short.saturation().lengths[1].saturated);

        let late = table("0000000001", 1);
        let report = late.saturation();
        assert!(!report.lengths[0].saturated);
        assert_eq!(report.lengths[0].last_new_factor, 9);
        assert!(!late.is_saturated(1));
    }

    #[test]
    fn dump_format() {
        assert_eq!(table("0110", 2).dump(), "1\t0\t2\n1\t1\t2\n2\t01\t1\n2\t10\t1\n2\t11\t1\n");
    }
}
