//! Quadratic reimplementations over digit strings, sharing no code with the
//! library.

use std::collections::{BTreeMap, BTreeSet};

pub fn factors(w: &str, n: usize) -> Vec<String> {
    if n == 0 || n > w.len() {
        return Vec::new();
    }
    let set: BTreeSet<&str> = (0..=w.len() - n).map(|i| &w[i..i + n]).collect();
    set.into_iter().map(str::to_string).collect()
}

/// factor -> (first start, last start, overlapping count).
pub fn occurrences(w: &str, n: usize) -> BTreeMap<String, (usize, usize, usize)> {
    let mut out: BTreeMap<String, (usize, usize, usize)> = BTreeMap::new();
    if n == 0 || n > w.len() {
        return out;
    }
    for i in 0..=w.len() - n {
        let e = out.entry(w[i..i + n].to_string()).or_insert((i, i, 0));
        e.1 = i;
        e.2 += 1;
    }
    out
}

/// Every length-`n` factor already occurs inside the first half.
pub fn saturated(w: &str, n: usize) -> bool {
    factors(&w[..w.len() / 2], n) == factors(w, n)
}

pub fn successor(w: &str, v: &str) -> Option<String> {
    factors(w, v.len()).into_iter().find(|f| f.as_str() > v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scan {
    Violated { n: usize, left: String, right: String },
    Consistent(usize),
    Indeterminate,
}

/// First bad adjacent pair at a saturated length, by length then left factor.
pub fn scan(w: &str, max_n: usize, bad: impl Fn(&str, &str) -> bool) -> Scan {
    let mut unsaturated = false;
    for n in 1..=max_n {
        if !saturated(w, n) {
            unsaturated = true;
            continue;
        }
        let fs = factors(w, n);
        for pair in fs.windows(2) {
            if bad(&pair[0], &pair[1]) {
                return Scan::Violated { n, left: pair[0].clone(), right: pair[1].clone() };
            }
        }
    }
    if unsaturated {
        Scan::Indeterminate
    } else {
        Scan::Consistent(max_n)
    }
}

fn letters_ok(a: u8, b: u8, variant: u8) -> bool {
    match variant {
        1 => a < b,
        2 => b == a + 1,
        _ => a == b'0' && b == b'1',
    }
}

/// `(l, r)` is `(λab μ, λba μ)` or `(λa, λb)` under the letter condition of `variant`.
pub fn nfop_pair(l: &str, r: &str, variant: u8) -> bool {
    let (l, r) = (l.as_bytes(), r.as_bytes());
    let n = l.len();
    (0..n).any(|i| {
        if l[..i] != r[..i] {
            return false;
        }
        let last = i + 1 == n && letters_ok(l[i], r[i], variant);
        let swap = i + 1 < n
            && l[i] == r[i + 1]
            && l[i + 1] == r[i]
            && letters_ok(l[i], l[i + 1], variant)
            && l[i + 2..] == r[i + 2..];
        last || swap
    })
}

pub fn nfop(w: &str, max_n: usize, variant: u8) -> Scan {
    scan(w, max_n, |l, r| !nfop_pair(l, r, variant))
}

pub fn hamming(a: &str, b: &str) -> usize {
    a.bytes().zip(b.bytes()).filter(|(x, y)| x != y).count()
}

pub fn ones(a: &str) -> usize {
    a.bytes().filter(|&c| c == b'1').count()
}

/// Shortest length with two factors whose 1-counts differ by at least 2.
pub fn shortest_imbalance(w: &str, max_n: usize) -> Option<usize> {
    (1..=max_n).find(|&n| {
        let counts: Vec<usize> = factors(w, n).iter().map(|f| ones(f)).collect();
        match (counts.iter().min(), counts.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo >= 2,
            _ => false,
        }
    })
}

/// `Ok(u)` for the least `u` with `0u0`, `1u1` both factors at the shortest
/// imbalanced length; `Err(N-2)` when balanced up to `max_n`.
pub fn balance(w: &str, max_n: usize) -> Result<String, usize> {
    let Some(n) = shortest_imbalance(w, max_n) else {
        return Err(max_n.saturating_sub(2));
    };
    let fs: BTreeSet<String> = factors(w, n).into_iter().collect();
    fs.iter()
        .filter(|f| f.starts_with('0') && f.ends_with('0'))
        .map(|f| f[1..n - 1].to_string())
        .find(|u| fs.contains(&format!("1{u}1")))
        .ok_or(usize::MAX)
}

pub fn is_unbordered(w: &str) -> bool {
    (1..w.len()).all(|k| w[..k] != w[w.len() - k..])
}

pub fn rotations(w: &str) -> BTreeSet<String> {
    (0..w.len()).map(|k| format!("{}{}", &w[k..], &w[..k])).collect()
}
