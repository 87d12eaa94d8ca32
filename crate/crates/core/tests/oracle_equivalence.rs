mod common;

use common::oracle::{self, Scan};
use common::{random_binary_prefixes, table_of};
use proptest::prelude::*;
use sturmlex::characterize::{
    check_balance, check_hamming2, check_nfop, check_ones_monotone, AdjacentPair, NfopVariant, Verdict,
};
use sturmlex::factor_index::FactorTable;
use sturmlex::word::render;

fn as_scan<D>(v: &Verdict<AdjacentPair<D>>) -> Scan {
    match v {
        Verdict::Violated(p) => {
            Scan::Violated { n: p.n, left: p.left.to_string(), right: p.right.to_string() }
        }
        Verdict::ConsistentUpTo(n) => Scan::Consistent(*n),
        Verdict::Indeterminate { .. } => Scan::Indeterminate,
    }
}

fn assert_table_matches(w: &str, t: &FactorTable) {
    for n in 1..=t.max_len() {
        let listed: Vec<String> = t.factors(n).map(render).collect();
        assert_eq!(listed, oracle::factors(w, n), "{w} n={n}");
        for (f, (first, last, count)) in oracle::occurrences(w, n) {
            let e = t.entry(&common::word(&f)).unwrap();
            assert_eq!((e.first, e.last, e.count), (first, last, count), "{w} {f}");
            let next = t.successor(&common::word(&f)).unwrap().map(render);
            assert_eq!(next, oracle::successor(w, &f), "{w} successor of {f}");
        }
        assert_eq!(t.is_saturated(n), oracle::saturated(w, n), "{w} saturation n={n}");
    }
}

fn assert_checks_match(w: &str, t: &FactorTable) {
    let max_n = t.max_len();
    for variant in NfopVariant::ALL {
        let v = check_nfop(t, variant).unwrap();
        assert_eq!(as_scan(&v), oracle::nfop(w, max_n, variant.number()), "{w} N={max_n} {variant:?}");
    }
    let expected = oracle::balance(w, max_n);
    match check_balance(t).unwrap() {
        Verdict::Violated(u) => assert_eq!(Ok(u.u.to_string()), expected, "{w}"),
        Verdict::ConsistentUpTo(k) => assert_eq!(Err(k), expected, "{w}"),
        other => panic!("balance is never indeterminate: {other:?}"),
    }
    let hamming = oracle::scan(w, max_n, |l, r| oracle::hamming(l, r) > 2);
    assert_eq!(as_scan(&check_hamming2(t).unwrap()), hamming, "{w}");
    let ones = oracle::scan(w, max_n, |l, r| oracle::ones(l) > oracle::ones(r));
    assert_eq!(as_scan(&check_ones_monotone(t).unwrap()), ones, "{w}");
}

#[test]
fn seeded_corpus_matches_oracle() {
    for w in random_binary_prefixes(0x5eed, 100, 200) {
        for n in 1..=12.min(w.len()) {
            let t = table_of(&w, n);
            assert_table_matches(&w, &t);
            assert_checks_match(&w, &t);
        }
    }
}

#[test]
fn long_sturmian_prefixes_match_oracle() {
    for spec in ["fib", "std:2,1,2,1", "std:3,1,4,1,5"] {
        let w = common::prefix(spec, 600);
        let t = table_of(&w, 12);
        assert_table_matches(&w, &t);
        assert_checks_match(&w, &t);
        assert!(matches!(oracle::nfop(&w, 12, 3), Scan::Consistent(12)), "{spec}");
    }
}

#[test]
fn ternary_nfop_matches_oracle() {
    for w in ["012012012012012012012012", "0102010201020102010201020102", "0120210120210120210120"] {
        let t = table_of(w, 4);
        for variant in [NfopVariant::AnyLetters, NfopVariant::ConsecutiveLetters] {
            assert_eq!(as_scan(&check_nfop(&t, variant).unwrap()), oracle::nfop(w, 4, variant.number()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn arbitrary_binary_words_match_oracle(bits in proptest::collection::vec(0u8..2, 1..80), n in 1usize..10) {
        let w: String = bits.iter().map(|b| char::from(b'0' + b)).collect();
        let t = table_of(&w, n.min(w.len()));
        assert_table_matches(&w, &t);
        assert_checks_match(&w, &t);
    }

    #[test]
    fn arbitrary_ternary_tables_match_oracle(letters in proptest::collection::vec(0u8..3, 1..60), n in 1usize..8) {
        let w: String = letters.iter().map(|b| char::from(b'0' + b)).collect();
        let t = table_of(&w, n.min(w.len()));
        assert_table_matches(&w, &t);
    }
}
