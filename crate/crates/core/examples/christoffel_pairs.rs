//! Christoffel pairs, their conjugates, and the five factor properties on a mechanical word.

use sturmlex::characterize::{prepare_table, DEFAULT_BUDGET};
use sturmlex::christoffel::{christoffel_pair, conjugates, singular_word, verify_christoffel_properties};
use sturmlex::wordgen::WordSpec;

fn main() {
    for (p, q) in [(1, 1), (1, 2), (2, 3), (3, 5), (3, 4)] {
        let pair = christoffel_pair(p, q).unwrap();
        let conj: Vec<String> = conjugates(&pair.lower).iter().map(|c| c.to_string()).collect();
        println!("p={p} q={q}: {pair}  conjugates {}", conj.join(" "));
    }

    let fib = prepare_table(&WordSpec::fibonacci(), None, 13, DEFAULT_BUDGET).unwrap();
    for (p, q) in [(1, 1), (2, 3), (5, 8)] {
        let s = singular_word(p, q, &fib).unwrap();
        println!("fib singular word of length {}: {} ({})", p + q, s.word, s.kind);
    }

    // A periodic mechanical word has only p+q factors at length p+q, so it has no singular word.
    for text in ["fib", "mech:2/5@0"] {
        let spec: WordSpec = text.parse().unwrap();
        let table = prepare_table(&spec, Some(10_000), 5, DEFAULT_BUDGET).unwrap();
        let report = verify_christoffel_properties(2, 3, &table).unwrap();
        println!("properties of (2, 3) on {text}");
        for item in &report.items {
            println!(
                "  {} {} {} {}",
                item.item,
                item.name,
                if item.passed { "pass" } else { "FAIL" },
                item.detail
            );
        }
    }
}
