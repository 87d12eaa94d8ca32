#![allow(dead_code)]

pub mod oracle;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sturmlex::factor_index::FactorTable;
use sturmlex::word::FiniteWord;
use sturmlex::wordgen::{generate_prefix, WordSpec};

pub fn word(s: &str) -> FiniteWord {
    s.parse().expect("digit string")
}

pub fn spec(s: &str) -> WordSpec {
    s.parse().expect("valid spec")
}

pub fn prefix(s: &str, len: usize) -> String {
    generate_prefix(&spec(s), len).expect("generates").to_string()
}

pub fn table(s: &str, len: usize, max_len: usize) -> FactorTable {
    FactorTable::build(generate_prefix(&spec(s), len).unwrap(), max_len).unwrap()
}

pub fn table_of(w: &str, max_len: usize) -> FactorTable {
    FactorTable::build(word(w), max_len).unwrap()
}

/// Seeded binary prefixes of length 1..=max_len: a third biased coin flips,
/// a third standard Sturmian prefixes with random directives, a third
/// ultimately periodic words.
pub fn random_binary_prefixes(seed: u64, count: usize, max_len: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let len = rng.gen_range(1..=max_len);
            match i % 3 {
                0 => {
                    let bias: f64 = rng.gen_range(0.05..0.95);
                    (0..len).map(|_| if rng.gen_bool(bias) { '1' } else { '0' }).collect()
                }
                1 => {
                    let directive: Vec<String> =
                        (0..rng.gen_range(1..=5)).map(|_| rng.gen_range(1..=4).to_string()).collect();
                    prefix(&format!("std:{}", directive.join(",")), len)
                }
                _ => {
                    let (pre_len, seed_len) = (rng.gen_range(0..=4), rng.gen_range(1..=8));
                    let pre = bits(&mut rng, pre_len);
                    let seed = bits(&mut rng, seed_len);
                    let mut w = pre;
                    while w.len() < len {
                        w.push_str(&seed);
                    }
                    w.truncate(len);
                    w
                }
            }
        })
        .collect()
}

fn bits(rng: &mut ChaCha8Rng, k: usize) -> String {
    (0..k).map(|_| if rng.gen_bool(0.5) { '1' } else { '0' }).collect()
}
