//! The ordering property on Sturmian and non-Sturmian words, all three conditions.

use sturmlex::characterize::{check_nfop, prepare_table, NfopVariant, DEFAULT_BUDGET};
use sturmlex::wordgen::WordSpec;

fn main() {
    for text in
        ["fib", "std:3,1,4,1,5", "morphic:0->01,1->10;seed=0", "periodic:01", "ultper:0|1", "periodic:012"]
    {
        let spec: WordSpec = text.parse().unwrap();
        let table = prepare_table(&spec, None, 20, DEFAULT_BUDGET).unwrap();
        println!("{text}");
        for variant in NfopVariant::ALL {
            match check_nfop(&table, variant) {
                Ok(verdict) => println!("  condition {}: {verdict}", variant.number()),
                Err(e) => println!("  condition {}: {e}", variant.number()),
            }
        }
    }
}
