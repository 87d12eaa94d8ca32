//! Words whose adjacent factors satisfy the Hamming and 1-count conditions
//! without being Sturmian, because recurrence or aperiodicity fails.

use sturmlex::characterize::{
    check_hamming2, check_nfop, check_ones_monotone, prepare_table, NfopVariant, DEFAULT_BUDGET,
};
use sturmlex::wordgen::WordSpec;

fn main() {
    for text in ["fib", "periodic:01", "prefixed:00|fib", "ultper:0|1"] {
        let spec: WordSpec = text.parse().unwrap();
        let table = prepare_table(&spec, None, 30, DEFAULT_BUDGET).unwrap();
        println!("{text}");
        println!("  hamming2 {}", check_hamming2(&table).unwrap());
        println!("  ones     {}", check_ones_monotone(&table).unwrap());
        println!("  nfop     {}", check_nfop(&table, NfopVariant::Binary).unwrap());
    }
}
