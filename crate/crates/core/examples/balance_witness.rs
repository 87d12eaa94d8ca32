//! Shortest imbalanced pair (0u0, 1u1) and which side of the dichotomy it falls on.

use sturmlex::characterize::{
    check_balance, classify_imbalance, extension_pair, prepare_table, DEFAULT_BUDGET,
};
use sturmlex::wordgen::WordSpec;

fn main() {
    for text in
        ["fib", "morphic:0->01,1->10;seed=0", "prefixed:00|fib", "prefixed:11|morphic:0->1,1->10;seed=1"]
    {
        let spec: WordSpec = text.parse().unwrap();
        let table = prepare_table(&spec, None, 24, DEFAULT_BUDGET).unwrap();
        let verdict = check_balance(&table).unwrap();
        println!("{text}\n  balance {verdict}");
        if verdict.is_violated() {
            println!("  case {}", classify_imbalance(&table).unwrap());
        }
        match extension_pair(&table) {
            Some(u) => println!("  10u0 and 01u1 both occur for u={u:?}"),
            None => println!("  no u with both 10u0 and 01u1"),
        }
    }
}
