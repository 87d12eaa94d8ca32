//! The differential harness over a small corpus.

use sturmlex::characterize::{equivalence_harness, parse_corpus};

const CORPUS: &str = "\
# Sturmian by construction
fib
std:2,1,2,1
std:1,2,3,1,2,3
# not Sturmian
periodic:01
ultper:0|1
prefixed:00|fib
morphic:0->01,1->10;seed=0
";

fn main() {
    let corpus = parse_corpus(CORPUS).unwrap();
    let report = equivalence_harness(&corpus, 16);
    for entry in &report.entries {
        let passed = entry.assertions.iter().filter(|a| a.outcome.passed()).count();
        println!("{:<30} {passed}/{} assertions hold", entry.spec, entry.assertions.len());
    }
    for (spec, a) in report.failures() {
        println!("failure: {spec} {} {}", a.name, a.outcome);
    }
    println!("all passed: {}", report.passed());
}
