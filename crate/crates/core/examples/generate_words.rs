//! Prefixes of words from each generator of the spec mini-language.

use sturmlex::wordgen::{generate_prefix, known_flags, WordSpec};

fn main() {
    let specs = [
        "fib",
        "morphic:0->01,1->10;seed=0",
        "std:2,1,2,1",
        "mech:2/5@0",
        "mech:1/3@1/2",
        "periodic:01",
        "ultper:0|1",
        "prefixed:00|fib",
        "literal:0110",
    ];
    for text in specs {
        let spec: WordSpec = text.parse().expect("valid spec");
        let prefix = generate_prefix(&spec, 40.min(literal_len(&spec))).expect("generates");
        let flags = known_flags(&spec);
        println!("{text:<28} {prefix}  recurrent={:?} aperiodic={:?}", flags.recurrent, flags.aperiodic);
    }
}

fn literal_len(spec: &WordSpec) -> usize {
    match spec {
        WordSpec::Literal(w) => w.len(),
        _ => usize::MAX,
    }
}
