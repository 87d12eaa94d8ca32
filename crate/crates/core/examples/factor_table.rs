//! Sorted factor lists, complexity, successors and saturation of a prefix.

use sturmlex::factor_index::FactorTable;
use sturmlex::word::render;
use sturmlex::wordgen::{generate_prefix, WordSpec};

fn main() {
    let prefix = generate_prefix(&WordSpec::fibonacci(), 1000).unwrap();
    let table = FactorTable::build(prefix, 8).unwrap();

    for n in 1..=table.max_len() {
        let factors: Vec<String> = table.factors(n).map(render).collect();
        println!("p({n}) = {}: {}", table.complexity(n), factors.join(" "));
    }

    let v: sturmlex::word::FiniteWord = "0100".parse().unwrap();
    let next = table.successor(&v).unwrap().map(render);
    println!("successor of {v}: {}", next.as_deref().unwrap_or("none"));
    let (min, max) = table.extremal(5).unwrap();
    println!("extremal factors of length 5: {} {}", render(min), render(max));
    println!("left special of length 4: {:?}", table.left_special(4).unwrap());

    let short = FactorTable::build(generate_prefix(&WordSpec::fibonacci(), 30).unwrap(), 8).unwrap();
    println!("unsaturated lengths on a 30-letter prefix: {:?}", short.saturation().unsaturated_lengths());
}
