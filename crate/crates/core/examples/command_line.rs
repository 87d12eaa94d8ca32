//! Drives the command-line front end in-process.

use sturmlex::cli::run;

fn main() {
    for args in [
        "generate --spec fib --len 32",
        "check --spec fib --what nfop --max-n 40",
        "check --spec periodic:01 --what nfop --max-n 10 --json",
        "christoffel --p 2 --q 3",
    ] {
        let out = run(std::iter::once("sturmlex").chain(args.split_whitespace()));
        print!("$ sturmlex {args}\n{}{}exit {}\n\n", out.stdout, out.stderr, out.code);
    }
}
