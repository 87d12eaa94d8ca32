//! Command-line front end. [`run`] is pure: it maps an argument vector to an
//! exit code and the text of both output streams.

use std::fmt::Write as _;
use std::fs;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::characterize::report::{harness_json, sturmian_records, CheckRecord};
use crate::characterize::{
    analyze_table, check_balance, check_complexity, check_hamming2, check_nfop, check_ones_monotone,
    default_variant, equivalence_harness, parse_corpus, prepare_table, CheckError, Judgment, NfopVariant,
    Status, DEFAULT_BUDGET,
};
use crate::christoffel::{christoffel_pair, conjugates, verify_christoffel_properties};
use crate::factor_index::FactorTable;
use crate::wordgen::{generate_prefix, WordSpec};

pub const EXIT_CONSISTENT: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(code: i32, stdout: String) -> Output {
        Output { code, stdout, stderr: String::new() }
    }

    fn error(code: i32, message: impl std::fmt::Display) -> Output {
        Output { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "sturmlex", version, about = "Finite-window checks of Sturmian characterizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a prefix of the word.
    Generate {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        len: usize,
    },
    /// Print complexities per length and optionally the factor table.
    Factors {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        len: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        dump: bool,
    },
    /// Run one check. Exit 0 consistent, 1 violated, 2 indeterminate.
    Check {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long = "prefix-len")]
        prefix_len: Option<usize>,
        /// NFOp condition 1, 2 or 3; defaults to 3 on binary words and 1 otherwise.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        variant: Option<u8>,
        #[arg(long)]
        json: bool,
    },
    /// Christoffel pair of slope p/(p+q): p ones, length p+q.
    Christoffel {
        #[arg(long = "p")]
        p: u64,
        #[arg(long = "q")]
        q: u64,
        /// Check the five factor properties on the word given by --spec.
        #[arg(long, requires = "spec")]
        verify: bool,
        #[arg(long)]
        spec: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run the equivalence harness over a corpus file. Exit 0 iff every assertion passes.
    Harness {
        #[arg(long)]
        corpus: String,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    Nfop,
    Balance,
    Hamming2,
    Ones,
    Complexity,
    Sturmian,
}

impl What {
    fn name(self) -> &'static str {
        match self {
            What::Nfop => "nfop",
            What::Balance => "balance",
            What::Hamming2 => "hamming2",
            What::Ones => "ones",
            What::Complexity => "complexity",
            What::Sturmian => "sturmian",
        }
    }
}

fn status_code(status: Status) -> i32 {
    match status {
        Status::Consistent => EXIT_CONSISTENT,
        Status::Violated => EXIT_VIOLATED,
        Status::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn check_error_code(e: &CheckError) -> i32 {
    match e {
        CheckError::BudgetExceeded { .. } => EXIT_USAGE,
        _ => EXIT_DATA,
    }
}

fn json_lines<T: Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item).expect("plain data serializes"));
        out.push('\n');
    }
    out
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output::ok(0, text),
                _ => Output { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match cli.command {
        Command::Generate { spec, len } => generate(&spec, len),
        Command::Factors { spec, len, max_n, dump } => factors(&spec, len, max_n, dump),
        Command::Check { spec, what, max_n, prefix_len, variant, json } => {
            check(&spec, what, max_n, prefix_len, variant, json)
        }
        Command::Christoffel { p, q, verify, spec, json } => {
            christoffel(p, q, spec.as_deref().filter(|_| verify), json)
        }
        Command::Harness { corpus, max_n, json } => harness(&corpus, max_n, json),
    }
}

fn parse_spec(spec: &str) -> Result<WordSpec, Output> {
    spec.parse().map_err(|e| Output::error(EXIT_DATA, format_args!("malformed spec {spec:?}: {e}")))
}

fn generate(spec: &str, len: usize) -> Output {
    let spec = match parse_spec(spec) {
        Ok(s) => s,
        Err(out) => return out,
    };
    match generate_prefix(&spec, len) {
        Ok(w) => Output::ok(0, format!("{w}\n")),
        Err(e) => Output::error(EXIT_DATA, e),
    }
}

fn factors(spec: &str, len: usize, max_n: usize, dump: bool) -> Output {
    let spec = match parse_spec(spec) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let prefix = match generate_prefix(&spec, len) {
        Ok(w) => w,
        Err(e) => return Output::error(EXIT_DATA, e),
    };
    let table = match FactorTable::build(prefix, max_n) {
        Ok(t) => t,
        Err(e) => return Output::error(EXIT_USAGE, e),
    };
    let mut out = String::from("n\tcomplexity\tsaturated\n");
    for n in 1..=max_n {
        let saturated = if table.is_saturated(n) { "yes" } else { "no" };
        writeln!(out, "{n}\t{}\t{saturated}", table.complexity(n)).unwrap();
    }
    if dump {
        out.push('\n');
        out.push_str(&table.dump());
    }
    Output::ok(0, out)
}

fn check(
    spec: &str,
    what: What,
    max_n: usize,
    prefix_len: Option<usize>,
    variant: Option<u8>,
    json: bool,
) -> Output {
    let spec = match parse_spec(spec) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let table = match prepare_table(&spec, prefix_len, max_n, DEFAULT_BUDGET) {
        Ok(t) => t,
        Err(e) => return Output::error(check_error_code(&e), e),
    };
    let sat = table.saturation().saturated_lengths();
    let name = what.name();
    let result: Result<(Status, String, CheckRecord), CheckError> = match what {
        What::Nfop => {
            let variant =
                variant.and_then(NfopVariant::from_number).unwrap_or_else(|| default_variant(&table));
            check_nfop(&table, variant)
                .map(|v| (v.status(), v.to_string(), CheckRecord::from_verdict(name, &v, sat)))
        }
        What::Balance => check_balance(&table)
            .map(|v| (v.status(), v.to_string(), CheckRecord::from_verdict(name, &v, sat))),
        What::Hamming2 => check_hamming2(&table)
            .map(|v| (v.status(), v.to_string(), CheckRecord::from_verdict(name, &v, sat))),
        What::Ones => check_ones_monotone(&table)
            .map(|v| (v.status(), v.to_string(), CheckRecord::from_verdict(name, &v, sat))),
        What::Complexity => {
            let v = check_complexity(&table);
            Ok((v.status(), v.to_string(), CheckRecord::from_verdict(name, &v, sat)))
        }
        What::Sturmian => return sturmian(&table, &spec, json),
    };
    match result {
        Ok((status, text, record)) => {
            let body = if json { json_lines(&[record]) } else { format!("{text}\n") };
            Output::ok(status_code(status), body)
        }
        Err(e) => Output::error(check_error_code(&e), e),
    }
}

fn sturmian(table: &FactorTable, spec: &WordSpec, json: bool) -> Output {
    let report = analyze_table(table, Some(spec));
    let code = match report.judgment {
        Judgment::SturmianConsistentUpTo(_) => EXIT_CONSISTENT,
        Judgment::NotSturmian(_) => EXIT_VIOLATED,
        Judgment::Indeterminate(_) => EXIT_INDETERMINATE,
    };
    if json {
        return Output::ok(code, json_lines(&sturmian_records(&report)));
    }
    let mut out = String::new();
    writeln!(out, "spec {}", report.spec).unwrap();
    writeln!(out, "prefix {} letters, max n {}", report.prefix_len, report.max_n).unwrap();
    writeln!(out, "nfop {}", report.nfop).unwrap();
    if let Some(v) = &report.balance {
        writeln!(out, "balance {v}").unwrap();
    }
    if let Some(case) = &report.imbalance_case {
        writeln!(out, "imbalance {case}").unwrap();
    }
    if let Some(v) = &report.hamming2 {
        writeln!(out, "hamming2 {v}").unwrap();
    }
    if let Some(v) = &report.ones_monotone {
        writeln!(out, "ones {v}").unwrap();
    }
    writeln!(out, "complexity {}", report.complexity).unwrap();
    writeln!(out, "periodicity {}", report.periodicity).unwrap();
    writeln!(out, "recurrence {}", report.recurrence).unwrap();
    writeln!(out, "adjacency hypotheses {}", if report.adjacency_hypotheses { "hold" } else { "unmet" })
        .unwrap();
    writeln!(out, "judgment {}", report.judgment).unwrap();
    Output::ok(code, out)
}

#[derive(Serialize)]
struct PairRecord {
    p: u64,
    q: u64,
    lower: String,
    upper: String,
    conjugates: Vec<String>,
}

fn christoffel(p: u64, q: u64, verify_spec: Option<&str>, json: bool) -> Output {
    let pair = match christoffel_pair(p, q) {
        Ok(pair) => pair,
        Err(e) => return Output::error(EXIT_USAGE, e),
    };
    let Some(spec) = verify_spec else {
        let conj: Vec<String> = conjugates(&pair.lower).iter().map(ToString::to_string).collect();
        if json {
            let record = PairRecord {
                p,
                q,
                lower: pair.lower.to_string(),
                upper: pair.upper.to_string(),
                conjugates: conj,
            };
            return Output::ok(0, json_lines(&[record]));
        }
        let text = format!("lower {}\nupper {}\nconjugates {}\n", pair.lower, pair.upper, conj.join(" "));
        return Output::ok(0, text);
    };
    let spec = match parse_spec(spec) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let table = match prepare_table(&spec, None, pair.len(), DEFAULT_BUDGET) {
        Ok(t) => t,
        Err(e) => return Output::error(check_error_code(&e), e),
    };
    let report = match verify_christoffel_properties(p, q, &table) {
        Ok(r) => r,
        Err(e) => return Output::error(EXIT_USAGE, e),
    };
    let code = if report.passed() { EXIT_CONSISTENT } else { EXIT_VIOLATED };
    if json {
        return Output::ok(code, json_lines(&[&report]));
    }
    let mut out = format!("lower {}\nupper {}\n", report.lower, report.upper);
    for item in &report.items {
        let mark = if item.passed { "pass" } else { "FAIL" };
        writeln!(out, "{} {} {mark} {}", item.item, item.name, item.detail).unwrap();
    }
    Output::ok(code, out)
}

fn harness(path: &str, max_n: usize, json: bool) -> Output {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Output::error(EXIT_USAGE, format_args!("cannot read {path}: {e}")),
    };
    let corpus = match parse_corpus(&text) {
        Ok(c) if c.is_empty() => return Output::error(EXIT_DATA, "corpus is empty"),
        Ok(c) => c,
        Err((line, e)) => return Output::error(EXIT_DATA, format_args!("{path}:{line}: {e}")),
    };
    let report = equivalence_harness(&corpus, max_n);
    let code = if report.passed() { 0 } else { 1 };
    if json {
        return Output::ok(code, json_lines(&harness_json(&report)));
    }
    let mut out = String::new();
    for entry in &report.entries {
        match &entry.report {
            Ok(r) => writeln!(out, "{}: {}", entry.spec, r.judgment).unwrap(),
            Err(e) => writeln!(out, "{}: FAIL {e}", entry.spec).unwrap(),
        }
        for a in &entry.assertions {
            writeln!(out, "  {} {}", a.name, a.outcome).unwrap();
        }
    }
    let failed = report.failures().count() + report.entries.iter().filter(|e| e.report.is_err()).count();
    writeln!(out, "{} words, {failed} failures", report.entries.len()).unwrap();
    Output::ok(code, out)
}
