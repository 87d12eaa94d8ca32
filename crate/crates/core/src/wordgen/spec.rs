//! `WordSpec` and its textual mini-language.
//!
//! ```text
//! fib                          Fibonacci morphism 0->01, 1->0 from seed 0
//! morphic:0->01,1->10;seed=0   fixed point of a prolongable substitution
//! periodic:01                  (01)^ω
//! ultper:0|1                   0 1^ω  (preperiod|seed)
//! std:1,1,2,3                  standard sequence, directive repeated cyclically
//! mech:2/5@0                   lower mechanical word of slope 2/5, intercept 0
//! mech:2/5@1/3                 same with intercept 1/3
//! literal:0100101              finite window only
//! prefixed:00|fib              a finite head followed by another spec
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::WordGenError;
use crate::word::{FiniteWord, Letter};

/// Letter-to-word substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    rules: BTreeMap<Letter, FiniteWord>,
}

impl Substitution {
    pub fn new<I>(rules: I) -> Substitution
    where
        I: IntoIterator<Item = (Letter, FiniteWord)>,
    {
        Substitution { rules: rules.into_iter().collect() }
    }

    pub fn fibonacci() -> Substitution {
        Substitution::new([(Letter::ZERO, "01".parse().unwrap()), (Letter::ONE, "0".parse().unwrap())])
    }

    pub fn thue_morse() -> Substitution {
        Substitution::new([(Letter::ZERO, "01".parse().unwrap()), (Letter::ONE, "10".parse().unwrap())])
    }

    pub fn image(&self, letter: Letter) -> Option<&FiniteWord> {
        self.rules.get(&letter)
    }

    pub fn rules(&self) -> impl Iterator<Item = (Letter, &FiniteWord)> {
        self.rules.iter().map(|(l, w)| (*l, w))
    }

    pub fn domain(&self) -> Vec<Letter> {
        self.rules.keys().copied().collect()
    }

    /// Primitive iff some power of the incidence matrix is strictly positive.
    /// Powers up to `(d-1)^2 + 1` suffice (Wielandt bound).
    pub fn is_primitive(&self) -> bool {
        let domain = self.domain();
        let d = domain.len();
        if d == 0 {
            return false;
        }
        let index = |l: Letter| domain.iter().position(|&x| x == l);
        let mut base = vec![vec![false; d]; d];
        for (i, &a) in domain.iter().enumerate() {
            for &b in self.rules[&a].letters() {
                match index(b) {
                    Some(j) => base[i][j] = true,
                    None => return false,
                }
            }
        }
        let mut power = base.clone();
        for _ in 0..(d - 1) * (d - 1) + 1 {
            if power.iter().all(|row| row.iter().all(|&x| x)) {
                return true;
            }
            let mut next = vec![vec![false; d]; d];
            for i in 0..d {
                for k in 0..d {
                    if power[i][k] {
                        for j in 0..d {
                            next[i][j] |= base[k][j];
                        }
                    }
                }
            }
            power = next;
        }
        power.iter().all(|row| row.iter().all(|&x| x))
    }
}

/// Exact rational intercept `num/den` in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Intercept {
    pub num: u64,
    pub den: u64,
}

impl Intercept {
    pub const ZERO: Intercept = Intercept { num: 0, den: 1 };
}

/// Finite description of an infinite word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordSpec {
    /// A finite window; prefixes longer than the literal are an error.
    Literal(FiniteWord),
    Periodic(FiniteWord),
    UltimatelyPeriodic {
        preperiod: FiniteWord,
        seed: FiniteWord,
    },
    /// Fixed point of a substitution prolongable on `seed`.
    Morphic {
        substitution: Substitution,
        seed: Letter,
    },
    /// Limit of `s(-1) = 1`, `s(0) = 0`, `s(m) = s(m-1)^d(m) s(m-2)`, with the
    /// directive repeated cyclically so the limit is infinite.
    StandardSequence(Vec<u32>),
    /// Lower mechanical word of slope `ones / (ones + zeros)`.
    MechanicalRational {
        ones: u64,
        zeros: u64,
        intercept: Intercept,
    },
    /// `head` followed by the word of `tail`.
    Prefixed {
        head: FiniteWord,
        tail: Box<WordSpec>,
    },
}

impl WordSpec {
    pub fn fibonacci() -> WordSpec {
        WordSpec::Morphic { substitution: Substitution::fibonacci(), seed: Letter::ZERO }
    }

    pub fn thue_morse() -> WordSpec {
        WordSpec::Morphic { substitution: Substitution::thue_morse(), seed: Letter::ZERO }
    }

    pub fn validate(&self) -> Result<(), WordGenError> {
        let bad = |msg: String| Err(WordGenError::MalformedSpec(msg));
        match self {
            WordSpec::Literal(_) => Ok(()),
            WordSpec::Periodic(seed) | WordSpec::UltimatelyPeriodic { seed, .. } => {
                if seed.is_empty() {
                    return bad("periodic seed must be nonempty".into());
                }
                Ok(())
            }
            WordSpec::Morphic { substitution, seed } => {
                for (letter, image) in substitution.rules() {
                    if image.is_empty() {
                        return bad(format!("image of {letter} is empty"));
                    }
                    if let Some(l) = image.iter().find(|l| substitution.image(**l).is_none()) {
                        return bad(format!("letter {l} in the image of {letter} has no rule"));
                    }
                }
                match substitution.image(*seed) {
                    None => bad(format!("seed {seed} has no rule")),
                    Some(image) if image.len() < 2 || image[0] != *seed => {
                        bad(format!("substitution is not prolongable on {seed}: {seed} -> {image}"))
                    }
                    Some(_) => Ok(()),
                }
            }
            WordSpec::StandardSequence(directive) => {
                if directive.is_empty() {
                    return bad("directive sequence is empty".into());
                }
                if directive.contains(&0) {
                    return bad("directive entries must be >= 1".into());
                }
                Ok(())
            }
            WordSpec::MechanicalRational { ones, zeros, intercept } => {
                if *zeros == 0 {
                    return bad("mechanical slope must be < 1".into());
                }
                if ones.gcd(zeros) != 1 {
                    return bad(format!("slope {}/{} is not in lowest terms", ones, ones + zeros));
                }
                if intercept.den == 0 || intercept.num >= intercept.den {
                    return bad("intercept must lie in [0, 1)".into());
                }
                Ok(())
            }
            WordSpec::Prefixed { tail, .. } => tail.validate(),
        }
    }
}

impl FromStr for WordSpec {
    type Err = WordGenError;

    fn from_str(s: &str) -> Result<WordSpec, WordGenError> {
        let spec = parse(s.trim())?;
        spec.validate()?;
        Ok(spec)
    }
}

fn malformed(msg: impl Into<String>) -> WordGenError {
    WordGenError::MalformedSpec(msg.into())
}

fn word(s: &str) -> Result<FiniteWord, WordGenError> {
    s.trim().parse().map_err(|e| malformed(format!("{e}")))
}

fn letter(s: &str) -> Result<Letter, WordGenError> {
    let mut chars = s.trim().chars();
    match (chars.next().and_then(Letter::from_digit), chars.next()) {
        (Some(l), None) => Ok(l),
        _ => Err(malformed(format!("expected a single letter, found {s:?}"))),
    }
}

fn integer<T: FromStr>(s: &str) -> Result<T, WordGenError> {
    s.trim().parse().map_err(|_| malformed(format!("expected an integer, found {s:?}")))
}

fn parse(s: &str) -> Result<WordSpec, WordGenError> {
    if s == "fib" {
        return Ok(WordSpec::fibonacci());
    }
    let (kind, body) = s.split_once(':').ok_or_else(|| malformed(format!("unknown word spec {s:?}")))?;
    match kind {
        "literal" => Ok(WordSpec::Literal(word(body)?)),
        "periodic" => Ok(WordSpec::Periodic(word(body)?)),
        "ultper" => {
            let (pre, seed) =
                body.split_once('|').ok_or_else(|| malformed("ultper expects preperiod|seed"))?;
            Ok(WordSpec::UltimatelyPeriodic { preperiod: word(pre)?, seed: word(seed)? })
        }
        "morphic" => {
            let (rules, seed) =
                body.split_once(';').ok_or_else(|| malformed("morphic expects rules;seed=<letter>"))?;
            let seed = seed
                .trim()
                .strip_prefix("seed=")
                .ok_or_else(|| malformed("morphic expects seed=<letter>"))?;
            let mut map = BTreeMap::new();
            for rule in rules.split(',') {
                let (from, to) =
                    rule.split_once("->").ok_or_else(|| malformed(format!("bad rule {rule:?}")))?;
                if map.insert(letter(from)?, word(to)?).is_some() {
                    return Err(malformed(format!("duplicate rule for {}", from.trim())));
                }
            }
            Ok(WordSpec::Morphic { substitution: Substitution { rules: map }, seed: letter(seed)? })
        }
        "std" => {
            let directive = body.split(',').map(integer::<u32>).collect::<Result<Vec<_>, _>>()?;
            Ok(WordSpec::StandardSequence(directive))
        }
        "mech" => {
            let (slope, rho) = body.split_once('@').unwrap_or((body, "0"));
            let (num, den) = slope.split_once('/').ok_or_else(|| malformed("mech expects p/q@rho"))?;
            let (num, den): (u64, u64) = (integer(num)?, integer(den)?);
            if num > den {
                return Err(malformed("mechanical slope must be <= 1"));
            }
            let intercept = match rho.split_once('/') {
                Some((a, b)) => Intercept { num: integer(a)?, den: integer(b)? },
                None => Intercept { num: integer(rho)?, den: 1 },
            };
            Ok(WordSpec::MechanicalRational { ones: num, zeros: den - num, intercept })
        }
        "prefixed" => {
            let (head, tail) = body.split_once('|').ok_or_else(|| malformed("prefixed expects head|spec"))?;
            Ok(WordSpec::Prefixed { head: word(head)?, tail: Box::new(parse(tail.trim())?) })
        }
        other => Err(malformed(format!("unknown word spec kind {other:?}"))),
    }
}

impl fmt::Display for WordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordSpec::Literal(w) => write!(f, "literal:{w}"),
            WordSpec::Periodic(w) => write!(f, "periodic:{w}"),
            WordSpec::UltimatelyPeriodic { preperiod, seed } => {
                write!(f, "ultper:{preperiod}|{seed}")
            }
            WordSpec::Morphic { substitution, seed } => {
                if *substitution == Substitution::fibonacci() && *seed == Letter::ZERO {
                    return f.write_str("fib");
                }
                let rules: Vec<String> = substitution.rules().map(|(l, w)| format!("{l}->{w}")).collect();
                write!(f, "morphic:{};seed={seed}", rules.join(","))
            }
            WordSpec::StandardSequence(d) => {
                let d: Vec<String> = d.iter().map(u32::to_string).collect();
                write!(f, "std:{}", d.join(","))
            }
            WordSpec::MechanicalRational { ones, zeros, intercept } => {
                write!(f, "mech:{}/{}@", ones, ones + zeros)?;
                if intercept.num == 0 {
                    f.write_str("0")
                } else {
                    write!(f, "{}/{}", intercept.num, intercept.den)
                }
            }
            WordSpec::Prefixed { head, tail } => write!(f, "prefixed:{head}|{tail}"),
        }
    }
}
