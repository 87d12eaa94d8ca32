use super::{Intercept, WordGenError, WordSpec};
use crate::word::{FiniteWord, Letter};

/// First `n` letters of the infinite word described by `spec`.
pub fn generate_prefix(spec: &WordSpec, n: usize) -> Result<FiniteWord, WordGenError> {
    spec.validate()?;
    Ok(match spec {
        WordSpec::Literal(w) => {
            if n > w.len() {
                return Err(WordGenError::LiteralTooShort { requested: n, available: w.len() });
            }
            w.prefix(n)
        }
        WordSpec::Periodic(seed) => seed.iter().copied().cycle().take(n).collect(),
        WordSpec::UltimatelyPeriodic { preperiod, seed } => {
            preperiod.iter().copied().chain(seed.iter().copied().cycle()).take(n).collect()
        }
        WordSpec::Morphic { substitution, seed } => {
            // The fixed point x satisfies x = image(x[0]) image(x[1]) ...; the
            // seed image already starts with the seed, so expansion resumes at 1.
            let mut out = substitution.image(*seed).expect("validated").clone();
            let mut next = 1;
            while out.len() < n {
                let letter = out[next];
                let image = substitution.image(letter).expect("validated");
                out.extend_from_slice(image);
                next += 1;
            }
            out.truncate(n);
            out
        }
        WordSpec::StandardSequence(directive) => standard(directive, n),
        WordSpec::MechanicalRational { ones, zeros, intercept } => mechanical(*ones, *zeros, *intercept, n),
        WordSpec::Prefixed { head, tail } => {
            let mut out = head.prefix(head.len().min(n));
            let rest = generate_prefix(tail, n - out.len())?;
            out.extend_from_slice(&rest);
            out
        }
    })
}

fn standard(directive: &[u32], n: usize) -> FiniteWord {
    let mut older = FiniteWord::from_letters(vec![Letter::ONE]);
    let mut current = FiniteWord::from_letters(vec![Letter::ZERO]);
    // s(m) is a prefix of s(m+1) for all m >= 0, so stop once long enough.
    for &d in directive.iter().cycle() {
        if current.len() >= n {
            break;
        }
        let mut next = FiniteWord::new();
        for _ in 0..d {
            next.extend_from_slice(&current);
            if next.len() >= n {
                break;
            }
        }
        next.extend_from_slice(&older);
        older = current;
        current = next;
    }
    current.truncate(n);
    current
}

/// `w(i) = floor((i+1)a + rho) - floor(i a + rho)` with `a = ones/(ones+zeros)`,
/// evaluated over the common denominator.
fn mechanical(ones: u64, zeros: u64, rho: Intercept, n: usize) -> FiniteWord {
    let len = u128::from(ones + zeros);
    let den = len * u128::from(rho.den);
    let offset = u128::from(rho.num) * len;
    let step = u128::from(ones) * u128::from(rho.den);
    let floor_at = |i: u128| (i * step + offset) / den;
    (0..n as u128).map(|i| if floor_at(i + 1) > floor_at(i) { Letter::ONE } else { Letter::ZERO }).collect()
}
