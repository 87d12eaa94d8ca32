use serde::Serialize;

use super::WordSpec;

/// Three-valued a-priori knowledge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KnownFlags {
    pub recurrent: Tri,
    pub aperiodic: Tri,
}

/// Recurrence and aperiodicity known from the generator alone.
pub fn known_flags(spec: &WordSpec) -> KnownFlags {
    use Tri::*;
    let flags = |recurrent, aperiodic| KnownFlags { recurrent, aperiodic };
    match spec {
        WordSpec::Periodic(_) | WordSpec::MechanicalRational { .. } => flags(Yes, No),
        WordSpec::UltimatelyPeriodic { preperiod, seed } => {
            if preperiod_absorbs(preperiod, seed) {
                flags(Yes, No)
            } else {
                flags(No, No)
            }
        }
        WordSpec::StandardSequence(_) => flags(Yes, Yes),
        WordSpec::Literal(_) => flags(Unknown, Unknown),
        WordSpec::Morphic { substitution, .. } => {
            if substitution.is_primitive() {
                flags(Yes, Unknown)
            } else {
                flags(Unknown, Unknown)
            }
        }
        WordSpec::Prefixed { head, tail } => {
            let inner = known_flags(tail);
            if head.is_empty() {
                inner
            } else {
                flags(Unknown, inner.aperiodic)
            }
        }
    }
}

/// `pre seed^ω` is purely periodic iff the preperiod can be peeled off by
/// rotating the seed: `p'a (s'a)^ω = p' (a s')^ω`.
fn preperiod_absorbs(preperiod: &[crate::word::Letter], seed: &[crate::word::Letter]) -> bool {
    let mut seed = seed.to_vec();
    for &letter in preperiod.iter().rev() {
        if seed.last() != Some(&letter) {
            return false;
        }
        seed.rotate_right(1);
    }
    true
}
