use num_bigint::BigInt;

use super::matrix::{incidence_matrix, iterate_parikh, IncidenceMatrix};
use crate::error::{Error, Result};
use crate::word::{require_prolongable, Letter, Morphism};

/// Saturation point of the capped occurrence iteration.
pub const OCCURRENCE_CAP: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Occurrence {
    Zero,
    ExactlyOnce,
    AtLeastTwice,
}

impl Occurrence {
    fn from_capped(v: u8) -> Self {
        match v {
            0 => Occurrence::Zero,
            1 => Occurrence::ExactlyOnce,
            _ => Occurrence::AtLeastTwice,
        }
    }
}

/// Verdict plus the level at which it was first observed in φⁿ(b) and the
/// exact count there (Mⁿθ(b) evaluated at the letter).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceWitness {
    pub letter: Letter,
    pub occurrence: Occurrence,
    pub level: usize,
    pub exact_count: BigInt,
}

/// Fixpoint of ν_{n+1} = cap(M·ν_n) from ν₀ = cap(θ(b)), plus for every
/// letter the first level at which its final value is reached.
pub fn occurrence_profile(m: &Morphism) -> Result<(Vec<u8>, Vec<usize>)> {
    require_prolongable(m)?;
    let mat = incidence_matrix(m);
    let succ = mat.successors();
    let n = m.alphabet_len();
    let cap = OCCURRENCE_CAP as u32;
    let mut nu = vec![0u8; n];
    nu[m.start().index()] = 1;
    let mut first_seen: Vec<Vec<usize>> = vec![vec![usize::MAX; OCCURRENCE_CAP as usize + 1]; n];
    let note = |nu: &[u8], level: usize, first_seen: &mut Vec<Vec<usize>>| {
        for (i, &v) in nu.iter().enumerate() {
            for slot in first_seen[i].iter_mut().take(v as usize + 1) {
                *slot = (*slot).min(level);
            }
        }
    };
    note(&nu, 0, &mut first_seen);
    // Counts in φⁿ(b) never decrease, so this climbs a lattice of height cap·|Σ|.
    let max_rounds = OCCURRENCE_CAP as usize * n + 1;
    for level in 1..=max_rounds + 1 {
        let mut next = vec![0u32; n];
        for (j, targets) in succ.iter().enumerate() {
            if nu[j] == 0 {
                continue;
            }
            for &i in targets {
                let weight = mat.matrix().get(i, j);
                let w = u32::try_from(weight).unwrap_or(cap).min(cap);
                next[i] = (next[i] + w * nu[j] as u32).min(cap);
            }
        }
        let next: Vec<u8> = next.into_iter().map(|x| x as u8).collect();
        if next == nu {
            let levels = (0..n).map(|i| first_seen[i][nu[i] as usize]).collect();
            return Ok((nu, levels));
        }
        if level > max_rounds {
            break;
        }
        if next.iter().zip(&nu).any(|(a, b)| a < b) {
            return Err(Error::Invariant("capped occurrence iteration is not monotone".into()));
        }
        nu = next;
        note(&nu, level, &mut first_seen);
    }
    Err(Error::Invariant("capped occurrence iteration did not stabilize".into()))
}

/// Whether `a` occurs 0, 1, or at least 2 times in φ^ω(b). Exact.
pub fn occurrence_decider(m: &Morphism, a: Letter) -> Result<OccurrenceWitness> {
    let (nu, levels) = occurrence_profile(m)?;
    witness(m, &incidence_matrix(m), a, nu[a.index()], levels[a.index()])
}

fn witness(
    m: &Morphism,
    mat: &IncidenceMatrix,
    a: Letter,
    capped: u8,
    level: usize,
) -> Result<OccurrenceWitness> {
    let exact = iterate_parikh(mat, &[m.start()], level as u64)?[a.index()].clone();
    let expect = BigInt::from(capped);
    let agrees = if capped >= OCCURRENCE_CAP { exact >= expect } else { exact == expect };
    if !agrees {
        return Err(Error::Invariant(format!(
            "capped occurrence {capped} disagrees with exact count {exact} at level {level}"
        )));
    }
    Ok(OccurrenceWitness { letter: a, occurrence: Occurrence::from_capped(capped), level, exact_count: exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::fixtures::*;

    #[test]
    fn paper12_x1_twice() {
        let p = paper12();
        let w = occurrence_decider(&p, p.start()).unwrap();
        assert_eq!(w.occurrence, Occurrence::AtLeastTwice);
        assert_eq!(w.level, 2);
        assert_eq!(w.exact_count, BigInt::from(2));
    }

    #[test]
    fn ba_start_once() {
        let m = ba_example();
        let w = occurrence_decider(&m, m.start()).unwrap();
        assert_eq!(w.occurrence, Occurrence::ExactlyOnce);
        assert_eq!(w.level, 0);
        let a = occurrence_decider(&m, m.letter("a").unwrap()).unwrap();
        assert_eq!(a.occurrence, Occurrence::AtLeastTwice);
    }

    #[test]
    fn absent_letter_is_zero() {
        let m = Morphism::from_table(&[("a", "a a"), ("b", "b")], "a").unwrap();
        let w = occurrence_decider(&m, m.letter("b").unwrap()).unwrap();
        assert_eq!(w.occurrence, Occurrence::Zero);
    }

    #[test]
    fn agrees_with_direct_expansion() {
        let tables: &[&[(&str, &str)]] = &[
            &[("a", "a b"), ("b", "a")],
            &[("b", "b a"), ("a", "a a")],
            &[("a", "a b c"), ("b", "b"), ("c", "")],
            &[("a", "a b"), ("b", "c"), ("c", "d"), ("d", "d b")],
            &[("a", "a c"), ("b", "a b"), ("c", "c")],
        ];
        for t in tables {
            let m = Morphism::from_table(t, "a").or_else(|_| Morphism::from_table(t, "b")).unwrap();
            let word = m.apply_n(&[m.start()], 2 * m.alphabet_len());
            for l in m.letters() {
                let count = word.iter().filter(|&&x| x == l).count().min(2);
                let got = occurrence_decider(&m, l).unwrap().occurrence;
                assert_eq!(got, Occurrence::from_capped(count as u8), "{t:?} {}", m.name(l));
            }
        }
    }

    use crate::word::Morphism;
}
