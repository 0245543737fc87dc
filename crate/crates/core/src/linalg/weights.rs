use num_bigint::BigInt;
use num_integer::Integer;

use super::matrix::{incidence_matrix, ParikhVector};
use crate::error::{Error, Result};
use crate::word::{fixed_point_prefix, require_prolongable, Morphism, DEFAULT_MEMORY_BUDGET};

/// Degree sequences of φⁿ(b) under the two matrix conventions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSequences {
    /// W_n = uᵀ Mⁿ θ(b), the degree of φⁿ(b).
    pub direct: Vec<BigInt>,
    /// uᵀ (Mᵀ)ⁿ θ(b), kept as a diagnostic.
    pub transposed: Vec<BigInt>,
    /// Number of leading terms cross-checked against the expanded words.
    pub expanded_checked: usize,
}

impl WeightSequences {
    pub fn conventions_agree(&self) -> bool {
        self.direct == self.transposed
    }

    /// gcd of terms `i` and `j` of each sequence, when present.
    pub fn gcd_pair(&self, i: usize, j: usize) -> Option<(BigInt, BigInt)> {
        let g = |s: &[BigInt]| Some(s.get(i)?.gcd(s.get(j)?));
        Some((g(&self.direct)?, g(&self.transposed)?))
    }
}

/// W_n for n = 0..=n_max.
///
/// Every term with |φⁿ(b)| ≤ `expand_letters` is recomputed by summing
/// degrees over the expanded word; a mismatch is an invariant failure.
pub fn weight_sequence(m: &Morphism, n_max: usize, expand_letters: usize) -> Result<WeightSequences> {
    require_prolongable(m)?;
    let grading = m.grading().ok_or(Error::MissingGrading)?;
    let u: Vec<BigInt> = grading.iter().map(|&d| BigInt::from(d)).collect();
    let mat = incidence_matrix(m);
    let mt = mat.matrix().transpose();

    let mut direct = Vec::with_capacity(n_max + 1);
    let mut transposed = Vec::with_capacity(n_max + 1);
    let theta = ParikhVector::of_word(m.alphabet_len(), &[m.start()]);
    let mut v = theta.0.clone();
    let mut t = theta.0;
    for _ in 0..=n_max {
        direct.push(ParikhVector(v.clone()).dot(&u));
        transposed.push(ParikhVector(t.clone()).dot(&u));
        v = mat.matrix().mul_vec(&v);
        t = mt.mul_vec(&t);
    }

    let prefix = fixed_point_prefix(m, expand_letters.max(1), DEFAULT_MEMORY_BUDGET)?;
    let mut expanded_checked = 0;
    for (level, expected) in direct.iter().enumerate().take(prefix.generation_level().min(n_max) + 1) {
        let word = prefix.level(level).expect("level generated");
        if word.len() > expand_letters {
            break;
        }
        let deg = m.degree(word).expect("graded");
        if BigInt::from(deg) != *expected {
            return Err(Error::Invariant(format!(
                "degree of expanded φ^{level}(b) is {deg}, matrix route gives {expected}"
            )));
        }
        expanded_checked += 1;
    }
    Ok(WeightSequences { direct, transposed, expanded_checked })
}
