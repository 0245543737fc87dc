use std::collections::HashSet;

use super::prefix::fixed_point_prefix;
use super::{mortal_letters, require_prolongable, Letter, Morphism, Word};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Length-bounded factor set of a fixed point.
///
/// Factors are grouped by length and sorted within each group, so contents and
/// iteration order are canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    max_len: usize,
    by_len: Vec<Vec<Word>>,
    exact: bool,
    closure_rounds: usize,
}

/// p_w(n), flagged when it is only a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexityValue {
    pub count: usize,
    pub exact: bool,
}

impl FactorSet {
    /// Builds a factor set from explicit words. The set is closed under
    /// taking factors and truncated to `max_len`.
    pub fn from_words<I>(max_len: usize, words: I, exact: bool) -> Self
    where
        I: IntoIterator<Item = Word>,
    {
        let mut levels: Vec<HashSet<Word>> = vec![HashSet::new(); max_len + 1];
        levels[0].insert(Vec::new());
        for w in words {
            for i in 0..w.len() {
                for j in i + 1..=w.len().min(i + max_len) {
                    levels[j - i].insert(w[i..j].to_vec());
                }
            }
        }
        Self::finish(max_len, levels, exact, 0)
    }

    fn finish(max_len: usize, levels: Vec<HashSet<Word>>, exact: bool, rounds: usize) -> Self {
        let by_len = levels
            .into_iter()
            .map(|set| {
                let mut v: Vec<Word> = set.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        FactorSet { max_len, by_len, exact, closure_rounds: rounds }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn closure_rounds(&self) -> usize {
        self.closure_rounds
    }

    /// Factors of length `n`, sorted.
    pub fn of_len(&self, n: usize) -> &[Word] {
        self.by_len.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All factors by increasing length, then canonical letter order.
    pub fn iter(&self) -> impl Iterator<Item = &Word> + '_ {
        self.by_len.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_len.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Membership without a length check; words longer than `max_len` are absent.
    pub fn contains(&self, u: &[Letter]) -> bool {
        self.by_len
            .get(u.len())
            .is_some_and(|v| v.binary_search_by(|w| w.as_slice().cmp(u)).is_ok())
    }

    /// Whether `u` is a factor. When the set is exact this is exactly
    /// "u has nonzero image in A_w".
    pub fn is_factor(&self, u: &[Letter]) -> Result<bool> {
        if u.len() > self.max_len {
            return Err(Error::Contract(format!(
                "word of length {} exceeds factor bound {}",
                u.len(),
                self.max_len
            )));
        }
        Ok(self.contains(u))
    }

    /// p_w(n), the number of length-`n` members.
    pub fn subword_complexity(&self, n: usize) -> Result<ComplexityValue> {
        if n > self.max_len {
            return Err(Error::Contract(format!("n = {n} exceeds factor bound {}", self.max_len)));
        }
        Ok(ComplexityValue { count: self.by_len[n].len(), exact: self.exact })
    }

    /// p_w(0), …, p_w(max_len).
    pub fn complexity_profile(&self) -> Vec<usize> {
        self.by_len.iter().map(Vec::len).collect()
    }
}

/// Factor closure with the default execution strategy.
pub fn factor_closure(m: &Morphism, max_len: usize, memory_budget: usize) -> Result<FactorSet> {
    factor_closure_with(m, max_len, memory_budget, Exec::default())
}

/// All factors of φ^ω(b) of length at most `max_len`.
///
/// For non-erasing morphisms this is the monotone fixpoint seeded with the
/// factors of φ(b): a word `v` in the set contributes the factors of φ(v) that
/// start inside φ(v₁) and end inside φ(v_last). Every length-ℓ factor of φ(s)
/// spans the images of at most ℓ consecutive letters of `s`, so the fixpoint
/// is complete and the result is exact. Erasing morphisms fall back to the
/// factors of a generated prefix and are flagged inexact.
pub fn factor_closure_with(
    m: &Morphism,
    max_len: usize,
    memory_budget: usize,
    exec: Exec,
) -> Result<FactorSet> {
    require_prolongable(m)?;
    if max_len == 0 {
        return Ok(FactorSet::from_words(0, std::iter::empty(), true));
    }
    if mortal_letters(m).iter().any(|&x| x) || m.min_image_len() == 0 {
        return erasing_fallback(m, max_len, memory_budget);
    }

    let unit = std::mem::size_of::<Letter>();
    let mut levels: Vec<HashSet<Word>> = vec![HashSet::new(); max_len + 1];
    levels[0].insert(Vec::new());
    let mut bytes = 0usize;
    let mut frontier: Vec<Word> = Vec::new();
    let seed = m.image(m.start());
    for i in 0..seed.len() {
        for j in i + 1..=seed.len().min(i + max_len) {
            let w = seed[i..j].to_vec();
            if levels[w.len()].insert(w.clone()) {
                bytes += w.len() * unit;
                frontier.push(w);
            }
        }
    }
    frontier.sort_unstable();

    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        let produced = exec.map(&frontier, |v| spanning_factors(m, v, max_len));
        let mut next = Vec::new();
        for w in produced.into_iter().flatten() {
            if !levels[w.len()].contains(&w) {
                bytes += w.len() * unit;
                if bytes > memory_budget {
                    return Err(Error::Resource { needed: bytes, budget: memory_budget });
                }
                levels[w.len()].insert(w.clone());
                next.push(w);
            }
        }
        next.sort_unstable();
        frontier = next;
    }
    Ok(FactorSet::finish(max_len, levels, true, rounds))
}

/// Factors of φ(v) of length ≤ `max_len` that start in φ(v₁) and end in φ(v_last).
fn spanning_factors(m: &Morphism, v: &[Letter], max_len: usize) -> Vec<Word> {
    let first = m.image(v[0]).len();
    let last = m.image(v[v.len() - 1]).len();
    let inner: usize = if v.len() >= 2 {
        v[1..v.len() - 1].iter().map(|l| m.image(*l).len()).sum()
    } else {
        0
    };
    let total = if v.len() == 1 { first } else { first + inner + last };
    // Shortest admissible factor: last letter of φ(v₁) through first of φ(v_last).
    if v.len() >= 2 && inner + 2 > max_len {
        return Vec::new();
    }
    let image = m.apply(v);
    let mut out = Vec::new();
    for i in 0..first {
        let lo = if v.len() == 1 { i + 1 } else { total - last + 1 };
        let hi = total.min(i + max_len);
        for j in lo.max(i + 1)..=hi {
            out.push(image[i..j].to_vec());
        }
    }
    out
}

fn erasing_fallback(m: &Morphism, max_len: usize, memory_budget: usize) -> Result<FactorSet> {
    // Roughly bound the prefix so that the factor table itself fits the budget.
    let per_position = max_len.saturating_mul(max_len + 1) / 2 * std::mem::size_of::<Letter>();
    let n = (memory_budget / per_position.max(1)).clamp(max_len.max(1), 1 << 16);
    let prefix = fixed_point_prefix(m, n, memory_budget)?;
    Ok(FactorSet::from_words(max_len, [prefix.letters().to_vec()], false))
}
