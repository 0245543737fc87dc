use super::{require_prolongable, Letter, Morphism, Word};
use crate::error::{Error, Result};

/// Default memory budget for prefix and factor computations: 512 MiB.
pub const DEFAULT_MEMORY_BUDGET: usize = 512 << 20;

/// A prefix of the fixed point φ^ω(b).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordPrefix {
    letters: Word,
    /// `level_lengths[k] = |φᵏ(b)|` for every fully contained level `k`.
    level_lengths: Vec<usize>,
}

impl WordPrefix {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest `n` with φⁿ(b) fully contained.
    pub fn generation_level(&self) -> usize {
        self.level_lengths.len() - 1
    }

    pub fn level_lengths(&self) -> &[usize] {
        &self.level_lengths
    }

    /// φᵏ(b), if fully contained.
    pub fn level(&self, k: usize) -> Option<&[Letter]> {
        self.level_lengths.get(k).map(|&n| &self.letters[..n])
    }

    /// Always true: prefixes are only built from the fixed point.
    pub fn is_prefix_of_fixed_point(&self) -> bool {
        true
    }
}

/// Returns at least the first `n` letters of φ^ω(b).
///
/// Built incrementally: φᵏ⁺¹(b) = φᵏ(b)·φ(φᵏ(b)[|φᵏ⁻¹(b)|..]), so letters are
/// only ever appended.
pub fn fixed_point_prefix(m: &Morphism, n: usize, memory_budget: usize) -> Result<WordPrefix> {
    require_prolongable(m)?;
    let unit = std::mem::size_of::<Letter>();
    let needed = n.saturating_add(m.max_image_len()).saturating_mul(unit);
    if needed > memory_budget {
        return Err(Error::Resource { needed, budget: memory_budget });
    }
    let b = m.start();
    let mut letters = vec![b];
    let mut level_lengths = vec![1];
    // Current level is letters[..level_end]; its new part starts at seg_start.
    let mut seg_start = 0;
    let mut level_end = 1;
    let mut cursor = 0;
    while letters.len() < n {
        if cursor == level_end {
            level_lengths.push(letters.len());
            seg_start = level_end;
            level_end = letters.len();
            cursor = seg_start;
        }
        let l = letters[cursor];
        if seg_start == 0 && cursor == 0 {
            letters.extend_from_slice(&m.image(l)[1..]);
        } else {
            letters.extend_from_slice(m.image(l));
        }
        cursor += 1;
    }
    if cursor == level_end && letters.len() > level_end {
        level_lengths.push(letters.len());
    }
    Ok(WordPrefix { letters, level_lengths })
}

/// Prefix containing φᵏ(b) for every `k ≤ level`.
pub(crate) fn prefix_through_level(
    m: &Morphism,
    level: usize,
    memory_budget: usize,
) -> Result<WordPrefix> {
    let mut target = 1usize;
    loop {
        let p = fixed_point_prefix(m, target, memory_budget)?;
        if p.generation_level() >= level {
            return Ok(p);
        }
        target = p.len() * m.max_image_len().max(2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::fixtures::*;

    #[test]
    fn fibonacci_prefix() {
        let m = fibonacci();
        let p = fixed_point_prefix(&m, 8, DEFAULT_MEMORY_BUDGET).unwrap();
        assert_eq!(m.render(&p.letters()[..8]), "a b a a b a b a");
        assert_eq!(&p.level_lengths()[..5], &[1, 2, 3, 5, 8]);
    }

    #[test]
    fn paper12_prefix() {
        let m = paper12();
        let p = fixed_point_prefix(&m, 8, DEFAULT_MEMORY_BUDGET).unwrap();
        assert_eq!(m.render(&p.letters()[..8]), "x1 x2 y1 y2 x1 x3 y1 y3");
    }

    #[test]
    fn one_letter_is_start() {
        for m in [fibonacci(), thue_morse(), paper12(), ba_example()] {
            let p = fixed_point_prefix(&m, 1, DEFAULT_MEMORY_BUDGET).unwrap();
            assert_eq!(p.letters()[0], m.start());
        }
    }

    #[test]
    fn levels_match_naive_substitution() {
        let m = paper12();
        let p = prefix_through_level(&m, 5, DEFAULT_MEMORY_BUDGET).unwrap();
        for k in 0..=5 {
            assert_eq!(p.level(k).unwrap(), &m.apply_n(&[m.start()][..], k)[..]);
        }
    }

    #[test]
    fn slow_growth_terminates() {
        let m = Morphism::from_table(&[("a", "a b"), ("b", "b")], "a").unwrap();
        let p = fixed_point_prefix(&m, 100, DEFAULT_MEMORY_BUDGET).unwrap();
        assert_eq!(p.len(), 100);
        assert!(p.letters()[1..].iter().all(|&l| l == Letter(1)));
    }

    #[test]
    fn budget_is_enforced() {
        let e = fixed_point_prefix(&paper12(), 1 << 20, 1024).unwrap_err();
        assert!(matches!(e, Error::Resource { .. }));
    }

    #[test]
    fn erasing_prefix() {
        // a -> a b c, b -> ε, c -> c: w = a b c c c ...
        let m = Morphism::from_table(&[("a", "a b c"), ("b", ""), ("c", "c")], "a").unwrap();
        let p = fixed_point_prefix(&m, 6, DEFAULT_MEMORY_BUDGET).unwrap();
        assert_eq!(m.render(&p.letters()[..6]), "a b c c c c");
    }
}
