use super::{decide_primitive, Budgets, Certificate, Verdict};
use crate::error::Result;
use crate::linalg::{incidence_matrix, occurrence_decider, Occurrence};
use crate::word::{classify_shape, occurring_letters, reachable_from, Morphism};

/// A power k for which every φᵏ(a) (a occurring) begins with the start letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockCover {
    pub k: usize,
    pub max_block: usize,
}

/// Smallest k ≤ `k_max` such that φᵏ(a) begins with b for every occurring a.
/// Then w = φᵏ(w) is a concatenation of blocks that each start with b.
pub fn block_cover(m: &Morphism, k_max: usize, max_letters: usize) -> Result<Option<BlockCover>> {
    let occ = occurring_letters(m)?;
    let letters: Vec<_> = m.letters().filter(|l| occ[l.index()]).collect();
    let mut blocks: Vec<Vec<_>> = letters.iter().map(|&a| vec![a]).collect();
    for k in 1..=k_max {
        for block in &mut blocks {
            *block = m.apply(block);
        }
        let max_block = blocks.iter().map(Vec::len).max().unwrap_or(0);
        if max_block > max_letters {
            return Ok(None);
        }
        if blocks.iter().all(|blk| blk.first() == Some(&m.start())) {
            return Ok(Some(BlockCover { k, max_block }));
        }
    }
    Ok(None)
}

/// Uniform recurrence of φ^ω(b).
///
/// Yes when the morphism is primitive on the occurring letters, or when a
/// block cover exists (b then recurs with bounded gaps, and so does every
/// φⁿ(b)). No when b occurs only once, or when some occurring letter grows
/// without ever producing b. Unknown otherwise.
pub fn decide_uniform_recurrence(m: &Morphism, budget: &Budgets) -> Result<Verdict> {
    let mat = incidence_matrix(m);
    if decide_primitive(&mat, m)?.is_yes() {
        return Ok(Verdict::yes(Certificate::Primitive));
    }
    if let Some(BlockCover { k, max_block }) = block_cover(m, budget.k_max, budget.prefix_letters)? {
        return Ok(Verdict::yes(Certificate::BlockCover { k, max_block }));
    }
    let b = m.start();
    if occurrence_decider(m, b)?.occurrence == Occurrence::ExactlyOnce {
        return Ok(Verdict::no(Certificate::StartOccursOnce { letter: b }));
    }
    let occ = occurring_letters(m)?;
    let shape = classify_shape(m);
    if let Some(a) = m
        .letters()
        .find(|a| occ[a.index()] && shape.growing[a.index()] && !reachable_from(m, *a)[b.index()])
    {
        return Ok(Verdict::no(Certificate::StartFreeGrowth { letter: a }));
    }
    Ok(Verdict::unknown(budget.k_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deciders::Truth;
    use crate::word::fixtures::*;
    use crate::word::{fixed_point_prefix, DEFAULT_MEMORY_BUDGET};

    #[test]
    fn paper12_block_cover() {
        let m = paper12();
        assert_eq!(block_cover(&m, 6, 1 << 16).unwrap(), Some(BlockCover { k: 2, max_block: 16 }));
        assert!(decide_uniform_recurrence(&m, &Budgets::default()).unwrap().is_yes());
    }

    #[test]
    fn ba_example_not_recurrent() {
        let m = ba_example();
        let v = decide_uniform_recurrence(&m, &Budgets::default()).unwrap();
        assert_eq!(v.value, Truth::No);
        assert_eq!(v.certificate, Certificate::StartOccursOnce { letter: m.start() });
    }

    #[test]
    fn thue_morse_via_primitivity() {
        let v = decide_uniform_recurrence(&thue_morse(), &Budgets::default()).unwrap();
        assert_eq!(v.certificate, Certificate::Primitive);
    }

    #[test]
    fn start_free_growth() {
        // a -> a b a, b -> b b: b never produces a, and a recurs (occurs often).
        let m = Morphism::from_table(&[("a", "a b a"), ("b", "b b")], "a").unwrap();
        let v = decide_uniform_recurrence(&m, &Budgets::default()).unwrap();
        assert_eq!(v.certificate, Certificate::StartFreeGrowth { letter: m.letter("b").unwrap() });
    }

    #[test]
    fn unknown_when_nothing_fires() {
        // a -> a a b, b -> b: b is bounded and does not produce a; a recurs.
        let m = Morphism::from_table(&[("a", "a a b"), ("b", "b")], "a").unwrap();
        let v = decide_uniform_recurrence(&m, &Budgets::default()).unwrap();
        assert_eq!(v.value, Truth::Unknown);
    }

    /// Every window of 2·max_block letters contains the start letter.
    #[test]
    fn block_cover_windows_scan() {
        for m in [paper12(), periodic_ab(), fibonacci(), thue_morse()] {
            let Some(cover) = block_cover(&m, 6, 1 << 16).unwrap() else { continue };
            let window = 2 * cover.max_block;
            let p = fixed_point_prefix(&m, 4 * cover.max_block * 16, DEFAULT_MEMORY_BUDGET).unwrap();
            for w in p.letters().windows(window) {
                assert!(w.contains(&m.start()));
            }
        }
    }

    use crate::word::Morphism;
}
