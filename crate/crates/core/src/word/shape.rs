use super::{mortal_letters, Morphism};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeRecord {
    /// `Some(d)` iff every image has length `d`.
    pub d_uniform: Option<usize>,
    pub erasing: bool,
    /// `growing[a]` iff |φⁿ(a)| → ∞.
    pub growing: Vec<bool>,
}

impl ShapeRecord {
    pub fn all_growing(&self) -> bool {
        self.growing.iter().all(|&g| g)
    }
}

/// Uniformity, erasure and per-letter growth.
///
/// A letter is growing iff, following immortal letters through images, it
/// reaches a letter that lies on a cycle and whose image holds at least two
/// immortal letters. Otherwise every reachable cycle is a plain permutation
/// cycle and lengths stay bounded.
pub fn classify_shape(m: &Morphism) -> ShapeRecord {
    let n = m.alphabet_len();
    let lens: Vec<usize> = m.images().iter().map(Vec::len).collect();
    let d_uniform = lens.first().copied().filter(|&d| lens.iter().all(|&l| l == d));
    let erasing = lens.contains(&0);

    let mortal = mortal_letters(m);
    // Immortal support digraph: a -> c when immortal c occurs in φ(a).
    let succ: Vec<Vec<usize>> = m
        .images()
        .iter()
        .map(|img| {
            let mut s: Vec<usize> =
                img.iter().map(|l| l.index()).filter(|&c| !mortal[c]).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    let immortal_count: Vec<usize> = m
        .images()
        .iter()
        .map(|img| img.iter().filter(|l| !mortal[l.index()]).count())
        .collect();
    let reach = reachability(&succ);
    let on_cycle: Vec<bool> = (0..n).map(|c| reach[c][c]).collect();
    let pumping: Vec<bool> = (0..n).map(|c| on_cycle[c] && immortal_count[c] >= 2).collect();
    let growing = (0..n)
        .map(|a| !mortal[a] && (pumping[a] || (0..n).any(|c| reach[a][c] && pumping[c])))
        .collect();
    ShapeRecord { d_uniform, erasing, growing }
}

/// `r[a][c]` iff there is a path of length ≥ 1 from `a` to `c`.
pub(crate) fn reachability(succ: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let n = succ.len();
    (0..n)
        .map(|a| {
            let mut seen = vec![false; n];
            let mut stack: Vec<usize> = succ[a].clone();
            while let Some(c) = stack.pop() {
                if !seen[c] {
                    seen[c] = true;
                    stack.extend(succ[c].iter().copied().filter(|&d| !seen[d]));
                }
            }
            seen
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::fixtures::*;

    #[test]
    fn paper12_shape() {
        let s = classify_shape(&paper12());
        assert_eq!(s.d_uniform, Some(4));
        assert!(!s.erasing);
        assert!(s.all_growing());
    }

    #[test]
    fn fibonacci_shape() {
        let s = classify_shape(&fibonacci());
        assert_eq!(s.d_uniform, None);
        assert!(!s.erasing);
        assert!(s.all_growing());
    }

    #[test]
    fn fixed_letter_is_bounded() {
        let m = Morphism::from_table(&[("a", "a b"), ("b", "b")], "a").unwrap();
        let s = classify_shape(&m);
        assert_eq!(s.growing, [true, false]);
    }

    #[test]
    fn growth_agrees_with_iterated_lengths() {
        let tables: &[&[(&str, &str)]] = &[
            &[("a", "a b"), ("b", "c"), ("c", "b")],
            &[("a", "a b"), ("b", "c"), ("c", "b d"), ("d", "")],
            &[("a", "a b"), ("b", "c"), ("c", "b d"), ("d", "d")],
            &[("a", "b"), ("b", "c"), ("c", "")],
            &[("a", "a a"), ("b", "a")],
        ];
        for t in tables {
            let m = Morphism::from_table(t, "a").unwrap();
            let s = classify_shape(&m);
            for l in m.letters() {
                let small = m.apply_n(&[l], 12).len();
                let big = m.apply_n(&[l], 24).len();
                assert_eq!(s.growing[l.index()], big > small, "{t:?} letter {}", m.name(l));
            }
        }
    }
}
