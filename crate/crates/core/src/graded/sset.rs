use crate::error::{Error, Result};
use crate::word::{Letter, Morphism};

/// Partial degree sums s₀ = 0, s_i = s_{i−1} + deg(a_i) along a prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionDegreeSet {
    sums: Vec<u64>,
}

impl PositionDegreeSet {
    pub fn sums(&self) -> &[u64] {
        &self.sums
    }

    pub fn prefix_len(&self) -> usize {
        self.sums.len() - 1
    }

    pub fn contains(&self, value: u64) -> bool {
        self.sums.binary_search(&value).is_ok()
    }

    /// Prefix index `i` with s_i = `value`.
    pub fn index_of(&self, value: u64) -> Option<usize> {
        self.sums.binary_search(&value).ok()
    }

    /// The set for the first `len` letters.
    pub fn truncated(&self, len: usize) -> PositionDegreeSet {
        PositionDegreeSet { sums: self.sums[..=len.min(self.prefix_len())].to_vec() }
    }
}

/// Degrees are positive, so the sums are strictly increasing. Sums are kept
/// in `u64`; overflow is reported rather than wrapped.
pub fn s_set(m: &Morphism, prefix: &[Letter]) -> Result<PositionDegreeSet> {
    let grading = m.grading().ok_or(Error::MissingGrading)?;
    let mut sums = Vec::with_capacity(prefix.len() + 1);
    let mut acc = 0u64;
    sums.push(acc);
    for l in prefix {
        acc = acc
            .checked_add(grading[l.index()])
            .ok_or_else(|| Error::Contract("degree sum overflows u64".into()))?;
        sums.push(acc);
    }
    Ok(PositionDegreeSet { sums })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::fixtures::*;
    use crate::word::{fixed_point_prefix, DEFAULT_MEMORY_BUDGET};

    #[test]
    fn paper12_first_nine() {
        let m = paper12();
        let p = fixed_point_prefix(&m, 8, DEFAULT_MEMORY_BUDGET).unwrap();
        let s = s_set(&m, &p.letters()[..8]).unwrap();
        assert_eq!(s.sums(), &[0, 1, 3, 5, 7, 8, 10, 12, 14]);
    }

    #[test]
    fn unit_grading() {
        let m = fibonacci().with_grading(vec![1, 1]).unwrap();
        let p = fixed_point_prefix(&m, 20, DEFAULT_MEMORY_BUDGET).unwrap();
        let s = s_set(&m, &p.letters()[..20]).unwrap();
        assert_eq!(s.sums(), (0..=20).collect::<Vec<u64>>());
    }

    #[test]
    fn fibonacci_weighted() {
        let m = fibonacci().with_grading(vec![1, 2]).unwrap();
        let s = s_set(&m, &m.parse_word("a b a a b").unwrap()).unwrap();
        assert_eq!(s.sums(), &[0, 1, 3, 4, 5, 7]);
    }

    #[test]
    fn membership_matches_brute_force() {
        let m = paper12();
        let p = fixed_point_prefix(&m, 1000, DEFAULT_MEMORY_BUDGET).unwrap();
        let s = s_set(&m, &p.letters()[..1000]).unwrap();
        let g = m.grading().unwrap();
        let brute: std::collections::BTreeSet<u64> = (0..=1000)
            .map(|i| p.letters()[..i].iter().map(|l| g[l.index()]).sum())
            .collect();
        for v in 0..=*s.sums().last().unwrap() + 3 {
            assert_eq!(s.contains(v), brute.contains(&v), "{v}");
        }
    }

    #[test]
    fn ungraded() {
        assert_eq!(s_set(&fibonacci(), &[]).unwrap_err(), Error::MissingGrading);
    }
}
