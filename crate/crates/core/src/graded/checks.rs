use crate::error::{Error, Result};
use crate::word::{fixed_point_prefix, Letter, Morphism};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowCheck {
    pub window: usize,
    pub windows_checked: usize,
    /// Start of the first window missing the letter.
    pub failure_at: Option<usize>,
}

impl WindowCheck {
    pub fn pass(&self) -> bool {
        self.failure_at.is_none()
    }
}

/// Checks that every `window`-letter block of `prefix` contains `letter`.
pub fn window_check(prefix: &[Letter], letter: Letter, window: usize) -> Result<WindowCheck> {
    if window == 0 {
        return Err(Error::Contract("window must be positive".into()));
    }
    if prefix.len() < window {
        return Ok(WindowCheck { window, windows_checked: 0, failure_at: None });
    }
    let windows_checked = prefix.len() - window + 1;
    // Gap scan: a window misses `letter` iff it fits between two occurrences.
    let mut last: Option<usize> = None;
    for (i, &l) in prefix.iter().enumerate() {
        if l == letter {
            last = Some(i);
        }
        if i + 1 >= window {
            let start = i + 1 - window;
            if last.is_none_or(|p| p < start) {
                return Ok(WindowCheck { window, windows_checked, failure_at: Some(start) });
            }
        }
    }
    Ok(WindowCheck { window, windows_checked, failure_at: None })
}

/// Letters `a` for which φⁿ(a) does not begin with `letter`.
pub fn leading_letter_check(m: &Morphism, n: usize, letter: Letter) -> Vec<Letter> {
    m.letters()
        .filter(|&a| m.apply_n(&[a], n).first() != Some(&letter))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefixIdentity {
    pub n: usize,
    pub holds: bool,
}

/// Whether φⁿ⁺¹(b)·φⁿ(b) is a prefix of the fixed point, for n = 1..=`n_max`.
pub fn prefix_identity_check(m: &Morphism, n_max: usize, memory_budget: usize) -> Result<Vec<PrefixIdentity>> {
    let b = [m.start()];
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let small = m.apply_n(&b, n);
        let big = m.apply(&small);
        let w = fixed_point_prefix(m, big.len() + small.len(), memory_budget)?;
        let letters = w.letters();
        let holds = letters.len() >= big.len() + small.len()
            && letters[..big.len()] == big[..]
            && letters[big.len()..big.len() + small.len()] == small[..];
        out.push(PrefixIdentity { n, holds });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::fixtures::*;
    use crate::word::DEFAULT_MEMORY_BUDGET;

    #[test]
    fn paper12_windows_of_16() {
        let m = paper12();
        let x1 = m.start();
        let w = m.apply_n(&[x1], 6);
        let c = window_check(&w, x1, 16).unwrap();
        assert!(c.pass());
        assert_eq!(c.windows_checked, w.len() - 15);
    }

    #[test]
    fn window_failure_reported() {
        let m = fibonacci();
        let w = m.apply_n(&[m.start()], 6);
        let b = m.letter("b").unwrap();
        let c = window_check(&w, b, 2).unwrap();
        assert_eq!(c.failure_at, Some(2));
        assert!(window_check(&w, b, 3).unwrap().pass());
    }

    #[test]
    fn paper12_heads() {
        let m = paper12();
        assert!(leading_letter_check(&m, 2, m.start()).is_empty());
        assert!(!leading_letter_check(&m, 1, m.start()).is_empty());
    }

    #[test]
    fn paper12_prefix_identity() {
        let m = paper12();
        let r = prefix_identity_check(&m, 5, DEFAULT_MEMORY_BUDGET).unwrap();
        assert_eq!(r.len(), 5);
        assert!(r.iter().all(|p| p.holds));
    }

    #[test]
    fn thue_morse_identity_fails() {
        let m = thue_morse();
        let r = prefix_identity_check(&m, 4, DEFAULT_MEMORY_BUDGET).unwrap();
        assert!(r.iter().any(|p| !p.holds));
    }
}
