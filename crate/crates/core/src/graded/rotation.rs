use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::word::{FactorSet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationAudit {
    pub max_len: usize,
    /// `(length, factors checked)` for every length audited.
    pub per_length: Vec<(usize, usize)>,
    /// A factor all of whose rotations are factors.
    pub counterexample: Option<Word>,
}

impl RotationAudit {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Some nontrivial rotation of `v` is absent from `f`; returns the shift.
pub(crate) fn absent_rotation(f: &FactorSet, v: &[Letter]) -> Option<usize> {
    let mut buf = Vec::with_capacity(v.len());
    (1..v.len()).find(|&k| {
        buf.clear();
        buf.extend_from_slice(&v[k..]);
        buf.extend_from_slice(&v[..k]);
        !f.contains(&buf)
    })
}

/// Checks that every factor of length 2..=`max_len` has a rotation that is not
/// a factor. Stops at the first length with a counterexample.
pub fn cyclic_rotation_audit(f: &FactorSet, max_len: usize, exec: Exec) -> Result<RotationAudit> {
    if max_len < 2 {
        return Err(Error::Contract("rotation audit needs max_len ≥ 2".into()));
    }
    if max_len > f.max_len() {
        return Err(Error::Contract(format!(
            "rotation audit to length {max_len} needs factors to length {max_len}, have {}",
            f.max_len()
        )));
    }
    if !f.is_exact() {
        return Err(Error::Contract("rotation audit needs an exact factor set".into()));
    }
    let mut per_length = Vec::new();
    for len in 2..=max_len {
        let words = f.of_len(len);
        per_length.push((len, words.len()));
        let bad = exec.find_first(words, |v| absent_rotation(f, v).is_none().then(|| v.clone()));
        if bad.is_some() {
            return Ok(RotationAudit { max_len, per_length, counterexample: bad });
        }
    }
    Ok(RotationAudit { max_len, per_length, counterexample: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::fixtures::*;
    use crate::word::{factor_closure, DEFAULT_MEMORY_BUDGET};

    #[test]
    fn paper12_named_words() {
        let m = paper12();
        let f = factor_closure(&m, 4, DEFAULT_MEMORY_BUDGET).unwrap();
        let x1x2 = m.parse_word("x1 x2").unwrap();
        assert_eq!(absent_rotation(&f, &x1x2), Some(1));
        let x3y2 = m.parse_word("x3 y2").unwrap();
        assert!(f.contains(&x3y2));
        assert!(!f.contains(&m.parse_word("y2 x3").unwrap()));
        assert_eq!(absent_rotation(&f, &x3y2), Some(1));
    }

    #[test]
    fn paper12_passes() {
        let f = factor_closure(&paper12(), 12, DEFAULT_MEMORY_BUDGET).unwrap();
        let audit = cyclic_rotation_audit(&f, 12, Exec::default()).unwrap();
        assert!(audit.pass());
        assert_eq!(audit.per_length.len(), 11);
    }

    #[test]
    fn periodic_fails_at_two() {
        let m = periodic_ab();
        let f = factor_closure(&m, 6, DEFAULT_MEMORY_BUDGET).unwrap();
        let audit = cyclic_rotation_audit(&f, 6, Exec::default()).unwrap();
        assert_eq!(audit.per_length.last().unwrap().0, 2);
        assert_eq!(audit.counterexample.map(|w| m.render(&w)), Some("a b".to_string()));
    }

    #[test]
    fn preconditions() {
        let f = factor_closure(&paper12(), 4, DEFAULT_MEMORY_BUDGET).unwrap();
        assert!(cyclic_rotation_audit(&f, 1, Exec::default()).is_err());
        assert!(cyclic_rotation_audit(&f, 5, Exec::default()).is_err());
    }
}
