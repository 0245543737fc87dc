//! The monomial algebra A_w = k⟨Σ⟩ / (words that are not factors of w), over ℚ.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::{FactorSet, Letter, Word};

/// A finite ℚ-linear combination of factors of w.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialElement {
    terms: BTreeMap<Word, BigRational>,
}

impl MonomialElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit, i.e. the empty word.
    pub fn one() -> Self {
        Self::from_word(Vec::new())
    }

    fn from_word(u: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(u, BigRational::one());
        MonomialElement { terms }
    }

    /// The image of `u` in A_w: `u` itself if it is a factor, otherwise zero.
    pub fn monomial(f: &FactorSet, u: &[Letter]) -> Result<Self> {
        Ok(if f.is_factor(u)? { Self::from_word(u.to_vec()) } else { Self::zero() })
    }

    /// Builds `Σ cᵢ uᵢ`, dropping words that vanish in A_w.
    pub fn from_terms<I>(f: &FactorSet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, BigRational)>,
    {
        let mut out = Self::zero();
        for (u, c) in terms {
            if f.is_factor(&u)? {
                out.add_term(u, c);
            }
        }
        Ok(out)
    }

    fn add_term(&mut self, u: Word, c: BigRational) {
        let slot = self.terms.entry(u.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&u);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, u: &[Letter]) -> BigRational {
        self.terms.get(u).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (u, c) in &other.terms {
            out.add_term(u.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(u, v)| (u.clone(), v * c)).collect();
        MonomialElement { terms }
    }

    /// Terms ordered by length, then canonical letter order.
    pub fn terms(&self) -> Vec<(&Word, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        v
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }
}

/// Product in A_w: bilinear extension of `u·v ↦ uv` if `uv` is a factor, else 0.
pub fn multiply(f: &FactorSet, x: &MonomialElement, y: &MonomialElement) -> Result<MonomialElement> {
    let mut out = MonomialElement::zero();
    for (u, a) in &x.terms {
        for (v, b) in &y.terms {
            if u.len() + v.len() > f.max_len() {
                return Err(Error::Contract(format!(
                    "product of length {} exceeds factor bound {}",
                    u.len() + v.len(),
                    f.max_len()
                )));
            }
            let mut uv = Vec::with_capacity(u.len() + v.len());
            uv.extend_from_slice(u);
            uv.extend_from_slice(v);
            if f.contains(&uv) {
                out.add_term(uv, a * b);
            }
        }
    }
    Ok(out)
}

fn require_exact(f: &FactorSet, n: usize) -> Result<()> {
    if n > f.max_len() || !f.is_exact() {
        return Err(Error::Contract(format!(
            "needs an exact factor set to length {n} (have {}, exact = {})",
            f.max_len(),
            f.is_exact()
        )));
    }
    Ok(())
}

/// dim Vⁿ = Σ_{j≤n} p_w(j) for V spanned by 1 and the letters.
pub fn hilbert_function(f: &FactorSet, n: usize) -> Result<u64> {
    require_exact(f, n)?;
    Ok((0..=n).map(|j| f.of_len(j).len() as u64).sum())
}

/// Number of factors of total degree `d` under `grading` (degrees ≥ 1).
pub fn graded_dimension(f: &FactorSet, grading: &[u64], d: u64) -> Result<u64> {
    if grading.contains(&0) {
        return Err(Error::Validation("grading degrees must be positive".into()));
    }
    // A degree-d word has at most d letters.
    let bound = usize::try_from(d).unwrap_or(usize::MAX);
    require_exact(f, bound)?;
    let count = (0..=bound)
        .flat_map(|len| f.of_len(len))
        .filter(|u| u.iter().map(|l| grading[l.index()]).sum::<u64>() == d)
        .count();
    Ok(count as u64)
}
