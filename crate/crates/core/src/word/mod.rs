//! Morphisms of free monoids, fixed-point prefixes and factor sets.

mod factors;
mod parse;
pub(crate) mod prefix;
mod shape;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub use factors::{factor_closure, factor_closure_with, ComplexityValue, FactorSet};
pub use parse::parse_morphism;
pub use prefix::{fixed_point_prefix, WordPrefix, DEFAULT_MEMORY_BUDGET};
pub use shape::{classify_shape, ShapeRecord};

/// Index of a letter in its morphism's alphabet (declaration order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

impl Letter {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

pub type Word = Vec<Letter>;

/// A monoid endomorphism on a finite alphabet with a designated start letter.
///
/// Construction validates totality and degrees but not prolongability, so
/// degenerate morphisms can still be inspected by [`mortal_letters`] and
/// [`is_prolongable`]. [`parse_morphism`] additionally rejects start letters
/// that are not prolongable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    names: Vec<String>,
    index: HashMap<String, Letter>,
    images: Vec<Word>,
    start: Letter,
    grading: Option<Vec<u64>>,
}

impl Morphism {
    pub fn new(
        names: Vec<String>,
        images: Vec<Word>,
        start: Letter,
        grading: Option<Vec<u64>>,
    ) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Validation("empty alphabet".into()));
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::Validation("alphabet too large".into()));
        }
        if images.len() != names.len() {
            return Err(Error::Validation(format!(
                "{} letters but {} images",
                names.len(),
                images.len()
            )));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), Letter(i as u16)).is_some() {
                return Err(Error::Validation(format!("duplicate letter `{name}`")));
            }
        }
        let m = names.len();
        if let Some(l) = images.iter().flatten().find(|l| l.index() >= m) {
            return Err(Error::Validation(format!("image uses undeclared letter id {}", l.0)));
        }
        if start.index() >= m {
            return Err(Error::Validation("start letter out of range".into()));
        }
        if let Some(g) = &grading {
            if g.len() != m {
                return Err(Error::Validation("grading does not cover the alphabet".into()));
            }
            if let Some(i) = g.iter().position(|&d| d == 0) {
                return Err(Error::Validation(format!("letter `{}` has degree 0", names[i])));
            }
        }
        Ok(Morphism { names, index, images, start, grading })
    }

    /// Builds a morphism from `(letter, image)` pairs, images written as
    /// whitespace-separated letter names. No grading is attached.
    pub fn from_table(table: &[(&str, &str)], start: &str) -> Result<Self> {
        let names: Vec<String> = table.iter().map(|(n, _)| n.to_string()).collect();
        let lookup: HashMap<&str, Letter> =
            table.iter().enumerate().map(|(i, (n, _))| (*n, Letter(i as u16))).collect();
        let images = table
            .iter()
            .map(|(_, img)| {
                img.split_whitespace()
                    .map(|t| {
                        lookup
                            .get(t)
                            .copied()
                            .ok_or_else(|| Error::Validation(format!("undeclared letter `{t}`")))
                    })
                    .collect::<Result<Word>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let start = *lookup
            .get(start)
            .ok_or_else(|| Error::Validation(format!("undeclared start letter `{start}`")))?;
        Morphism::new(names, images, start, None)
    }

    pub fn with_grading(self, grading: Vec<u64>) -> Result<Self> {
        Morphism::new(self.names, self.images, self.start, Some(grading))
    }

    pub fn alphabet_len(&self) -> usize {
        self.names.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(|i| Letter(i as u16))
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn image(&self, l: Letter) -> &[Letter] {
        &self.images[l.index()]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn start(&self) -> Letter {
        self.start
    }

    pub fn grading(&self) -> Option<&[u64]> {
        self.grading.as_deref()
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// φ(u).
    pub fn apply(&self, u: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(u.iter().map(|l| self.images[l.index()].len()).sum());
        for l in u {
            out.extend_from_slice(&self.images[l.index()]);
        }
        out
    }

    /// φⁿ(u) by naive repeated substitution.
    pub fn apply_n(&self, u: &[Letter], n: usize) -> Word {
        let mut w = u.to_vec();
        for _ in 0..n {
            w = self.apply(&w);
        }
        w
    }

    /// Grading degree of `u`; `None` when the morphism is ungraded.
    pub fn degree(&self, u: &[Letter]) -> Option<u64> {
        let g = self.grading.as_ref()?;
        Some(u.iter().map(|l| g[l.index()]).sum())
    }

    /// Parses whitespace-separated letter names.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|t| self.letter(t).ok_or_else(|| Error::Contract(format!("unknown letter `{t}`"))))
            .collect()
    }

    pub fn render(&self, u: &[Letter]) -> String {
        RenderedWord { morphism: self, word: u }.to_string()
    }
}

struct RenderedWord<'a> {
    morphism: &'a Morphism,
    word: &'a [Letter],
}

impl fmt::Display for RenderedWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("ε");
        }
        for (i, l) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.morphism.name(*l))?;
        }
        Ok(())
    }
}

/// Letters `a` with φʲ(a) = ε for some `j`.
///
/// Fixpoint of X₀ = {a : φ(a) = ε}, X_{k+1} = {a : every letter of φ(a) lies in X_k};
/// stabilizes within |Σ| rounds.
pub fn mortal_letters(m: &Morphism) -> Vec<bool> {
    let mut mortal = vec![false; m.alphabet_len()];
    loop {
        let next: Vec<bool> = m
            .images
            .iter()
            .map(|img| img.iter().all(|l| mortal[l.index()]))
            .collect();
        if next == mortal {
            return mortal;
        }
        mortal = next;
    }
}

/// φ(a) = a·x with `x` containing at least one immortal letter.
pub fn is_prolongable(m: &Morphism, a: Letter) -> bool {
    prolongability_failure(m, a).is_none()
}

pub(crate) fn prolongability_failure(m: &Morphism, a: Letter) -> Option<String> {
    let img = m.image(a);
    if img.first() != Some(&a) {
        return Some(format!("φ({0}) does not begin with {0}", m.name(a)));
    }
    let tail = &img[1..];
    if tail.is_empty() {
        return Some("tail x is empty".into());
    }
    let mortal = mortal_letters(m);
    if tail.iter().all(|l| mortal[l.index()]) {
        return Some("tail x consists of mortal letters only".into());
    }
    None
}

pub(crate) fn require_prolongable(m: &Morphism) -> Result<()> {
    match prolongability_failure(m, m.start()) {
        None => Ok(()),
        Some(reason) => Err(Error::NotProlongable { letter: m.name(m.start()).to_string(), reason }),
    }
}

/// Letters occurring in φ^ω(b): the closure of {b} under a ↦ letters(φ(a)).
pub fn occurring_letters(m: &Morphism) -> Result<Vec<bool>> {
    require_prolongable(m)?;
    Ok(reachable_from(m, m.start()))
}

/// Letters appearing in φⁿ(a) for some n ≥ 0.
pub(crate) fn reachable_from(m: &Morphism, a: Letter) -> Vec<bool> {
    let mut seen = vec![false; m.alphabet_len()];
    seen[a.index()] = true;
    let mut stack = vec![a];
    while let Some(c) = stack.pop() {
        for &l in m.image(c) {
            if !seen[l.index()] {
                seen[l.index()] = true;
                stack.push(l);
            }
        }
    }
    seen
}
