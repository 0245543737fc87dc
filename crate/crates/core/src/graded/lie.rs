use super::rotation::absent_rotation;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::word::{FactorSet, Letter, Word};

/// Bracket tree whose leaves are letters. At every internal node
/// `word = left·right` and `right·left` is not a factor, so the image of
/// `word` equals [left, right] in A_w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieTree {
    Leaf(Letter),
    Bracket { word: Word, left: Box<LieTree>, right: Box<LieTree> },
}

impl LieTree {
    pub fn word(&self) -> Word {
        match self {
            LieTree::Leaf(l) => vec![*l],
            LieTree::Bracket { word, .. } => word.clone(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            LieTree::Leaf(_) => 0,
            LieTree::Bracket { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    /// Renders as nested brackets, e.g. `[x1, [x2, y1]]`.
    pub fn render(&self, name: &dyn Fn(Letter) -> String) -> String {
        match self {
            LieTree::Leaf(l) => name(*l),
            LieTree::Bracket { left, right, .. } => {
                format!("[{}, {}]", left.render(name), right.render(name))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCertificate {
    pub tree: LieTree,
}

impl LieCertificate {
    /// Rechecks every node against `f`.
    pub fn verify(&self, f: &FactorSet) -> bool {
        fn check(t: &LieTree, f: &FactorSet) -> bool {
            match t {
                LieTree::Leaf(_) => true,
                LieTree::Bracket { word, left, right } => {
                    let (a, b) = (left.word(), right.word());
                    let joined: Word = a.iter().chain(&b).copied().collect();
                    let reversed: Word = b.iter().chain(&a).copied().collect();
                    joined == *word
                        && f.contains(word)
                        && !f.contains(&reversed)
                        && check(left, f)
                        && check(right, f)
                }
            }
        }
        check(&self.tree, f)
    }
}

fn decompose(f: &FactorSet, u: &[Letter]) -> Result<LieTree> {
    if u.len() == 1 {
        return Ok(LieTree::Leaf(u[0]));
    }
    // Shortest left part first.
    let k = absent_rotation(f, u).ok_or_else(|| Error::NoSplit(u.to_vec()))?;
    Ok(LieTree::Bracket {
        word: u.to_vec(),
        left: Box::new(decompose(f, &u[..k])?),
        right: Box::new(decompose(f, &u[k..])?),
    })
}

/// Writes the factor `u` as an iterated commutator of letters.
pub fn lie_decomposition(f: &FactorSet, u: &[Letter]) -> Result<LieCertificate> {
    if u.len() < 2 {
        return Err(Error::Contract("letters are generators; need |u| ≥ 2".into()));
    }
    if u.len() > f.max_len() || !f.is_exact() {
        return Err(Error::Contract("factor set must be exact to length |u|".into()));
    }
    if !f.contains(u) {
        return Err(Error::Contract("u is not a factor".into()));
    }
    Ok(LieCertificate { tree: decompose(f, u)? })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSweep {
    pub max_len: usize,
    pub checked: usize,
    pub failure: Option<Word>,
}

impl LieSweep {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

/// Decomposes every factor of length 2..=`max_len`, shortest first. Both
/// parts of a split are shorter factors, already decomposed earlier in the
/// sweep, so one split per word settles the whole tree.
pub fn lie_sweep(f: &FactorSet, max_len: usize, exec: Exec) -> Result<LieSweep> {
    if max_len > f.max_len() || !f.is_exact() {
        return Err(Error::Contract("factor set must be exact to the sweep length".into()));
    }
    let mut checked = 0;
    for len in 2..=max_len {
        let words = f.of_len(len);
        let bad = exec.find_first(words, |v| absent_rotation(f, v).is_none().then(|| v.clone()));
        if bad.is_some() {
            return Ok(LieSweep { max_len, checked, failure: bad });
        }
        checked += words.len();
    }
    Ok(LieSweep { max_len, checked, failure: None })
}
