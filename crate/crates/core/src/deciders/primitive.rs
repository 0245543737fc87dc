use std::collections::VecDeque;

use super::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::linalg::IncidenceMatrix;
use crate::word::{occurring_letters, Letter, Morphism};

/// BFS distances (in iterations of φ) from `src` over the support digraph,
/// restricted to `keep`. Distance 0 for `src` itself.
fn distances(succ: &[Vec<usize>], keep: &[bool], src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; succ.len()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(c) = queue.pop_front() {
        let d = dist[c].unwrap();
        for &n in &succ[c] {
            if keep[n] && dist[n].is_none() {
                dist[n] = Some(d + 1);
                queue.push_back(n);
            }
        }
    }
    dist
}

/// Primitivity of φ on the letters occurring in w.
///
/// Decided as irreducibility of the support digraph (every occurring letter
/// reaches every other). The shortcut "every letter reaches b" is evaluated
/// too and must agree.
pub fn decide_primitive(mat: &IncidenceMatrix, m: &Morphism) -> Result<Verdict> {
    let occ = occurring_letters(m)?;
    let succ = mat.successors();
    let letters: Vec<usize> = (0..m.alphabet_len()).filter(|&i| occ[i]).collect();
    let b = m.start().index();

    let mut failure = None;
    'outer: for &a in &letters {
        let dist = distances(&succ, &occ, a);
        for &c in &letters {
            if dist[c].is_none() {
                failure = Some((a, c));
                break 'outer;
            }
        }
    }

    let from_start = distances(&succ, &occ, b);
    let mut to_start = 0;
    let mut reduced_ok = true;
    for &a in &letters {
        match distances(&succ, &occ, a)[b] {
            Some(d) => to_start = to_start.max(d),
            None => reduced_ok = false,
        }
    }
    if reduced_ok != failure.is_none() {
        return Err(Error::Invariant(
            "irreducibility and start-letter reachability disagree".into(),
        ));
    }
    Ok(match failure {
        None => Verdict::yes(Certificate::Irreducible {
            to_start,
            from_start: letters.iter().filter_map(|&c| from_start[c]).max().unwrap_or(0),
        }),
        Some((a, c)) => Verdict::no(Certificate::Unreachable {
            from: Letter(a as u16),
            to: Letter(c as u16),
        }),
    })
}
