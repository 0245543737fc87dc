use super::sset::{s_set, PositionDegreeSet};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::word::prefix::prefix_through_level;
use crate::word::{Letter, Morphism};

/// A factor u₁⋯u_r of the prefix whose pieces all have degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWitness {
    pub degree: u64,
    /// Prefix indices i₀ < i₁ < ⋯ < i_r with s_{i_{k+1}} − s_{i_k} = degree.
    pub breakpoints: Vec<usize>,
}

impl ChainWitness {
    /// Number of pieces r.
    pub fn len(&self) -> usize {
        self.breakpoints.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> usize {
        self.breakpoints.first().copied().unwrap_or(0)
    }

    pub fn pieces<'a>(&self, prefix: &'a [Letter]) -> Vec<&'a [Letter]> {
        self.breakpoints.windows(2).map(|w| &prefix[w[0]..w[1]]).collect()
    }

    /// The concatenation u₁⋯u_r.
    pub fn span<'a>(&self, prefix: &'a [Letter]) -> &'a [Letter] {
        match (self.breakpoints.first(), self.breakpoints.last()) {
            (Some(&a), Some(&b)) => &prefix[a..b],
            _ => &[],
        }
    }
}

/// Longest run a, a+d, …, a+rd inside the position-degree set, by a
/// two-pointer sweep from the right. Ties go to the leftmost start.
pub fn max_homogeneous_chain(s: &PositionDegreeSet, d: u64) -> Result<ChainWitness> {
    if d == 0 {
        return Err(Error::Contract("chain degree must be positive".into()));
    }
    let sums = s.sums();
    let n = sums.len();
    let mut run = vec![0u32; n];
    let mut j = n - 1;
    let mut best = (0u32, 0usize);
    for i in (0..n).rev() {
        let target = sums[i].saturating_add(d);
        while j > i && sums[j] > target {
            j -= 1;
        }
        if j > i && sums[j] == target {
            run[i] = run[j] + 1;
        }
        if run[i] >= best.0 {
            best = (run[i], i);
        }
    }
    let (r, start) = best;
    let mut breakpoints = vec![start];
    let mut at = start;
    for _ in 0..r {
        at = s.index_of(sums[at] + d).expect("chain link present");
        breakpoints.push(at);
    }
    Ok(ChainWitness { degree: d, breakpoints })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainStatus {
    /// Equal maxima at the last two levels: evidence of nilpotency, not a proof.
    Stabilized,
    Growing,
    /// Constant grading with `d` a multiple of the common degree; chains are
    /// limited only by the sample length.
    UnboundedWithinSample,
}

impl ChainStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ChainStatus::Stabilized => "stabilized",
            ChainStatus::Growing => "growing",
            ChainStatus::UnboundedWithinSample => "unbounded within sample",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub degree: u64,
    /// `(level, max chain length within φ^level(b))`.
    pub by_level: Vec<(usize, usize)>,
    pub status: ChainStatus,
    /// Maximal witness at the last level.
    pub witness: ChainWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyScan {
    pub levels: Vec<usize>,
    pub rows: Vec<ScanRow>,
    /// `Some(g)` when every letter has degree `g`.
    pub constant_degree: Option<u64>,
}

/// Max chain length for each degree 1..=`d_max` within each φ^level(b).
pub fn graded_nilpotency_scan(
    m: &Morphism,
    d_max: u64,
    levels: &[usize],
    memory_budget: usize,
    exec: Exec,
) -> Result<NilpotencyScan> {
    let grading = m.grading().ok_or(Error::MissingGrading)?;
    let constant_degree = grading.first().copied().filter(|g| grading.iter().all(|x| x == g));
    let mut levels = levels.to_vec();
    levels.sort_unstable();
    levels.dedup();
    if d_max == 0 || levels.is_empty() {
        return Ok(NilpotencyScan { levels, rows: Vec::new(), constant_degree });
    }
    let top = *levels.last().unwrap();
    let prefix = prefix_through_level(m, top, memory_budget)?;
    let full = s_set(m, prefix.level(top).expect("level generated"))?;
    let sets: Vec<PositionDegreeSet> =
        levels.iter().map(|&k| full.truncated(prefix.level_lengths()[k])).collect();

    let degrees: Vec<u64> = (1..=d_max).collect();
    let rows = exec.map(&degrees, |&d| -> Result<ScanRow> {
        let mut by_level = Vec::with_capacity(levels.len());
        let mut witness = None;
        for (k, s) in levels.iter().zip(&sets) {
            let w = max_homogeneous_chain(s, d)?;
            by_level.push((*k, w.len()));
            witness = Some(w);
        }
        let status = match constant_degree {
            Some(g) if d % g == 0 => ChainStatus::UnboundedWithinSample,
            _ => {
                let tail: Vec<usize> = by_level.iter().rev().take(2).map(|x| x.1).collect();
                if tail.len() == 2 && tail[0] == tail[1] {
                    ChainStatus::Stabilized
                } else {
                    ChainStatus::Growing
                }
            }
        };
        Ok(ScanRow { degree: d, by_level, status, witness: witness.expect("levels nonempty") })
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(NilpotencyScan { levels, rows, constant_degree })
}
