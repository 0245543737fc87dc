//! Three-valued deciders for word properties and the ring-property dictionary.
//!
//! Every `Yes`/`No` carries a certificate that can be rechecked independently.
//! Verdicts resting on a bounded search are marked `conditional`.

mod complexity;
mod periodicity;
mod primitive;
mod report;
mod uniform;

use num_bigint::BigInt;

use crate::word::{Letter, Morphism, Word, DEFAULT_MEMORY_BUDGET};

pub use complexity::{classify_complexity, ClassBasis, ComplexityClass, ComplexityClassification};
pub use periodicity::decide_eventual_periodicity;
pub use primitive::decide_primitive;
pub use report::{analyze_properties, ring_property_report, DeciderOutputs, PropertyReport};
pub use uniform::{block_cover, decide_uniform_recurrence, BlockCover};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Truth {
    Yes,
    No,
    Unknown,
}

impl Truth {
    pub fn as_str(self) -> &'static str {
        match self {
            Truth::Yes => "Yes",
            Truth::No => "No",
            Truth::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The start letter occurs `count` times already in φ^level(b).
    StartOccursTwice { level: usize, count: BigInt },
    /// The start letter occurs exactly once, so `b u b` is never a factor and
    /// the image of `b` generates a nilpotent ideal.
    StartOccursOnce { letter: Letter },
    /// Every occurring letter produces the start letter within `to_start`
    /// iterations and the start letter produces every occurring letter within
    /// `from_start` iterations.
    Irreducible { to_start: usize, from_start: usize },
    /// `to` never appears in any φⁿ(`from`).
    Unreachable { from: Letter, to: Letter },
    /// w = preperiod · period^ω, checked to be a fixed point of φ over `verified_len` letters.
    Periodic { preperiod: Word, period: Word, mh_length: usize, verified_len: usize },
    /// p_w(n) ≥ n + 1 for every n ≤ `bound`.
    ComplexityAboveDiagonal { bound: usize },
    /// The morphism is primitive on the occurring letters.
    Primitive,
    /// Every φᵏ(a) begins with the start letter; blocks are at most `max_block` long.
    BlockCover { k: usize, max_block: usize },
    /// `letter` is growing and never produces the start letter.
    StartFreeGrowth { letter: Letter },
    /// Follows from other verdicts by the stated rule.
    Implied { rule: &'static str },
    /// Search exhausted without a decision.
    Exhausted { bound: usize },
    /// None of the encoded implications applies.
    NotCovered,
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::StartOccursTwice { .. } => "start_occurs_twice",
            Certificate::StartOccursOnce { .. } => "start_occurs_once",
            Certificate::Irreducible { .. } => "irreducible",
            Certificate::Unreachable { .. } => "unreachable",
            Certificate::Periodic { .. } => "periodic",
            Certificate::ComplexityAboveDiagonal { .. } => "complexity_above_diagonal",
            Certificate::Primitive => "primitive",
            Certificate::BlockCover { .. } => "block_cover",
            Certificate::StartFreeGrowth { .. } => "start_free_growth",
            Certificate::Implied { .. } => "implied",
            Certificate::Exhausted { .. } => "exhausted",
            Certificate::NotCovered => "not_covered",
        }
    }

    pub fn describe(&self, m: &Morphism) -> String {
        match self {
            Certificate::StartOccursTwice { level, count } => {
                format!("{} occurs {count} times in φ^{level}({0})", m.name(m.start()))
            }
            Certificate::StartOccursOnce { letter } => format!("{} occurs exactly once", m.name(*letter)),
            Certificate::Irreducible { to_start, from_start } => format!(
                "every letter reaches {0} within {to_start} steps; {0} reaches every letter within {from_start} steps",
                m.name(m.start())
            ),
            Certificate::Unreachable { from, to } => {
                format!("{} never occurs in any image of {}", m.name(*to), m.name(*from))
            }
            Certificate::Periodic { preperiod, period, mh_length, verified_len } => format!(
                "w = ({})({})^ω; p({mh_length}) ≤ {mh_length}; fixed-point check over {verified_len} letters",
                m.render(preperiod),
                m.render(period)
            ),
            Certificate::ComplexityAboveDiagonal { bound } => {
                format!("p(n) ≥ n+1 for all n ≤ {bound}")
            }
            Certificate::Primitive => "primitive morphism".to_string(),
            Certificate::BlockCover { k, max_block } => format!(
                "φ^{k}(a) begins with {} for every letter a; blocks ≤ {max_block} letters",
                m.name(m.start())
            ),
            Certificate::StartFreeGrowth { letter } => format!(
                "{} is growing and never produces {}",
                m.name(*letter),
                m.name(m.start())
            ),
            Certificate::Implied { rule } => (*rule).to_string(),
            Certificate::Exhausted { bound } => format!("undecided within bound {bound}"),
            Certificate::NotCovered => "no encoded implication applies".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: Truth,
    /// True when the verdict rests on a bounded search.
    pub conditional: bool,
    pub certificate: Certificate,
    pub bound: Option<usize>,
}

impl Verdict {
    pub fn yes(certificate: Certificate) -> Self {
        Verdict { value: Truth::Yes, conditional: false, certificate, bound: None }
    }

    pub fn no(certificate: Certificate) -> Self {
        Verdict { value: Truth::No, conditional: false, certificate, bound: None }
    }

    pub fn unknown(bound: usize) -> Self {
        Verdict {
            value: Truth::Unknown,
            conditional: false,
            certificate: Certificate::Exhausted { bound },
            bound: Some(bound),
        }
    }

    /// Unknown because the question lies outside the encoded rules.
    pub fn not_covered() -> Self {
        Verdict { value: Truth::Unknown, conditional: false, certificate: Certificate::NotCovered, bound: None }
    }

    pub fn conditional_on(mut self, bound: usize) -> Self {
        self.conditional = true;
        self.bound = Some(bound);
        self
    }

    pub fn is_yes(&self) -> bool {
        self.value == Truth::Yes
    }

    pub fn is_no(&self) -> bool {
        self.value == Truth::No
    }

    /// "Yes", "No (conditional)", …
    pub fn label(&self) -> String {
        if self.conditional && self.value != Truth::Unknown {
            format!("{} (conditional)", self.value.as_str())
        } else {
            self.value.as_str().to_string()
        }
    }
}

/// Search bounds shared by the deciders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Factor length bound L.
    pub max_len: usize,
    /// Largest n tested against p(n) ≤ n.
    pub mh_bound: usize,
    /// Largest power tried by the block-cover test.
    pub k_max: usize,
    /// Letters of the fixed point that may be generated.
    pub prefix_letters: usize,
    pub memory_budget: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_len: 64,
            mh_bound: 64,
            k_max: 6,
            prefix_letters: 1 << 16,
            memory_budget: DEFAULT_MEMORY_BUDGET,
        }
    }
}
