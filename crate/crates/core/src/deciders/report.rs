use super::{
    classify_complexity, decide_eventual_periodicity, decide_primitive, decide_uniform_recurrence,
    Budgets, Certificate, ComplexityClass, ComplexityClassification, Truth, Verdict,
};
use crate::error::{Error, Result};
use crate::linalg::{incidence_matrix, occurrence_decider, Occurrence, OccurrenceWitness};
use crate::word::{FactorSet, Morphism};

/// Everything the ring-property dictionary reads from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeciderOutputs {
    pub start_occurrence: OccurrenceWitness,
    pub primitive: Verdict,
    pub periodicity: Verdict,
    pub uniform_recurrence: Verdict,
    pub complexity: ComplexityClassification,
}

/// Ring-theoretic verdicts for A_w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub prime: Verdict,
    pub semiprime: Verdict,
    pub just_infinite: Verdict,
    pub pi: Verdict,
    pub noetherian: Verdict,
    pub jacobson_trivial: Verdict,
    pub primitive_algebra: Verdict,
    pub gk_dimension: Option<u8>,
    pub complexity_class: ComplexityClass,
}

impl PropertyReport {
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 7] {
        [
            ("prime", &self.prime),
            ("semiprime", &self.semiprime),
            ("just_infinite", &self.just_infinite),
            ("pi", &self.pi),
            ("noetherian", &self.noetherian),
            ("jacobson_trivial", &self.jacobson_trivial),
            ("primitive_algebra", &self.primitive_algebra),
        ]
    }

    pub fn any_unknown(&self) -> bool {
        self.verdicts().iter().any(|(_, v)| v.value == Truth::Unknown) || self.gk_dimension.is_none()
    }
}

/// Runs every decider the report needs.
pub fn analyze_properties(
    m: &Morphism,
    f: &FactorSet,
    budget: &Budgets,
) -> Result<(DeciderOutputs, PropertyReport)> {
    let mat = incidence_matrix(m);
    let periodicity = decide_eventual_periodicity(m, f, budget)?;
    let outputs = DeciderOutputs {
        start_occurrence: occurrence_decider(m, m.start())?,
        primitive: decide_primitive(&mat, m)?,
        uniform_recurrence: decide_uniform_recurrence(m, budget)?,
        complexity: classify_complexity(m, f, &periodicity)?,
        periodicity,
    };
    let report = ring_property_report(m, &outputs)?;
    Ok((outputs, report))
}

/// Maps word properties to algebra properties:
/// prime ⇔ semiprime ⇔ b occurs at least twice; just infinite ⇔ uniformly
/// recurrent; PI ⇔ noetherian ⇔ eventually periodic. A uniformly recurrent
/// aperiodic word gives a trivial Jacobson radical, and prime + not PI +
/// trivial radical gives a primitive algebra.
pub fn ring_property_report(m: &Morphism, d: &DeciderOutputs) -> Result<PropertyReport> {
    if d.start_occurrence.letter != m.start() {
        return Err(Error::Contract("occurrence decider must be run for the start letter".into()));
    }
    let prime = match d.start_occurrence.occurrence {
        Occurrence::AtLeastTwice => Verdict::yes(Certificate::StartOccursTwice {
            level: d.start_occurrence.level,
            count: d.start_occurrence.exact_count.clone(),
        }),
        Occurrence::ExactlyOnce => Verdict::no(Certificate::StartOccursOnce { letter: m.start() }),
        Occurrence::Zero => {
            return Err(Error::Invariant("start letter reported absent from its own fixed point".into()))
        }
    };
    let ur = d.uniform_recurrence.clone();
    let ep = d.periodicity.clone();

    let jacobson_trivial = if ur.is_yes() && ep.is_no() {
        inherit(
            Verdict::yes(Certificate::Implied { rule: "uniformly recurrent and not eventually periodic" }),
            &[&ur, &ep],
        )
    } else {
        Verdict::not_covered()
    };
    let primitive_algebra = if prime.is_yes() && ep.is_no() && jacobson_trivial.is_yes() {
        inherit(
            Verdict::yes(Certificate::Implied { rule: "prime, not PI, trivial Jacobson radical" }),
            &[&prime, &ep, &jacobson_trivial],
        )
    } else {
        Verdict::not_covered()
    };

    let report = PropertyReport {
        semiprime: prime.clone(),
        prime,
        just_infinite: ur,
        noetherian: ep.clone(),
        pi: ep,
        jacobson_trivial,
        primitive_algebra,
        gk_dimension: d.complexity.gk_dimension,
        complexity_class: d.complexity.class,
    };
    debug_assert_eq!(report.gk_dimension == Some(1), report.complexity_class == ComplexityClass::Constant);
    Ok(report)
}

/// Takes the weakest certainty among `inputs`.
fn inherit(mut v: Verdict, inputs: &[&Verdict]) -> Verdict {
    v.conditional = inputs.iter().any(|i| i.conditional);
    v.bound = inputs.iter().filter_map(|i| i.bound).max();
    v
}
