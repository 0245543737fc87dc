//! The analysis pipeline and its serializable report.

use morphic_core::algebra::{graded_dimension, hilbert_function};
use morphic_core::deciders::{analyze_properties, block_cover, Budgets, DeciderOutputs, PropertyReport, Verdict};
use morphic_core::graded::{
    cyclic_rotation_audit, graded_nilpotency_scan, leading_letter_check, lie_sweep, prefix_identity_check, s_set,
    window_check, NilpotencyScan,
};
use morphic_core::linalg::{char_poly, incidence_matrix, recurrence_from_charpoly, weight_sequence, Occurrence};
use morphic_core::word::{
    classify_shape, factor_closure, fixed_point_prefix, mortal_letters, FactorSet, WordPrefix,
};
use morphic_core::{Error, Exec, Letter, Morphism, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

/// Letters of the fixed point shown in the report.
const SHOWN_PREFIX: usize = 32;
/// Entries of S shown in the report.
const SHOWN_S: usize = 16;
/// Last index of the weight sequences.
const WEIGHT_TERMS: usize = 20;
/// Degree-sequence terms cross-checked by expansion.
const EXPAND_LETTERS: usize = 1 << 16;
/// Prefix-identity check covers n = 1..=PREFIX_IDENTITY_MAX.
const PREFIX_IDENTITY_MAX: usize = 5;

#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub prefix_letters: usize,
    pub max_len: usize,
    pub mh_bound: usize,
    pub k_max: usize,
    pub d_max: u64,
}

impl Config {
    pub fn budgets(&self) -> Budgets {
        Budgets {
            max_len: self.max_len,
            mh_bound: self.mh_bound,
            k_max: self.k_max,
            prefix_letters: self.prefix_letters,
            ..Budgets::default()
        }
    }
}

fn big(x: &BigInt) -> String {
    x.to_string()
}

fn bigs(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(big).collect()
}

fn names(m: &Morphism, mask: &[bool]) -> Vec<String> {
    m.letters().filter(|l| mask[l.index()]).map(|l| m.name(l).to_string()).collect()
}

#[derive(Serialize)]
pub struct Report {
    pub morphism: MorphismDoc,
    pub shape: ShapeDoc,
    pub matrix: MatrixDoc,
    pub word: WordDoc,
    pub complexity: ComplexityDoc,
    pub properties: PropertiesDoc,
    pub graded: Option<GradedDoc>,
    pub diagnostics: Option<DiagnosticsDoc>,
}

#[derive(Serialize)]
pub struct MorphismDoc {
    pub letters: Vec<String>,
    pub start: String,
    pub images: Vec<ImageDoc>,
}

#[derive(Serialize)]
pub struct ImageDoc {
    pub letter: String,
    pub image: String,
    pub degree: Option<u64>,
}

#[derive(Serialize)]
pub struct ShapeDoc {
    pub d_uniform: Option<usize>,
    pub erasing: bool,
    pub mortal: Vec<String>,
    pub growing: Vec<String>,
}

#[derive(Serialize)]
pub struct MatrixDoc {
    pub incidence: Vec<Vec<String>>,
    pub trace: String,
    pub column_sums: Vec<String>,
    pub char_poly: String,
    pub char_poly_coefficients: Vec<String>,
}

#[derive(Serialize)]
pub struct WordDoc {
    pub prefix: String,
    pub start_occurrence: OccurrenceDoc,
    pub primitive: VerdictDoc,
    pub eventually_periodic: VerdictDoc,
    pub uniformly_recurrent: VerdictDoc,
}

#[derive(Serialize)]
pub struct OccurrenceDoc {
    pub value: &'static str,
    pub level: usize,
    pub count: String,
}

#[derive(Serialize, Clone)]
pub struct VerdictDoc {
    pub value: &'static str,
    pub conditional: bool,
    pub certificate: CertificateDoc,
    pub bound: Option<usize>,
}

#[derive(Serialize, Clone)]
pub struct CertificateDoc {
    pub kind: &'static str,
    pub text: String,
}

impl VerdictDoc {
    pub fn new(m: &Morphism, v: &Verdict) -> Self {
        VerdictDoc {
            value: v.value.as_str(),
            conditional: v.conditional,
            certificate: CertificateDoc { kind: v.certificate.kind(), text: v.certificate.describe(m) },
            bound: v.bound,
        }
    }

    pub fn label(&self) -> String {
        if self.conditional && self.value != "Unknown" {
            format!("{} (conditional)", self.value)
        } else {
            self.value.to_string()
        }
    }
}

#[derive(Serialize)]
pub struct ComplexityDoc {
    pub max_len: usize,
    pub exact: bool,
    pub profile: Vec<usize>,
    pub class: &'static str,
    pub basis: &'static str,
    pub conditional: bool,
    pub hilbert: Vec<u64>,
}

#[derive(Serialize)]
pub struct PropertiesDoc {
    pub prime: VerdictDoc,
    pub semiprime: VerdictDoc,
    pub just_infinite: VerdictDoc,
    pub pi: VerdictDoc,
    pub noetherian: VerdictDoc,
    pub jacobson_trivial: VerdictDoc,
    pub primitive_algebra: VerdictDoc,
    pub gk_dimension: Option<u8>,
}

#[derive(Serialize)]
pub struct GradedDoc {
    pub s_prefix: Vec<u64>,
    pub chains: Vec<ChainDoc>,
    pub rotation_audit: RotationDoc,
    pub lie: LieDoc,
    pub graded_dims: Vec<u64>,
}

#[derive(Serialize)]
pub struct ChainDoc {
    pub d: u64,
    pub max_r: usize,
    pub by_level: Vec<(usize, usize)>,
    pub status: &'static str,
    pub witness: Vec<String>,
}

#[derive(Serialize)]
pub struct RotationDoc {
    pub max_len: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Serialize)]
pub struct LieDoc {
    pub max_len: usize,
    pub pass: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Serialize)]
pub struct DiagnosticsDoc {
    pub weights_direct: Vec<String>,
    pub weights_transposed: Vec<String>,
    pub expanded_checked: usize,
    pub convention_mismatch: bool,
    pub gcd_w4_w5: GcdDoc,
    pub recurrence: RecurrenceDoc,
    pub mod2: Mod2Doc,
}

#[derive(Serialize)]
pub struct GcdDoc {
    pub direct: Option<String>,
    pub transposed: Option<String>,
}

#[derive(Serialize)]
pub struct RecurrenceDoc {
    pub order: usize,
    pub coefficients: Vec<String>,
    pub holds_direct: bool,
    pub holds_transposed: bool,
    pub checked_through: usize,
}

#[derive(Serialize)]
pub struct Mod2Doc {
    pub coefficients: Vec<u8>,
    pub direct: Vec<u8>,
    pub transposed: Vec<u8>,
}

fn mod2(xs: &[BigInt]) -> Vec<u8> {
    xs.iter().map(|x| u8::from(x.is_odd())).collect()
}

/// Fixed-point levels used by the chain scan: the last three whose length
/// fits in the prefix budget.
pub fn scan_levels(prefix: &WordPrefix, budget: usize) -> Vec<usize> {
    let lens = prefix.level_lengths();
    let top = lens.iter().rposition(|&l| l <= budget).unwrap_or(0);
    (top.saturating_sub(2)..=top).collect()
}

pub struct Analysis {
    pub report: Report,
    pub any_unknown: bool,
}

pub fn analyze(m: &Morphism, cfg: &Config) -> Result<Analysis> {
    let budgets = cfg.budgets();
    let f = factor_closure(m, cfg.max_len, budgets.memory_budget)?;
    let (outputs, props) = analyze_properties(m, &f, &budgets)?;
    let prefix = fixed_point_prefix(m, cfg.prefix_letters, budgets.memory_budget)?;

    let shape = classify_shape(m);
    let mat = incidence_matrix(m);
    let p = char_poly(&mat)?;

    let report = Report {
        morphism: morphism_doc(m),
        shape: ShapeDoc {
            d_uniform: shape.d_uniform,
            erasing: shape.erasing,
            mortal: names(m, &mortal_letters(m)),
            growing: names(m, &shape.growing),
        },
        matrix: MatrixDoc {
            incidence: mat.matrix().rows().map(bigs).collect(),
            trace: big(&mat.matrix().trace()),
            column_sums: bigs(&mat.matrix().column_sums()),
            char_poly: p.to_string(),
            char_poly_coefficients: bigs(p.coeffs()),
        },
        word: word_doc(m, &prefix, &outputs),
        complexity: complexity_doc(&f, &outputs)?,
        properties: properties_doc(m, &props),
        graded: match m.grading() {
            Some(_) => Some(graded_doc(m, &f, &prefix, cfg)?),
            None => None,
        },
        diagnostics: match m.grading() {
            Some(_) => Some(diagnostics_doc(m, &p)?),
            None => None,
        },
    };
    Ok(Analysis { report, any_unknown: props.any_unknown() })
}

pub fn morphism_doc(m: &Morphism) -> MorphismDoc {
    MorphismDoc {
        letters: m.names().to_vec(),
        start: m.name(m.start()).to_string(),
        images: m
            .letters()
            .map(|l| ImageDoc {
                letter: m.name(l).to_string(),
                image: m.render(m.image(l)),
                degree: m.grading().map(|g| g[l.index()]),
            })
            .collect(),
    }
}

fn word_doc(m: &Morphism, prefix: &WordPrefix, d: &DeciderOutputs) -> WordDoc {
    let shown = &prefix.letters()[..prefix.len().min(SHOWN_PREFIX)];
    WordDoc {
        prefix: m.render(shown),
        start_occurrence: OccurrenceDoc {
            value: match d.start_occurrence.occurrence {
                Occurrence::Zero => "zero",
                Occurrence::ExactlyOnce => "exactly_once",
                Occurrence::AtLeastTwice => "at_least_twice",
            },
            level: d.start_occurrence.level,
            count: big(&d.start_occurrence.exact_count),
        },
        primitive: VerdictDoc::new(m, &d.primitive),
        eventually_periodic: VerdictDoc::new(m, &d.periodicity),
        uniformly_recurrent: VerdictDoc::new(m, &d.uniform_recurrence),
    }
}

fn complexity_doc(f: &FactorSet, d: &DeciderOutputs) -> Result<ComplexityDoc> {
    let hilbert = if f.is_exact() {
        (0..=f.max_len()).map(|n| hilbert_function(f, n)).collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    Ok(ComplexityDoc {
        max_len: f.max_len(),
        exact: f.is_exact(),
        profile: f.complexity_profile(),
        class: d.complexity.class.label(),
        basis: d.complexity.basis.as_str(),
        conditional: d.complexity.conditional,
        hilbert,
    })
}

fn properties_doc(m: &Morphism, r: &PropertyReport) -> PropertiesDoc {
    let v = |x: &Verdict| VerdictDoc::new(m, x);
    PropertiesDoc {
        prime: v(&r.prime),
        semiprime: v(&r.semiprime),
        just_infinite: v(&r.just_infinite),
        pi: v(&r.pi),
        noetherian: v(&r.noetherian),
        jacobson_trivial: v(&r.jacobson_trivial),
        primitive_algebra: v(&r.primitive_algebra),
        gk_dimension: r.gk_dimension,
    }
}

fn render_pieces(m: &Morphism, pieces: &[&[Letter]]) -> Vec<String> {
    pieces.iter().map(|p| m.render(p)).collect()
}

fn chain_docs(m: &Morphism, scan: &NilpotencyScan, prefix: &WordPrefix) -> Vec<ChainDoc> {
    scan.rows
        .iter()
        .map(|row| ChainDoc {
            d: row.degree,
            max_r: row.by_level.last().map_or(0, |x| x.1),
            by_level: row.by_level.clone(),
            status: row.status.as_str(),
            witness: render_pieces(m, &row.witness.pieces(prefix.letters())),
        })
        .collect()
}

fn graded_doc(m: &Morphism, f: &FactorSet, prefix: &WordPrefix, cfg: &Config) -> Result<GradedDoc> {
    let grading = m.grading().ok_or(Error::MissingGrading)?;
    let shown = &prefix.letters()[..prefix.len().min(SHOWN_S)];
    let levels = scan_levels(prefix, cfg.prefix_letters);
    let scan = graded_nilpotency_scan(m, cfg.d_max, &levels, cfg.budgets().memory_budget, Exec::default())?;
    let audit_len = f.max_len();
    let (rotation_audit, lie) = if f.is_exact() && audit_len >= 2 {
        let rot = cyclic_rotation_audit(f, audit_len, Exec::default())?;
        let sweep = lie_sweep(f, audit_len, Exec::default())?;
        (
            RotationDoc {
                max_len: audit_len,
                pass: rot.pass(),
                counterexample: rot.counterexample.map(|w| m.render(&w)),
            },
            LieDoc {
                max_len: audit_len,
                pass: sweep.pass(),
                checked: sweep.checked,
                failure: sweep.failure.map(|w| m.render(&w)),
            },
        )
    } else {
        (
            RotationDoc { max_len: 0, pass: false, counterexample: None },
            LieDoc { max_len: 0, pass: false, checked: 0, failure: None },
        )
    };
    let dim_bound = cfg.d_max.min(f.max_len() as u64);
    let graded_dims = if f.is_exact() {
        (0..=dim_bound).map(|d| graded_dimension(f, grading, d)).collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    Ok(GradedDoc {
        s_prefix: s_set(m, shown)?.sums().to_vec(),
        chains: chain_docs(m, &scan, prefix),
        rotation_audit,
        lie,
        graded_dims,
    })
}

fn diagnostics_doc(m: &Morphism, p: &morphic_core::linalg::CharPoly) -> Result<DiagnosticsDoc> {
    let w = weight_sequence(m, WEIGHT_TERMS, EXPAND_LETTERS)?;
    let (gd, gt) = match w.gcd_pair(4, 5) {
        Some((a, b)) => (Some(big(&a)), Some(big(&b))),
        None => (None, None),
    };
    let order = p.degree();
    let coefficients: Vec<BigInt> = p.coeffs()[1..].iter().map(|c| -c).collect();
    let holds = |seq: &[BigInt]| {
        recurrence_from_charpoly(p, &seq[..order.min(seq.len())])
            .map(|r| r.first_violation(seq).is_none())
            .unwrap_or(false)
    };
    Ok(DiagnosticsDoc {
        weights_direct: bigs(&w.direct),
        weights_transposed: bigs(&w.transposed),
        expanded_checked: w.expanded_checked,
        convention_mismatch: !w.conventions_agree(),
        gcd_w4_w5: GcdDoc { direct: gd, transposed: gt },
        recurrence: RecurrenceDoc {
            order,
            coefficients: bigs(&coefficients),
            holds_direct: holds(&w.direct),
            holds_transposed: holds(&w.transposed),
            checked_through: WEIGHT_TERMS,
        },
        mod2: Mod2Doc { coefficients: mod2(&coefficients), direct: mod2(&w.direct), transposed: mod2(&w.transposed) },
    })
}

#[derive(Serialize)]
pub struct AuditDoc {
    pub start: String,
    pub s_prefix: Vec<u64>,
    pub chains: Vec<ChainDoc>,
    pub rotation_audit: RotationDoc,
    pub lie: LieDoc,
    pub window: Option<WindowDoc>,
    pub leading_letter: Option<LeadingDoc>,
    pub prefix_identity: Vec<(usize, bool)>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct WindowDoc {
    pub letter: String,
    pub window: usize,
    pub prefix_len: usize,
    pub windows_checked: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_at: Option<usize>,
}

#[derive(Serialize)]
pub struct LeadingDoc {
    pub k: usize,
    pub letter: String,
    pub failures: Vec<String>,
}

/// Graded audit: S, chains, rotations, Lie sweep, window, leading-letter and
/// prefix-identity checks.
pub fn audit(m: &Morphism, cfg: &Config) -> Result<AuditDoc> {
    let budgets = cfg.budgets();
    let f = factor_closure(m, cfg.max_len, budgets.memory_budget)?;
    if !f.is_exact() {
        return Err(Error::Contract("the audit needs an exact factor set (non-erasing morphism)".into()));
    }
    let prefix = fixed_point_prefix(m, cfg.prefix_letters, budgets.memory_budget)?;
    let graded = graded_doc(m, &f, &prefix, cfg)?;
    let b = m.start();

    let cover = block_cover(m, cfg.k_max, cfg.prefix_letters)?;
    let (window, leading_letter) = match cover {
        Some(c) => {
            // Blocks of length ≤ max_block, each starting with b, tile w.
            let sample = &prefix.letters()[..prefix.len().min(cfg.prefix_letters)];
            let wc = window_check(sample, b, c.max_block)?;
            let failures = leading_letter_check(m, c.k, b).iter().map(|&l| m.name(l).to_string()).collect();
            (
                Some(WindowDoc {
                    letter: m.name(b).to_string(),
                    window: wc.window,
                    prefix_len: sample.len(),
                    windows_checked: wc.windows_checked,
                    pass: wc.pass(),
                    failure_at: wc.failure_at,
                }),
                Some(LeadingDoc { k: c.k, letter: m.name(b).to_string(), failures }),
            )
        }
        None => (None, None),
    };
    let identity: Vec<(usize, bool)> = prefix_identity_check(m, PREFIX_IDENTITY_MAX, budgets.memory_budget)?
        .into_iter()
        .map(|p| (p.n, p.holds))
        .collect();

    let pass = graded.rotation_audit.pass
        && graded.lie.pass
        && window.as_ref().is_none_or(|w| w.pass)
        && leading_letter.as_ref().is_none_or(|l| l.failures.is_empty())
        && identity.iter().all(|&(_, h)| h);
    Ok(AuditDoc {
        start: m.name(b).to_string(),
        s_prefix: graded.s_prefix,
        chains: graded.chains,
        rotation_audit: graded.rotation_audit,
        lie: graded.lie,
        window,
        leading_letter,
        prefix_identity: identity,
        pass,
    })
}
