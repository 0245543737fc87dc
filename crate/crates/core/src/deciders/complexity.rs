use super::{decide_primitive, Truth, Verdict};
use crate::error::Result;
use crate::linalg::incidence_matrix;
use crate::word::{classify_shape, occurring_letters, FactorSet, Morphism};

/// The five possible growth rates of p_w(n) for a pure morphic word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComplexityClass {
    Constant,
    Linear,
    NLogLogN,
    NLogN,
    Quadratic,
    Unknown,
}

impl ComplexityClass {
    pub fn label(self) -> &'static str {
        match self {
            ComplexityClass::Constant => "O(1)",
            ComplexityClass::Linear => "Θ(n)",
            ComplexityClass::NLogLogN => "Θ(n log log n)",
            ComplexityClass::NLogN => "Θ(n log n)",
            ComplexityClass::Quadratic => "Θ(n²)",
            ComplexityClass::Unknown => "Unknown",
        }
    }

    /// GK dimension of A_w, from dim(Vⁿ) = Σ_{j≤n} p_w(j).
    pub fn gk_dimension(self) -> Option<u8> {
        match self {
            ComplexityClass::Constant => Some(1),
            ComplexityClass::Linear | ComplexityClass::NLogLogN | ComplexityClass::NLogN => Some(2),
            ComplexityClass::Quadratic => Some(3),
            ComplexityClass::Unknown => None,
        }
    }

    fn shape(self, n: f64) -> f64 {
        match self {
            ComplexityClass::Linear => n,
            ComplexityClass::NLogLogN => n * n.ln().ln().max(f64::MIN_POSITIVE),
            ComplexityClass::NLogN => n * n.ln(),
            ComplexityClass::Quadratic => n * n,
            ComplexityClass::Constant | ComplexityClass::Unknown => 1.0,
        }
    }
}

/// How the class was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassBasis {
    /// Eventual periodicity certified.
    Periodic,
    /// Aperiodic and primitive or d-uniform, hence linear.
    Structural,
    /// Best regression fit of the exact complexity profile. Not a proof.
    Heuristic,
    Undetermined,
}

impl ClassBasis {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassBasis::Periodic => "periodic",
            ClassBasis::Structural => "structural",
            ClassBasis::Heuristic => "heuristic",
            ClassBasis::Undetermined => "undetermined",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexityClassification {
    pub class: ComplexityClass,
    pub gk_dimension: Option<u8>,
    pub basis: ClassBasis,
    pub conditional: bool,
}

/// Growth class of p_w(n) and the resulting GK dimension.
pub fn classify_complexity(
    m: &Morphism,
    f: &FactorSet,
    ep: &Verdict,
) -> Result<ComplexityClassification> {
    let done = |class: ComplexityClass, basis, conditional| ComplexityClassification {
        class,
        gk_dimension: class.gk_dimension(),
        basis,
        conditional,
    };
    match ep.value {
        Truth::Yes => return Ok(done(ComplexityClass::Constant, ClassBasis::Periodic, ep.conditional)),
        Truth::Unknown => return Ok(done(ComplexityClass::Unknown, ClassBasis::Undetermined, false)),
        Truth::No => {}
    }
    let shape = classify_shape(m);
    let uniform = shape.d_uniform.is_some_and(|d| d >= 2);
    if uniform || decide_primitive(&incidence_matrix(m), m)?.is_yes() {
        return Ok(done(ComplexityClass::Linear, ClassBasis::Structural, ep.conditional));
    }
    // Quadratic complexity needs bounded letters in w.
    let occ = occurring_letters(m)?;
    let all_growing = m.letters().filter(|l| occ[l.index()]).all(|l| shape.growing[l.index()]);
    let mut candidates = vec![ComplexityClass::Linear, ComplexityClass::NLogLogN, ComplexityClass::NLogN];
    if !all_growing {
        candidates.push(ComplexityClass::Quadratic);
    }
    let class = best_fit(&f.complexity_profile(), &candidates);
    Ok(done(class, ClassBasis::Heuristic, true))
}

/// The candidate whose ratio p(n)/g(n) is flattest in log-log scale over the
/// upper three quarters of the profile.
fn best_fit(profile: &[usize], candidates: &[ComplexityClass]) -> ComplexityClass {
    let hi = profile.len().saturating_sub(1);
    let lo = (hi / 4).max(4);
    if hi < lo + 2 {
        return ComplexityClass::Unknown;
    }
    let xs: Vec<f64> = (lo..=hi).map(|n| (n as f64).ln()).collect();
    let slope = |class: ComplexityClass| {
        let ys: Vec<f64> = (lo..=hi)
            .map(|n| (profile[n] as f64).ln() - class.shape(n as f64).ln())
            .collect();
        let k = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / k;
        let my = ys.iter().sum::<f64>() / k;
        let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let var: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
        (cov / var).abs()
    };
    candidates
        .iter()
        .copied()
        .min_by(|a, b| slope(*a).total_cmp(&slope(*b)))
        .unwrap_or(ComplexityClass::Unknown)
}
