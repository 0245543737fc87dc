use num_integer::Integer;

use super::{Budgets, Certificate, Verdict};
use crate::error::{Error, Result};
use crate::word::{fixed_point_prefix, FactorSet, Letter, Morphism, Word};

/// Eventual periodicity of φ^ω(b).
///
/// If p(n) ≤ n for some n ≤ the Morse–Hedlund bound the word is eventually
/// periodic; a candidate (u, v) is read off a prefix and confirmed by checking
/// that u·v^ω is a fixed point of φ beginning with b (the prolongable fixed
/// point is unique). If p(n) ≥ n + 1 throughout, the answer is a conditional No.
pub fn decide_eventual_periodicity(m: &Morphism, f: &FactorSet, budget: &Budgets) -> Result<Verdict> {
    let bound = budget.mh_bound.min(f.max_len());
    if bound == 0 {
        return Ok(Verdict::unknown(0));
    }
    let profile = f.complexity_profile();
    let Some(n) = (1..=bound).find(|&n| profile[n] <= n) else {
        return Ok(Verdict::no(Certificate::ComplexityAboveDiagonal { bound }).conditional_on(bound));
    };

    let window = (4 * n + 16).min(budget.prefix_letters.max(4 * n + 4));
    let prefix = fixed_point_prefix(m, window, budget.memory_budget)?;
    let letters = &prefix.letters()[..window];
    let candidate = extract_candidate(letters, n);
    let checked = candidate
        .as_ref()
        .and_then(|(u, v)| verify_fixed_point(m, u, v).map(|len| (u, v, len)))
        .filter(|(u, v, _)| reproduces(letters, u, v));
    match checked {
        Some((u, v, verified_len)) => Ok(Verdict::yes(Certificate::Periodic {
            preperiod: u.clone(),
            period: v.clone(),
            mh_length: n,
            verified_len,
        })),
        None if f.is_exact() => Err(Error::Invariant(format!(
            "p({n}) ≤ {n} but no periodic fixed point was confirmed"
        ))),
        None => Ok(Verdict::unknown(bound)),
    }
}

/// Smallest period q ≤ n (then shortest preperiod ≤ n) consistent with `w`.
fn extract_candidate(w: &[Letter], n: usize) -> Option<(Word, Word)> {
    (1..=n.min(w.len() / 2)).find_map(|q| {
        let last_mismatch = (0..w.len() - q).rev().find(|&i| w[i] != w[i + q]);
        let s = last_mismatch.map_or(0, |i| i + 1);
        (s <= n).then(|| (w[..s].to_vec(), w[s..s + q].to_vec()))
    })
}

fn letter_at(u: &[Letter], v: &[Letter], i: usize) -> Letter {
    if i < u.len() {
        u[i]
    } else {
        v[(i - u.len()) % v.len()]
    }
}

/// Checks φ(u·v^ω) = u·v^ω and that the word starts with the start letter.
/// Both sides are eventually periodic, so agreement on
/// max(|u|, |φ(u)|) + lcm(|v|, |φ(v)|) + |v| letters proves equality.
/// Returns the number of letters compared.
pub(crate) fn verify_fixed_point(m: &Morphism, u: &[Letter], v: &[Letter]) -> Option<usize> {
    if v.is_empty() || letter_at(u, v, 0) != m.start() {
        return None;
    }
    let fu = m.apply(u);
    let fv = m.apply(v);
    if fv.is_empty() {
        return None;
    }
    let len = u.len().max(fu.len()) + v.len().lcm(&fv.len()) + v.len();
    (0..len).all(|i| letter_at(u, v, i) == letter_at(&fu, &fv, i)).then_some(len)
}

fn reproduces(w: &[Letter], u: &[Letter], v: &[Letter]) -> bool {
    w.iter().enumerate().all(|(i, &l)| letter_at(u, v, i) == l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deciders::Truth;
    use crate::word::factor_closure;
    use crate::word::fixtures::*;

    fn run(m: &Morphism, budget: &Budgets) -> Verdict {
        let f = factor_closure(m, budget.max_len, budget.memory_budget).unwrap();
        decide_eventual_periodicity(m, &f, budget).unwrap()
    }

    fn parts(m: &Morphism, v: &Verdict) -> (String, String) {
        match &v.certificate {
            Certificate::Periodic { preperiod, period, .. } => (m.render(preperiod), m.render(period)),
            other => panic!("expected periodic certificate, got {other:?}"),
        }
    }

    #[test]
    fn periodic_ab_certificate() {
        let m = periodic_ab();
        let v = run(&m, &Budgets::default());
        assert!(v.is_yes() && !v.conditional);
        assert_eq!(parts(&m, &v), ("ε".into(), "a b".into()));
    }

    #[test]
    fn ba_example_tail() {
        let m = ba_example();
        let v = run(&m, &Budgets::default());
        assert!(v.is_yes());
        assert_eq!(parts(&m, &v), ("b".into(), "a".into()));
    }

    #[test]
    fn fibonacci_is_conditionally_aperiodic() {
        let v = run(&fibonacci(), &Budgets::default());
        assert_eq!(v.value, Truth::No);
        assert!(v.conditional);
        assert_eq!(v.bound, Some(64));
    }

    #[test]
    fn longer_period() {
        let m = Morphism::from_table(&[("a", "a b c"), ("b", "a b c"), ("c", "a b c")], "a").unwrap();
        let v = run(&m, &Budgets::default());
        assert_eq!(parts(&m, &v), ("ε".into(), "a b c".into()));
        let m = Morphism::from_table(&[("s", "s a b"), ("a", "b a"), ("b", "a b")], "s").unwrap();
        let v = run(&m, &Budgets::default());
        assert!(v.is_no(), "s followed by a Thue–Morse tail");
    }

    #[test]
    fn verification_rejects_wrong_candidates() {
        let m = periodic_ab();
        let a = m.letter("a").unwrap();
        let b = m.letter("b").unwrap();
        assert!(verify_fixed_point(&m, &[], &[a, b]).is_some());
        assert!(verify_fixed_point(&m, &[], &[a]).is_none());
        assert!(verify_fixed_point(&m, &[], &[b, a]).is_none());
        assert!(verify_fixed_point(&m, &[a, b], &[a, b]).is_some());
    }
}
