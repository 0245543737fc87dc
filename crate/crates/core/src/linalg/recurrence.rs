use num_bigint::BigInt;
use num_traits::Zero;

use super::charpoly::CharPoly;
use crate::error::{Error, Result};

/// s_n = c₁ s_{n−1} + ⋯ + c_r s_{n−r}, together with its initial terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRecurrence {
    coefficients: Vec<BigInt>,
    initial: Vec<BigInt>,
}

impl LinearRecurrence {
    pub fn new(coefficients: Vec<BigInt>, initial: Vec<BigInt>) -> Result<Self> {
        if initial.len() < coefficients.len() {
            return Err(Error::Contract(format!(
                "order {} recurrence needs {} initial terms, got {}",
                coefficients.len(),
                coefficients.len(),
                initial.len()
            )));
        }
        let rec = LinearRecurrence { coefficients, initial };
        if let Some(index) = rec.first_violation(&rec.initial) {
            return Err(Error::RecurrenceMismatch { index });
        }
        Ok(rec)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    /// c₁, …, c_r.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn initial(&self) -> &[BigInt] {
        &self.initial
    }

    fn next_from(&self, terms: &[BigInt]) -> BigInt {
        let n = terms.len();
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| c * &terms[n - 1 - k])
            .sum()
    }

    /// First index `n ≥ order` where `seq` breaks the recurrence.
    pub fn first_violation(&self, seq: &[BigInt]) -> Option<usize> {
        let r = self.order();
        (r..seq.len()).find(|&n| self.next_from(&seq[..n]) != seq[n])
    }

    /// The first `count` terms of the sequence.
    pub fn terms(&self, count: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self.initial.iter().take(count).cloned().collect();
        while out.len() < count {
            let next = self.next_from(&out);
            out.push(next);
        }
        out
    }

    pub fn term(&self, n: usize) -> BigInt {
        self.terms(n + 1).pop().expect("nonempty")
    }
}

/// Recurrence with coefficients read off a characteristic polynomial.
///
/// Any sequence of the form uᵀMⁿv satisfies it for n ≥ deg(p); `initial` is
/// validated and a failure carries the first failing index.
pub fn recurrence_from_charpoly(p: &CharPoly, initial: &[BigInt]) -> Result<LinearRecurrence> {
    let coefficients = p.coeffs()[1..].iter().map(|c| -c).collect();
    LinearRecurrence::new(coefficients, initial.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> CharPoly {
        CharPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn fibonacci_numbers() {
        let r = recurrence_from_charpoly(&poly(&[1, -1, -1]), &big(&[1, 1])).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.term(10), BigInt::from(89));
    }

    #[test]
    fn constant_sequence() {
        let r = recurrence_from_charpoly(&poly(&[1, -1]), &big(&[7])).unwrap();
        assert_eq!(r.terms(5), big(&[7; 5]));
    }

    #[test]
    fn bad_initial_terms() {
        let e = recurrence_from_charpoly(&poly(&[1, -1, -1]), &big(&[1, 1, 2, 3, 6, 9])).unwrap_err();
        assert_eq!(e, Error::RecurrenceMismatch { index: 4 });
        assert!(recurrence_from_charpoly(&poly(&[1, -1, -1]), &big(&[1])).is_err());
    }
}
