use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IncidenceMatrix, Matrix};
use crate::error::{Error, Result};

/// Monic characteristic polynomial, coefficients from the leading term down.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// `coeffs[0]` must be 1; `coeffs[k]` multiplies x^(deg-k).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.first().map(One::is_one) != Some(true) {
            return Err(Error::Contract("characteristic polynomial must be monic".into()));
        }
        Ok(CharPoly { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Highest degree first, leading 1 included.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// P(A) by Horner's scheme.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let mut acc = Matrix::zero(a.dim());
        for c in &self.coeffs {
            acc = acc.mul(a);
            acc.add_scalar_identity(c);
        }
        acc
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deg = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = deg - k;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if !mag.is_one() || p == 0 {
                write!(f, "{mag}")?;
            }
            match p {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{p}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// det(xI − M) by Faddeev–LeVerrier over the integers.
///
/// Each step divides a trace by `k`; the division is exact in ℤ and a nonzero
/// remainder is reported as an invariant failure, as is a nonzero P(M).
pub fn char_poly(m: &IncidenceMatrix) -> Result<CharPoly> {
    let a = m.matrix();
    let n = a.dim();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigInt::one());
    // N_1 = I; coeff[k] = -tr(A N_k) / k; N_{k+1} = A N_k + coeff[k] I.
    let mut nk = Matrix::identity(n);
    for k in 1..=n {
        let mut ank = a.mul(&nk);
        let (q, r) = (-ank.trace()).div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::Invariant(format!("trace not divisible by {k} in char_poly")));
        }
        ank.add_scalar_identity(&q);
        coeffs.push(q);
        nk = ank;
    }
    let p = CharPoly { coeffs };
    if !p.eval_matrix(a).is_zero() {
        return Err(Error::Invariant("Cayley-Hamilton check failed".into()));
    }
    Ok(p)
}
