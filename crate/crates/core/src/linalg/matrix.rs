use std::ops::{Add, Index};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::{Letter, Morphism};

/// Dense square matrix of big integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix { dim, data: vec![BigInt::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> + '_ {
        self.data.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.dim, v.len());
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Binary exponentiation.
    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn column_sums(&self) -> Vec<BigInt> {
        (0..self.dim).map(|j| (0..self.dim).map(|i| self.get(i, j)).sum()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub(crate) fn add_scalar_identity(&mut self, c: &BigInt) {
        for i in 0..self.dim {
            self.data[i * self.dim + i] += c;
        }
    }
}

/// M(w): entry (i, j) counts occurrences of letter i in φ(letter j).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix(Matrix);

impl IncidenceMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    /// Support digraph: `succ[j]` lists the letters occurring in φ(j).
    pub fn successors(&self) -> Vec<Vec<usize>> {
        let n = self.dim();
        (0..n).map(|j| (0..n).filter(|&i| !self.0.get(i, j).is_zero()).collect()).collect()
    }
}

pub fn incidence_matrix(m: &Morphism) -> IncidenceMatrix {
    let n = m.alphabet_len();
    let mut mat = Matrix::zero(n);
    for (j, img) in m.images().iter().enumerate() {
        for l in img {
            mat.data[l.index() * n + j] += 1;
        }
    }
    IncidenceMatrix(mat)
}

/// θ(u): per-letter occurrence counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParikhVector(pub Vec<BigInt>);

impl ParikhVector {
    pub fn zero(dim: usize) -> Self {
        ParikhVector(vec![BigInt::zero(); dim])
    }

    pub fn of_word(dim: usize, u: &[Letter]) -> Self {
        let mut counts = vec![0u64; dim];
        for l in u {
            counts[l.index()] += 1;
        }
        ParikhVector(counts.into_iter().map(BigInt::from).collect())
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn dot(&self, weights: &[BigInt]) -> BigInt {
        self.0.iter().zip(weights).map(|(a, b)| a * b).sum()
    }
}

impl Index<usize> for ParikhVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl Add for &ParikhVector {
    type Output = ParikhVector;
    fn add(self, rhs: &ParikhVector) -> ParikhVector {
        ParikhVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

pub fn parikh(m: &Morphism, u: &[Letter]) -> Result<ParikhVector> {
    if let Some(l) = u.iter().find(|l| l.index() >= m.alphabet_len()) {
        return Err(Error::Contract(format!("letter id {} is not in the alphabet", l.0)));
    }
    Ok(ParikhVector::of_word(m.alphabet_len(), u))
}

/// θ(φⁿ(u)) = Mⁿ θ(u), by square-and-multiply.
pub fn iterate_parikh(mat: &IncidenceMatrix, u: &[Letter], n: u64) -> Result<ParikhVector> {
    if let Some(l) = u.iter().find(|l| l.index() >= mat.dim()) {
        return Err(Error::Contract(format!("letter id {} is not in the alphabet", l.0)));
    }
    let theta = ParikhVector::of_word(mat.dim(), u);
    Ok(ParikhVector(mat.0.pow(n).mul_vec(&theta.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::fixtures::*;

    fn ints(v: &ParikhVector) -> Vec<i64> {
        v.0.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn fibonacci_matrix() {
        let m = incidence_matrix(&fibonacci());
        assert_eq!(m.matrix(), &Matrix::from_rows(&[vec![1, 1], vec![1, 0]]));
    }

    #[test]
    fn paper12_first_column() {
        let p = paper12();
        let m = incidence_matrix(&p);
        let ones: Vec<&str> = (0..12)
            .filter(|&i| !m.matrix().get(i, 0).is_zero())
            .map(|i| p.names()[i].as_str())
            .collect();
        assert_eq!(ones, ["x1", "x2", "y1", "y2"]);
        assert!(m.matrix().column_sums().iter().all(|s| *s == BigInt::from(4)));
    }

    #[test]
    fn identity_morphism_matrix() {
        let id = Morphism::from_table(&[("a", "a"), ("b", "b")], "a").unwrap();
        assert_eq!(incidence_matrix(&id).matrix(), &Matrix::identity(2));
    }

    #[test]
    fn parikh_examples() {
        let f = fibonacci();
        assert_eq!(ints(&parikh(&f, &[]).unwrap()), [0, 0]);
        assert_eq!(ints(&parikh(&f, &f.parse_word("a b a a b").unwrap()).unwrap()), [3, 2]);
        let p = paper12();
        let x1 = p.letter("x1").unwrap();
        let v = ints(&parikh(&p, p.image(x1)).unwrap());
        assert_eq!(v, [1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0]);
        assert!(parikh(&f, &[Letter(7)]).is_err());
    }

    #[test]
    fn iterate_examples() {
        let f = fibonacci();
        let mf = incidence_matrix(&f);
        let a = [f.start()];
        assert_eq!(ints(&iterate_parikh(&mf, &a, 2).unwrap()), [2, 1]);
        assert_eq!(ints(&iterate_parikh(&mf, &a, 0).unwrap()), [1, 0]);
        let p = paper12();
        let mp = incidence_matrix(&p);
        let v = iterate_parikh(&mp, &[p.start()], 2).unwrap();
        assert_eq!(v.total(), BigInt::from(16));
        assert_eq!(v[0], BigInt::from(2));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let m = incidence_matrix(&paper12());
        let mut acc = Matrix::identity(12);
        for e in 0..9u64 {
            assert_eq!(m.matrix().pow(e), acc);
            acc = acc.mul(m.matrix());
        }
    }
}
