//! Dense matrices with exact entries.
//!
//! The generic arithmetic works over any [`Scalar`]; characteristic and
//! minimal polynomials are provided for integer matrices, where every
//! division in the Faddeev-LeVerrier recurrence is exact and asserted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::factor_over_q;
use crate::poly::{IntPoly, Poly};
use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(
            rows * cols,
            entries.len(),
            "entry count must equal rows*cols"
        );
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// All-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::one(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|a| a.clone() * c.clone())
                .collect(),
        }
    }

    pub fn trace(&self) -> T {
        let mut t = T::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t + self.get(i, i).clone();
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|c| c.is_zero())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Flattens row-major into a vector of length rows*cols.
    pub fn flatten(&self) -> Vec<T> {
        self.entries.clone()
    }
}

impl<T: Scalar> std::ops::Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        Matrix::mul(self, rhs)
    }
}

impl<T: Scalar> std::ops::Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        Matrix::add(self, rhs)
    }
}

impl<T: Scalar> std::ops::Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        Matrix::sub(self, rhs)
    }
}

impl<T: Scalar + std::fmt::Display> std::fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Matrices over arbitrary-precision integers.
pub type IntMatrix = Matrix<BigInt>;
/// Matrices over exact rationals.
pub type RatMatrix = Matrix<BigRational>;

impl IntMatrix {
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Matrix::new(
            rows,
            cols,
            entries.iter().map(|&e| BigInt::from(e)).collect(),
        )
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Characteristic polynomial `det(xI - M)`, monic of degree `n`,
    /// computed with the Faddeev-LeVerrier recurrence. Every division by
    /// the step index is exact over the integers and is asserted.
    pub fn charpoly(&self) -> Result<IntPoly> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(IntPoly::one());
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = self.clone();
        coeffs[n - 1] = -m.trace();
        for k in 2..=n {
            // m <- A * (m + c_{n-k+1} I)
            let mut shifted = m;
            for i in 0..n {
                let cur = shifted.get(i, i).clone();
                shifted.set(i, i, cur + coeffs[n - k + 1].clone());
            }
            m = self.mul(&shifted);
            let t = m.trace();
            let (q, r) = (-t).div_rem(&BigInt::from(k));
            assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
            coeffs[n - k] = q;
        }
        Ok(Poly::new(coeffs))
    }

    /// Evaluates an integer polynomial at this matrix (Horner).
    pub fn eval_poly(&self, p: &IntPoly) -> Result<IntMatrix> {
        let n = self.require_square()?;
        let mut acc = IntMatrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let cur = acc.get(i, i).clone();
                acc.set(i, i, cur + c.clone());
            }
        }
        Ok(acc)
    }

    /// Minimal polynomial: least-degree monic polynomial annihilating the
    /// matrix. Obtained from the distinct irreducible factors of the
    /// characteristic polynomial, raising multiplicities factor by factor
    /// until annihilation.
    pub fn minpoly(&self) -> Result<IntPoly> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(IntPoly::one());
        }
        let cp = self.charpoly()?;
        let factored = factor_over_q(&cp)?;
        let factors: Vec<(IntPoly, usize)> = factored.factors().to_vec();
        // Try the squarefree product first; most inputs are diagonalizable.
        let squarefree: IntPoly = factors
            .iter()
            .fold(IntPoly::one(), |acc, (f, _)| acc.mul(f));
        if self.eval_poly(&squarefree)?.is_zero() {
            return Ok(squarefree);
        }
        // The minimal exponent of each factor is independent of the others,
        // so search it with the remaining factors at full multiplicity.
        let mut exponents = vec![1usize; factors.len()];
        for (i, (f, max_mult)) in factors.iter().enumerate() {
            if *max_mult == 1 {
                continue;
            }
            for e in 1..=*max_mult {
                let mut candidate = f.pow(e);
                for (j, (g, m)) in factors.iter().enumerate() {
                    if j != i {
                        candidate = candidate.mul(&g.pow(*m));
                    }
                }
                if self.eval_poly(&candidate)?.is_zero() {
                    exponents[i] = e;
                    break;
                }
                exponents[i] = e + 1;
            }
        }
        let min = factors
            .iter()
            .zip(&exponents)
            .fold(IntPoly::one(), |acc, ((f, _), e)| acc.mul(&f.pow(*e)));
        debug_assert!(self.eval_poly(&min)?.is_zero());
        Ok(min)
    }
}

impl RatMatrix {
    pub fn from_flat(n: usize, flat: Vec<BigRational>) -> Self {
        Matrix::new(n, n, flat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic3() -> IntMatrix {
        // row i has a 1 in column i+1 mod 3
        IntMatrix::from_i64(3, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0])
    }

    #[test]
    fn charpoly_zero_1x1() {
        let m = IntMatrix::from_i64(1, 1, &[0]);
        assert_eq!(m.charpoly().unwrap(), IntPoly::from_i64(&[0, 1]));
    }

    #[test]
    fn charpoly_cyclic_permutation() {
        assert_eq!(
            cyclic3().charpoly().unwrap(),
            IntPoly::from_i64(&[-1, 0, 0, 1])
        );
    }

    #[test]
    fn charpoly_rejects_non_square() {
        let m = IntMatrix::zeros(2, 3);
        assert_eq!(
            m.charpoly(),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
        assert!(m.minpoly().is_err());
    }

    #[test]
    fn charpoly_paley7_first_subconstituent() {
        // 3-cycle on the quadratic residues {1,2,4} mod 7: 1->2, 2->4, 4->1.
        // Direct determinant expansion of the 3x3 gives x^3 - 1.
        let b1 = IntMatrix::from_i64(3, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0]);
        assert_eq!(b1.charpoly().unwrap(), IntPoly::from_i64(&[-1, 0, 0, 1]));
    }

    #[test]
    fn minpoly_identity() {
        let m = IntMatrix::identity(4);
        assert_eq!(m.minpoly().unwrap(), IntPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn minpoly_cyclic_equals_charpoly() {
        assert_eq!(cyclic3().minpoly().unwrap(), IntPoly::from_i64(&[-1, 0, 0, 1]));
    }

    #[test]
    fn minpoly_nilpotent_jordan_block() {
        let m = IntMatrix::from_i64(2, 2, &[0, 1, 0, 0]);
        assert_eq!(m.minpoly().unwrap(), IntPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn minpoly_mixed_jordan_structure() {
        // diag blocks: [[1,1],[0,1]] and [1] -> charpoly (x-1)^3, minpoly (x-1)^2
        let m = IntMatrix::from_i64(3, 3, &[1, 1, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(m.minpoly().unwrap(), IntPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn cayley_hamilton_small_random() {
        // deterministic pseudo-random entries
        let mut state = 0x12345678u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 7) - 3
        };
        for n in 1..=6 {
            let entries: Vec<i64> = (0..n * n).map(|_| next()).collect();
            let m = IntMatrix::from_i64(n, n, &entries);
            let cp = m.charpoly().unwrap();
            assert!(m.eval_poly(&cp).unwrap().is_zero(), "n={n}");
        }
    }
}
