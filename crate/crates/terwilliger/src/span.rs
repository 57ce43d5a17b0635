//! Echelon bases of rational vector spans and multiplicative closure of
//! matrix sets.
//!
//! `SpanBasis` keeps a reduced echelon basis: rows ordered by pivot column,
//! each pivot entry 1 and the only nonzero entry in its column among basis
//! rows. `span_closure` grows the span of a generator set until it is
//! closed under left and right multiplication by the generators, which
//! yields the unital algebra the generators create.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, RatMatrix};

/// Reduced echelon basis of a subspace of Q^m.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanBasis {
    ambient: usize,
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn new(ambient: usize) -> Self {
        SpanBasis {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis in place.
    fn reduce(&self, v: &mut [BigRational]) {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv].clone();
            if c.is_zero() {
                continue;
            }
            for (j, rv) in row.iter().enumerate() {
                if !rv.is_zero() {
                    v[j] -= &c * rv;
                }
            }
        }
    }

    /// True iff `v` lies in the span.
    pub fn contains(&self, v: &[BigRational]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        Ok(w.iter().all(|c| c.is_zero()))
    }

    /// Inserts a vector, reporting whether the dimension grew.
    pub fn insert(&mut self, v: Vec<BigRational>) -> Result<bool> {
        Ok(self.insert_reduced(v)?.is_some())
    }

    /// Inserts a vector; on growth returns the reduced, normalized row that
    /// was stored.
    fn insert_reduced(&mut self, mut v: Vec<BigRational>) -> Result<Option<Vec<BigRational>>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        self.reduce(&mut v);
        let pivot = match v.iter().position(|c| !c.is_zero()) {
            None => return Ok(None),
            Some(p) => p,
        };
        // normalize pivot to one
        let inv = BigRational::one() / v[pivot].clone();
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c *= &inv;
            }
        }
        // eliminate the new pivot column from existing rows
        for row in self.rows.iter_mut() {
            let c = row[pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (j, nv) in v.iter().enumerate() {
                if !nv.is_zero() {
                    row[j] -= &c * nv;
                }
            }
        }
        // keep rows ordered by pivot column
        let at = self
            .pivots
            .binary_search(&pivot)
            .expect_err("pivot columns are distinct");
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v.clone());
        Ok(Some(v))
    }
}

fn to_rational_flat(m: &IntMatrix) -> Vec<BigRational> {
    m.entries()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

/// Smallest subalgebra of n-by-n rational matrices containing the identity
/// and all generators, as an echelon basis of flattened matrices.
///
/// A worklist holds each newly stored basis row (in matrix form); every
/// such element is multiplied by every generator on both sides and the
/// products are inserted until nothing new appears. The basis size is the
/// dimension of the generated algebra over the rationals.
pub fn span_closure(generators: &[IntMatrix]) -> Result<SpanBasis> {
    let n = match generators.first() {
        None => {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            })
        }
        Some(g) => {
            if !g.is_square() {
                return Err(Error::NonSquare {
                    rows: g.rows(),
                    cols: g.cols(),
                });
            }
            g.rows()
        }
    };
    for g in generators {
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: g.rows() * g.cols(),
            });
        }
    }
    let gens: Vec<RatMatrix> = generators.iter().map(|g| g.to_rational()).collect();
    let mut basis = SpanBasis::new(n * n);
    let mut worklist: Vec<RatMatrix> = Vec::new();

    let identity = IntMatrix::identity(n);
    if let Some(row) = basis.insert_reduced(to_rational_flat(&identity))? {
        worklist.push(RatMatrix::from_flat(n, row));
    }
    for g in generators {
        if let Some(row) = basis.insert_reduced(to_rational_flat(g))? {
            worklist.push(RatMatrix::from_flat(n, row));
        }
    }
    while let Some(m) = worklist.pop() {
        for g in &gens {
            for prod in [m.mul(g), g.mul(&m)] {
                if basis.len() == n * n {
                    return Ok(basis);
                }
                if let Some(row) = basis.insert_reduced(prod.flatten())? {
                    worklist.push(RatMatrix::from_flat(n, row));
                }
            }
        }
    }
    Ok(basis)
}
