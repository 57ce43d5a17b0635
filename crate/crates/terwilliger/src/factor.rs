//! Complete factorization of integer polynomials into irreducibles over
//! the rationals.
//!
//! Pipeline: primitive part, Yun squarefree decomposition, then for each
//! squarefree piece a Zassenhaus round: reduction mod a suitable odd prime,
//! distinct-degree and equal-degree factorization there, Hensel lifting past
//! twice the Landau-Mignotte coefficient bound, and brute-force subset
//! recombination by trial division. Inputs here stay small (degree ~30),
//! so subset recombination never needs lattice methods.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modp;
use crate::poly::{IntPoly, Poly, RatPoly};

/// A factorization `unit * prod(factor_i ^ mult_i)` with irreducible,
/// primitive, positive-leading-coefficient factors, sorted by
/// (degree, coefficient list). The ordering is part of the contract:
/// downstream signatures depend on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    unit: BigRational,
    factors: Vec<(IntPoly, usize)>,
}

impl FactoredPoly {
    pub fn unit(&self) -> &BigRational {
        &self.unit
    }

    pub fn factors(&self) -> &[(IntPoly, usize)] {
        &self.factors
    }

    /// Total degree counted with multiplicity.
    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, m)| f.degree().unwrap_or(0) * m)
            .sum()
    }

    /// Multiplicity of a given factor (0 if absent).
    pub fn multiplicity_of(&self, f: &IntPoly) -> usize {
        self.factors
            .iter()
            .find(|(g, _)| g == f)
            .map_or(0, |(_, m)| *m)
    }

    /// Expands back to the polynomial, over the rationals.
    pub fn expand(&self) -> RatPoly {
        let mut acc = RatPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.to_rational().pow(*m));
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1 && self.unit.abs().is_one()
    }
}

/// Factors a nonzero integer polynomial completely over the rationals.
pub fn factor_over_q(p: &IntPoly) -> Result<FactoredPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (unit_int, prim) = p.primitive_positive();
    let unit = BigRational::from_integer(unit_int);
    if prim.degree() == Some(0) {
        return Ok(FactoredPoly {
            unit,
            factors: vec![],
        });
    }
    let mut factors: Vec<(IntPoly, usize)> = Vec::new();
    for (piece, mult) in yun_squarefree(&prim) {
        for irreducible in factor_squarefree_primitive(&piece) {
            match factors.iter_mut().find(|(g, _)| *g == irreducible) {
                Some((_, m)) => *m += mult,
                None => factors.push((irreducible, mult)),
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.cmp_canonical(b));
    let out = FactoredPoly { unit, factors };
    debug_assert_eq!(out.expand(), p.to_rational());
    Ok(out)
}

/// True iff the nonzero polynomial is irreducible over the rationals
/// (degree >= 1, content ±1 ignored).
pub fn is_irreducible(p: &IntPoly) -> Result<bool> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let f = factor_over_q(p)?;
    Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
}

/// Yun's squarefree decomposition of a primitive polynomial with positive
/// leading coefficient: returns pairwise-coprime squarefree primitive
/// pieces `(a_i, i)` with `prod a_i^i` equal to the input.
fn yun_squarefree(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    let fd = f.derivative();
    let g = f.gcd(&fd);
    let mut c = f.div_exact(&g).expect("gcd divides");
    let mut d = fd.div_exact(&g).expect("gcd divides derivative").sub(&c.derivative());
    let mut i = 1usize;
    while c.degree().map_or(false, |dc| dc > 0) {
        let a = c.gcd(&d);
        if a.degree().map_or(false, |da| da > 0) {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a).expect("squarefree piece divides");
        d = d.div_exact(&a).expect("squarefree piece divides").sub(&c.derivative());
        i += 1;
    }
    out
}

/// Zassenhaus factorization of a squarefree primitive polynomial with
/// positive leading coefficient and degree >= 1.
fn factor_squarefree_primitive(g: &IntPoly) -> Vec<IntPoly> {
    let n = g.degree().unwrap();
    if n == 1 {
        return vec![g.clone()];
    }
    let (p, modular) = modular_factorization(g);
    if modular.len() == 1 {
        return vec![g.clone()];
    }
    // Lift beyond twice the Landau-Mignotte bound.
    let bound = landau_mignotte_bound(g);
    let target = &bound * 2 + 1;
    let mut k = 1u32;
    let mut pk = BigInt::from(p);
    while pk < target {
        pk = pk * BigInt::from(p);
        k += 1;
    }
    let lifted = modp::hensel_lift(g, &modular, p, k);
    recombine(g, lifted, &pk)
}

/// Picks the smallest odd prime not dividing the leading coefficient for
/// which the reduction stays squarefree, and factors the monic reduction.
fn modular_factorization(g: &IntPoly) -> (u64, Vec<modp::FpPoly>) {
    let lc = g.leading().unwrap();
    let mut p = 3u64;
    loop {
        if !(lc % BigInt::from(p)).is_zero() {
            let reduced = modp::monic(&modp::reduce_int_poly(g, p), p);
            if modp::deg(&reduced) == g.degree() && modp::is_squarefree(&reduced, p) {
                let factors = modp::factor_monic_squarefree(&reduced, p);
                return (p, factors);
            }
        }
        p = modp::next_prime(p);
    }
}

/// `2^n * (ceil(|g|_2) ) * |lc(g)|`: bounds the coefficients of
/// `lc(g)/lc(h) * h` for every integer factor h of g.
fn landau_mignotte_bound(g: &IntPoly) -> BigInt {
    let n = g.degree().unwrap();
    let norm_sq = g.norm2_sq();
    let norm = norm_sq.sqrt() + 1;
    let lc = g.leading().unwrap().abs();
    (BigInt::one() << n) * norm * lc
}

/// Brute-force subset recombination: tries products of lifted factors in
/// increasing subset size, trial-dividing the remaining polynomial.
fn recombine(g: &IntPoly, mut lifted: Vec<IntPoly>, pk: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut cur = g.clone();
    let mut size = 1usize;
    'sizes: while 2 * size <= lifted.len() {
        let mut subset = Subsets::new(lifted.len(), size);
        while let Some(indices) = subset.next() {
            let mut candidate = Poly::constant(cur.leading().unwrap().clone());
            for &i in indices {
                candidate = candidate.mul(&lifted[i]);
                candidate = modp::symmetric_poly(&candidate, pk);
            }
            let candidate = candidate.primitive_positive().1;
            if candidate.degree().map_or(true, |d| d == 0) {
                continue;
            }
            if let Some(quotient) = cur.div_exact(&candidate) {
                out.push(candidate);
                cur = quotient.primitive_positive().1;
                let keep: Vec<IntPoly> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !indices.contains(i))
                    .map(|(_, f)| f.clone())
                    .collect();
                lifted = keep;
                continue 'sizes;
            }
        }
        size += 1;
    }
    if cur.degree().map_or(false, |d| d > 0) {
        out.push(cur);
    }
    out
}

/// Lexicographic k-subsets of 0..n.
struct Subsets {
    n: usize,
    k: usize,
    current: Vec<usize>,
    started: bool,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets {
            n,
            k,
            current: (0..k).collect(),
            started: false,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        // advance
        let mut i = self.k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.current[i] < self.n - (self.k - i) {
                self.current[i] += 1;
                for j in i + 1..self.k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return Some(&self.current);
            }
        }
    }
}
