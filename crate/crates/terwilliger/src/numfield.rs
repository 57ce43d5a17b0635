//! Number fields presented by irreducible defining polynomials.
//!
//! A [`NumberFieldDescriptor`] pairs the normalized defining polynomial
//! with a fingerprint: the degree sequences of its factorizations modulo a
//! fixed budget of admissible primes (those dividing neither the leading
//! coefficient nor the discriminant resultant). Differing degree sequences
//! at a common admissible prime certify non-isomorphism. Certified
//! isomorphism, for degrees up to a configurable cap, comes from a
//! norm-resultant root test in the quotient ring: a verified image of one
//! generator inside the other field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::{factor_over_q, is_irreducible};
use crate::modp;
use crate::poly::{IntPoly, RatPoly};

/// Number of admissible fingerprint primes collected per field.
pub const DEFAULT_PRIME_BUDGET: usize = 25;
/// Largest field degree for which the exact root test is attempted.
pub const DEFAULT_DEGREE_CAP: usize = 8;
/// Largest shift tried when searching for a squarefree norm.
const MAX_SHIFT: i64 = 64;

#[derive(Clone, Debug)]
pub struct NumberFieldDescriptor {
    defining: IntPoly,
    degree: usize,
    fingerprint: Vec<(u64, Vec<usize>)>,
}

impl NumberFieldDescriptor {
    pub fn defining(&self) -> &IntPoly {
        &self.defining
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn fingerprint(&self) -> &[(u64, Vec<usize>)] {
        &self.fingerprint
    }

    /// True iff this is the rational field itself.
    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }
}

// Identity of a descriptor is its defining polynomial; the fingerprint is
// derived data.
impl PartialEq for NumberFieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.defining == other.defining
    }
}

impl Eq for NumberFieldDescriptor {}

impl PartialOrd for NumberFieldDescriptor {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumberFieldDescriptor {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.defining.cmp_canonical(&other.defining)
    }
}

impl std::fmt::Display for NumberFieldDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_rationals() {
            write!(f, "Q")
        } else {
            write!(f, "Q[x]/({})", self.defining)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsomorphismVerdict {
    CertifiedNo(NonIsomorphismWitness),
    /// The stored polynomial maps the second field's generator to a
    /// verified root inside the first field.
    CertifiedYes { root_image: RatPoly },
    /// Degrees and all common fingerprints agree but the degree exceeds
    /// the exact-test cap.
    ProbablyYes,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonIsomorphismWitness {
    DegreeMismatch {
        left: usize,
        right: usize,
    },
    SplittingPrime {
        prime: u64,
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// Exact root test: the other defining polynomial has no root here.
    NoRootInField,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    CertifiedNo,
    CertifiedYes,
    ProbablyYes,
}

impl IsomorphismVerdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            IsomorphismVerdict::CertifiedNo(_) => VerdictKind::CertifiedNo,
            IsomorphismVerdict::CertifiedYes { .. } => VerdictKind::CertifiedYes,
            IsomorphismVerdict::ProbablyYes => VerdictKind::ProbablyYes,
        }
    }
}

/// Normalizes `f` and computes its fingerprint over the first
/// `prime_budget` admissible primes. `f` must be irreducible over the
/// rationals; this is always checked.
pub fn make_descriptor(f: &IntPoly, prime_budget: usize) -> Result<NumberFieldDescriptor> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, defining) = f.primitive_positive();
    let degree = match defining.degree() {
        Some(0) | None => return Err(Error::Reducible(format!("{defining}"))),
        Some(d) => d,
    };
    if degree > 1 && !is_irreducible(&defining)? {
        return Err(Error::Reducible(format!("{defining}")));
    }
    let fingerprint = fingerprint(&defining, prime_budget);
    Ok(NumberFieldDescriptor {
        defining,
        degree,
        fingerprint,
    })
}

/// Degree sequences of `f` mod the first `budget` primes dividing neither
/// the leading coefficient nor `Res(f, f')`.
fn fingerprint(f: &IntPoly, budget: usize) -> Vec<(u64, Vec<usize>)> {
    let lc = f.leading().unwrap().clone();
    let disc_res = if f.degree() == Some(1) {
        BigInt::one()
    } else {
        f.resultant(&f.derivative())
            .expect("nonzero polynomial and derivative")
    };
    debug_assert!(
        !disc_res.is_zero(),
        "irreducible polynomial has nonzero discriminant"
    );
    let mut out = Vec::with_capacity(budget);
    let mut p = 2u64;
    while out.len() < budget {
        let pb = BigInt::from(p);
        if !(&lc % &pb).is_zero() && !(&disc_res % &pb).is_zero() {
            let reduced = modp::monic(&modp::reduce_int_poly(f, p), p);
            out.push((p, modp::degree_sequence(&reduced, p)));
        }
        p = modp::next_prime(p);
    }
    out
}

// ---------------------------------------------------------------------------
// Arithmetic in K = Q[y]/(f) and in K[x]
// ---------------------------------------------------------------------------

/// The quotient ring Q[y]/(f), with the modulus made monic over the
/// rationals.
struct QuotientField {
    modulus: RatPoly,
}

impl QuotientField {
    fn new(defining: &IntPoly) -> Self {
        QuotientField {
            modulus: defining.to_rational().monic(),
        }
    }

    fn reduce(&self, a: &RatPoly) -> RatPoly {
        a.rem(&self.modulus)
    }

    fn mul(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        self.reduce(&a.mul(b))
    }

    fn inv(&self, a: &RatPoly) -> RatPoly {
        let (g, s, _) = a.extended_gcd(&self.modulus);
        assert_eq!(
            g.degree(),
            Some(0),
            "nonzero elements are invertible when the modulus is irreducible"
        );
        self.reduce(&s)
    }

    /// Evaluates an integer polynomial at an element of the field.
    fn eval_int_poly(&self, p: &IntPoly, at: &RatPoly) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in p.coeffs().iter().rev() {
            acc = self
                .mul(&acc, at)
                .add(&RatPoly::constant(BigRational::from_integer(c.clone())));
        }
        acc
    }
}

/// Polynomials over the quotient field, low degree first, trimmed.
type KPoly = Vec<RatPoly>;

fn ktrim(mut v: KPoly) -> KPoly {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn kdeg(v: &KPoly) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn kmul(field: &QuotientField, a: &KPoly, b: &KPoly) -> KPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![RatPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&field.mul(x, y));
        }
    }
    ktrim(out)
}

fn krem(field: &QuotientField, a: &KPoly, b: &KPoly) -> KPoly {
    let db = kdeg(b).expect("division by zero polynomial over the field");
    let inv_lead = field.inv(b.last().unwrap());
    let mut rem = a.clone();
    while let Some(dr) = kdeg(&rem) {
        if dr < db {
            break;
        }
        let q = field.mul(rem.last().unwrap(), &inv_lead);
        let shift = dr - db;
        for i in 0..=db {
            let s = field.mul(&q, &b[i]);
            rem[shift + i] = rem[shift + i].sub(&s);
        }
        rem = ktrim(rem);
    }
    rem
}

fn kgcd(field: &QuotientField, a: &KPoly, b: &KPoly) -> KPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = krem(field, &x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last() {
        let inv = field.inv(l);
        x = x.iter().map(|c| field.mul(c, &inv)).collect();
    }
    x
}

// ---------------------------------------------------------------------------
// Norm-resultant root test
// ---------------------------------------------------------------------------

/// `Res_y(f(y), g(x - k*y))`, an integer polynomial of degree
/// `deg f * deg g` in `x`, computed by evaluation at integer nodes and
/// Newton interpolation.
fn norm_poly(f: &IntPoly, g: &IntPoly, k: i64) -> IntPoly {
    let n = f.degree().unwrap() * g.degree().unwrap();
    let mut dd: Vec<BigRational> = Vec::with_capacity(n + 1);
    for t in 0..=n as i64 {
        // g(t - k*y) as a polynomial in y
        let shifted = g.compose(&IntPoly::from_i64(&[t, -k]));
        let value = f
            .resultant(&shifted)
            .expect("nonzero arguments have a resultant");
        dd.push(BigRational::from_integer(value));
    }
    // divided differences on the unit-spaced nodes 0..=n
    for j in 1..=n {
        let denom = BigRational::from_integer(BigInt::from(j as i64));
        for i in (j..=n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / &denom;
        }
    }
    let mut acc = RatPoly::constant(dd[n].clone());
    for i in (0..n).rev() {
        let node = RatPoly::from_int_poly(&IntPoly::from_i64(&[-(i as i64), 1]));
        acc = acc.mul(&node).add(&RatPoly::constant(dd[i].clone()));
    }
    let (int_poly, unit) = acc.clear_denominators();
    assert!(
        unit.is_integer(),
        "norm interpolation must produce integer coefficients"
    );
    int_poly.scale(&unit.to_integer())
}

/// Decides whether `g` has a root in the field, returning a verified
/// witness polynomial of degree below the field degree.
pub fn has_root_in_field(g: &IntPoly, field: &NumberFieldDescriptor) -> Result<Option<RatPoly>> {
    has_root_in_field_with_cap(g, field, DEFAULT_DEGREE_CAP)
}

pub fn has_root_in_field_with_cap(
    g: &IntPoly,
    field: &NumberFieldDescriptor,
    cap: usize,
) -> Result<Option<RatPoly>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = field.degree();
    if m > cap {
        return Err(Error::DegreeCapExceeded { degree: m, cap });
    }
    if g.degree() == Some(0) {
        return Ok(None);
    }
    let f = &field.defining;
    let k_field = QuotientField::new(f);
    // Fast path: the class of the generator itself.
    let generator = k_field.reduce(&RatPoly::from_int_poly(&IntPoly::from_i64(&[0, 1])));
    if k_field.eval_int_poly(g, &generator).is_zero() {
        return Ok(Some(generator));
    }
    let gs = g.squarefree_part()?;
    for k in shift_sequence() {
        let norm = norm_poly(f, &gs, k);
        if !norm.is_squarefree() {
            continue;
        }
        // With a squarefree norm, roots of gs in the field correspond
        // exactly to irreducible norm factors of degree deg(f).
        let factored = factor_over_q(&norm)?;
        for (factor, _) in factored.factors() {
            if factor.degree() != Some(m) {
                continue;
            }
            if let Some(root) = root_from_norm_factor(&k_field, &gs, factor, k) {
                if k_field.eval_int_poly(g, &root).is_zero() {
                    return Ok(Some(root));
                }
            }
        }
        return Ok(None);
    }
    Err(Error::ShiftExhausted(MAX_SHIFT))
}

fn shift_sequence() -> impl Iterator<Item = i64> {
    (1..=MAX_SHIFT).flat_map(|k| [k, -k])
}

/// Extracts the root corresponding to a degree-`deg f` irreducible factor
/// of a squarefree norm: `gcd(gs(x), factor(x + k*theta))` over the field
/// must be linear, and its negated constant term is the candidate root.
fn root_from_norm_factor(
    field: &QuotientField,
    gs: &IntPoly,
    factor: &IntPoly,
    k: i64,
) -> Option<RatPoly> {
    let a: KPoly = ktrim(
        gs.coeffs()
            .iter()
            .map(|c| RatPoly::constant(BigRational::from_integer(c.clone())))
            .collect(),
    );
    // factor(x + k*theta) over K, by Horner in K[x]
    let theta_k = field.reduce(&RatPoly::from_int_poly(&IntPoly::from_i64(&[0, k])));
    let x_plus: KPoly = vec![theta_k, RatPoly::constant(BigRational::one())];
    let mut b: KPoly = vec![];
    for c in factor.coeffs().iter().rev() {
        b = kmul(field, &b, &x_plus);
        let constant = RatPoly::constant(BigRational::from_integer(c.clone()));
        if b.is_empty() {
            b = ktrim(vec![constant]);
        } else {
            b[0] = b[0].add(&constant);
            b = ktrim(b);
        }
    }
    let h = kgcd(field, &a, &b);
    if kdeg(&h) != Some(1) {
        return None;
    }
    Some(h[0].neg())
}

/// Compares two fields: degree mismatch or a differing degree sequence at
/// a common admissible prime certifies non-isomorphism; otherwise the exact
/// root test decides for degrees within the cap, and fingerprint agreement
/// above the cap is reported as `ProbablyYes`, never silently as yes.
pub fn fields_isomorphic(
    k1: &NumberFieldDescriptor,
    k2: &NumberFieldDescriptor,
) -> IsomorphismVerdict {
    fields_isomorphic_with_cap(k1, k2, DEFAULT_DEGREE_CAP)
}

pub fn fields_isomorphic_with_cap(
    k1: &NumberFieldDescriptor,
    k2: &NumberFieldDescriptor,
    cap: usize,
) -> IsomorphismVerdict {
    if k1.degree != k2.degree {
        return IsomorphismVerdict::CertifiedNo(NonIsomorphismWitness::DegreeMismatch {
            left: k1.degree,
            right: k2.degree,
        });
    }
    for (p, left) in &k1.fingerprint {
        if let Some((_, right)) = k2.fingerprint.iter().find(|(q, _)| q == p) {
            if left != right {
                return IsomorphismVerdict::CertifiedNo(NonIsomorphismWitness::SplittingPrime {
                    prime: *p,
                    left: left.clone(),
                    right: right.clone(),
                });
            }
        }
    }
    if k1.degree > cap {
        return IsomorphismVerdict::ProbablyYes;
    }
    let root = has_root_in_field_with_cap(&k2.defining, k1, cap)
        .expect("internal error: exact root test failed below the degree cap");
    match root {
        Some(root_image) => IsomorphismVerdict::CertifiedYes { root_image },
        None => IsomorphismVerdict::CertifiedNo(NonIsomorphismWitness::NoRootInField),
    }
}
