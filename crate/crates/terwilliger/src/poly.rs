//! Dense univariate polynomials with exact coefficients.
//!
//! `Poly<T>` stores coefficients low degree first with no trailing zeros;
//! the zero polynomial is the empty list. Generic arithmetic works over any
//! [`Scalar`]; the integer- and rational-specific routines (content, gcd,
//! resultants, exact division) live in the `impl Poly<BigInt>` and
//! `impl Poly<BigRational>` blocks below.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Builds a polynomial from low-degree-first coefficients, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of `x^i`, zero-padded beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Substitutes another polynomial for the variable, `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
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
}

impl<T: Scalar + FromPrimitive> Poly<T> {
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * T::from_usize(i).expect("small index fits scalar"))
            .collect();
        Poly::new(out)
    }
}

impl<T: Scalar> std::ops::Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        Poly::add(self, rhs)
    }
}

impl<T: Scalar> std::ops::Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        Poly::sub(self, rhs)
    }
}

impl<T: Scalar> std::ops::Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        Poly::mul(self, rhs)
    }
}

/// Integer-coefficient polynomials.
pub type IntPoly = Poly<BigInt>;
/// Rational-coefficient polynomials.
pub type RatPoly = Poly<BigRational>;

fn exact_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    debug_assert!(r.is_zero(), "inexact division in subresultant sequence");
    q
}

impl IntPoly {
    /// Convenience constructor from machine integers, low degree first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self` divided by its content. Keeps the sign of the leading
    /// coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content();
        Poly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Primitive part with positive leading coefficient, plus the removed
    /// rational unit so that `unit * poly == self`.
    pub fn primitive_positive(&self) -> (BigInt, Self) {
        if self.is_zero() {
            return (BigInt::zero(), Poly::zero());
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        (c.clone(), Poly::new(self.coeffs.iter().map(|a| a / &c).collect()))
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    /// Exact division in `Z[x]`; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dn, dd) = (self.degree().unwrap(), divisor.degree().unwrap());
        if dn < dd {
            return None;
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for i in 0..=dd {
                let sub = &divisor.coeffs[i] * &q;
                rem[k + i] -= sub;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(quot))
    }

    /// Pseudo-remainder: the `R` in `lc(d)^(deg f - deg d + 1) f = Q d + R`.
    /// The full power of the leading coefficient is applied even when the
    /// degree drops by more than one per step, as the subresultant
    /// bookkeeping requires.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lead = d.leading().unwrap().clone();
        let mut r = self.clone();
        let mut spare = match self.degree() {
            Some(dn) if dn >= dd => dn - dd + 1,
            _ => 0,
        };
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            let top = r.leading().unwrap().clone();
            // r <- lc(d)*r - top*x^shift*d
            r = r.scale(&lead).sub(&d.scale(&top).mul_xk(shift));
            spare -= 1;
        }
        for _ in 0..spare {
            r = r.scale(&lead);
        }
        r
    }

    /// Multiplication by `x^k`.
    pub fn mul_xk(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_positive().1;
        }
        if other.is_zero() {
            return self.primitive_positive().1;
        }
        let content_gcd = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        let (_, mut g) = a.primitive_positive();
        g = g.scale(&content_gcd);
        g
    }

    /// Resultant of two nonzero integer polynomials, computed with the
    /// subresultant polynomial remainder sequence.
    pub fn resultant(&self, other: &Self) -> Result<BigInt> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut sign = BigInt::one();
        if a.degree() < b.degree() {
            if (a.degree().unwrap() * b.degree().unwrap()) % 2 == 1 {
                sign = -sign;
            }
            std::mem::swap(&mut a, &mut b);
        }
        if b.degree() == Some(0) {
            let e = a.degree().unwrap() as u32;
            return Ok(sign * b.coeffs[0].pow(e));
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let delta = (da - db) as u32;
            if da % 2 == 1 && db % 2 == 1 {
                sign = -sign;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            // divide exactly by g*h^delta
            let denom = &g * h.pow(delta);
            b = Poly::new(r.coeffs.iter().map(|c| exact_div(c, &denom)).collect());
            g = a.leading().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                exact_div(&g.pow(delta), &h.pow(delta - 1))
            };
            match b.degree() {
                None => return Ok(BigInt::zero()),
                Some(0) => {
                    let da = a.degree().unwrap() as u32;
                    // res = sign * b^da / h^(da-1)
                    let num = b.coeffs[0].pow(da);
                    let den = h.pow(da.saturating_sub(1));
                    return Ok(sign * exact_div(&num, &den));
                }
                Some(_) => {}
            }
        }
    }

    /// `self / gcd(self, self')`, primitive with positive leading
    /// coefficient: each distinct irreducible factor exactly once.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Poly::one());
        }
        let d = self.derivative();
        let g = self.gcd(&d);
        let q = self
            .div_exact(&g)
            .expect("gcd divides the polynomial");
        Ok(q.primitive_positive().1)
    }

    /// True iff `gcd(self, self')` is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == Some(0) {
            return true;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn to_rational(&self) -> RatPoly {
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Square of the 2-norm of the coefficient vector.
    pub fn norm2_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Canonical ordering used for factor lists and signatures:
    /// by degree, then lexicographically on the coefficient list
    /// (constant term first).
    pub fn cmp_canonical(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl RatPoly {
    pub fn from_int_poly(p: &IntPoly) -> Self {
        p.to_rational()
    }

    /// Division with remainder over the rationals; divisor nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let q = rem.leading().unwrap() / &lead;
            let shift = dr - dd;
            let term = Poly::monomial(q, shift);
            quot = quot.add(&term);
            rem = rem.sub(&divisor.mul(&term));
        }
        (quot, rem)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = BigRational::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd_monic(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `g` the monic gcd and
    /// `s*self + t*other = g`.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading() {
            None => (Poly::zero(), Poly::zero(), Poly::zero()),
            Some(l) => {
                let inv = BigRational::one() / l.clone();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Clears denominators: returns `(q, c)` with integer `q` and positive
    /// rational `c` such that `self = c * q` and `q` primitive.
    pub fn clear_denominators(&self) -> (IntPoly, BigRational) {
        if self.is_zero() {
            return (Poly::zero(), BigRational::one());
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * BigRational::from_integer(lcm.clone());
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect();
        let p = Poly::new(ints);
        let (unit, prim) = p.primitive_positive();
        (prim, BigRational::new(unit, lcm))
    }
}

fn fmt_poly<T>(
    coeffs: &[T],
    f: &mut fmt::Formatter<'_>,
    is_neg: impl Fn(&T) -> bool,
    abs_str: impl Fn(&T) -> String,
    is_one_abs: impl Fn(&T) -> bool,
    is_zero: impl Fn(&T) -> bool,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if is_zero(c) {
            continue;
        }
        let neg = is_neg(c);
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let a = abs_str(c);
        if i == 0 {
            write!(f, "{a}")?;
        } else {
            if !is_one_abs(c) {
                write!(f, "{a}*")?;
            }
            if i == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{i}")?;
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(
            &self.coeffs,
            f,
            |c: &BigInt| c.is_negative(),
            |c| c.abs().to_string(),
            |c| c.abs().is_one(),
            |c| c.is_zero(),
        )
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(
            &self.coeffs,
            f,
            |c: &BigRational| c.is_negative(),
            |c| c.abs().to_string(),
            |c| c.abs().is_one(),
            |c| c.is_zero(),
        )
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}
