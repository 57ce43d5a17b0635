//! Polynomial arithmetic over prime fields, distinct- and equal-degree
//! factorization, and Hensel lifting to prime-power moduli.
//!
//! Polynomials mod p are coefficient vectors of `u64` residues, low degree
//! first, trimmed. Primes here are always odd and small; products go
//! through `u128`. The equal-degree splitting draws its random elements
//! from a fixed-seed generator so factorizations are reproducible
//! bit for bit.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::{IntPoly, Poly};

pub type FpPoly = Vec<u64>;

const EDF_SEED: u64 = 0x7E57_5EED_0001;

/// SplitMix64; deterministic source for equal-degree splitting.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn next_prime(after: u64) -> u64 {
    let mut n = after + 1;
    while !is_prime(n) {
        n += 1;
    }
    n
}

fn trim(mut v: FpPoly) -> FpPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn deg(v: &FpPoly) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p prime, a != 0
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn add(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = *a.get(i).unwrap_or(&0);
        let y = *b.get(i).unwrap_or(&0);
        *o = (x + y) % p;
    }
    trim(out)
}

pub fn sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = *a.get(i).unwrap_or(&0);
        let y = *b.get(i).unwrap_or(&0);
        *o = (x + p - y) % p;
    }
    trim(out)
}

pub fn mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    trim(out)
}

pub fn scale(a: &FpPoly, c: u64, p: u64) -> FpPoly {
    trim(a.iter().map(|&x| mulmod(x, c, p)).collect())
}

/// Division with remainder; divisor nonzero.
pub fn divrem(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let db = deg(b).expect("division by zero polynomial");
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut rem = a.clone();
    if deg(&rem).map_or(true, |da| da < db) {
        return (vec![], trim(rem));
    }
    let dq = rem.len() - 1 - db;
    let mut quot = vec![0u64; dq + 1];
    for k in (0..=dq).rev() {
        let top = *rem.get(k + db).unwrap_or(&0);
        if top == 0 {
            continue;
        }
        let q = mulmod(top, inv, p);
        quot[k] = q;
        for i in 0..=db {
            let s = mulmod(q, b[i], p);
            rem[k + i] = (rem[k + i] + p - s) % p;
        }
    }
    (trim(quot), trim(rem))
}

pub fn rem(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    divrem(a, b, p).1
}

pub fn monic(a: &FpPoly, p: u64) -> FpPoly {
    match a.last() {
        None => vec![],
        Some(&l) if l == 1 => a.clone(),
        Some(&l) => scale(a, inv_mod(l, p), p),
    }
}

pub fn gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// Extended gcd: returns (g, s, t) monic with s*a + t*b = g mod p.
pub fn xgcd(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if let Some(&l) = r0.last() {
        if l != 1 {
            let inv = inv_mod(l, p);
            r0 = scale(&r0, inv, p);
            s0 = scale(&s0, inv, p);
            t0 = scale(&t0, inv, p);
        }
    }
    (r0, s0, t0)
}

pub fn derivative(a: &FpPoly, p: u64) -> FpPoly {
    if a.len() <= 1 {
        return vec![];
    }
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, (i as u64) % p, p))
            .collect(),
    )
}

/// Reduction of an integer polynomial mod p.
pub fn reduce_int_poly(f: &IntPoly, p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    trim(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                r.to_u64().expect("residue fits in u64")
            })
            .collect(),
    )
}

pub fn is_squarefree(f: &FpPoly, p: u64) -> bool {
    if f.is_empty() {
        return false;
    }
    let d = derivative(f, p);
    if d.is_empty() {
        // f is a p-th power unless constant
        return deg(f) == Some(0);
    }
    deg(&gcd(f, &d, p)) == Some(0)
}

/// `base^e mod (m, p)` with a big-integer exponent.
pub fn pow_mod_poly(base: &FpPoly, e: &BigUint, modulus: &FpPoly, p: u64) -> FpPoly {
    let mut acc = vec![1u64];
    let mut b = rem(base, modulus, p);
    for i in 0..e.bits() {
        if e.bit(i) {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        if i + 1 < e.bits() {
            b = rem(&mul(&b, &b, p), modulus, p);
        }
    }
    acc
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// returns `(d, product of all irreducible factors of degree d)` pairs in
/// increasing `d`, products nontrivial.
pub fn distinct_degree(f: &FpPoly, p: u64) -> Vec<(usize, FpPoly)> {
    let mut out = Vec::new();
    let mut rest = monic(f, p);
    let x = vec![0u64, 1];
    let mut h = rem(&x, &rest, p);
    let mut d = 0usize;
    while let Some(dr) = deg(&rest) {
        if dr == 0 {
            break;
        }
        d += 1;
        if 2 * d > dr {
            // remainder is irreducible
            out.push((dr, rest.clone()));
            break;
        }
        h = pow_mod_poly(&h, &BigUint::from(p), &rest, p);
        let g = gcd(&sub(&h, &x, p), &rest, p);
        if deg(&g).map_or(false, |dg| dg > 0) {
            out.push((d, g.clone()));
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
        }
    }
    out
}

/// Sorted multiset of irreducible-factor degrees of a squarefree monic
/// polynomial mod p. Only distinct-degree factorization is needed.
pub fn degree_sequence(f: &FpPoly, p: u64) -> Vec<usize> {
    let mut seq = Vec::new();
    for (d, prod) in distinct_degree(f, p) {
        let count = deg(&prod).unwrap() / d;
        seq.extend(std::iter::repeat(d).take(count));
    }
    seq.sort_unstable();
    seq
}

/// Cantor-Zassenhaus equal-degree splitting: factors a monic squarefree
/// polynomial all of whose irreducible factors have degree `d`.
fn equal_degree(f: &FpPoly, d: usize, p: u64, rng: &mut SplitMix64, out: &mut Vec<FpPoly>) {
    let df = deg(f).unwrap();
    if df == d {
        out.push(f.clone());
        return;
    }
    // exponent (p^d - 1) / 2
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a: FpPoly = trim((0..df).map(|_| rng.next() % p).collect());
        if deg(&a).map_or(true, |da| da == 0) {
            continue;
        }
        let g = gcd(&a, f, p);
        let split = if deg(&g).map_or(false, |dg| dg > 0 && dg < df) {
            g
        } else {
            let b = pow_mod_poly(&a, &e, f, p);
            let g = gcd(&sub(&b, &vec![1u64], p), f, p);
            if deg(&g).map_or(true, |dg| dg == 0 || dg == df) {
                continue;
            }
            g
        };
        let (q, r) = divrem(f, &split, p);
        debug_assert!(r.is_empty());
        equal_degree(&split, d, p, rng, out);
        equal_degree(&q, d, p, rng, out);
        return;
    }
}

/// Complete factorization of a monic squarefree polynomial mod an odd
/// prime into monic irreducibles, sorted by (degree, coefficient list).
pub fn factor_monic_squarefree(f: &FpPoly, p: u64) -> Vec<FpPoly> {
    let mut rng = SplitMix64(EDF_SEED);
    let mut out = Vec::new();
    for (d, prod) in distinct_degree(f, p) {
        equal_degree(&prod, d, p, &mut rng, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// Integer polynomial with coefficients reduced into [0, m).
fn reduce_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    Poly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn lift_to_int(f: &FpPoly) -> IntPoly {
    Poly::new(f.iter().map(|&c| BigInt::from(c)).collect())
}

/// One linear Hensel step chain: lifts `f = u*v (mod p)`, `u` monic and
/// coprime to `v` mod p, to a factorization mod `p^k`.
fn lift_pair(f: &IntPoly, u0: &FpPoly, v0: &FpPoly, p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (g, _, t) = xgcd(u0, v0, p);
    debug_assert_eq!(deg(&g), Some(0));
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut u = lift_to_int(u0);
    let mut v = lift_to_int(v0);
    for _ in 1..k {
        // e = (f - u*v) / p^j, reduced mod p
        let diff = f.sub(&u.mul(&v));
        let e_int = Poly::new(
            diff.coeffs()
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(&modulus);
                    debug_assert!(r.is_zero(), "lift invariant broken");
                    q
                })
                .collect(),
        );
        let e = reduce_int_poly(&e_int, p);
        // tau = t*e mod u0, sigma = (e - tau*v0)/u0, over F_p
        let tau = rem(&mul(&t, &e, p), u0, p);
        let num = sub(&e, &mul(&tau, v0, p), p);
        let (sigma, r) = divrem(&num, u0, p);
        debug_assert!(r.is_empty(), "Bezout correction must divide exactly");
        u = u.add(&lift_to_int(&tau).scale(&modulus));
        v = v.add(&lift_to_int(&sigma).scale(&modulus));
        modulus = &modulus * &pb;
        u = reduce_mod(&u, &modulus);
        v = reduce_mod(&v, &modulus);
    }
    (u, v)
}

/// Lifts `f = lc(f) * u_1 * ... * u_r (mod p)` with monic pairwise-coprime
/// `u_i` to monic factors mod `p^k`, coefficients in `[0, p^k)`.
pub fn hensel_lift(f: &IntPoly, factors: &[FpPoly], p: u64, k: u32) -> Vec<IntPoly> {
    let modulus = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        // nothing to lift pairwise; reduce f to monic mod p^k
        let lc_inv = mod_inverse(f.leading().unwrap(), &modulus);
        return vec![reduce_mod(&f.scale(&lc_inv), &modulus)];
    }
    let mut lifted = Vec::with_capacity(factors.len());
    let mut cur = f.clone();
    for i in 0..factors.len() - 1 {
        let u0 = &factors[i];
        // v0 = lc(cur) * product of the remaining factors, mod p
        let lc_mod = reduce_int_poly(&Poly::constant(cur.leading().unwrap().clone()), p);
        let mut v0 = lc_mod;
        for uj in &factors[i + 1..] {
            v0 = mul(&v0, uj, p);
        }
        let (u, v) = lift_pair(&cur, u0, &v0, p, k);
        lifted.push(u);
        cur = v;
    }
    let lc_inv = mod_inverse(cur.leading().unwrap(), &modulus);
    lifted.push(reduce_mod(&cur.scale(&lc_inv), &modulus));
    lifted
}

/// Inverse of `a` modulo `m` (gcd(a, m) = 1).
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "element not invertible");
    e.x.mod_floor(m)
}

/// Symmetric representative in (-m/2, m/2].
pub fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

pub fn symmetric_poly(f: &IntPoly, m: &BigInt) -> IntPoly {
    Poly::new(f.coeffs().iter().map(|c| symmetric_mod(c, m)).collect())
}
