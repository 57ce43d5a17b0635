//! Property tests for the exact-arithmetic invariants the crate promises.

use proptest::prelude::*;

use terwilliger::factor::factor_over_q;
use terwilliger::matrix::{IntMatrix, RatMatrix};
use terwilliger::numfield::{fields_isomorphic, make_descriptor, VerdictKind};
use terwilliger::poly::IntPoly;
use terwilliger::scheme::{
    parse_scheme, parse_tournament, scheme_from_tournament, serialize_scheme,
    serialize_tournament, tournament_from_scheme, verify_drt, paley_tournament,
};
use terwilliger::span::span_closure;

fn int_matrix(max_n: usize, max_abs: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(-max_abs..=max_abs, n * n)
            .prop_map(move |entries| IntMatrix::from_i64(n, n, &entries))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn cayley_hamilton(m in int_matrix(12, 5)) {
        let cp = m.charpoly().unwrap();
        prop_assert!(m.eval_poly(&cp).unwrap().is_zero());
    }

    #[test]
    fn minpoly_divides_charpoly_and_annihilates(m in int_matrix(8, 3)) {
        let cp = m.charpoly().unwrap();
        let mp = m.minpoly().unwrap();
        prop_assert!(cp.div_exact(&mp).is_some());
        prop_assert!(m.eval_poly(&mp).unwrap().is_zero());
        // squarefree characteristic polynomial forces equality
        if cp.is_squarefree() {
            prop_assert_eq!(mp, cp);
        }
    }
}

fn matrix_01(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(0..=1i64, n * n)
        .prop_map(move |entries| IntMatrix::from_i64(n, n, &entries))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn span_closure_is_multiplication_closed(
        a in matrix_01(3),
        b in matrix_01(3),
    ) {
        let basis = span_closure(&[a, b]).unwrap();
        for x in basis.rows() {
            for y in basis.rows() {
                let mx = RatMatrix::from_flat(3, x.clone());
                let my = RatMatrix::from_flat(3, y.clone());
                prop_assert!(basis.contains(&mx.mul(&my).flatten()).unwrap());
            }
        }
    }

    #[test]
    fn span_closure_ignores_generator_order(
        a in matrix_01(3),
        b in matrix_01(3),
        c in matrix_01(3),
    ) {
        let fwd = span_closure(&[a.clone(), b.clone(), c.clone()]).unwrap();
        let rev = span_closure(&[c, b, a]).unwrap();
        prop_assert_eq!(fwd.len(), rev.len());
        // reduced echelon bases of the same row space coincide
        prop_assert_eq!(fwd, rev);
    }
}

/// Pool of pairwise distinct primitive irreducible polynomials with
/// positive leading coefficient.
fn irreducible_pool() -> Vec<IntPoly> {
    vec![
        IntPoly::from_i64(&[0, 1]),      // x
        IntPoly::from_i64(&[1, 1]),      // x+1
        IntPoly::from_i64(&[-1, 1]),     // x-1
        IntPoly::from_i64(&[1, 2]),      // 2x+1
        IntPoly::from_i64(&[1, 0, 1]),   // x^2+1
        IntPoly::from_i64(&[1, 1, 1]),   // x^2+x+1
        IntPoly::from_i64(&[-2, 0, 1]),  // x^2-2
        IntPoly::from_i64(&[-2, 0, 0, 1]), // x^3-2
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_reconstructs_products(
        mults in proptest::collection::vec(0usize..3, 8),
        content in 1i64..20,
        negate in proptest::bool::ANY,
    ) {
        prop_assume!(mults.iter().any(|&m| m > 0));
        let pool = irreducible_pool();
        let mut input = IntPoly::from_i64(&[if negate { -content } else { content }]);
        for (f, &m) in pool.iter().zip(&mults) {
            input = input.mul(&f.pow(m));
        }
        let factored = factor_over_q(&input).unwrap();
        // exact reconstruction
        prop_assert_eq!(factored.expand(), input.to_rational());
        // the factor multiset is exactly what was planted
        let mut expected: Vec<(IntPoly, usize)> = pool
            .iter()
            .zip(&mults)
            .filter(|(_, &m)| m > 0)
            .map(|(f, &m)| (f.clone(), m))
            .collect();
        expected.sort_by(|(a, _), (b, _)| a.cmp_canonical(b));
        prop_assert_eq!(factored.factors(), &expected[..]);
        // degree accounting
        let total: usize = factored
            .factors()
            .iter()
            .map(|(f, m)| f.degree().unwrap() * m)
            .sum();
        prop_assert_eq!(total, input.degree().unwrap());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        ai in 0usize..8,
        bi in 0usize..8,
        ci in 0usize..8,
        share in proptest::bool::ANY,
    ) {
        let pool = irreducible_pool();
        let f = pool[ai].mul(&pool[ci]);
        let g = if share { pool[ai].mul(&pool[bi]) } else { pool[bi].clone() };
        let res = f.resultant(&g).unwrap();
        let gcd = f.gcd(&g);
        let gcd_nonconstant = gcd.degree().map_or(false, |d| d > 0);
        prop_assert_eq!(res == 0.into(), gcd_nonconstant);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn shifted_fields_are_never_certified_apart(
        base in prop::sample::select(vec![
            IntPoly::from_i64(&[3, 1, 1]),
            IntPoly::from_i64(&[6, 1, 1]),
            IntPoly::from_i64(&[-2, 0, 1]),
            IntPoly::from_i64(&[-2, 0, 0, 1]),
        ]),
        shift in -6i64..=6,
    ) {
        let shifted = base.compose(&IntPoly::from_i64(&[shift, 1]));
        let a = make_descriptor(&base, 25).unwrap();
        let b = make_descriptor(&shifted, 25).unwrap();
        prop_assert_ne!(
            fields_isomorphic(&a, &b).kind(),
            VerdictKind::CertifiedNo
        );
    }
}

/// Fisher-Yates with a caller-supplied random stream.
fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (next() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tournament_scheme_roundtrip_under_relabeling(seed in proptest::num::u64::ANY) {
        let t = paley_tournament(7).unwrap().relabel(&permutation(7, seed)).unwrap();
        verify_drt(&t).unwrap();
        let s = scheme_from_tournament(&t);
        prop_assert_eq!(tournament_from_scheme(&s).unwrap(), t.clone());
        // file round trips are the identity
        prop_assert_eq!(parse_tournament(&serialize_tournament(&t)).unwrap(), t);
        prop_assert_eq!(parse_scheme(&serialize_scheme(&s)).unwrap(), s);
    }
}
