use num_bigint::BigInt;
use num_traits::One;
use terwilliger::invariants::{complex_invariant, format_dim_profile, oracle_dimension, rational_signature};
use terwilliger::matrix::IntMatrix;
use terwilliger::scheme::{paley_tournament, scheme_from_tournament, verify_drt, Tournament};

fn double(t: &Tournament) -> Tournament {
    let n = t.order();
    let m = 2 * n + 1;
    let mut adj = IntMatrix::zeros(m, m);
    for v in 0..n {
        adj.set(0, 1 + v, BigInt::one());
        adj.set(1 + n + v, 0, BigInt::one());
    }
    for u in 0..n {
        for v in 0..n {
            if t.has_arc(u, v) {
                adj.set(1 + u, 1 + v, BigInt::one());
                adj.set(1 + n + v, 1 + n + u, BigInt::one());
            }
            if t.has_arc(u, v) || u == v {
                adj.set(1 + u, 1 + n + v, BigInt::one());
            } else {
                adj.set(1 + n + v, 1 + u, BigInt::one());
            }
        }
    }
    Tournament::new(adj).unwrap()
}

fn main() {
    let d = double(&paley_tournament(7).unwrap());
    verify_drt(&d).unwrap();
    let mut dims = Vec::new();
    let s = scheme_from_tournament(&d);
    for x in 0..d.order() {
        let inv = complex_invariant(&d, x).unwrap();
        let oracle = oracle_dimension(&s, x).unwrap();
        let sig = rational_signature(&d, x).unwrap();
        assert_eq!(inv.dim, oracle);
        assert_eq!(sig.rational_dimension(), inv.dim);
        println!("vertex {x}: dim {} eps {} m2 {} sig {}", inv.dim, u8::from(inv.epsilon), inv.m2, sig);
        dims.push(inv.dim);
    }
    println!("profile: {}", format_dim_profile(&dims));
}
