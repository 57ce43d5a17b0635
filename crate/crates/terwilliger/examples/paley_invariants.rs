//! Computes every invariant the library offers for one Paley tournament
//! and cross-checks the closed-form dimension against the span-closure
//! oracle.
//!
//! Usage: cargo run --release --example paley_invariants [prime]

use terwilliger::invariants::{
    complex_invariant, format_dim_profile, oracle_dimension, rational_signature,
};
use terwilliger::scheme::{paley_tournament, scheme_from_tournament, verify_drt};

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("prime argument"))
        .unwrap_or(11);
    let t = paley_tournament(p).expect("p must be a prime congruent to 3 mod 4");
    let params = verify_drt(&t).expect("Paley tournaments are doubly regular");
    println!("Paley({p}): order {}, u = {}", t.order(), params.u());

    let s = scheme_from_tournament(&t);
    let mut dims = Vec::new();
    for x in 0..t.order() {
        let inv = complex_invariant(&t, x).unwrap();
        let sig = rational_signature(&t, x).unwrap();
        let oracle = oracle_dimension(&s, x).unwrap();
        assert_eq!(inv.dim, oracle, "closed form and oracle must agree");
        println!(
            "vertex {x}: dim {} (oracle {}), epsilon {}, m2 {}, signature {}",
            inv.dim,
            oracle,
            u8::from(inv.epsilon),
            inv.m2,
            sig
        );
        dims.push(inv.dim);
    }
    println!("profile: {}", format_dim_profile(&dims));
}
