use num_bigint::BigInt;
use num_traits::One;
use terwilliger::matrix::IntMatrix;
use terwilliger::scheme::{paley_tournament, verify_drt, Tournament};

// order 2n+1 from order n: vertex 0 = apex, 1..=n first copy, n+1..=2n second
fn double(t: &Tournament, y_transposed: bool, r_transposed: bool) -> Option<Tournament> {
    let n = t.order();
    let m = 2 * n + 1;
    let mut adj = IntMatrix::zeros(m, m);
    for v in 0..n {
        adj.set(0, 1 + v, BigInt::one()); // apex beats X-copy
        adj.set(1 + n + v, 0, BigInt::one()); // Y-copy beats apex
    }
    for u in 0..n {
        for v in 0..n {
            if t.has_arc(u, v) {
                adj.set(1 + u, 1 + v, BigInt::one());
                if !y_transposed {
                    adj.set(1 + n + u, 1 + n + v, BigInt::one());
                } else {
                    adj.set(1 + n + v, 1 + n + u, BigInt::one());
                }
            }
            // cross arcs: R = A + I or A^T + I
            let r = if r_transposed { t.has_arc(v, u) } else { t.has_arc(u, v) } || u == v;
            if r {
                adj.set(1 + u, 1 + n + v, BigInt::one());
            } else {
                adj.set(1 + n + v, 1 + u, BigInt::one());
            }
        }
    }
    Tournament::new(adj).ok()
}

fn main() {
    for p in [3u64, 7] {
        let t = paley_tournament(p).unwrap();
        for yt in [false, true] {
            for rt in [false, true] {
                let label = format!("p={p} y_transposed={yt} r_transposed={rt}");
                match double(&t, yt, rt) {
                    None => println!("{label}: not even a tournament"),
                    Some(d) => match verify_drt(&d) {
                        Ok(params) => println!("{label}: DRT of order {} (u={})", d.order(), params.u()),
                        Err(e) => println!("{label}: {e}"),
                    },
                }
            }
        }
    }
}
