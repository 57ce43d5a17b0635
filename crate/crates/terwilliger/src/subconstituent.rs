//! Dual idempotents and the subconstituent decomposition of a doubly
//! regular tournament at a base vertex.
//!
//! Reordering the vertices as {x}, out-neighbors of x, in-neighbors of x
//! (each ascending) turns the adjacency matrix into the block form
//!
//! ```text
//!   [ 0     e^T       0^T ]
//!   [ 0     B1        N   ]
//!   [ e     J - N^T   B2  ]
//! ```
//!
//! with square blocks of side 2u+1. The identity suite checked by
//! [`verify_subconstituent_identities`] pins down the products of these
//! blocks exactly.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::scheme::{verify_drt, SchemeTable, Tournament};

/// The partition of the vertex set by relation to a base vertex; part i
/// indexes the diagonal 0/1 matrix E_i*.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualIdempotents {
    vertex: usize,
    order: usize,
    parts: Vec<Vec<usize>>,
}

impl DualIdempotents {
    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    /// The diagonal 0/1 matrix supported on part i.
    pub fn matrix(&self, i: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.order, self.order);
        for &u in &self.parts[i] {
            m.set(u, u, BigInt::one());
        }
        m
    }

    pub fn matrices(&self) -> Vec<IntMatrix> {
        (0..self.parts.len()).map(|i| self.matrix(i)).collect()
    }
}

/// Partition of the vertices of a scheme by their relation to `x`.
/// Part 0 is always the singleton {x}.
pub fn dual_idempotents(s: &SchemeTable, x: usize) -> Result<DualIdempotents> {
    let n = s.order();
    if x >= n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    let mut parts = vec![Vec::new(); s.rank()];
    for u in 0..n {
        parts[s.relation(x, u) as usize].push(u);
    }
    debug_assert_eq!(parts[0], vec![x]);
    Ok(DualIdempotents {
        vertex: x,
        order: n,
        parts,
    })
}

/// The blocks of the adjacency matrix of a doubly regular tournament at a
/// base vertex, together with the reordering that produces them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubconstituentDecomposition {
    /// Base vertex.
    pub vertex: usize,
    /// New index -> original vertex: x first, then out-neighbors, then
    /// in-neighbors, each ascending.
    pub permutation: Vec<usize>,
    /// Arcs within the out-neighborhood.
    pub b1: IntMatrix,
    /// Arcs from the out- to the in-neighborhood.
    pub n: IntMatrix,
    /// Arcs within the in-neighborhood.
    pub b2: IntMatrix,
}

impl SubconstituentDecomposition {
    /// Side length of the blocks, 2u+1.
    pub fn block_size(&self) -> usize {
        self.b1.rows()
    }

    /// Rebuilds the reordered adjacency matrix from the blocks.
    pub fn assemble(&self) -> IntMatrix {
        let k = self.block_size();
        let n = 2 * k + 1;
        let mut a = IntMatrix::zeros(n, n);
        for j in 0..k {
            a.set(0, 1 + j, BigInt::one()); // e^T
            a.set(1 + k + j, 0, BigInt::one()); // e
        }
        for i in 0..k {
            for j in 0..k {
                a.set(1 + i, 1 + j, self.b1.get(i, j).clone());
                a.set(1 + i, 1 + k + j, self.n.get(i, j).clone());
                a.set(1 + k + i, 1 + k + j, self.b2.get(i, j).clone());
                // J - N^T
                let v = BigInt::one() - self.n.get(j, i);
                a.set(1 + k + i, 1 + j, v);
            }
        }
        a
    }
}

/// Extracts the subconstituent blocks of a doubly regular tournament at
/// vertex `x`, asserting the block structure and the row-sum and
/// transpose-complement invariants.
pub fn subconstituents(t: &Tournament, x: usize) -> Result<SubconstituentDecomposition> {
    let params = verify_drt(t)?;
    let n = t.order();
    if x >= n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    let u = params.u();
    let out = t.out_neighbors(x);
    let inn = t.in_neighbors(x);
    let mut permutation = Vec::with_capacity(n);
    permutation.push(x);
    permutation.extend(&out);
    permutation.extend(&inn);

    let restrict = |rows: &[usize], cols: &[usize]| {
        IntMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            t.adjacency().get(rows[i], cols[j]).clone()
        })
    };
    let d = SubconstituentDecomposition {
        vertex: x,
        permutation,
        b1: restrict(&out, &out),
        n: restrict(&out, &inn),
        b2: restrict(&inn, &inn),
    };

    // Reassembling and un-permuting must reproduce the adjacency matrix.
    let assembled = d.assemble();
    for a in 0..n {
        for b in 0..n {
            if assembled.get(a, b) != t.adjacency().get(d.permutation[a], d.permutation[b]) {
                return Err(Error::NotDrt {
                    identity: "block reassembly reproduces the adjacency matrix".into(),
                    row: a,
                    col: b,
                });
            }
        }
    }
    let k = d.block_size();
    let check_row_sums = |m: &IntMatrix, want: usize, name: &str| -> Result<()> {
        for i in 0..k {
            let sum: BigInt = (0..k).map(|j| m.get(i, j).clone()).sum();
            if sum != BigInt::from(want as u64) {
                return Err(Error::NotDrt {
                    identity: format!("{name} row sums equal {want}"),
                    row: i,
                    col: 0,
                });
            }
        }
        Ok(())
    };
    check_row_sums(&d.b1, u, "B1")?;
    check_row_sums(&d.b2, u, "B2")?;
    check_row_sums(&d.n, u + 1, "N")?;
    for m in [&d.b1, &d.b2] {
        let sym = m.add(&m.transpose());
        let expected = IntMatrix::ones(k, k).sub(&IntMatrix::identity(k));
        if let Some((row, col)) = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .find(|&(i, j)| sym.get(i, j) != expected.get(i, j))
        {
            return Err(Error::NotDrt {
                identity: "B + B^T = J - I".into(),
                row,
                col,
            });
        }
    }
    Ok(d)
}

/// One identity of the suite, with the location of the first failing
/// entry when it does not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    pub first_failure: Option<(usize, usize)>,
}

/// Outcome of the full identity suite at one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub vertex: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failed(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn compare(name: &str, sides: &[&IntMatrix], checks: &mut Vec<IdentityCheck>) {
    let first = sides[0];
    let mut failure = None;
    'outer: for other in &sides[1..] {
        for i in 0..first.rows() {
            for j in 0..first.cols() {
                if first.get(i, j) != other.get(i, j) {
                    failure = Some((i, j));
                    break 'outer;
                }
            }
        }
    }
    checks.push(IdentityCheck {
        name: name.to_string(),
        passed: failure.is_none(),
        first_failure: failure,
    });
}

/// Checks the nine block identities of a subconstituent decomposition with
/// parameter `u`: the seven product identities and the two normality
/// identities. The report carries every check; nothing is short-circuited.
pub fn verify_subconstituent_identities(
    d: &SubconstituentDecomposition,
    u: usize,
) -> IdentityReport {
    let k = d.block_size();
    let ub = BigInt::from(u as u64);
    let u1 = &ub + BigInt::one();
    let identity = IntMatrix::identity(k);
    let j = IntMatrix::ones(k, k);
    let b1 = &d.b1;
    let b2 = &d.b2;
    let nm = &d.n;
    let nt = nm.transpose();
    let b1t = b1.transpose();
    let b2t = b2.transpose();

    let mut checks = Vec::with_capacity(9);
    compare(
        "N*J = J*N = (u+1)*J",
        &[&nm.mul(&j), &j.mul(nm), &j.scale(&u1)],
        &mut checks,
    );
    compare(
        "B1*J = J*B1 = u*J",
        &[&b1.mul(&j), &j.mul(b1), &j.scale(&ub)],
        &mut checks,
    );
    compare(
        "B2*J = J*B2 = u*J",
        &[&b2.mul(&j), &j.mul(b2), &j.scale(&ub)],
        &mut checks,
    );
    compare(
        "B1^2 + B1 + (u+1)*I = N*N^T",
        &[
            &b1.mul(b1).add(b1).add(&identity.scale(&u1)),
            &nm.mul(&nt),
        ],
        &mut checks,
    );
    compare(
        "B2^2 + B2 + (u+1)*I = N^T*N",
        &[
            &b2.mul(b2).add(b2).add(&identity.scale(&u1)),
            &nt.mul(nm),
        ],
        &mut checks,
    );
    compare(
        "N + B1*N + N*B2 = (u+1)*J",
        &[&nm.add(&b1.mul(nm)).add(&nm.mul(b2)), &j.scale(&u1)],
        &mut checks,
    );
    compare(
        "B2*N^T + N^T*B1 + N^T = (u+1)*J",
        &[&b2.mul(&nt).add(&nt.mul(b1)).add(&nt), &j.scale(&u1)],
        &mut checks,
    );
    compare(
        "B1*B1^T = B1^T*B1",
        &[&b1.mul(&b1t), &b1t.mul(b1)],
        &mut checks,
    );
    compare(
        "B2*B2^T = B2^T*B2",
        &[&b2.mul(&b2t), &b2t.mul(b2)],
        &mut checks,
    );
    IdentityReport {
        vertex: d.vertex,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{directed_triangle, paley_tournament, scheme_from_tournament};

    #[test]
    fn dual_idempotents_triangle() {
        let s = scheme_from_tournament(&directed_triangle());
        let e = dual_idempotents(&s, 0).unwrap();
        assert_eq!(e.parts(), &[vec![0], vec![1], vec![2]]);
        // diagonal matrices sum to the identity
        let total = e
            .matrices()
            .iter()
            .fold(IntMatrix::zeros(3, 3), |acc, m| acc.add(m));
        assert_eq!(total, IntMatrix::identity(3));
    }

    #[test]
    fn dual_idempotents_paley7() {
        let s = scheme_from_tournament(&paley_tournament(7).unwrap());
        let e = dual_idempotents(&s, 0).unwrap();
        assert_eq!(e.part(1), &[1, 2, 4]);
        assert_eq!(e.part(2), &[3, 5, 6]);
    }

    #[test]
    fn dual_idempotents_out_of_range() {
        let s = scheme_from_tournament(&paley_tournament(7).unwrap());
        assert_eq!(
            dual_idempotents(&s, 9),
            Err(Error::VertexOutOfRange { vertex: 9, n: 7 })
        );
    }

    #[test]
    fn triangle_blocks_are_1x1() {
        let d = subconstituents(&directed_triangle(), 0).unwrap();
        assert_eq!(d.b1, IntMatrix::from_i64(1, 1, &[0]));
        assert_eq!(d.b2, IntMatrix::from_i64(1, 1, &[0]));
        assert_eq!(d.n, IntMatrix::from_i64(1, 1, &[1]));
        assert_eq!(d.permutation, vec![0, 1, 2]);
    }

    #[test]
    fn paley7_first_subconstituent_is_a_3_cycle() {
        let d = subconstituents(&paley_tournament(7).unwrap(), 0).unwrap();
        // out-neighbors (1,2,4): arcs 1->2, 2->4, 4->1
        assert_eq!(
            d.b1,
            IntMatrix::from_i64(3, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0])
        );
        // N row sums are u+1 = 2
        for i in 0..3 {
            let sum: i64 = (0..3)
                .map(|j| if d.n.get(i, j).is_one() { 1 } else { 0 })
                .sum();
            assert_eq!(sum, 2);
        }
    }

    #[test]
    fn subconstituents_errors() {
        assert!(matches!(
            subconstituents(&directed_triangle(), 5),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn identities_triangle() {
        let d = subconstituents(&directed_triangle(), 0).unwrap();
        let report = verify_subconstituent_identities(&d, 0);
        assert_eq!(report.checks.len(), 9);
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn identities_paley7_all_vertices() {
        let t = paley_tournament(7).unwrap();
        for x in 0..7 {
            let d = subconstituents(&t, x).unwrap();
            let report = verify_subconstituent_identities(&d, 1);
            assert!(report.all_passed(), "vertex {x}: {report:?}");
        }
    }

    #[test]
    fn transposing_b1_is_caught() {
        let d = subconstituents(&paley_tournament(7).unwrap(), 0).unwrap();
        let corrupted = SubconstituentDecomposition {
            b1: d.b1.transpose(),
            ..d
        };
        let report = verify_subconstituent_identities(&corrupted, 1);
        assert!(!report.all_passed());
        let failed = report.first_failed().unwrap();
        assert!(failed.first_failure.is_some());
        // the mixed product identity with B1 on the left must fail
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "N + B1*N + N*B2 = (u+1)*J" && !c.passed));
    }
}
