//! Tournaments, association-scheme tables, verification, and file I/O.
//!
//! Vertices are 0-based. Relation 0 is always the identity relation.
//!
//! Two plain-text formats are used, both ASCII and newline-terminated:
//!
//! * scheme files: a header line `n d` (order and number of non-identity
//!   classes, so the rank is d+1) followed by n lines of n space-separated
//!   relation indices in 0..=d;
//! * tournament files: a header line `n` followed by n lines of n
//!   characters, each '0' or '1'.
//!
//! Parsers reject trailing garbage and report the first offending line.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::modp::is_prime;
use crate::poly::IntPoly;

/// A tournament given by its 0/1 adjacency matrix: zero diagonal and
/// exactly one arc between every pair of distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    adjacency: IntMatrix,
}

impl Tournament {
    /// Validates the tournament invariants.
    pub fn new(adjacency: IntMatrix) -> Result<Self> {
        let n = adjacency.rows();
        if adjacency.cols() != n {
            return Err(Error::NonSquare {
                rows: adjacency.rows(),
                cols: adjacency.cols(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let a = adjacency.get(i, j);
                if !a.is_zero() && !a.is_one() {
                    return Err(Error::InvariantViolation {
                        row: i,
                        col: j,
                        msg: format!("adjacency entry {a} is not 0 or 1"),
                    });
                }
            }
        }
        for i in 0..n {
            if !adjacency.get(i, i).is_zero() {
                return Err(Error::InvariantViolation {
                    row: i,
                    col: i,
                    msg: "diagonal must be zero".into(),
                });
            }
            for j in 0..i {
                let forward = adjacency.get(i, j).is_one();
                let backward = adjacency.get(j, i).is_one();
                if forward == backward {
                    return Err(Error::InvariantViolation {
                        row: i,
                        col: j,
                        msg: if forward {
                            "two-cycle: both arcs present".into()
                        } else {
                            "missing arc between distinct vertices".into()
                        },
                    });
                }
            }
        }
        Ok(Tournament { n, adjacency })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &IntMatrix {
        &self.adjacency
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.adjacency.get(from, to).is_one()
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_arc(v, u)).collect()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_arc(u, v)).collect()
    }

    /// Applies a vertex relabeling: vertex i becomes perm[i].
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        let mut adj = IntMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.has_arc(i, j) {
                    adj.set(perm[i], perm[j], BigInt::one());
                }
            }
        }
        Tournament::new(adj)
    }
}

/// An association-scheme relation table: entry (i, j) is the index of the
/// relation containing the pair, 0 being the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeTable {
    n: usize,
    rank: usize,
    relations: Vec<u32>,
}

impl SchemeTable {
    /// Validates the diagonal and transpose-closure invariants.
    pub fn new(n: usize, rank: usize, relations: Vec<u32>) -> Result<Self> {
        if relations.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: relations.len(),
            });
        }
        let table = SchemeTable { n, rank, relations };
        for i in 0..n {
            if table.relation(i, i) != 0 {
                return Err(Error::InvariantViolation {
                    row: i,
                    col: i,
                    msg: "diagonal must be relation 0".into(),
                });
            }
            for j in 0..n {
                let k = table.relation(i, j);
                if k as usize >= rank {
                    return Err(Error::InvariantViolation {
                        row: i,
                        col: j,
                        msg: format!("relation index {k} out of range for rank {rank}"),
                    });
                }
                if i != j && k == 0 {
                    return Err(Error::InvariantViolation {
                        row: i,
                        col: j,
                        msg: "relation 0 off the diagonal".into(),
                    });
                }
            }
        }
        // transpose closure: the transpose of each class is a single class
        let mut paired = vec![None::<u32>; rank];
        for i in 0..n {
            for j in 0..n {
                let k = table.relation(i, j) as usize;
                let kt = table.relation(j, i);
                match paired[k] {
                    None => paired[k] = Some(kt),
                    Some(expect) if expect == kt => {}
                    Some(expect) => {
                        return Err(Error::InvariantViolation {
                            row: i,
                            col: j,
                            msg: format!(
                                "transpose of relation {k} is both {expect} and {kt}"
                            ),
                        });
                    }
                }
            }
        }
        Ok(table)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relation(&self, i: usize, j: usize) -> u32 {
        self.relations[i * self.n + j]
    }

    /// 0/1 adjacency matrix of one relation class.
    pub fn relation_matrix(&self, k: u32) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            if self.relation(i, j) == k {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.relation(i, j) == self.relation(j, i)))
    }

    /// Applies a vertex relabeling: vertex i becomes perm[i].
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        let mut relations = vec![0u32; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                relations[perm[i] * self.n + perm[j]] = self.relation(i, j);
            }
        }
        SchemeTable::new(self.n, self.rank, relations)
    }
}

/// Order parameters of a doubly regular tournament of order 4u+3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrtParameters {
    u: usize,
    alpha_poly: IntPoly,
}

impl DrtParameters {
    pub fn new(u: usize) -> Self {
        DrtParameters {
            u,
            alpha_poly: alpha_poly(u),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn order(&self) -> usize {
        4 * self.u + 3
    }

    /// x^2 + x + (u+1), the minimal polynomial of the irrational pair of
    /// eigenvalues (-1 ± sqrt(-n))/2.
    pub fn alpha_poly(&self) -> &IntPoly {
        &self.alpha_poly
    }
}

/// x^2 + x + (u+1).
pub fn alpha_poly(u: usize) -> IntPoly {
    IntPoly::new(vec![BigInt::from(u as u64 + 1), BigInt::one(), BigInt::one()])
}

/// x^2 + x - u, the analogue for conference graphs of order 4u+1.
pub fn conference_alpha_poly(u: usize) -> IntPoly {
    IntPoly::new(vec![-BigInt::from(u as u64), BigInt::one(), BigInt::one()])
}

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

/// Rank-3 table of a tournament: relation 1 holds the arcs, relation 2 the
/// reversed arcs.
pub fn scheme_from_tournament(t: &Tournament) -> SchemeTable {
    let n = t.order();
    let mut relations = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            relations[i * n + j] = if t.has_arc(i, j) { 1 } else { 2 };
        }
    }
    SchemeTable::new(n, 3, relations).expect("tournament invariants imply table invariants")
}

/// Recovers the tournament from an asymmetric rank-3 table (relation 1).
pub fn tournament_from_scheme(s: &SchemeTable) -> Result<Tournament> {
    if s.rank() != 3 {
        return Err(Error::RelationOutOfRange {
            index: 2,
            rank: s.rank(),
        });
    }
    Tournament::new(s.relation_matrix(1))
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

fn first_difference(a: &IntMatrix, b: &IntMatrix) -> Option<(usize, usize)> {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.get(i, j) != b.get(i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

fn check_identity(lhs: &IntMatrix, rhs: &IntMatrix, name: &str) -> Result<()> {
    if let Some((row, col)) = first_difference(lhs, rhs) {
        return Err(Error::NotDrt {
            identity: name.into(),
            row,
            col,
        });
    }
    Ok(())
}

/// Verifies that the tournament is doubly regular: order 4u+3 and the
/// product identities
///   A1*A1^T = A1^T*A1 = (2u+1)I + u*A1 + u*A1^T,
///   A1^2 = u*A1 + (u+1)*A1^T,
///   A1^2 + A1 + (u+1)I = (u+1)J.
pub fn verify_drt(t: &Tournament) -> Result<DrtParameters> {
    let n = t.order();
    if n % 4 != 3 {
        return Err(Error::BadOrder { n });
    }
    let u = (n - 3) / 4;
    let ub = BigInt::from(u as u64);
    let a1 = t.adjacency();
    let a1t = a1.transpose();
    let identity = IntMatrix::identity(n);
    let j = IntMatrix::ones(n, n);

    let expected = identity
        .scale(&BigInt::from(2 * u as u64 + 1))
        .add(&a1.scale(&ub))
        .add(&a1t.scale(&ub));
    let prod = a1.mul(&a1t);
    check_identity(&prod, &expected, "A1*A1^T = (2u+1)I + u*A1 + u*A1^T")?;
    let prod_rev = a1t.mul(a1);
    check_identity(&prod_rev, &expected, "A1^T*A1 = (2u+1)I + u*A1 + u*A1^T")?;

    let a1sq = a1.mul(a1);
    let expected = a1.scale(&ub).add(&a1t.scale(&(&ub + 1)));
    check_identity(&a1sq, &expected, "A1^2 = u*A1 + (u+1)*A1^T")?;

    let lhs = a1sq.add(a1).add(&identity.scale(&(&ub + 1)));
    let rhs = j.scale(&(&ub + 1));
    check_identity(&lhs, &rhs, "A1^2 + A1 + (u+1)I = (u+1)J")?;

    Ok(DrtParameters::new(u))
}

/// Verifies the conference-graph scheme: symmetric rank 3, order 4u+1, and
/// A1^2 = 2u*I + (u-1)*A1 + u*A2. Returns u.
pub fn verify_conference(s: &SchemeTable) -> Result<usize> {
    if s.rank() != 3 {
        return Err(Error::NotConference(format!(
            "rank {} instead of 3",
            s.rank()
        )));
    }
    if !s.is_symmetric() {
        return Err(Error::NotConference("table is not symmetric".into()));
    }
    let n = s.order();
    if n % 4 != 1 || n < 5 {
        return Err(Error::NotConference(format!(
            "order {n} is not 4u+1 with u >= 1"
        )));
    }
    let u = (n - 1) / 4;
    let ub = BigInt::from(u as u64);
    let a1 = s.relation_matrix(1);
    let a2 = s.relation_matrix(2);
    let lhs = a1.mul(&a1);
    let rhs = IntMatrix::identity(n)
        .scale(&(&ub * 2))
        .add(&a1.scale(&(&ub - 1)))
        .add(&a2.scale(&ub));
    if let Some((row, col)) = first_difference(&lhs, &rhs) {
        return Err(Error::NotConference(format!(
            "A1^2 = 2u*I + (u-1)*A1 + u*A2 fails at ({row},{col})"
        )));
    }
    Ok(u)
}

// ---------------------------------------------------------------------------
// Paley constructions
// ---------------------------------------------------------------------------

fn quadratic_residues(p: u64) -> Vec<bool> {
    let mut is_qr = vec![false; p as usize];
    for x in 1..p {
        is_qr[((x * x) % p) as usize] = true;
    }
    is_qr
}

/// Paley tournament on a prime p = 3 mod 4: arc i -> j iff j - i is a
/// nonzero quadratic residue mod p.
pub fn paley_tournament(p: u64) -> Result<Tournament> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 3 {
        return Err(Error::WrongResidueClass { n: p, want: 3 });
    }
    let qr = quadratic_residues(p);
    let n = p as usize;
    let adj = IntMatrix::from_fn(n, n, |i, j| {
        let diff = ((j + n - i) % n) as u64;
        if diff != 0 && qr[diff as usize] {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    Tournament::new(adj)
}

/// Paley-graph conference scheme on a prime p = 1 mod 4: relation 1 joins
/// vertices whose difference is a nonzero square. The conference identity
/// is verified before returning.
pub fn paley_graph_scheme(p: u64) -> Result<SchemeTable> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(Error::WrongResidueClass { n: p, want: 1 });
    }
    let qr = quadratic_residues(p);
    let n = p as usize;
    let mut relations = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let diff = ((j + n - i) % n) as u64;
            relations[i * n + j] = if qr[diff as usize] { 1 } else { 2 };
        }
    }
    let table = SchemeTable::new(n, 3, relations)?;
    verify_conference(&table)?;
    Ok(table)
}

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

fn split_lines(text: &str) -> Result<Vec<&str>> {
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(Error::Syntax {
            line: text.lines().count(),
            msg: "file must be newline-terminated".into(),
        });
    }
    Ok(text.lines().collect())
}

pub fn parse_scheme(text: &str) -> Result<SchemeTable> {
    let lines = split_lines(text)?;
    if lines.is_empty() {
        return Err(Error::Syntax {
            line: 1,
            msg: "missing header line".into(),
        });
    }
    let header: Vec<&str> = lines[0].split_whitespace().collect();
    if header.len() != 2 {
        return Err(Error::Syntax {
            line: 1,
            msg: format!("expected `n d`, got {:?}", lines[0]),
        });
    }
    let n: usize = header[0].parse().map_err(|_| Error::Syntax {
        line: 1,
        msg: format!("bad order {:?}", header[0]),
    })?;
    let d: usize = header[1].parse().map_err(|_| Error::Syntax {
        line: 1,
        msg: format!("bad class count {:?}", header[1]),
    })?;
    if lines.len() != n + 1 {
        return Err(Error::Syntax {
            line: lines.len(),
            msg: format!("expected {} rows, found {}", n, lines.len() - 1),
        });
    }
    let mut relations = Vec::with_capacity(n * n);
    for (i, line) in lines[1..].iter().enumerate() {
        let row: Vec<&str> = line.split_whitespace().collect();
        if row.len() != n {
            return Err(Error::Syntax {
                line: i + 2,
                msg: format!("expected {} entries, found {}", n, row.len()),
            });
        }
        for item in row {
            let k: u32 = item.parse().map_err(|_| Error::Syntax {
                line: i + 2,
                msg: format!("bad relation index {item:?}"),
            })?;
            relations.push(k);
        }
    }
    SchemeTable::new(n, d + 1, relations)
}

pub fn serialize_scheme(s: &SchemeTable) -> String {
    let mut out = format!("{} {}\n", s.order(), s.rank() - 1);
    for i in 0..s.order() {
        let row: Vec<String> = (0..s.order())
            .map(|j| s.relation(i, j).to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_tournament(text: &str) -> Result<Tournament> {
    let lines = split_lines(text)?;
    if lines.is_empty() {
        return Err(Error::Syntax {
            line: 1,
            msg: "missing header line".into(),
        });
    }
    let header: Vec<&str> = lines[0].split_whitespace().collect();
    if header.len() != 1 {
        return Err(Error::Syntax {
            line: 1,
            msg: format!("expected `n`, got {:?}", lines[0]),
        });
    }
    let n: usize = header[0].parse().map_err(|_| Error::Syntax {
        line: 1,
        msg: format!("bad order {:?}", header[0]),
    })?;
    if lines.len() != n + 1 {
        return Err(Error::Syntax {
            line: lines.len(),
            msg: format!("expected {} rows, found {}", n, lines.len() - 1),
        });
    }
    let mut adj = IntMatrix::zeros(n, n);
    for (i, line) in lines[1..].iter().enumerate() {
        if line.chars().count() != n {
            return Err(Error::Syntax {
                line: i + 2,
                msg: format!("expected {} characters, found {}", n, line.chars().count()),
            });
        }
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => adj.set(i, j, BigInt::one()),
                other => {
                    return Err(Error::Syntax {
                        line: i + 2,
                        msg: format!("bad character {other:?}"),
                    })
                }
            }
        }
    }
    Tournament::new(adj)
}

pub fn serialize_tournament(t: &Tournament) -> String {
    let n = t.order();
    let mut out = format!("{n}\n");
    for i in 0..n {
        for j in 0..n {
            out.push(if t.has_arc(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// The order-3 directed triangle, the smallest doubly regular tournament.
pub fn directed_triangle() -> Tournament {
    paley_tournament(3).expect("3 is a prime congruent to 3 mod 4")
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE_TABLE: &str = "3 2\n0 1 2\n2 0 1\n1 2 0\n";

    #[test]
    fn parse_triangle_scheme() {
        let s = parse_scheme(TRIANGLE_TABLE).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(s.rank(), 3);
        assert_eq!(s.relation(0, 1), 1);
        assert_eq!(s.relation(1, 0), 2);
        assert_eq!(serialize_scheme(&s), TRIANGLE_TABLE);
    }

    #[test]
    fn parse_rejects_nonzero_diagonal() {
        let text = "2 2\n1 1\n1 0\n";
        assert!(matches!(
            parse_scheme(text),
            Err(Error::InvariantViolation { row: 0, col: 0, .. })
        ));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(matches!(
            parse_scheme("3 2\n0 1 2\n2 0 1\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_scheme("3 2\n0 1 2\n2 0 1\n1 2 0"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_scheme("3 2\n0 1 2\n2 0 x\n1 2 0\n"),
            Err(Error::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_scheme("3\n0 1 2\n2 0 1\n1 2 0\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn parse_rejects_broken_transpose_closure() {
        // relation 1 transposes to both 1 and 2
        let text = "3 2\n0 1 1\n1 0 2\n2 1 0\n";
        assert!(matches!(
            parse_scheme(text),
            Err(Error::InvariantViolation { .. })
        ));
    }

    #[test]
    fn tournament_roundtrip_and_validation() {
        let t = paley_tournament(7).unwrap();
        let text = serialize_tournament(&t);
        assert_eq!(parse_tournament(&text).unwrap(), t);

        // a two-cycle is rejected
        let adj = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert!(matches!(
            Tournament::new(adj),
            Err(Error::InvariantViolation { .. })
        ));
        // a missing arc is rejected
        let adj = IntMatrix::from_i64(2, 2, &[0, 0, 0, 0]);
        assert!(matches!(
            Tournament::new(adj),
            Err(Error::InvariantViolation { .. })
        ));
    }

    #[test]
    fn scheme_from_triangle() {
        let s = scheme_from_tournament(&directed_triangle());
        assert_eq!(serialize_scheme(&s), TRIANGLE_TABLE);
        let t = tournament_from_scheme(&s).unwrap();
        assert_eq!(t, directed_triangle());
    }

    #[test]
    fn scheme_from_paley7_has_out_degree_3() {
        let s = scheme_from_tournament(&paley_tournament(7).unwrap());
        assert_eq!(s.order(), 7);
        for i in 0..7 {
            let deg = (0..7).filter(|&j| s.relation(i, j) == 1).count();
            assert_eq!(deg, 3);
        }
    }

    #[test]
    fn paley7_out_neighbors_of_zero() {
        let t = paley_tournament(7).unwrap();
        assert_eq!(t.out_neighbors(0), vec![1, 2, 4]);
    }

    #[test]
    fn paley_small_cases_and_errors() {
        let t3 = paley_tournament(3).unwrap();
        assert_eq!(t3.out_neighbors(0), vec![1]);
        assert_eq!(paley_tournament(5), Err(Error::WrongResidueClass { n: 5, want: 3 }));
        assert_eq!(paley_tournament(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn verify_drt_triangle_and_paley() {
        assert_eq!(verify_drt(&directed_triangle()).unwrap().u(), 0);
        assert_eq!(verify_drt(&paley_tournament(7).unwrap()).unwrap().u(), 1);
    }

    #[test]
    fn verify_drt_rejects_wrong_order() {
        // the rotational tournament on 5 vertices: i beats i+1, i+2
        let adj = IntMatrix::from_fn(5, 5, |i, j| {
            let d = (j + 5 - i) % 5;
            if d == 1 || d == 2 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        let t = Tournament::new(adj).unwrap();
        assert_eq!(verify_drt(&t), Err(Error::BadOrder { n: 5 }));
    }

    #[test]
    fn verify_drt_rejects_non_doubly_regular() {
        // order 7 tournament that is regular but not doubly regular:
        // rotational with classes {1,2,3}
        let adj = IntMatrix::from_fn(7, 7, |i, j| {
            let d = (j + 7 - i) % 7;
            if (1..=3).contains(&d) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        let t = Tournament::new(adj).unwrap();
        assert!(matches!(verify_drt(&t), Err(Error::NotDrt { .. })));
    }

    #[test]
    fn paley_family_verifies_up_to_31() {
        for p in [3u64, 7, 11, 19, 23, 31] {
            let t = paley_tournament(p).unwrap();
            let params = verify_drt(&t).unwrap();
            assert_eq!(params.order() as u64, p);
            let valency = 2 * params.u() + 1;
            for v in 0..t.order() {
                assert_eq!(t.out_neighbors(v).len(), valency, "p={p} v={v}");
                assert_eq!(t.in_neighbors(v).len(), valency, "p={p} v={v}");
            }
        }
    }

    #[test]
    fn paley_graph_five_cycle() {
        let s = paley_graph_scheme(5).unwrap();
        assert_eq!(verify_conference(&s).unwrap(), 1);
        // the squares mod 5 are {1,4}: a 5-cycle
        for i in 0..5usize {
            let nbrs: Vec<usize> = (0..5).filter(|&j| s.relation(i, j) == 1).collect();
            assert_eq!(nbrs.len(), 2);
            assert!(nbrs.contains(&((i + 1) % 5)));
            assert!(nbrs.contains(&((i + 4) % 5)));
        }
    }

    #[test]
    fn paley_graph_13_and_errors() {
        let s = paley_graph_scheme(13).unwrap();
        assert_eq!(verify_conference(&s).unwrap(), 3);
        for i in 0..13usize {
            let deg = (0..13).filter(|&j| s.relation(i, j) == 1).count();
            assert_eq!(deg, 6);
        }
        assert_eq!(
            paley_graph_scheme(7),
            Err(Error::WrongResidueClass { n: 7, want: 1 })
        );
        assert_eq!(paley_graph_scheme(15), Err(Error::NotPrime(15)));
    }

    #[test]
    fn paley_graph_symmetric_and_conference_up_to_17() {
        for p in [5u64, 13, 17] {
            let s = paley_graph_scheme(p).unwrap();
            assert!(s.is_symmetric(), "p={p}");
            verify_conference(&s).unwrap();
        }
    }

    #[test]
    fn relabel_preserves_tournament_structure() {
        let t = paley_tournament(7).unwrap();
        let perm = [3usize, 0, 6, 1, 4, 2, 5];
        let r = t.relabel(&perm).unwrap();
        verify_drt(&r).unwrap();
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(t.has_arc(i, j), r.has_arc(perm[i], perm[j]));
            }
        }
    }
}
