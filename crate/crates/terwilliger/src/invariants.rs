//! Per-vertex algebra invariants: closed-form complex dimensions, rational
//! Wedderburn signatures, the span-closure oracle, vertex profiles, and
//! scheme comparison.
//!
//! For a doubly regular tournament of order 4u+3 the subconstituent
//! algebra at a vertex decomposes with one primary 3-dimensional module,
//! four 1-dimensional modules exactly when x^2+x+(u+1) divides the
//! characteristic polynomial of B1, and one Galois class of 2-dimensional
//! modules per remaining distinct irreducible factor. All eigenvalue
//! bookkeeping is polynomial factorization; nothing is ever computed
//! numerically. The span-closure oracle is an independent route to the
//! dimension and is used to cross-check every closed-form value.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::factor::{factor_over_q, FactoredPoly};
use crate::matrix::{IntMatrix, RatMatrix};
use crate::numfield::{
    fields_isomorphic, make_descriptor, NumberFieldDescriptor, VerdictKind, DEFAULT_PRIME_BUDGET,
};
use crate::poly::IntPoly;
use crate::scheme::{
    conference_alpha_poly, scheme_from_tournament, tournament_from_scheme, verify_conference,
    verify_drt, SchemeTable, Tournament,
};
use crate::span::span_closure;
use crate::subconstituent::{dual_idempotents, subconstituents};

/// Spectrum bookkeeping for one first subconstituent: the characteristic
/// polynomial of B1, the Perron (row-sum) eigenvalue, and the factored
/// remainder after removing one copy of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralData {
    pub charpoly_b1: IntPoly,
    pub perron: i64,
    pub eperp_factors: FactoredPoly,
}

/// Computes the spectral data of a block with the given Perron eigenvalue,
/// removing exactly one copy of `x - perron`. When `require_simple` is set
/// the Perron root must not recur in the remainder.
pub fn spectral_data(
    block: &IntMatrix,
    perron: i64,
    vertex: usize,
    require_simple: bool,
) -> Result<SpectralData> {
    let charpoly_b1 = block.charpoly()?;
    let linear = IntPoly::from_i64(&[-perron, 1]);
    let quotient = charpoly_b1
        .div_exact(&linear)
        .ok_or(Error::PerronMissing { vertex, perron })?;
    if require_simple && quotient.eval(&BigInt::from(perron)) == BigInt::from(0) {
        return Err(Error::PerronMissing { vertex, perron });
    }
    let eperp_factors = factor_over_q(&quotient)?;
    Ok(SpectralData {
        charpoly_b1,
        perron,
        eperp_factors,
    })
}

/// Closed-form complex invariant at one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexInvariant {
    pub vertex: usize,
    /// Dimension of the algebra: 9 + 4*epsilon + 4*m2.
    pub dim: usize,
    /// Whether the irrational eigenvalue pair occurs, i.e. whether there
    /// are 1-dimensional irreducible modules.
    pub epsilon: bool,
    /// Number of non-isomorphic 2-dimensional irreducible modules, the sum
    /// of the degrees of the distinct non-Perron irreducible factors other
    /// than the eigenvalue-pair polynomial.
    pub m2: usize,
    /// Multiplicity of the eigenvalue-pair polynomial.
    pub d_alpha: usize,
    /// Distinct irreducible factors of the Perron-removed characteristic
    /// polynomial of B1, with multiplicities, canonically sorted.
    pub distinct_factors: Vec<(IntPoly, usize)>,
}

fn invariant_from_spectral(
    vertex: usize,
    spectral: &SpectralData,
    alpha: &IntPoly,
) -> ComplexInvariant {
    let mut epsilon = false;
    let mut d_alpha = 0usize;
    let mut m2 = 0usize;
    for (f, mult) in spectral.eperp_factors.factors() {
        if f == alpha {
            epsilon = true;
            d_alpha = *mult;
        } else {
            m2 += f.degree().unwrap_or(0);
        }
    }
    let dim = 9 + 4 * usize::from(epsilon) + 4 * m2;
    ComplexInvariant {
        vertex,
        dim,
        epsilon,
        m2,
        d_alpha,
        distinct_factors: spectral.eperp_factors.factors().to_vec(),
    }
}

/// Complex invariant of a doubly regular tournament at a vertex. The
/// Perron eigenvalue u must be a simple root of the characteristic
/// polynomial of B1; anything else signals corrupted input.
pub fn complex_invariant(t: &Tournament, x: usize) -> Result<ComplexInvariant> {
    let params = verify_drt(t)?;
    let d = subconstituents(t, x)?;
    let spectral = spectral_data(&d.b1, params.u() as i64, x, true)?;
    Ok(invariant_from_spectral(x, &spectral, params.alpha_poly()))
}

/// Complex invariant of a conference-graph scheme at a vertex: the same
/// pipeline with Perron eigenvalue u-1 and eigenvalue-pair polynomial
/// x^2+x-u. Only one copy of the Perron root is removed; it may legally
/// recur in the remainder (the neighborhood can even be edgeless).
pub fn conference_invariant(s: &SchemeTable, x: usize) -> Result<ComplexInvariant> {
    let u = verify_conference(s)?;
    if x >= s.order() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: s.order(),
        });
    }
    let e = dual_idempotents(s, x)?;
    let part = e.part(1);
    let b1 = IntMatrix::from_fn(part.len(), part.len(), |i, j| {
        if s.relation(part[i], part[j]) == 1 {
            BigInt::from(1)
        } else {
            BigInt::from(0)
        }
    });
    let spectral = spectral_data(&b1, u as i64 - 1, x, false)?;
    Ok(invariant_from_spectral(
        x,
        &spectral,
        &conference_alpha_poly(u),
    ))
}

/// One simple summand of the rational algebra: a size-by-size matrix ring
/// over a number field. The Schur index of a thin module is always 1, so
/// no division algebra ever appears.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnComponent {
    pub size: usize,
    pub center: NumberFieldDescriptor,
}

impl WedderburnComponent {
    pub fn schur_index(&self) -> usize {
        1
    }

    /// Contribution to the rational dimension: size^2 * [center : Q].
    pub fn rational_dim(&self) -> usize {
        self.size * self.size * self.center.degree()
    }
}

impl PartialOrd for WedderburnComponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WedderburnComponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.center.degree().cmp(&other.center.degree()))
            .then_with(|| self.center.cmp(&other.center))
    }
}

impl std::fmt::Display for WedderburnComponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "M{}({})", self.size, self.center)
    }
}

/// Canonically sorted multiset of Wedderburn components at one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSignature {
    pub vertex: usize,
    pub components: Vec<WedderburnComponent>,
}

impl RationalSignature {
    /// Total rational dimension, which equals the complex dimension.
    pub fn rational_dimension(&self) -> usize {
        self.components.iter().map(|c| c.rational_dim()).sum()
    }

    /// Ordering that ignores the vertex label; used for multiset views.
    pub fn cmp_canonical(&self, other: &Self) -> std::cmp::Ordering {
        self.components.cmp(&other.components)
    }
}

impl std::fmt::Display for RationalSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rational Wedderburn signature of a doubly regular tournament at a
/// vertex: one size-3 component over the rationals (the primary module),
/// two size-1 components with center Q[x]/(x^2+x+(u+1)) when the
/// irrational eigenvalue pair occurs, and one size-2 component with center
/// Q[x]/(f) for every other distinct irreducible factor f.
pub fn rational_signature(t: &Tournament, x: usize) -> Result<RationalSignature> {
    let params = verify_drt(t)?;
    let inv = complex_invariant(t, x)?;
    let alpha = params.alpha_poly();
    let mut components = Vec::new();
    let rationals = make_descriptor(&IntPoly::from_i64(&[0, 1]), DEFAULT_PRIME_BUDGET)?;
    components.push(WedderburnComponent {
        size: 3,
        center: rationals,
    });
    if inv.epsilon {
        let center = make_descriptor(alpha, DEFAULT_PRIME_BUDGET)?;
        for _ in 0..2 {
            components.push(WedderburnComponent {
                size: 1,
                center: center.clone(),
            });
        }
    }
    for (f, _) in &inv.distinct_factors {
        if f == alpha {
            continue;
        }
        components.push(WedderburnComponent {
            size: 2,
            center: make_descriptor(f, DEFAULT_PRIME_BUDGET)?,
        });
    }
    components.sort();
    let sig = RationalSignature {
        vertex: x,
        components,
    };
    debug_assert_eq!(sig.rational_dimension(), inv.dim);
    Ok(sig)
}

// ---------------------------------------------------------------------------
// Span-closure oracle
// ---------------------------------------------------------------------------

/// Dimension of the algebra generated by all relation matrices and all
/// dual idempotents at `x`, via span closure. Works for any rank.
pub fn oracle_dimension(s: &SchemeTable, x: usize) -> Result<usize> {
    let basis = closure_basis(s, x)?;
    Ok(basis.len())
}

fn closure_basis(s: &SchemeTable, x: usize) -> Result<crate::span::SpanBasis> {
    let e = dual_idempotents(s, x)?;
    let mut generators: Vec<IntMatrix> = (0..s.rank() as u32)
        .map(|k| s.relation_matrix(k))
        .collect();
    generators.extend(e.matrices());
    span_closure(&generators)
}

/// Checks commutativity of the corner algebra cut out by the dual
/// idempotent of relation `i` at vertex `x`: every pair drawn from a
/// spanning set of the corner must commute exactly.
pub fn oracle_corner_commutative(s: &SchemeTable, x: usize, i: u32) -> Result<bool> {
    if (i as usize) >= s.rank() {
        return Err(Error::RelationOutOfRange {
            index: i as usize,
            rank: s.rank(),
        });
    }
    let e = dual_idempotents(s, x)?;
    let basis = closure_basis(s, x)?;
    let n = s.order();
    let part = e.part(i as usize);
    let in_part: Vec<bool> = {
        let mut v = vec![false; n];
        for &u in part {
            v[u] = true;
        }
        v
    };
    // project each basis element to its corner block and span those
    let mut corner = crate::span::SpanBasis::new(n * n);
    for row in basis.rows() {
        let mut projected = row.clone();
        for a in 0..n {
            for b in 0..n {
                if !(in_part[a] && in_part[b]) {
                    projected[a * n + b] = num_rational::BigRational::from_integer(0.into());
                }
            }
        }
        corner.insert(projected)?;
    }
    let mats: Vec<RatMatrix> = corner
        .rows()
        .iter()
        .map(|r| RatMatrix::from_flat(n, r.clone()))
        .collect();
    for (idx, a) in mats.iter().enumerate() {
        for b in &mats[idx + 1..] {
            if a.mul(b) != b.mul(a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

/// Complex dimensions at every vertex of a doubly regular tournament,
/// indexed by vertex.
pub fn complex_dims_drt(t: &Tournament) -> Result<Vec<usize>> {
    (0..t.order()).map(|x| Ok(complex_invariant(t, x)?.dim)).collect()
}

/// Complex dimensions at every vertex of a conference-graph scheme.
pub fn complex_dims_conference(s: &SchemeTable) -> Result<Vec<usize>> {
    (0..s.order())
        .map(|x| Ok(conference_invariant(s, x)?.dim))
        .collect()
}

/// Rational signatures at every vertex, indexed by vertex.
pub fn rational_signatures_drt(t: &Tournament) -> Result<Vec<RationalSignature>> {
    (0..t.order()).map(|x| rational_signature(t, x)).collect()
}

/// Multiset view of a dimension list: (dim, count) pairs, dims descending.
pub fn dim_profile(dims: &[usize]) -> Vec<(usize, usize)> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &d in dims {
        *counts.entry(d).or_insert(0) += 1;
    }
    counts.into_iter().rev().collect()
}

/// Formats a dimension profile the way dimension tables are usually
/// printed: `(49^9,45^1,33^9,17^1)`, dims descending.
pub fn format_dim_profile(dims: &[usize]) -> String {
    let parts: Vec<String> = dim_profile(dims)
        .into_iter()
        .map(|(d, c)| format!("{d}^{c}"))
        .collect();
    format!("({})", parts.join(","))
}

/// Multiset view of a signature list: canonical sort, then (signature,
/// count) pairs.
pub fn signature_profile(signatures: &[RationalSignature]) -> Vec<(RationalSignature, usize)> {
    let mut sorted: Vec<&RationalSignature> = signatures.iter().collect();
    sorted.sort_by(|a, b| a.cmp_canonical(b));
    let mut out: Vec<(RationalSignature, usize)> = Vec::new();
    for sig in sorted {
        match out.last_mut() {
            Some((prev, count)) if prev.cmp_canonical(sig).is_eq() => *count += 1,
            _ => out.push(((*sig).clone(), 1)),
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Scheme comparison
// ---------------------------------------------------------------------------

/// A verified input: either a doubly regular tournament or a
/// conference-graph scheme.
#[derive(Clone, Debug)]
pub enum SchemeData {
    Drt(Tournament),
    Conference(SchemeTable),
}

impl SchemeData {
    /// Verifies a tournament.
    pub fn from_tournament(t: Tournament) -> Result<Self> {
        verify_drt(&t)?;
        Ok(SchemeData::Drt(t))
    }

    /// Classifies a scheme table: symmetric rank 3 becomes a conference
    /// scheme, asymmetric rank 3 a tournament; anything else is rejected.
    pub fn from_scheme_table(s: SchemeTable) -> Result<Self> {
        if s.rank() != 3 {
            return Err(Error::Unsupported(format!(
                "rank {} schemes have no invariant pipeline; only the span-closure oracle applies",
                s.rank()
            )));
        }
        if s.is_symmetric() {
            verify_conference(&s)?;
            Ok(SchemeData::Conference(s))
        } else {
            let t = tournament_from_scheme(&s)?;
            Self::from_tournament(t)
        }
    }

    pub fn order(&self) -> usize {
        match self {
            SchemeData::Drt(t) => t.order(),
            SchemeData::Conference(s) => s.order(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SchemeData::Drt(_) => "doubly regular tournament",
            SchemeData::Conference(_) => "conference-graph scheme",
        }
    }

    /// The relation table (built from the tournament when needed).
    pub fn table(&self) -> SchemeTable {
        match self {
            SchemeData::Drt(t) => scheme_from_tournament(t),
            SchemeData::Conference(s) => s.clone(),
        }
    }

    pub fn complex_dims(&self) -> Result<Vec<usize>> {
        match self {
            SchemeData::Drt(t) => complex_dims_drt(t),
            SchemeData::Conference(s) => complex_dims_conference(s),
        }
    }

    pub fn rational_signatures(&self) -> Result<Vec<RationalSignature>> {
        match self {
            SchemeData::Drt(t) => rational_signatures_drt(t),
            SchemeData::Conference(_) => Err(Error::Unsupported(
                "rational signatures are defined for doubly regular tournaments only".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComparisonMode {
    Complex,
    Rational,
}

/// A certified signature difference: a component present on one side with
/// no isomorphic partner on the other, at a matched position of the
/// canonically sorted per-vertex signature lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureWitness {
    pub signature_index: usize,
    pub left: Option<WedderburnComponent>,
    pub right: Option<WedderburnComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompareVerdict {
    DistinguishedByOrder {
        left: usize,
        right: usize,
    },
    DistinguishedByComplexDims {
        dim: usize,
        left_count: usize,
        right_count: usize,
    },
    DistinguishedByRationalSignature(SignatureWitness),
    NotDistinguished,
    /// Every mismatch rests on a ProbablyYes field comparison.
    Inconclusive,
}

impl CompareVerdict {
    pub fn is_distinguished(&self) -> bool {
        matches!(
            self,
            CompareVerdict::DistinguishedByOrder { .. }
                | CompareVerdict::DistinguishedByComplexDims { .. }
                | CompareVerdict::DistinguishedByRationalSignature(_)
        )
    }
}

/// Compares two verified schemes by their invariant lists.
pub fn compare_schemes(
    a: &SchemeData,
    b: &SchemeData,
    mode: ComparisonMode,
) -> Result<CompareVerdict> {
    if a.order() != b.order() {
        return Ok(CompareVerdict::DistinguishedByOrder {
            left: a.order(),
            right: b.order(),
        });
    }
    match mode {
        ComparisonMode::Complex => {
            let da = a.complex_dims()?;
            let db = b.complex_dims()?;
            Ok(compare_dim_multisets(&da, &db))
        }
        ComparisonMode::Rational => {
            let sa = a.rational_signatures()?;
            let sb = b.rational_signatures()?;
            Ok(compare_signature_multisets(&sa, &sb))
        }
    }
}

fn compare_dim_multisets(a: &[usize], b: &[usize]) -> CompareVerdict {
    let count = |dims: &[usize]| {
        let mut m: BTreeMap<usize, usize> = BTreeMap::new();
        for &d in dims {
            *m.entry(d).or_insert(0) += 1;
        }
        m
    };
    let ca = count(a);
    let cb = count(b);
    let mut all_dims: Vec<usize> = ca.keys().chain(cb.keys()).copied().collect();
    all_dims.sort_unstable();
    all_dims.dedup();
    for d in all_dims {
        let la = ca.get(&d).copied().unwrap_or(0);
        let lb = cb.get(&d).copied().unwrap_or(0);
        if la != lb {
            return CompareVerdict::DistinguishedByComplexDims {
                dim: d,
                left_count: la,
                right_count: lb,
            };
        }
    }
    CompareVerdict::NotDistinguished
}

enum CenterEq {
    Equal,
    Unknown,
    Different,
}

fn center_eq(a: &WedderburnComponent, b: &WedderburnComponent) -> CenterEq {
    if a.center == b.center {
        return CenterEq::Equal;
    }
    match fields_isomorphic(&a.center, &b.center).kind() {
        VerdictKind::CertifiedYes => CenterEq::Equal,
        VerdictKind::ProbablyYes => CenterEq::Unknown,
        VerdictKind::CertifiedNo => CenterEq::Different,
    }
}

enum SignatureCmp {
    Equal,
    Unknown,
    Different {
        left: Option<WedderburnComponent>,
        right: Option<WedderburnComponent>,
    },
}

/// Matches two component lists: components are grouped by (size, center
/// degree) and within each group center equality is resolved lazily, only
/// when defining polynomials differ.
fn compare_signatures(a: &RationalSignature, b: &RationalSignature) -> SignatureCmp {
    type Class = (usize, usize);
    let mut classes: BTreeMap<Class, (Vec<&WedderburnComponent>, Vec<&WedderburnComponent>)> =
        BTreeMap::new();
    for c in &a.components {
        classes
            .entry((c.size, c.center.degree()))
            .or_default()
            .0
            .push(c);
    }
    for c in &b.components {
        classes
            .entry((c.size, c.center.degree()))
            .or_default()
            .1
            .push(c);
    }
    let mut any_unknown = false;
    for (_, (left, right)) in classes {
        if left.len() != right.len() {
            // a whole (size, degree) class differs in count: certified
            return SignatureCmp::Different {
                left: left.first().map(|c| (*c).clone()),
                right: right.first().map(|c| (*c).clone()),
            };
        }
        match match_class(&left, &right) {
            ClassCmp::Equal => {}
            ClassCmp::Unknown => any_unknown = true,
            ClassCmp::Different { left_idx } => {
                return SignatureCmp::Different {
                    left: Some(left[left_idx].clone()),
                    right: right.first().map(|c| (*c).clone()),
                };
            }
        }
    }
    if any_unknown {
        SignatureCmp::Unknown
    } else {
        SignatureCmp::Equal
    }
}

enum ClassCmp {
    Equal,
    Unknown,
    Different { left_idx: usize },
}

/// Perfect matching inside one (size, degree) class, lazily resolving
/// center isomorphism. Classes are tiny, so backtracking is fine.
fn match_class(left: &[&WedderburnComponent], right: &[&WedderburnComponent]) -> ClassCmp {
    let n = left.len();
    let mut eq = vec![vec![false; n]; n];
    let mut maybe = vec![vec![false; n]; n];
    for (i, l) in left.iter().enumerate() {
        for (j, r) in right.iter().enumerate() {
            match center_eq(l, r) {
                CenterEq::Equal => {
                    eq[i][j] = true;
                    maybe[i][j] = true;
                }
                CenterEq::Unknown => maybe[i][j] = true,
                CenterEq::Different => {}
            }
        }
    }
    fn matching(adj: &[Vec<bool>], used: &mut Vec<bool>, i: usize) -> bool {
        if i == adj.len() {
            return true;
        }
        for j in 0..adj.len() {
            if adj[i][j] && !used[j] {
                used[j] = true;
                if matching(adj, used, i + 1) {
                    used[j] = false;
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    if matching(&eq, &mut vec![false; n], 0) {
        return ClassCmp::Equal;
    }
    if matching(&maybe, &mut vec![false; n], 0) {
        return ClassCmp::Unknown;
    }
    // certified difference: prefer a component with no possible partner
    let left_idx = (0..n)
        .find(|&i| (0..n).all(|j| !maybe[i][j]))
        .unwrap_or(0);
    ClassCmp::Different { left_idx }
}

fn compare_signature_multisets(
    a: &[RationalSignature],
    b: &[RationalSignature],
) -> CompareVerdict {
    let sort = |sigs: &[RationalSignature]| {
        let mut v: Vec<RationalSignature> = sigs.to_vec();
        v.sort_by(|x, y| x.cmp_canonical(y));
        v
    };
    let sa = sort(a);
    let sb = sort(b);
    let mut any_unknown = false;
    for (i, (x, y)) in sa.iter().zip(&sb).enumerate() {
        match compare_signatures(x, y) {
            SignatureCmp::Equal => {}
            SignatureCmp::Unknown => any_unknown = true,
            SignatureCmp::Different { left, right } => {
                return CompareVerdict::DistinguishedByRationalSignature(SignatureWitness {
                    signature_index: i,
                    left,
                    right,
                });
            }
        }
    }
    if any_unknown {
        CompareVerdict::Inconclusive
    } else {
        CompareVerdict::NotDistinguished
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{directed_triangle, paley_graph_scheme, paley_tournament};

    #[test]
    fn triangle_invariant_is_minimal() {
        let t = directed_triangle();
        for x in 0..3 {
            let inv = complex_invariant(&t, x).unwrap();
            assert_eq!(inv.dim, 9);
            assert!(!inv.epsilon);
            assert_eq!(inv.m2, 0);
            assert_eq!(inv.d_alpha, 0);
            assert!(inv.distinct_factors.is_empty());
        }
    }

    #[test]
    fn paley7_invariant() {
        let t = paley_tournament(7).unwrap();
        for x in 0..7 {
            let inv = complex_invariant(&t, x).unwrap();
            assert_eq!(inv.dim, 17, "vertex {x}");
            assert!(!inv.epsilon);
            assert_eq!(inv.m2, 2);
            assert_eq!(
                inv.distinct_factors,
                vec![(IntPoly::from_i64(&[1, 1, 1]), 1)]
            );
        }
    }

    #[test]
    fn paley11_invariant() {
        let t = paley_tournament(11).unwrap();
        for x in 0..11 {
            let inv = complex_invariant(&t, x).unwrap();
            assert_eq!(inv.dim, 25, "vertex {x}");
            assert_eq!(inv.m2, 4);
        }
    }

    #[test]
    fn triangle_signature() {
        let sig = rational_signature(&directed_triangle(), 0).unwrap();
        assert_eq!(sig.components.len(), 1);
        assert_eq!(sig.components[0].size, 3);
        assert!(sig.components[0].center.is_rationals());
        assert_eq!(sig.rational_dimension(), 9);
    }

    #[test]
    fn paley7_signature() {
        let sig = rational_signature(&paley_tournament(7).unwrap(), 0).unwrap();
        assert_eq!(sig.components.len(), 2);
        // canonical order puts the size-2 component first
        assert_eq!(sig.components[0].size, 2);
        assert_eq!(
            sig.components[0].center.defining(),
            &IntPoly::from_i64(&[1, 1, 1])
        );
        assert_eq!(sig.components[1].size, 3);
        assert_eq!(sig.rational_dimension(), 17);
    }

    #[test]
    fn paley11_signature_has_quartic_center() {
        let sig = rational_signature(&paley_tournament(11).unwrap(), 0).unwrap();
        assert_eq!(sig.components.len(), 2);
        assert_eq!(sig.components[0].size, 2);
        assert_eq!(sig.components[0].center.degree(), 4);
        assert_eq!(sig.rational_dimension(), 25);
    }

    #[test]
    fn oracle_triangle_full_matrix_algebra() {
        let s = scheme_from_tournament(&directed_triangle());
        assert_eq!(oracle_dimension(&s, 0).unwrap(), 9);
    }

    #[test]
    fn oracle_matches_formula_on_paley7() {
        let t = paley_tournament(7).unwrap();
        let s = scheme_from_tournament(&t);
        assert_eq!(oracle_dimension(&s, 0).unwrap(), 17);
    }

    #[test]
    fn oracle_rejects_bad_vertex() {
        let s = scheme_from_tournament(&directed_triangle());
        assert_eq!(
            oracle_dimension(&s, 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            oracle_corner_commutative(&s, 0, 7),
            Err(Error::RelationOutOfRange { index: 7, rank: 3 })
        );
    }

    #[test]
    fn corners_commutative_triangle_and_paley7() {
        for s in [
            scheme_from_tournament(&directed_triangle()),
            scheme_from_tournament(&paley_tournament(7).unwrap()),
        ] {
            for i in 0..3u32 {
                assert!(oracle_corner_commutative(&s, 0, i).unwrap());
            }
        }
    }

    #[test]
    fn conference_paley5() {
        let s = paley_graph_scheme(5).unwrap();
        for x in 0..5 {
            let inv = conference_invariant(&s, x).unwrap();
            assert_eq!(inv.dim, 13, "vertex {x}");
            assert!(!inv.epsilon);
            assert_eq!(inv.m2, 1);
            // e-perp spectrum is the single zero eigenvalue
            assert_eq!(inv.distinct_factors, vec![(IntPoly::from_i64(&[0, 1]), 1)]);
            assert_eq!(oracle_dimension(&s, x).unwrap(), 13);
        }
    }

    #[test]
    fn conference_rejects_non_conference() {
        let s = scheme_from_tournament(&paley_tournament(7).unwrap());
        assert!(matches!(
            conference_invariant(&s, 0),
            Err(Error::NotConference(_))
        ));
    }

    #[test]
    fn profile_formatting() {
        assert_eq!(format_dim_profile(&[9, 9, 9]), "(9^3)");
        assert_eq!(format_dim_profile(&[17, 33, 17, 49]), "(49^1,33^1,17^2)");
        assert_eq!(format_dim_profile(&[]), "()");
    }

    #[test]
    fn compare_paley7_with_relabeling() {
        let t = paley_tournament(7).unwrap();
        let relabeled = t.relabel(&[2, 5, 0, 3, 6, 1, 4]).unwrap();
        let a = SchemeData::from_tournament(t).unwrap();
        let b = SchemeData::from_tournament(relabeled).unwrap();
        assert_eq!(
            compare_schemes(&a, &b, ComparisonMode::Complex).unwrap(),
            CompareVerdict::NotDistinguished
        );
        assert_eq!(
            compare_schemes(&a, &b, ComparisonMode::Rational).unwrap(),
            CompareVerdict::NotDistinguished
        );
    }

    #[test]
    fn compare_different_orders() {
        let a = SchemeData::from_tournament(paley_tournament(7).unwrap()).unwrap();
        let b = SchemeData::from_tournament(paley_tournament(11).unwrap()).unwrap();
        assert_eq!(
            compare_schemes(&a, &b, ComparisonMode::Rational).unwrap(),
            CompareVerdict::DistinguishedByOrder { left: 7, right: 11 }
        );
    }

    #[test]
    fn signature_profile_groups() {
        let t = paley_tournament(7).unwrap();
        let sigs = rational_signatures_drt(&t).unwrap();
        let profile = signature_profile(&sigs);
        assert_eq!(profile.len(), 1);
        assert_eq!(profile[0].1, 7);
    }

    fn component(size: usize, coeffs: &[i64]) -> WedderburnComponent {
        WedderburnComponent {
            size,
            center: make_descriptor(&IntPoly::from_i64(coeffs), DEFAULT_PRIME_BUDGET).unwrap(),
        }
    }

    fn signature_of(components: Vec<WedderburnComponent>) -> RationalSignature {
        let mut components = components;
        components.sort();
        RationalSignature {
            vertex: 0,
            components,
        }
    }

    #[test]
    fn signature_multisets_distinguished_by_quadratic_center() {
        // same shapes, but one quadratic center has discriminant -11 and
        // the other -23: a certified difference
        let base = vec![component(3, &[0, 1]), component(2, &[1, 1, 1])];
        let mut left = base.clone();
        left.push(component(2, &[3, 1, 1]));
        let mut right = base;
        right.push(component(2, &[6, 1, 1]));
        let verdict =
            compare_signature_multisets(&[signature_of(left)], &[signature_of(right)]);
        match verdict {
            CompareVerdict::DistinguishedByRationalSignature(w) => {
                let centers: Vec<String> = [&w.left, &w.right]
                    .iter()
                    .filter_map(|c| c.as_ref())
                    .map(|c| c.center.defining().to_string())
                    .collect();
                assert!(centers.contains(&"x^2 + x + 3".to_string()), "{centers:?}");
            }
            other => panic!("expected a signature witness, got {other:?}"),
        }
    }

    #[test]
    fn signature_multisets_resolve_isomorphic_presentations() {
        // different defining polynomials for the same quadratic field
        let left = signature_of(vec![component(3, &[0, 1]), component(2, &[-2, 0, 1])]);
        let right = signature_of(vec![component(3, &[0, 1]), component(2, &[-8, 0, 1])]);
        assert_eq!(
            compare_signature_multisets(&[left], &[right]),
            CompareVerdict::NotDistinguished
        );
    }

    #[test]
    fn signature_multisets_inconclusive_above_the_cap() {
        // degree-9 centers exceed the exact-test cap; shifted presentations
        // of one field have matching fingerprints, so the only mismatch
        // rests on a ProbablyYes comparison
        let f = IntPoly::from_i64(&[-2, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let shifted = f.compose(&IntPoly::from_i64(&[1, 1]));
        let left = signature_of(vec![WedderburnComponent {
            size: 2,
            center: make_descriptor(&f, DEFAULT_PRIME_BUDGET).unwrap(),
        }]);
        let right = signature_of(vec![WedderburnComponent {
            size: 2,
            center: make_descriptor(&shifted, DEFAULT_PRIME_BUDGET).unwrap(),
        }]);
        assert_eq!(
            compare_signature_multisets(&[left], &[right]),
            CompareVerdict::Inconclusive
        );
    }

    #[test]
    fn signature_multisets_catch_count_mismatch() {
        let left = signature_of(vec![component(3, &[0, 1]), component(2, &[1, 1, 1])]);
        let right = signature_of(vec![component(3, &[0, 1])]);
        match compare_signature_multisets(&[left], &[right]) {
            CompareVerdict::DistinguishedByRationalSignature(w) => {
                assert!(w.left.is_some() && w.right.is_none());
            }
            other => panic!("expected a count-mismatch witness, got {other:?}"),
        }
    }
}
