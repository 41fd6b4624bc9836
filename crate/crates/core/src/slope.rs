//! Slopes, semistability and Harder-Narasimhan filtrations.
//!
//! Bundles are modelled only through numerical data: an abstract
//! [`BundleData`] `(rank, degree)`, or a [`SplitBundle`] listing the degrees of
//! line-bundle summands. That is all the slope inequalities need.
//!
//! Bounds of the form "every subbundle of X has slope ≤ c" are carried as
//! [`BoundCertificate`] values. A certificate records where its constant came
//! from; it never claims to have proved the hypothesis it rests on.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BundleRepr")]
pub struct BundleData {
    rank: u64,
    degree: i64,
}

#[derive(Deserialize)]
struct BundleRepr {
    rank: u64,
    degree: i64,
}

impl TryFrom<BundleRepr> for BundleData {
    type Error = Error;

    fn try_from(r: BundleRepr) -> Result<Self> {
        BundleData::new(r.rank, r.degree)
    }
}

impl BundleData {
    pub fn new(rank: u64, degree: i64) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(BundleData { rank, degree })
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn slope(&self) -> Rational {
        Rational::new(self.degree as i128, self.rank as i128)
    }

    /// Direct sum (ranks and degrees add).
    pub fn plus(&self, other: &BundleData) -> BundleData {
        BundleData {
            rank: self.rank + other.rank,
            degree: self.degree + other.degree,
        }
    }

    /// The bundle with a perturbed degree. Used to inject faults in tests.
    pub fn with_degree(&self, degree: i64) -> BundleData {
        BundleData { rank: self.rank, degree }
    }
}

impl fmt::Display for BundleData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(rank {}, degree {})", self.rank, self.degree)
    }
}

/// `μ = deg / rk`, exact.
pub fn slope(b: &BundleData) -> Rational {
    b.slope()
}

/// A direct sum of line bundles, given by their degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SplitRepr")]
pub struct SplitBundle {
    degrees: Vec<i64>,
}

#[derive(Deserialize)]
struct SplitRepr {
    degrees: Vec<i64>,
}

impl TryFrom<SplitRepr> for SplitBundle {
    type Error = Error;

    fn try_from(r: SplitRepr) -> Result<Self> {
        SplitBundle::new(r.degrees)
    }
}

impl SplitBundle {
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::ZeroRank);
        }
        Ok(SplitBundle { degrees })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> u64 {
        self.degrees.len() as u64
    }

    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn as_bundle(&self) -> BundleData {
        BundleData {
            rank: self.rank(),
            degree: self.degree(),
        }
    }

    pub fn slope(&self) -> Rational {
        self.as_bundle().slope()
    }

    pub fn max_degree(&self) -> i64 {
        *self.degrees.iter().max().expect("non-empty")
    }

    /// Tensor with a line bundle of degree `t`.
    pub fn twisted(&self, t: i64) -> SplitBundle {
        SplitBundle {
            degrees: self.degrees.iter().map(|d| d + t).collect(),
        }
    }
}

/// The graded pieces `G_1, …, G_k` of a Harder-Narasimhan filtration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "HnRepr", try_from = "HnRepr")]
pub struct HnFiltration {
    pieces: Vec<BundleData>,
}

#[derive(Serialize, Deserialize)]
struct HnRepr {
    pieces: Vec<PieceRepr>,
}

#[derive(Serialize, Deserialize)]
struct PieceRepr {
    rank: u64,
    degree: i64,
    #[serde(with = "rational::serde_str")]
    slope: Rational,
}

impl From<HnFiltration> for HnRepr {
    fn from(f: HnFiltration) -> Self {
        HnRepr {
            pieces: f
                .pieces
                .iter()
                .map(|p| PieceRepr {
                    rank: p.rank,
                    degree: p.degree,
                    slope: p.slope(),
                })
                .collect(),
        }
    }
}

impl TryFrom<HnRepr> for HnFiltration {
    type Error = Error;

    fn try_from(r: HnRepr) -> Result<Self> {
        let mut pieces = Vec::with_capacity(r.pieces.len());
        for p in r.pieces {
            let b = BundleData::new(p.rank, p.degree)?;
            if b.slope() != p.slope {
                return Err(Error::OutOfRange(format!(
                    "piece {b} carries slope {} instead of {}",
                    rational::render(&p.slope),
                    rational::render(&b.slope())
                )));
            }
            pieces.push(b);
        }
        HnFiltration::from_pieces(pieces)
    }
}

impl HnFiltration {
    /// Wraps graded pieces without checking the slope ordering; use
    /// [`check_hn_axioms`] to validate a candidate.
    pub fn from_pieces(pieces: Vec<BundleData>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::ZeroRank);
        }
        Ok(HnFiltration { pieces })
    }

    pub fn pieces(&self) -> &[BundleData] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// The filtered bundle `E_k`.
    pub fn ambient(&self) -> BundleData {
        self.pieces[1..].iter().fold(self.pieces[0], |acc, p| acc.plus(p))
    }

    /// `E_1 ⊂ E_2 ⊂ … ⊂ E_k` as partial sums of the graded pieces.
    pub fn subbundles(&self) -> Vec<BundleData> {
        self.pieces
            .iter()
            .scan(None::<BundleData>, |acc, p| {
                let next = acc.map_or(*p, |a| a.plus(p));
                *acc = Some(next);
                Some(next)
            })
            .collect()
    }

    pub fn is_semistable(&self) -> bool {
        self.pieces.len() == 1
    }
}

/// HN filtration of a sum of line bundles: the summands grouped by degree,
/// largest first. Each group `O(d)^n` is semistable of slope `d`.
pub fn hn_split(s: &SplitBundle) -> HnFiltration {
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for &d in &s.degrees {
        *counts.entry(d).or_default() += 1;
    }
    let pieces = counts
        .into_iter()
        .rev()
        .map(|(d, n)| BundleData {
            rank: n,
            degree: n as i64 * d,
        })
        .collect();
    HnFiltration { pieces }
}

pub fn is_semistable_split(s: &SplitBundle) -> bool {
    s.degrees.iter().all(|&d| d == s.degrees[0])
}

/// Outcome of [`check_hn_axioms`]; `reasons` is empty iff `holds`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnAxiomReport {
    pub holds: bool,
    pub reasons: Vec<String>,
}

/// Checks that `pieces` have strictly decreasing slopes and that their ranks
/// and degrees add up to `ambient`. Semistability of each piece is not
/// decidable from numerical data and is the caller's responsibility.
pub fn check_hn_axioms(pieces: &[BundleData], ambient: &BundleData) -> HnAxiomReport {
    let mut reasons = Vec::new();
    if pieces.is_empty() {
        reasons.push("filtration has no pieces".to_string());
    }
    for (k, w) in pieces.windows(2).enumerate() {
        if w[0].slope() <= w[1].slope() {
            reasons.push(format!(
                "slope of piece {} ({}) is not greater than slope of piece {} ({})",
                k + 1,
                rational::render(&w[0].slope()),
                k + 2,
                rational::render(&w[1].slope())
            ));
        }
    }
    let rank: u64 = pieces.iter().map(|p| p.rank).sum();
    let degree: i64 = pieces.iter().map(|p| p.degree).sum();
    if rank != ambient.rank {
        reasons.push(format!("piece ranks sum to {rank}, ambient rank is {}", ambient.rank));
    }
    if degree != ambient.degree {
        reasons.push(format!(
            "piece degrees sum to {degree}, ambient degree is {}",
            ambient.degree
        ));
    }
    HnAxiomReport {
        holds: reasons.is_empty(),
        reasons,
    }
}

/// Where the constant of a [`BoundCertificate`] comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// The bundle is assumed semistable, so its own slope bounds its subbundles.
    SemistableHypothesis,
    /// The bundle is a quotient of a semistable bundle `E`; the bound is `μ(E)`.
    QuotientOfSemistable,
    /// Sum of per-component bounds on a nodal curve.
    ComponentSum,
    /// A special-fiber bound carried over to the general fiber of a family.
    TransferredToGeneralFiber,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::SemistableHypothesis => "semistable_hypothesis",
            Provenance::QuotientOfSemistable => "quotient_of_semistable",
            Provenance::ComponentSum => "component_sum",
            Provenance::TransferredToGeneralFiber => "transferred_to_general_fiber",
        }
    }
}

/// One link of a certificate's derivation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceStep {
    pub step: String,
    pub paper_ref: String,
    #[serde(with = "rational::serde_str")]
    pub value: Rational,
}

impl ProvenanceStep {
    pub fn new(step: impl Into<String>, source: impl Into<String>, value: Rational) -> Self {
        ProvenanceStep {
            step: step.into(),
            paper_ref: source.into(),
            value,
        }
    }
}

/// "Every subbundle of `applies_to` has (adjusted) slope at most `bound`."
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    #[serde(with = "rational::serde_str")]
    pub bound: Rational,
    pub applies_to: String,
    pub provenance: Provenance,
    pub chain: Vec<ProvenanceStep>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Records the hypothesis that `e` is semistable: subbundles have slope ≤ μ(e).
pub fn semistable_hypothesis(
    e: &BundleData,
    applies_to: impl Into<String>,
    source: impl Into<String>,
) -> BoundCertificate {
    let applies_to = applies_to.into();
    BoundCertificate {
        bound: e.slope(),
        chain: vec![ProvenanceStep::new(
            format!("{applies_to} assumed semistable"),
            source,
            e.slope(),
        )],
        applies_to,
        provenance: Provenance::SemistableHypothesis,
        warnings: Vec::new(),
    }
}

/// For `0 → F → E → Q → 0` with `E` semistable, every subbundle `M ⊂ Q`
/// satisfies `μ(M) ≤ μ(E)`.
///
/// Semistability of `e` is the caller's hypothesis. A genuine quotient of a
/// semistable bundle has `μ(Q) ≥ μ(E)`; when the supplied data violate that,
/// the certificate carries a warning instead of failing.
pub fn quotient_bound(e: &BundleData, q: &BundleData) -> Result<BoundCertificate> {
    if q.rank > e.rank {
        return Err(Error::QuotientRank {
            quotient: q.rank,
            ambient: e.rank,
        });
    }
    let mut warnings = Vec::new();
    // deg(E) rk(Q) - rk(E) deg(Q) ≤ 0  ⟺  μ(Q) ≥ μ(E)
    let defect = e.degree as i128 * q.rank as i128 - e.rank as i128 * q.degree as i128;
    if defect > 0 {
        warnings.push(format!(
            "quotient slope {} is below the semistable slope {}: {q} cannot be a quotient of a semistable {e}",
            rational::render(&q.slope()),
            rational::render(&e.slope())
        ));
    }
    Ok(BoundCertificate {
        bound: e.slope(),
        applies_to: format!("subbundles of a quotient {q} of {e}"),
        provenance: Provenance::QuotientOfSemistable,
        chain: vec![ProvenanceStep::new(
            "slope of the semistable bundle bounds subbundles of its quotients",
            "quotient of a semistable bundle",
            e.slope(),
        )],
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::hn_by_enumeration;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn b(rank: u64, degree: i64) -> BundleData {
        BundleData::new(rank, degree).unwrap()
    }

    fn split(d: &[i64]) -> SplitBundle {
        SplitBundle::new(d.to_vec()).unwrap()
    }

    #[test]
    fn slope_examples() {
        assert_eq!(slope(&b(5, 96)), frac(96, 5));
        assert_eq!(slope(&b(1, -3)), int(-3));
        assert_eq!(slope(&b(3, 56)), frac(56, 3));
        assert_eq!(BundleData::new(0, 4), Err(Error::ZeroRank));
    }

    #[test]
    fn hn_split_examples() {
        assert_eq!(hn_split(&split(&[20, 20])).pieces(), &[b(2, 40)]);
        assert_eq!(hn_split(&split(&[24, 20])).pieces(), &[b(1, 24), b(1, 20)]);
        assert_eq!(
            hn_split(&split(&[5, 3, 3, 1])).pieces(),
            &[b(1, 5), b(2, 6), b(1, 1)]
        );
        let f = hn_split(&split(&[5, 3, 3, 1]));
        assert_eq!(f.subbundles(), vec![b(1, 5), b(3, 11), b(4, 12)]);
        assert_eq!(f.ambient(), b(4, 12));
    }

    #[test]
    fn semistable_split_examples() {
        assert!(is_semistable_split(&split(&[20, 20])));
        assert!(!is_semistable_split(&split(&[24, 20])));
        assert!(is_semistable_split(&split(&[7])));
        assert!(SplitBundle::new(vec![]).is_err());
    }

    #[test]
    fn quotient_bound_examples() {
        for dq in [-10, 0, 34, 100] {
            let c = quotient_bound(&b(5, 49), &b(3, dq)).unwrap();
            assert_eq!(c.bound, frac(49, 5));
            assert_eq!(c.provenance, Provenance::QuotientOfSemistable);
        }
        // the restricted quotient at g = 7 has degree g² - 15 = 34
        assert!(quotient_bound(&b(5, 49), &b(3, 34)).unwrap().warnings.is_empty());
        assert_eq!(quotient_bound(&b(5, 49), &b(3, 0)).unwrap().warnings.len(), 1);
        assert_eq!(quotient_bound(&b(2, 10), &b(2, 10)).unwrap().bound, int(5));
        assert_eq!(quotient_bound(&b(4, 8), &b(1, 2)).unwrap().bound, int(2));
        assert!(matches!(
            quotient_bound(&b(2, 8), &b(3, 2)),
            Err(Error::QuotientRank { quotient: 3, ambient: 2 })
        ));
    }

    #[test]
    fn hn_axiom_examples() {
        let r = check_hn_axioms(&[b(2, 26), b(3, 56)], &b(5, 82));
        assert!(!r.holds);
        assert_eq!(r.reasons.len(), 1);
        let r = check_hn_axioms(&[b(2, 26), b(3, 56)], &b(5, 96));
        assert!(!r.holds);
        assert!(r.reasons.iter().any(|s| s.contains("ambient degree is 96")));
        assert!(check_hn_axioms(&[b(2, 40), b(3, 56)], &b(5, 96)).holds);
        assert!(check_hn_axioms(&[b(1, 24), b(5, 102)], &b(6, 126)).holds);
        assert!(!check_hn_axioms(&[], &b(1, 0)).holds);
    }

    #[test]
    fn hn_json_carries_exact_slopes() {
        let f = hn_split(&split(&[24, 20]));
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"pieces": [
                {"rank": 1, "degree": 24, "slope": "24/1"},
                {"rank": 1, "degree": 20, "slope": "20/1"}
            ]})
        );
        let tampered = serde_json::json!({"pieces": [{"rank": 2, "degree": 5, "slope": "5/1"}]});
        assert!(serde_json::from_value::<HnFiltration>(tampered).is_err());
    }

    fn arb_split() -> impl Strategy<Value = SplitBundle> {
        prop::collection::vec(-20i64..=20, 1..=8).prop_map(|d| SplitBundle::new(d).unwrap())
    }

    proptest! {
        #[test]
        fn hn_split_satisfies_axioms(s in arb_split()) {
            let f = hn_split(&s);
            prop_assert!(check_hn_axioms(f.pieces(), &s.as_bundle()).holds);
        }

        #[test]
        fn hn_split_matches_enumeration(s in arb_split()) {
            let ours: Vec<_> = hn_split(&s).pieces().iter().map(|p| (p.rank(), p.degree())).collect();
            prop_assert_eq!(ours, hn_by_enumeration(s.degrees()));
        }

        #[test]
        fn twisting_shifts_every_slope(s in arb_split(), t in -30i64..=30) {
            let a = hn_split(&s);
            let b = hn_split(&s.twisted(t));
            prop_assert_eq!(a.len(), b.len());
            for (p, q) in a.pieces().iter().zip(b.pieces()) {
                prop_assert_eq!(p.rank(), q.rank());
                prop_assert_eq!(q.slope(), p.slope() + int(t));
            }
        }

        #[test]
        fn slope_is_scale_invariant(rank in 1u64..50, degree in -500i64..500, k in 1u64..20) {
            prop_assert_eq!(b(rank, degree).slope(), b(k * rank, k as i64 * degree).slope());
        }

        #[test]
        fn semistable_iff_single_piece(s in arb_split()) {
            prop_assert_eq!(is_semistable_split(&s), hn_split(&s).is_semistable());
        }
    }
}
