//! Tetragonal canonical curves on their 3-fold scroll.
//!
//! A tetragonal canonical curve `C ⊂ P^{g-1}` of genus `g` lies on the scroll
//! `Q = P(O(a_1) ⊕ O(a_2) ⊕ O(a_3))` with `a_1 + a_2 + a_3 = g - 3`, and is a
//! complete intersection there of divisors
//!
//! ```text
//! [Y] = 2H - b_1 R      [Z] = 2H - b_2 R      b_1 + b_2 = g - 5
//! ```
//!
//! The general curve has balanced twists and balanced `b_i`. From this data the
//! module computes the tower `N_{C/Q} ⊂ N_{C/P^{g-1}} ↠ N_{Q/P^{g-1}}|_C` and
//! decides, by exact rational inequalities, whether the expected two-step
//! filtration satisfies the Harder-Narasimhan conditions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chow::{intersect_number, ChowClass, ScrollModel};
use crate::degeneration;
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};
use crate::slope::{hn_split, BoundCertificate, BundleData, HnFiltration, SplitBundle};

/// Largest genus accepted. Keeps every intermediate product inside `i128`.
pub const MAX_GENUS: i64 = 1_000_000;

/// Smallest genus for which the 3-fold scroll is smooth.
pub const MIN_GENUS: i64 = 6;

pub fn check_genus(g: i64) -> Result<()> {
    if g < MIN_GENUS {
        return Err(Error::GenusTooSmall { genus: g });
    }
    if g > MAX_GENUS {
        return Err(Error::GenusTooLarge {
            genus: g,
            max: MAX_GENUS,
        });
    }
    Ok(())
}

/// `k` non-increasing integers summing to `n` and pairwise within 1.
pub fn balanced_split(n: i64, k: usize) -> Vec<i64> {
    assert!(k >= 1, "balanced_split needs at least one part");
    let q = n.div_euclid(k as i64);
    let rem = n.rem_euclid(k as i64) as usize;
    (0..k).map(|i| if i < rem { q + 1 } else { q }).collect()
}

fn is_balanced(xs: &[i64]) -> bool {
    match (xs.iter().max(), xs.iter().min()) {
        (Some(hi), Some(lo)) => hi - lo <= 1,
        _ => true,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(g: i64) -> Parity {
        if g % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TetragonalCurve {
    pub genus: i64,
    pub twists: [i64; 3],
    pub betti: [i64; 2],
    pub balanced_scroll: bool,
    pub balanced_syzygy: bool,
}

impl TetragonalCurve {
    /// The general curve: balanced scroll twists and balanced syzygy invariants.
    pub fn general(g: i64) -> Result<Self> {
        check_genus(g)?;
        let t = balanced_split(g - 3, 3);
        let b = balanced_split(g - 5, 2);
        Self::with_invariants(g, [t[0], t[1], t[2]], [b[0], b[1]])
    }

    /// A curve with explicit invariants. Inputs are sorted non-increasing; sums
    /// and positivity of twists are enforced.
    pub fn with_invariants(g: i64, mut twists: [i64; 3], mut betti: [i64; 2]) -> Result<Self> {
        check_genus(g)?;
        twists.sort_unstable_by(|a, b| b.cmp(a));
        betti.sort_unstable_by(|a, b| b.cmp(a));
        if twists.iter().sum::<i64>() != g - 3 {
            return Err(Error::InvalidTwists(format!(
                "twists {twists:?} must sum to g - 3 = {}",
                g - 3
            )));
        }
        if twists[2] < 1 {
            return Err(Error::InvalidTwists(format!(
                "twists {twists:?} must all be at least 1 for a smooth scroll"
            )));
        }
        if betti.iter().sum::<i64>() != g - 5 {
            return Err(Error::InvalidBetti(format!(
                "invariants {betti:?} must sum to g - 5 = {}",
                g - 5
            )));
        }
        Ok(TetragonalCurve {
            genus: g,
            twists,
            betti,
            balanced_scroll: is_balanced(&twists),
            balanced_syzygy: is_balanced(&betti),
        })
    }

    pub fn is_general(&self) -> bool {
        self.balanced_scroll && self.balanced_syzygy
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.genus)
    }

    pub fn scroll(&self) -> ScrollModel {
        ScrollModel::new(&self.twists).expect("three twists")
    }

    /// `([Y], [Z]) = (2H - b_1 R, 2H - b_2 R)`.
    pub fn divisor_classes(&self) -> (ChowClass, ChowClass) {
        let s = self.scroll();
        (s.divisor(2, -self.betti[0]), s.divisor(2, -self.betti[1]))
    }
}

pub fn general_curve(g: i64) -> Result<TetragonalCurve> {
    TetragonalCurve::general(g)
}

/// `[C] = [Y]·[Z]`, which reduces to `4H² - 2(g-5) HR`.
pub fn curve_class(c: &TetragonalCurve) -> ChowClass {
    let (y, z) = c.divisor_classes();
    y.mul(&z).expect("same scroll")
}

/// Normal bundle of a smooth curve of the given degree and genus spanning
/// `P^n`: rank `n - 1`, degree `(n + 1)·deg + 2·genus - 2`.
pub fn projective_normal_bundle(n: i64, degree: i64, genus: i64) -> Result<BundleData> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("ambient dimension {n} must be at least 2")));
    }
    BundleData::new((n - 1) as u64, (n + 1) * degree + 2 * genus - 2)
}

/// Degree of `N_{D/Q}` for a smooth curve `D ⊂ Q` of the given class and genus,
/// by adjunction: `-K_Q · D + 2·genus - 2`.
pub fn normal_degree_in_scroll(class: &ChowClass, genus: i64) -> Result<i64> {
    let k = class.scroll().canonical_class();
    Ok(-intersect_number(class, &k)? + 2 * genus - 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalBundleTower {
    /// `N_{C/P^{g-1}}`
    pub n_c: BundleData,
    /// `N_{C/Q} = O_C(Y) ⊕ O_C(Z)`, summands in that order
    pub n_cq: SplitBundle,
    /// `N_{Q/P^{g-1}}|_C`
    pub quotient_q: BundleData,
    /// The larger-degree summand of `N_{C/Q}`. For the general even-genus curve
    /// this is `O_C(2H - b_2 R)`; the divisor carrying it is the one called `Y`
    /// in the filtration statement.
    pub n_cy: BundleData,
    /// `N_{C/P^{g-1}} / n_cy`
    pub quotient_y: BundleData,
}

impl NormalBundleTower {
    pub fn n_cq_bundle(&self) -> BundleData {
        self.n_cq.as_bundle()
    }
}

pub fn normal_tower(c: &TetragonalCurve) -> NormalBundleTower {
    let g = c.genus;
    let class = curve_class(c);
    let (y, z) = c.divisor_classes();
    let dy = intersect_number(&class, &y).expect("curve and divisor classes");
    let dz = intersect_number(&class, &z).expect("curve and divisor classes");
    let n_c = projective_normal_bundle(g - 1, 2 * g - 2, g).expect("g ≥ 6");
    let n_cq = SplitBundle::new(vec![dy, dz]).expect("two summands");
    let top = n_cq.max_degree();
    NormalBundleTower {
        n_c,
        quotient_q: BundleData::new(n_c.rank() - 2, n_c.degree() - n_cq.degree()).expect("g ≥ 6"),
        n_cy: BundleData::new(1, top).expect("rank 1"),
        quotient_y: BundleData::new(n_c.rank() - 1, n_c.degree() - top).expect("g ≥ 6"),
        n_cq,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl Relation {
    pub fn holds(&self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

/// One exact comparison `lhs relation rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    #[serde(with = "rational::serde_str")]
    pub lhs: Rational,
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
    pub relation: Relation,
    pub pass: bool,
    pub paper_ref: String,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        lhs: Rational,
        relation: Relation,
        rhs: Rational,
        source: impl Into<String>,
    ) -> Check {
        Check {
            pass: relation.holds(&lhs, &rhs),
            name: name.into(),
            lhs,
            rhs,
            relation,
            paper_ref: source.into(),
        }
    }

    pub fn ints(name: &str, lhs: i64, relation: Relation, rhs: i64, source: &str) -> Check {
        Check::new(name, int(lhs), relation, int(rhs), source)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} {} {}",
            if self.pass { "ok  " } else { "FAIL" },
            self.name,
            rational::render(&self.lhs),
            self.relation.symbol(),
            rational::render(&self.rhs)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictStatus {
    Pass,
    /// Every check passed but the filtration rests on an unproved hypothesis.
    Conditional,
    Fail,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictStatus::Pass => "pass",
            VerdictStatus::Conditional => "conditional",
            VerdictStatus::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientStability {
    /// The certified bound is strictly below the quotient slope.
    Stable,
    Semistable,
    Uncertified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub genus: i64,
    pub parity: Parity,
    pub status: VerdictStatus,
    pub statement: String,
    pub filtration: HnFiltration,
    pub checks: Vec<Check>,
    pub hypotheses: Vec<String>,
    pub quotient_stability: QuotientStability,
    pub bound: Option<BoundCertificate>,
}

impl TheoremVerdict {
    pub fn passed(&self) -> bool {
        self.status == VerdictStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == VerdictStatus::Fail
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Slope of the first graded piece.
    pub fn top_slope(&self) -> Rational {
        self.filtration.pieces()[0].slope()
    }

    /// Slope of the last graded piece.
    pub fn quotient_slope(&self) -> Rational {
        self.filtration.pieces().last().expect("non-empty").slope()
    }
}

const SRC_SLOPE_ORDER: &str = "HN graded pieces have strictly decreasing slopes";
const SRC_SPLIT: &str = "normal bundle of a complete intersection splits as the restricted divisors";
const SRC_QUOTIENT_BOUND: &str = "subbundle bound for the restricted scroll normal bundle via nodal degeneration";
const SRC_DESTAB: &str = "N_{C/Q} destabilizes the canonical normal bundle";
const SRC_TOTALS: &str = "ranks and degrees are additive in exact sequences";
const SRC_ADJUNCTION: &str = "adjunction on the scroll: deg N_{C/Q} = -K_Q·C + 2g - 2";

const HYP_GENERAL: &str =
    "C is general: balanced scroll twists and balanced first syzygy bundle";
const HYP_QUOTIENT_BOUND: &str = "quotient subbundle bound rests on the degeneration certificate chain: \
     rational normal curve component, elliptic normal curve component, component sum, \
     transfer to the general fiber";
const HYP_ELLIPTIC: &str = "assumed: the normal bundle of an elliptic normal curve in P^d, d ≥ 3, is semistable";
const HYP_TRANSFER: &str =
    "assumed: adjusted-slope bounds on a nodal special fiber hold on the general fiber";

fn destabilization_check(tower: &NormalBundleTower) -> Check {
    Check::new(
        "destabilizes_canonical_normal_bundle",
        tower.n_cq_bundle().slope(),
        Relation::Gt,
        tower.n_c.slope(),
        SRC_DESTAB,
    )
}

fn adjunction_check(c: &TetragonalCurve, tower: &NormalBundleTower) -> Check {
    let by_adjunction = normal_degree_in_scroll(&curve_class(c), c.genus).expect("curve class");
    Check::ints(
        "adjunction_cross_check",
        tower.n_cq.degree(),
        Relation::Eq,
        by_adjunction,
        SRC_ADJUNCTION,
    )
}

fn totals_checks(pieces: &[BundleData], ambient: &BundleData) -> [Check; 2] {
    let rank: u64 = pieces.iter().map(|p| p.rank()).sum();
    let degree: i64 = pieces.iter().map(|p| p.degree()).sum();
    [
        Check::ints("rank_additivity", rank as i64, Relation::Eq, ambient.rank() as i64, SRC_TOTALS),
        Check::ints("degree_additivity", degree, Relation::Eq, ambient.degree(), SRC_TOTALS),
    ]
}

/// Verifies the expected filtration of the general curve of genus `g`.
pub fn verify_theorem(g: i64) -> Result<TheoremVerdict> {
    let c = general_curve(g)?;
    let tower = normal_tower(&c);
    verify_tower(&c, &tower)
}

/// Runs the verdict on a supplied tower. For the general curve the filtration is
/// `0 ⊂ N_{C/Q} ⊂ N_C` (odd genus) or `0 ⊂ N_{C/Y} ⊂ N_C` (even genus) and the
/// quotient bound comes from the degeneration certificate. Other curves get a
/// conditional candidate instead.
pub fn verify_tower(c: &TetragonalCurve, tower: &NormalBundleTower) -> Result<TheoremVerdict> {
    if !c.is_general() {
        return Ok(conditional_verdict(c, tower));
    }
    let g = c.genus;
    let certificate = degeneration::transfer_bound(&degeneration::combined_bound(g)?)?;
    let (statement, top, quotient, top_check) = match c.parity() {
        Parity::Odd => (
            "0 ⊂ N_{C/Q} ⊂ N_{C/P^{g-1}}",
            tower.n_cq_bundle(),
            tower.quotient_q,
            Check::ints(
                "top_piece_semistable",
                tower.n_cq.max_degree(),
                Relation::Eq,
                *tower.n_cq.degrees().iter().min().expect("non-empty"),
                SRC_SPLIT,
            ),
        ),
        Parity::Even => (
            "0 ⊂ N_{C/Y} ⊂ N_{C/P^{g-1}}",
            tower.n_cy,
            tower.quotient_y,
            Check::ints("top_piece_semistable", tower.n_cy.rank() as i64, Relation::Eq, 1, SRC_SPLIT),
        ),
    };
    let pieces = vec![top, quotient];
    let mut checks = vec![
        Check::new("hn_slope_ordering", top.slope(), Relation::Gt, quotient.slope(), SRC_SLOPE_ORDER),
        top_check,
        Check::new(
            "quotient_subbundle_bound",
            certificate.bound,
            Relation::Le,
            quotient.slope(),
            SRC_QUOTIENT_BOUND,
        ),
        destabilization_check(tower),
    ];
    checks.extend(totals_checks(&pieces, &tower.n_c));
    checks.push(adjunction_check(c, tower));

    let status = if checks.iter().all(|k| k.pass) {
        VerdictStatus::Pass
    } else {
        VerdictStatus::Fail
    };
    let quotient_stability = if certificate.bound < quotient.slope() {
        QuotientStability::Stable
    } else if certificate.bound == quotient.slope() {
        QuotientStability::Semistable
    } else {
        QuotientStability::Uncertified
    };
    Ok(TheoremVerdict {
        genus: g,
        parity: c.parity(),
        status,
        statement: statement.to_string(),
        filtration: HnFiltration::from_pieces(pieces)?,
        checks,
        hypotheses: [HYP_GENERAL, HYP_QUOTIENT_BOUND, HYP_ELLIPTIC, HYP_TRANSFER]
            .into_iter()
            .map(String::from)
            .collect(),
        quotient_stability,
        bound: Some(certificate),
    })
}

/// Candidate pieces for a non-general curve: the HN pieces of `N_{C/Q}`
/// followed by the quotient, with adjacent pieces merged while their slopes
/// fail to decrease. Valid only if the quotient is semistable.
pub fn candidate_pieces(tower: &NormalBundleTower) -> Vec<BundleData> {
    let mut stack: Vec<BundleData> = Vec::new();
    let split = hn_split(&tower.n_cq);
    let inputs = split
        .pieces()
        .iter()
        .copied()
        .chain(std::iter::once(tower.quotient_q));
    for p in inputs {
        let mut cur = p;
        while let Some(last) = stack.last() {
            if last.slope() <= cur.slope() {
                cur = last.plus(&cur);
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(cur);
    }
    stack
}

fn conditional_verdict(c: &TetragonalCurve, tower: &NormalBundleTower) -> TheoremVerdict {
    let pieces = candidate_pieces(tower);
    let mut checks: Vec<Check> = pieces
        .windows(2)
        .map(|w| Check::new("hn_slope_ordering", w[0].slope(), Relation::Gt, w[1].slope(), SRC_SLOPE_ORDER))
        .collect();
    checks.push(destabilization_check(tower));
    checks.extend(totals_checks(&pieces, &tower.n_c));
    checks.push(adjunction_check(c, tower));
    let mut hypotheses = vec![
        "filtration candidate valid only if quotient semistability holds: \
         N_{Q/P^{g-1}}|_C is not certified for this curve"
            .to_string(),
    ];
    if !c.balanced_scroll {
        hypotheses.push(format!("scroll twists {:?} are not balanced", c.twists));
    }
    if !c.balanced_syzygy {
        hypotheses.push(format!("syzygy invariants {:?} are not balanced", c.betti));
    }
    TheoremVerdict {
        genus: c.genus,
        parity: c.parity(),
        status: if checks.iter().all(|k| k.pass) {
            VerdictStatus::Conditional
        } else {
            VerdictStatus::Fail
        },
        statement: "conditional filtration candidate".to_string(),
        filtration: HnFiltration::from_pieces(pieces).expect("non-empty"),
        checks,
        hypotheses,
        quotient_stability: QuotientStability::Uncertified,
        bound: None,
    }
}

/// Re-embedding data for `Q = P(O ⊕ O(a) ⊕ O(b))` under `|H + cR|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryEmbedding {
    pub r: i64,
    pub g: i64,
    /// `4H² - 2(g-5) HR` on the scroll with twists `(c, a+c, b+c)`.
    pub embedded_class: ChowClass,
    /// The same class on the scroll with twists `(0, a, b)`.
    pub base_class: ChowClass,
    /// `8c - 2g + 10`, the expected `HR` coefficient of `base_class`.
    pub expected_hr: i64,
    pub matches: bool,
}

pub fn corollary_embedding(a: i64, b: i64, c: i64) -> Result<CorollaryEmbedding> {
    if !(0..=1).contains(&a) || !(0..=1).contains(&b) {
        return Err(Error::OutOfRange(format!("a = {a} and b = {b} must lie in {{0, 1}}")));
    }
    if c < 1 {
        return Err(Error::OutOfRange(format!("c = {c} must be positive")));
    }
    let r = 3 * c + a + b + 2;
    let g = r + 1;
    let embedded = ScrollModel::new(&[c, a + c, b + c])?;
    let embedded_class = embedded.class(&[(2, 0, 4), (1, 1, -2 * (g - 5))]);
    let base_class = embedded_class.retwist(-c);
    let expected_hr = 8 * c - 2 * g + 10;
    let expected = base_class.scroll().class(&[(2, 0, 4), (1, 1, expected_hr)]);
    Ok(CorollaryEmbedding {
        r,
        g,
        matches: base_class == expected,
        embedded_class,
        base_class,
        expected_hr,
    })
}

/// The three models of a balanced smooth 3-fold scroll, by `g mod 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThreefoldModel {
    #[serde(rename = "P1xP2")]
    ProductP1P2,
    #[serde(rename = "Bl_L P3")]
    BlownUpP3,
    #[serde(rename = "small resolution")]
    SmallResolution,
}

impl fmt::Display for ThreefoldModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThreefoldModel::ProductP1P2 => "P¹×P²",
            ThreefoldModel::BlownUpP3 => "Bl_L P³",
            ThreefoldModel::SmallResolution => "small resolution of the quadric cone",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardTransform {
    pub k: i64,
    pub model_tag: ThreefoldModel,
    pub transformed_scroll: ScrollModel,
    pub c2_class: ChowClass,
    pub transformed_c2_class: ChowClass,
    /// `([C_2]·H, [C_2]·R)` after the transform.
    pub transformed_c2_degrees: (i64, i64),
}

/// `[C_2] = 3H² - (2g-9) HR` on the scroll of `c`.
pub fn elliptic_component_class(c: &TetragonalCurve) -> ChowClass {
    c.scroll().class(&[(2, 0, 3), (1, 1, -(2 * c.genus - 9))])
}

/// Twists the balanced scroll down by `k = ⌊(g-3)/3⌋`, i.e. `H ↦ H - kR`.
pub fn picard_transform(c: &TetragonalCurve) -> Result<PicardTransform> {
    if !c.balanced_scroll {
        return Err(Error::InvalidTwists(format!(
            "twists {:?} are not balanced",
            c.twists
        )));
    }
    let k = (c.genus - 3).div_euclid(3);
    let c2 = elliptic_component_class(c);
    let transformed = c2.retwist(-k);
    let scroll = transformed.scroll().clone();
    let model_tag = match scroll.c1() {
        0 => ThreefoldModel::ProductP1P2,
        1 => ThreefoldModel::BlownUpP3,
        _ => ThreefoldModel::SmallResolution,
    };
    let degrees = (
        intersect_number(&transformed, &scroll.h())?,
        intersect_number(&transformed, &scroll.r())?,
    );
    Ok(PicardTransform {
        k,
        model_tag,
        transformed_scroll: scroll,
        c2_class: c2,
        transformed_c2_class: transformed,
        transformed_c2_degrees: degrees,
    })
}

/// `β = d(d-3)/2`, the number of quadric generators in the first syzygy step.
pub fn syzygy_rank(d: i64) -> Result<i64> {
    if d < 3 {
        return Err(Error::OutOfRange(format!("gonality {d} must be at least 3")));
    }
    Ok(d * (d - 3) / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecantSpan {
    pub h0: i64,
    pub span_dim: i64,
}

/// For a divisor `D` of a `g^1_d` on a canonical curve: `h^0(ω(-D)) = g - d + 1`
/// and `D` spans a `P^{d-2}`.
pub fn secant_span(g: i64, d: i64) -> Result<SecantSpan> {
    if d < 2 || d > g - 1 {
        return Err(Error::OutOfRange(format!("pencil degree {d} must lie in 2..={}", g - 1)));
    }
    Ok(SecantSpan {
        h0: g - d + 1,
        span_dim: d - 2,
    })
}
