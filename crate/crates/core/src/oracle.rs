//! Brute-force cross-checks that share no code path with [`crate::chow`] or
//! [`crate::slope`].
//!
//! * Chow products: expand in the free ring `Z[H, R]`, write every monomial as
//!   a word `H…HR…R`, then rewrite words with `RR → 0` and
//!   `H^r → c1 · H^(r-1) R` until no rule applies. Either rule may be tried
//!   first; both orders must give the same normal form.
//! * HN filtrations of split bundles: enumerate every sub-multiset of summands,
//!   take the one of maximal slope (then maximal rank), recurse on the rest.
//!
//! [`run`] samples random cases from a seeded ChaCha stream. Case `i` always
//! uses stream `i`, so results do not depend on how cases are scheduled.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chow::{ChowClass, ScrollModel};
use crate::slope::{hn_split, SplitBundle};

/// A polynomial in the free commutative ring `Z[H, R]`, keyed by `(h_pow, r_pow)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FreePoly(pub BTreeMap<(u32, u32), i64>);

impl FreePoly {
    pub fn from_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = FreePoly::default();
        for &(i, j, c) in terms {
            *p.0.entry((i, j)).or_default() += c;
        }
        p.0.retain(|_, c| *c != 0);
        p
    }

    /// Reads the stored coefficients of a class as a free polynomial.
    pub fn from_class(class: &ChowClass) -> Self {
        let terms: Vec<_> = class
            .terms()
            .map(|(i, j, c)| (i as u32, j as u32, c))
            .collect();
        FreePoly::from_terms(&terms)
    }

    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut out = FreePoly::default();
        for (&(i1, j1), &c1) in &self.0 {
            for (&(i2, j2), &c2) in &other.0 {
                *out.0.entry((i1 + i2, j1 + j2)).or_default() += c1 * c2;
            }
        }
        out.0.retain(|_, c| *c != 0);
        out
    }

    /// Monomials as words, without any rewriting.
    pub fn words(&self) -> BTreeMap<String, i64> {
        self.0
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(&(i, j), &c)| (word(i, j), c))
            .collect()
    }
}

fn word(h_pow: u32, r_pow: u32) -> String {
    let mut w = "H".repeat(h_pow as usize);
    w.push_str(&"R".repeat(r_pow as usize));
    w
}

/// Which rewrite rule is attempted first at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteOrder {
    HFirst,
    RFirst,
}

/// Rewrites one word to normal form; `None` means it rewrote to zero.
pub fn rewrite_word(word: &str, coeff: i64, rank: usize, c1: i64, order: RewriteOrder) -> Option<(String, i64)> {
    let top = "H".repeat(rank);
    let mut w = word.to_string();
    let mut c = coeff;
    loop {
        let can_kill = w.contains("RR");
        let can_lower = w.starts_with(&top);
        let kill_now = match order {
            RewriteOrder::RFirst => can_kill,
            RewriteOrder::HFirst => can_kill && !can_lower,
        };
        if kill_now {
            return None;
        }
        if can_lower {
            // H^r → c1 H^(r-1) R, then commute letters back to H…HR…R
            w = commute(&format!("{}R{}", &top[1..], &w[rank..]));
            c *= c1;
            if c == 0 {
                return None;
            }
            continue;
        }
        return Some((w, c));
    }
}

fn commute(w: &str) -> String {
    let mut letters: Vec<char> = w.chars().collect();
    letters.sort_unstable();
    letters.into_iter().collect()
}

pub fn rewrite_normal_form(
    p: &FreePoly,
    rank: usize,
    c1: i64,
    order: RewriteOrder,
) -> BTreeMap<String, i64> {
    let mut out: BTreeMap<String, i64> = BTreeMap::new();
    for (w, c) in p.words() {
        if let Some((w, c)) = rewrite_word(&w, c, rank, c1, order) {
            *out.entry(w).or_default() += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Free-ring product of `x` and `y`, rewritten to normal form.
pub fn free_product_normal_form(
    x: &FreePoly,
    y: &FreePoly,
    rank: usize,
    c1: i64,
    order: RewriteOrder,
) -> BTreeMap<String, i64> {
    rewrite_normal_form(&x.mul(y), rank, c1, order)
}

/// HN pieces `(rank, degree)` of `⊕ O(d_i)` by exhaustive search over sub-multisets.
pub fn hn_by_enumeration(degrees: &[i64]) -> Vec<(u64, i64)> {
    let mut rest = degrees.to_vec();
    let mut pieces = Vec::new();
    while !rest.is_empty() {
        let n = rest.len();
        let mut best: Option<(u32, u64, i64)> = None;
        for mask in 1u32..(1 << n) {
            let rank = mask.count_ones() as u64;
            let deg: i64 = (0..n).filter(|k| mask & (1 << k) != 0).map(|k| rest[k]).sum();
            let better = match best {
                None => true,
                Some((_, br, bd)) => {
                    let lhs = deg as i128 * br as i128;
                    let rhs = bd as i128 * rank as i128;
                    lhs > rhs || (lhs == rhs && rank > br)
                }
            };
            if better {
                best = Some((mask, rank, deg));
            }
        }
        let (mask, rank, deg) = best.expect("non-empty");
        pieces.push((rank, deg));
        rest = (0..n).filter(|k| mask & (1 << k) == 0).map(|k| rest[k]).collect();
    }
    pieces
}

/// One disagreement between the library and an oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: u64,
    pub kind: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub samples: u64,
    pub seed: u64,
    pub chow_agreements: u64,
    pub confluence_agreements: u64,
    pub hn_agreements: u64,
    /// Lowest-index disagreement, if any.
    pub counterexample: Option<Counterexample>,
}

impl OracleSummary {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
            && self.chow_agreements == self.samples
            && self.confluence_agreements == self.samples
            && self.hn_agreements == self.samples
    }
}

/// A random Chow product instance: scroll twists and two free polynomials whose
/// exponents may lie outside normal form.
#[derive(Debug, Clone)]
pub struct ChowCase {
    pub twists: Vec<i64>,
    pub x: Vec<(u32, u32, i64)>,
    pub y: Vec<(u32, u32, i64)>,
}

fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_terms(rng: &mut ChaCha8Rng, rank: usize) -> Vec<(u32, u32, i64)> {
    let n = rng.random_range(1..=6);
    (0..n)
        .map(|_| {
            (
                rng.random_range(0..=rank as u32 + 1),
                rng.random_range(0..=2),
                rng.random_range(-10..=10),
            )
        })
        .collect()
}

pub fn chow_case(seed: u64, index: u64) -> ChowCase {
    let mut rng = stream(seed, index);
    let rank = rng.random_range(2..=4);
    let twists = (0..rank).map(|_| rng.random_range(-5..=5)).collect();
    ChowCase {
        twists,
        x: random_terms(&mut rng, rank),
        y: random_terms(&mut rng, rank),
    }
}

pub fn split_case(seed: u64, index: u64) -> Vec<i64> {
    // distinct stream family from chow_case
    let mut rng = stream(seed ^ 0x9e37_79b9_7f4a_7c15, index);
    let rank = rng.random_range(1..=8);
    (0..rank).map(|_| rng.random_range(-20..=20)).collect()
}

/// Library product vs free-ring rewriting. Returns (agrees, orders_agree, detail).
pub fn check_chow_case(case: &ChowCase) -> (bool, bool, String) {
    let scroll = ScrollModel::new(&case.twists).expect("rank ≥ 2");
    let ours = scroll
        .class(&case.x)
        .mul(&scroll.class(&case.y))
        .expect("same scroll");
    let ours = FreePoly::from_class(&ours).words();
    let fx = FreePoly::from_terms(&case.x);
    let fy = FreePoly::from_terms(&case.y);
    let h_first = free_product_normal_form(&fx, &fy, scroll.rank(), scroll.c1(), RewriteOrder::HFirst);
    let r_first = free_product_normal_form(&fx, &fy, scroll.rank(), scroll.c1(), RewriteOrder::RFirst);
    let detail = format!(
        "twists {:?}, x {:?}, y {:?}: library {:?}, oracle {:?}",
        scroll.twists(),
        case.x,
        case.y,
        ours,
        h_first
    );
    (ours == h_first, h_first == r_first, detail)
}

pub fn check_split_case(degrees: &[i64]) -> (bool, String) {
    let s = SplitBundle::new(degrees.to_vec()).expect("non-empty");
    let ours: Vec<_> = hn_split(&s)
        .pieces()
        .iter()
        .map(|p| (p.rank(), p.degree()))
        .collect();
    let oracle = hn_by_enumeration(degrees);
    let detail = format!("degrees {degrees:?}: library {ours:?}, oracle {oracle:?}");
    (ours == oracle, detail)
}

/// Runs `samples` Chow cases and `samples` HN cases.
pub fn run(samples: u64, seed: u64) -> OracleSummary {
    struct Outcome {
        chow: bool,
        confluent: bool,
        hn: bool,
        failure: Option<Counterexample>,
    }

    let outcomes: Vec<Outcome> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let (chow, confluent, chow_detail) = check_chow_case(&chow_case(seed, i));
            let (hn, hn_detail) = check_split_case(&split_case(seed, i));
            let failure = if !chow {
                Some(("chow_product", chow_detail))
            } else if !confluent {
                Some(("rewrite_confluence", chow_detail))
            } else if !hn {
                Some(("hn_split", hn_detail))
            } else {
                None
            }
            .map(|(kind, detail)| Counterexample {
                index: i,
                kind: kind.to_string(),
                detail,
            });
            Outcome {
                chow,
                confluent,
                hn,
                failure,
            }
        })
        .collect();

    OracleSummary {
        samples,
        seed,
        chow_agreements: outcomes.iter().filter(|o| o.chow).count() as u64,
        confluence_agreements: outcomes.iter().filter(|o| o.confluent).count() as u64,
        hn_agreements: outcomes.iter().filter(|o| o.hn).count() as u64,
        counterexample: outcomes.into_iter().find_map(|o| o.failure),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rewriting_single_words() {
        // r = 3, c1 = 3: H^3 → 3 H^2 R; H^4 → 3 H^3 R → 9 H^2 RR → 0
        assert_eq!(rewrite_word("HHH", 1, 3, 3, RewriteOrder::HFirst), Some(("HHR".into(), 3)));
        assert_eq!(rewrite_word("HHHH", 1, 3, 3, RewriteOrder::HFirst), None);
        assert_eq!(rewrite_word("HHHH", 1, 3, 3, RewriteOrder::RFirst), None);
        assert_eq!(rewrite_word("HRR", 5, 3, 3, RewriteOrder::HFirst), None);
        assert_eq!(rewrite_word("HR", 5, 3, 3, RewriteOrder::RFirst), Some(("HR".into(), 5)));
        assert_eq!(rewrite_word("", 2, 2, 0, RewriteOrder::RFirst), Some(("".into(), 2)));
    }

    #[test]
    fn cube_of_h_on_the_balanced_sextic_base() {
        let h = FreePoly::from_terms(&[(1, 0, 1)]);
        let h3 = free_product_normal_form(&h, &h.mul(&h), 3, 3, RewriteOrder::HFirst);
        assert_eq!(h3, BTreeMap::from([("HHR".to_string(), 3)]));
    }

    #[test]
    fn curve_class_at_genus_eight() {
        // (2H - 2R)(2H - R) on twists (2, 2, 1)
        let y = FreePoly::from_terms(&[(1, 0, 2), (0, 1, -2)]);
        let z = FreePoly::from_terms(&[(1, 0, 2), (0, 1, -1)]);
        let c = free_product_normal_form(&y, &z, 3, 5, RewriteOrder::RFirst);
        assert_eq!(c, BTreeMap::from([("HH".to_string(), 4), ("HR".to_string(), -6)]));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(hn_by_enumeration(&[5, 3, 3, 1]), vec![(1, 5), (2, 6), (1, 1)]);
        assert_eq!(hn_by_enumeration(&[20, 20]), vec![(2, 40)]);
        assert_eq!(hn_by_enumeration(&[20, 24]), vec![(1, 24), (1, 20)]);
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let a = chow_case(42, 17);
        let b = chow_case(42, 17);
        assert_eq!((a.twists, a.x, a.y), (b.twists, b.x, b.y));
        assert_eq!(split_case(7, 3), split_case(7, 3));
        assert_ne!(run(50, 1).samples, 0);
        assert_eq!(run(200, 42), run(200, 42));
    }

    #[test]
    fn small_runs_agree() {
        assert!(run(1, 0).passed());
        assert!(run(500, 7).passed());
    }
}
