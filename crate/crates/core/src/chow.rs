//! Chow rings of projective bundles `P(E) → P¹` with `E = O(a_1) ⊕ … ⊕ O(a_r)`.
//!
//! The ring is generated by the tautological class `H` and the fiber class `R`
//! subject to
//!
//! ```text
//! R² = 0        H^r = c1 · H^(r-1) R        (c1 = a_1 + … + a_r)
//! ```
//!
//! A [`ChowClass`] is kept in normal form at all times: its support is the
//! `2r` monomials `H^i` and `H^i R` with `0 ≤ i < r`. The single codimension-`r`
//! monomial `H^(r-1) R` is the class of a point, so [`ChowClass::degree`] reads
//! off its coefficient.
//!
//! The relation `H^r = c1 H^(r-1) R` is the Grothendieck relation for a split
//! bundle on the line (`c2` of the base vanishes); it is not valid over other
//! bases.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A projective bundle over the line, recorded by its sorted twists.
///
/// Two classes are compatible iff their scrolls are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ScrollRepr")]
pub struct ScrollModel {
    twists: Vec<i64>,
}

#[derive(Deserialize)]
struct ScrollRepr {
    twists: Vec<i64>,
}

impl TryFrom<ScrollRepr> for ScrollModel {
    type Error = Error;

    fn try_from(repr: ScrollRepr) -> Result<Self> {
        ScrollModel::new(&repr.twists)
    }
}

impl ScrollModel {
    /// Builds the scroll `P(⊕ O(a_i))`. Twists may be given in any order and
    /// may be zero or negative; they are stored non-increasing.
    pub fn new(twists: &[i64]) -> Result<Self> {
        if twists.len() < 2 {
            return Err(Error::ScrollRank);
        }
        let mut twists = twists.to_vec();
        twists.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ScrollModel { twists })
    }

    /// Dimension of the scroll, equal to the rank of `E`.
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn c1(&self) -> i64 {
        self.twists.iter().sum()
    }

    /// `c1 + r - 1`, the span of the minimal-degree embedding by `|H|`.
    /// Only meaningful when every twist is positive.
    pub fn ambient_dim(&self) -> i64 {
        self.c1() + self.rank() as i64 - 1
    }

    /// True when `|H|` embeds the scroll smoothly (all twists ≥ 1).
    pub fn is_embedded_smooth(&self) -> bool {
        self.twists.iter().all(|&a| a >= 1)
    }

    /// The scroll `P(E ⊗ O(m))`.
    pub fn twisted(&self, m: i64) -> ScrollModel {
        ScrollModel {
            twists: self.twists.iter().map(|a| a + m).collect(),
        }
    }

    pub fn zero(&self) -> ChowClass {
        ChowClass {
            scroll: self.clone(),
            coeffs: vec![0; 2 * self.rank()],
        }
    }

    pub fn one(&self) -> ChowClass {
        self.monomial(0, 0, 1)
    }

    pub fn h(&self) -> ChowClass {
        self.monomial(1, 0, 1)
    }

    pub fn r(&self) -> ChowClass {
        self.monomial(0, 1, 1)
    }

    /// `coeff · H^h_pow R^r_pow`, reduced. Exponents may exceed the normal-form range.
    pub fn monomial(&self, h_pow: u32, r_pow: u32, coeff: i64) -> ChowClass {
        let mut class = self.zero();
        class.accumulate(h_pow as usize, r_pow as usize, coeff);
        class
    }

    /// Sum of `c · H^i R^j` over the given `(i, j, c)` terms, reduced.
    pub fn class(&self, terms: &[(u32, u32, i64)]) -> ChowClass {
        let mut class = self.zero();
        for &(i, j, c) in terms {
            class.accumulate(i as usize, j as usize, c);
        }
        class
    }

    /// `a H + b R`.
    pub fn divisor(&self, a: i64, b: i64) -> ChowClass {
        self.class(&[(1, 0, a), (0, 1, b)])
    }

    /// `K = -r H + (c1 - 2) R`.
    pub fn canonical_class(&self) -> ChowClass {
        self.divisor(-(self.rank() as i64), self.c1() - 2)
    }
}

/// An integral class on a [`ScrollModel`], stored in reduced normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowClass {
    scroll: ScrollModel,
    // index j * r + i holds the coefficient of H^i R^j
    coeffs: Vec<i64>,
}

impl ChowClass {
    pub fn scroll(&self) -> &ScrollModel {
        &self.scroll
    }

    fn rank(&self) -> usize {
        self.scroll.rank()
    }

    /// Coefficient of `H^h_pow R^r_pow` in normal form (zero outside the support).
    pub fn coeff(&self, h_pow: usize, r_pow: usize) -> i64 {
        let r = self.rank();
        if h_pow >= r || r_pow > 1 {
            return 0;
        }
        self.coeffs[r_pow * r + h_pow]
    }

    /// Non-zero `(h_pow, r_pow, coeff)` terms.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let r = self.rank();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (k % r, k / r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// True when every non-zero term has codimension `codim`. The zero class is
    /// pure of every codimension.
    pub fn is_pure(&self, codim: usize) -> bool {
        self.terms().all(|(i, j, _)| i + j == codim)
    }

    /// The codimension-`codim` graded piece.
    pub fn graded_part(&self, codim: usize) -> ChowClass {
        let mut out = self.scroll.zero();
        for (i, j, c) in self.terms().filter(|(i, j, _)| i + j == codim) {
            out.accumulate(i, j, c);
        }
        out
    }

    /// Adds `c · H^i R^j`, applying `R² → 0` and `H^r → c1 H^(r-1) R`.
    fn accumulate(&mut self, i: usize, j: usize, c: i64) {
        let r = self.rank();
        if c == 0 || j >= 2 {
            return;
        }
        if i < r {
            self.coeffs[j * r + i] += c;
        } else if i == r && j == 0 {
            self.coeffs[r + r - 1] += c * self.scroll.c1();
        }
        // everything else has codimension > r and vanishes
    }

    fn check_same(&self, other: &ChowClass) -> Result<()> {
        if self.scroll != other.scroll {
            return Err(Error::MismatchedScroll {
                left: self.scroll.twists.clone(),
                right: other.scroll.twists.clone(),
            });
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(ChowClass {
            scroll: self.scroll.clone(),
            coeffs,
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> ChowClass {
        ChowClass {
            scroll: self.scroll.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Ring product, reduced to normal form.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_same(other)?;
        let mut out = self.scroll.zero();
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in other.terms() {
                out.accumulate(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> ChowClass {
        (0..n).fold(self.scroll.one(), |acc, _| {
            acc.mul(self).expect("same scroll")
        })
    }

    /// Coefficient of the point class `H^(r-1) R`; lower-codimension parts are ignored.
    pub fn degree(&self) -> i64 {
        self.coeff(self.rank() - 1, 1)
    }

    /// Re-expresses the class on `P(E ⊗ O(m))`, whose tautological class is
    /// `H' = H + m R`. Substitutes `H = H' - m R` and reduces there.
    pub fn retwist(&self, m: i64) -> ChowClass {
        let target = self.scroll.twisted(m);
        let old_h = target.divisor(1, -m);
        let r = target.r();
        let mut out = target.zero();
        for (i, j, c) in self.terms() {
            let term = old_h
                .pow(i as u32)
                .mul(&r.pow(j as u32))
                .expect("same scroll")
                .scale(c);
            out = out.add(&term).expect("same scroll");
        }
        out
    }
}

/// Intersection number of a curve class (codimension `r - 1`) with a divisor.
pub fn intersect_number(curve_class: &ChowClass, divisor_class: &ChowClass) -> Result<i64> {
    let r = curve_class.rank();
    if !curve_class.is_pure(r - 1) {
        return Err(Error::Codimension {
            role: "curve",
            class: curve_class.to_string(),
            expected: r - 1,
        });
    }
    if !divisor_class.is_pure(1) {
        return Err(Error::Codimension {
            role: "divisor",
            class: divisor_class.to_string(),
            expected: 1,
        });
    }
    Ok(curve_class.mul(divisor_class)?.degree())
}

/// JSON key of a normal-form monomial: `"1"`, `"R"`, `"H^i"`, `"H^i R"`.
pub fn monomial_key(h_pow: usize, r_pow: usize) -> String {
    match (h_pow, r_pow) {
        (0, 0) => "1".to_string(),
        (0, 1) => "R".to_string(),
        (i, 0) => format!("H^{i}"),
        (i, _) => format!("H^{i} R"),
    }
}

fn parse_monomial_key(key: &str) -> Option<(u32, u32)> {
    match key {
        "1" => Some((0, 0)),
        "R" => Some((0, 1)),
        _ => {
            let rest = key.strip_prefix("H^")?;
            match rest.strip_suffix(" R") {
                Some(i) => Some((i.parse().ok()?, 1)),
                None => Some((rest.parse().ok()?, 0)),
            }
        }
    }
}

impl Serialize for ChowClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a ChowClass);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(None)?;
                for (i, j, c) in self.0.terms() {
                    map.serialize_entry(&monomial_key(i, j), &c)?;
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("scroll", &self.scroll)?;
        map.serialize_entry("coeffs", &Coeffs(self))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for ChowClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            scroll: ScrollModel,
            coeffs: BTreeMap<String, i64>,
        }
        let repr = Repr::deserialize(d)?;
        let mut terms = Vec::with_capacity(repr.coeffs.len());
        for (key, c) in &repr.coeffs {
            let (i, j) = parse_monomial_key(key)
                .ok_or_else(|| D::Error::custom(format!("bad monomial key {key:?}")))?;
            if i as usize >= repr.scroll.rank() || j > 1 {
                return Err(D::Error::custom(format!("monomial {key:?} is not in normal form")));
            }
            terms.push((i, j, *c));
        }
        Ok(repr.scroll.class(&terms))
    }
}

impl fmt::Display for ChowClass {
    /// Human form such as `4H^2 - 6HR`, highest codimension first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        terms.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        for (k, (i, j, c)) in terms.into_iter().enumerate() {
            let body = match (i, j) {
                (0, 0) => String::new(),
                (0, _) => "R".to_string(),
                (1, 0) => "H".to_string(),
                (1, _) => "HR".to_string(),
                (i, 0) => format!("H^{i}"),
                (i, _) => format!("H^{i}R"),
            };
            let mag = c.unsigned_abs();
            let coeff = if mag == 1 && !body.is_empty() {
                String::new()
            } else {
                mag.to_string()
            };
            match (k, c < 0) {
                (0, false) => write!(f, "{coeff}{body}")?,
                (0, true) => write!(f, "-{coeff}{body}")?,
                (_, false) => write!(f, " + {coeff}{body}")?,
                (_, true) => write!(f, " - {coeff}{body}")?,
            }
        }
        Ok(())
    }
}
