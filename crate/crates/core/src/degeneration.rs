//! The nodal degeneration `C ⇝ C_1 ∪ C_2` on the scroll and the subbundle
//! bound it produces for `N_{Q/P^{g-1}}|_C`.
//!
//! `C_1` is a rational normal curve of degree `g - 2` spanning a hyperplane,
//! `C_2` is an elliptic normal curve of degree `g`, and they meet in `g` nodes:
//!
//! ```text
//! [C_1] = H² + HR        [C_2] = 3H² - (2g-9) HR        [C_1] + [C_2] = [C]
//! ```
//!
//! Restricted to each component, `N_{Q/P^{g-1}}` is a quotient of a semistable
//! bundle, so its subbundles have slope at most `g` on `C_1` and `g²/(g-2)` on
//! `C_2`. Their sum bounds adjusted slopes on the special fiber, and that bound
//! is carried to the general curve. The semistability of elliptic normal
//! bundles and the special-to-general transfer are taken as axioms and listed
//! in every certificate.

use serde::{Deserialize, Serialize};

use crate::chow::{intersect_number, ChowClass};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::slope::{
    is_semistable_split, quotient_bound, semistable_hypothesis, BoundCertificate, BundleData,
    Provenance, ProvenanceStep, SplitBundle,
};
use crate::tetragonal::{
    self, balanced_split, check_genus, curve_class, elliptic_component_class, normal_degree_in_scroll,
    projective_normal_bundle, Check, Relation, TetragonalCurve,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    pub genus: i64,
    pub chow_class: ChowClass,
    pub h_degree: i64,
    pub r_degree: i64,
    /// For `C_1`: the divisor `S` of class `H + R` it is a hyperplane section of.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support_divisor: Option<ChowClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodalDegeneration {
    pub g: i64,
    pub components: Vec<Component>,
    pub node_count: i64,
    pub ambient_dim: i64,
}

impl NodalDegeneration {
    pub fn rational_component(&self) -> &Component {
        &self.components[0]
    }

    pub fn elliptic_component(&self) -> &Component {
        &self.components[1]
    }

    /// `Σ genera + nodes - 1`.
    pub fn arithmetic_genus(&self) -> i64 {
        self.components.iter().map(|c| c.genus).sum::<i64>() + self.node_count - 1
    }

    pub fn class_sum(&self) -> ChowClass {
        let first = self.components[0].chow_class.clone();
        self.components[1..]
            .iter()
            .fold(first, |acc, c| acc.add(&c.chow_class).expect("same scroll"))
    }

    /// Recomputes every bookkeeping identity; all checks pass for a valid model.
    pub fn checks(&self) -> Vec<Check> {
        let g = self.g;
        let c = TetragonalCurve::general(g).expect("validated at build");
        let class = curve_class(&c);
        let c1 = self.rational_component();
        let c2 = self.elliptic_component();
        let scroll = class.scroll();
        let mut out = vec![
            Check::ints(
                "class_sum_equals_curve_class",
                i64::from(self.class_sum() == class),
                Relation::Eq,
                1,
                "flat limit preserves the curve class",
            ),
            Check::ints(
                "arithmetic_genus",
                self.arithmetic_genus(),
                Relation::Eq,
                g,
                "g-secant union of a rational and an elliptic curve",
            ),
            Check::ints(
                "rational_component_h_degree",
                intersect_number(&c1.chow_class, &scroll.h()).expect("curve class"),
                Relation::Eq,
                g - 2,
                "C_1 spans a hyperplane",
            ),
            Check::ints(
                "elliptic_component_h_degree",
                intersect_number(&c2.chow_class, &scroll.h()).expect("curve class"),
                Relation::Eq,
                g,
                "C_2 is an elliptic normal curve of degree g",
            ),
            Check::ints(
                "rational_component_r_degree",
                intersect_number(&c1.chow_class, &scroll.r()).expect("curve class"),
                Relation::Eq,
                1,
                "C_1 is a section of the ruling",
            ),
            Check::ints(
                "elliptic_component_r_degree",
                intersect_number(&c2.chow_class, &scroll.r()).expect("curve class"),
                Relation::Eq,
                3,
                "C_2 is trigonal along the ruling",
            ),
        ];
        if let Some(s) = &c1.support_divisor {
            out.push(Check::ints(
                "rational_component_is_hyperplane_section",
                i64::from(s.mul(&scroll.h()).expect("same scroll") == c1.chow_class),
                Relation::Eq,
                1,
                "C_1 = S ∩ hyperplane with [S] = H + R",
            ));
        }
        // the restricted quotients on the components add up to the smooth-curve quotient
        if let Ok((q1, q2)) = restricted_quotients(self) {
            let smooth = tetragonal::normal_tower(&c).quotient_q;
            out.push(Check::ints(
                "restricted_quotient_degrees_add_up",
                q1.degree() + q2.degree(),
                Relation::Eq,
                smooth.degree(),
                "degree is constant in flat families",
            ));
        }
        out
    }
}

/// The standard degeneration for the general curve of genus `g`.
pub fn build_degeneration(g: i64) -> Result<NodalDegeneration> {
    degeneration_for(&TetragonalCurve::general(g)?)
}

/// The degeneration on the scroll of `c`. Unbalanced scrolls are refused: the
/// elliptic component is only known to exist on balanced ones.
pub fn degeneration_for(c: &TetragonalCurve) -> Result<NodalDegeneration> {
    check_genus(c.genus)?;
    if !c.balanced_scroll {
        return Err(Error::InvalidTwists(format!(
            "degeneration requires balanced scroll twists, got {:?}",
            c.twists
        )));
    }
    let g = c.genus;
    let scroll = c.scroll();
    let s = scroll.divisor(1, 1);
    let c1_class = s.mul(&scroll.h())?;
    let c2_class = elliptic_component_class(c);
    let component = |name: &str, genus: i64, class: ChowClass, support: Option<ChowClass>| -> Result<Component> {
        Ok(Component {
            name: name.to_string(),
            genus,
            h_degree: intersect_number(&class, &scroll.h())?,
            r_degree: intersect_number(&class, &scroll.r())?,
            chow_class: class,
            support_divisor: support,
        })
    };
    Ok(NodalDegeneration {
        g,
        components: vec![
            component("C1", 0, c1_class, Some(s))?,
            component("C2", 1, c2_class, None)?,
        ],
        node_count: g,
        ambient_dim: g - 1,
    })
}

/// `N_{Q/P^{g-1}}` restricted to `C_1` and to `C_2`, each of rank `g - 4`.
pub fn restricted_quotients(d: &NodalDegeneration) -> Result<(BundleData, BundleData)> {
    let g = d.g;
    let rank = (g - 4) as u64;
    let c1 = d.rational_component();
    let c2 = d.elliptic_component();
    let n1 = projective_normal_bundle(g - 1, c1.h_degree, c1.genus)?;
    let n2 = projective_normal_bundle(g - 1, c2.h_degree, c2.genus)?;
    let q1 = n1.degree() - normal_degree_in_scroll(&c1.chow_class, c1.genus)?;
    let q2 = n2.degree() - normal_degree_in_scroll(&c2.chow_class, c2.genus)?;
    Ok((BundleData::new(rank, q1)?, BundleData::new(rank, q2)?))
}

/// Numerical data of a subbundle `F ⊂ ν*E` on the normalization of a two-component
/// nodal curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluedBundleSketch {
    pub rank: u64,
    pub component_degrees: (i64, i64),
    /// `codim_F(F_{p1} ∩ F_{p2})` at each node.
    pub node_codims: Vec<u64>,
}

impl GluedBundleSketch {
    pub fn new(rank: u64, component_degrees: (i64, i64), node_codims: Vec<u64>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if let Some(bad) = node_codims.iter().find(|&&c| c > rank) {
            return Err(Error::OutOfRange(format!(
                "node codimension {bad} exceeds subbundle rank {rank}"
            )));
        }
        Ok(GluedBundleSketch {
            rank,
            component_degrees,
            node_codims,
        })
    }

    /// A sketch on `d`, which must supply one codimension per node.
    pub fn on(
        d: &NodalDegeneration,
        rank: u64,
        component_degrees: (i64, i64),
        node_codims: Vec<u64>,
    ) -> Result<Self> {
        if node_codims.len() as i64 != d.node_count {
            return Err(Error::OutOfRange(format!(
                "{} node codimensions given for {} nodes",
                node_codims.len(),
                d.node_count
            )));
        }
        Self::new(rank, component_degrees, node_codims)
    }

    pub fn slope(&self) -> Rational {
        let (d1, d2) = self.component_degrees;
        Rational::new((d1 + d2) as i128, self.rank as i128)
    }
}

/// `μ^adj(F) = μ(F) - (1/rk F) Σ_nodes codim`.
pub fn adjusted_slope(s: &GluedBundleSketch) -> Rational {
    let total: u64 = s.node_codims.iter().sum();
    s.slope() - Rational::new(total as i128, s.rank as i128)
}

/// `N` of a rational normal curve of degree `n` in `P^n`: `O(n+2)^{n-1}`.
pub fn rational_normal_bundle(n: i64) -> Result<SplitBundle> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("rational normal curve degree {n} must be at least 2")));
    }
    let total = projective_normal_bundle(n, n, 0)?;
    SplitBundle::new(balanced_split(total.degree(), total.rank() as usize))
}

/// `N` of an elliptic normal curve of degree `g` in `P^{g-1}`, with its
/// semistability recorded as a hypothesis.
pub fn elliptic_normal_invariants(g: i64) -> Result<(BundleData, BoundCertificate)> {
    if g < 5 {
        return Err(Error::OutOfRange(format!(
            "elliptic normal curve of degree {g} needs g ≥ 5"
        )));
    }
    let n = projective_normal_bundle(g - 1, g, 1)?;
    let cert = semistable_hypothesis(
        &n,
        format!("N of an elliptic normal curve in P^{}", g - 1),
        "elliptic normal curves have semistable normal bundle",
    );
    Ok((n, cert))
}

/// Bounds for subbundles of `N_{Q/P^{g-1}}` restricted to `C_1` and `C_2`.
pub fn component_bounds(g: i64) -> Result<(BoundCertificate, BoundCertificate)> {
    let d = build_degeneration(g)?;
    let (q1, q2) = restricted_quotients(&d)?;

    let rnc = rational_normal_bundle(g - 2)?;
    debug_assert!(is_semistable_split(&rnc));
    let mut b1 = quotient_bound(&rnc.as_bundle(), &q1)?;
    b1.applies_to = format!("subbundles of N_Q|_C1 {q1}");
    b1.chain.insert(
        0,
        ProvenanceStep::new(
            format!("N of the rational normal curve C1 in P^{} splits as O({})^{}", g - 2, g, g - 3),
            "rational normal curve normal bundle is balanced, hence semistable",
            rnc.slope(),
        ),
    );

    let (n2, hyp) = elliptic_normal_invariants(g)?;
    let mut b2 = quotient_bound(&n2, &q2)?;
    b2.applies_to = format!("subbundles of N_Q|_C2 {q2}");
    let mut chain = hyp.chain;
    chain.append(&mut b2.chain);
    b2.chain = chain;

    Ok((b1, b2))
}

/// `μ^adj(F) ≤ μ(F) = μ(F|_{C_1}) + μ(F|_{C_2}) ≤ g + g²/(g-2) = 2g + 2 + 4/(g-2)`.
pub fn combined_bound(g: i64) -> Result<BoundCertificate> {
    let (b1, b2) = component_bounds(g)?;
    let bound = b1.bound + b2.bound;
    let mut chain = b1.chain;
    chain.extend(b2.chain);
    chain.push(ProvenanceStep::new(
        "adjusted slope never exceeds the slope on the normalization",
        "codimension corrections are non-negative",
        bound,
    ));
    chain.push(ProvenanceStep::new(
        "slope of F on the normalization is the sum of its component slopes",
        "sum of component bounds",
        bound,
    ));
    let mut warnings = b1.warnings;
    warnings.extend(b2.warnings);
    Ok(BoundCertificate {
        bound,
        applies_to: "adjusted slopes of subbundles of ν*N_Q on the nodal special fiber C1 ∪ C2".to_string(),
        provenance: Provenance::ComponentSum,
        chain,
        warnings,
    })
}

/// Relabels a special-fiber bound as a bound on the general tetragonal curve.
pub fn transfer_bound(c: &BoundCertificate) -> Result<BoundCertificate> {
    if c.provenance != Provenance::ComponentSum {
        return Err(Error::Provenance {
            found: c.provenance.as_str(),
            expected: Provenance::ComponentSum.as_str(),
        });
    }
    let mut out = c.clone();
    out.provenance = Provenance::TransferredToGeneralFiber;
    out.applies_to = "subbundles of N_{Q/P^{g-1}}|_C on the general fiber (general tetragonal curve)".to_string();
    out.chain.push(ProvenanceStep::new(
        "bound on the special fiber carries over to the general fiber",
        "adjusted-slope bounds specialize in families of nodal curves (assumed)",
        c.bound,
    ));
    Ok(out)
}

/// `2g + 2 + 4/(g-2)` in closed form, for cross-checking [`combined_bound`].
pub fn closed_form_bound(g: i64) -> Rational {
    int(2 * g + 2) + Rational::new(4, (g - 2) as i128)
}
