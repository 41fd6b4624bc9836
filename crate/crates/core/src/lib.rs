//! Exact intersection theory on rational normal scrolls and slope arithmetic
//! for the normal bundles of tetragonal canonical curves.
//!
//! The crate is organised bottom-up:
//!
//! * [`chow`]: Chow rings of projective bundles `P(O(a_1) ⊕ … ⊕ O(a_r))` over the line.
//! * [`slope`]: slopes, Harder-Narasimhan filtrations of split bundles, bound certificates.
//! * [`tetragonal`]: the tetragonal curve model, its normal-bundle tower and the
//!   filtration verdicts.
//! * [`degeneration`]: the two-component nodal degeneration and the slope bound it yields.
//! * [`oracle`]: independent brute-force checkers for the Chow product and HN routines.
//! * [`report`]: request/document types behind the `tetrahn` command line tool.
//!
//! All arithmetic is exact. Rationals are [`rational::Rational`] and render as `"p/q"`.

pub mod chow;
pub mod degeneration;
pub mod error;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod slope;
pub mod tetragonal;

pub use chow::{ChowClass, ScrollModel};
pub use degeneration::{GluedBundleSketch, NodalDegeneration};
pub use error::{Error, Result};
pub use rational::Rational;
pub use slope::{BoundCertificate, BundleData, HnFiltration, Provenance, SplitBundle};
pub use tetragonal::{NormalBundleTower, TetragonalCurve, TheoremVerdict};
