//! Exact symbolic computation for the six initial G-structure ambiguity
//! groups of 3- and 5-dimensional CR manifolds.
//!
//! The crate is organised in five layers:
//!
//! * [`scalar`] — the exact coefficient domain: Gaussian rationals, a
//!   conjugation-closed polynomial ring, and its localization at declared
//!   unit symbols, with an expression parser and canonical printer.
//! * [`matrix`] — dense square matrices over that domain with exact
//!   multiplication, cofactor determinant, adjugate and inverse.
//! * [`groups`] — the six parametric matrix group templates, mechanical
//!   verification of the group axioms, and exact Lie algebra computations.
//! * [`frames`] — formal vector-field calculus over abstract frames with
//!   bracket tables, from which every frame-transfer matrix is re-derived
//!   by the Leibniz rule and diffed against the printed formulas.
//! * [`hypersurface`] — concrete coordinate computations on graphed
//!   hypersurfaces: CR generators, coordinate brackets, rank and Levi
//!   tests, and the multiplier function of an explicit equivalence.
//!
//! All values are immutable after construction and all arithmetic is exact;
//! nothing in this crate ever rounds.
//!
//! ```
//! use crgeo::groups::{lie_algebra_basis, lie_dimension, template, verify_group, GroupId};
//!
//! // the smallest ambiguity group verifies symbolically and is 4-dimensional
//! let t = template(GroupId::I);
//! assert!(verify_group(t).all_passed());
//! assert_eq!(lie_dimension(&lie_algebra_basis(t)), 4);
//! ```

pub mod frames;
pub mod groups;
pub mod hypersurface;
pub mod matrix;
pub mod sample;
pub mod scalar;
