//! Exact-arithmetic workbench for the operadic calculus behind shifted
//! Poisson structures on affine derived schemes.
//!
//! Everything is computed over the rationals with no floating point and no
//! tolerances: two values are equal iff they are identical reduced fractions.
//! The main layers, bottom to top:
//!
//! * [`grade`] — finite-basis cochain complexes, Koszul signs, degree shifts;
//! * [`perm`] — permutations and the two shuffle families the convolution
//!   formulas sum over;
//! * [`operad`] — the endomorphism operad of a finite complex: partial
//!   composition, symmetric-group action, operadic suspension;
//! * [`conv`] — the convolution Lie algebra of an operad, multi-derivations
//!   and the shuffle product;
//! * [`cdga`], [`polyvector`] — semi-free graded-commutative presentations,
//!   shifted polyvector fields with the Schouten bracket, and the realization
//!   of polyvectors as symmetric multi-derivations;
//! * [`linf`] — the resolution of the weight-2 shifted line, Maurer–Cartan
//!   checking, and the bridge from polyvector families to L∞ structures;
//! * [`simplex`] — polynomial de Rham forms on simplices and mapping-space
//!   simplices (homotopies between Poisson structures).
//!
//! Every sign convention the underlying formulas leave open is pinned in
//! [`ledger`], where each entry can be deliberately flipped at process start
//! to demonstrate that the verification suites detect the change.

pub mod cdga;
pub mod conv;
pub mod error;
pub mod grade;
pub mod ledger;
pub mod linf;
pub mod operad;
pub mod perm;
pub mod polyvector;
pub mod report;
pub mod scalar;
pub mod simplex;
pub mod suites;

pub use error::{Error, Result};
pub use scalar::Scalar;
