//! Exact arithmetic for the generalized third-order Jacobsthal sequence
//!
//! ```text
//! J(n+3) = J(n+2) + J(n+1) + 2 J(n),    J(0) = a, J(1) = b, J(2) = c
//! ```
//!
//! with rational seeds. The ordinary third-order Jacobsthal numbers are the
//! seeds `(0, 1, 1)`, the Jacobsthal-Lucas numbers are `(2, 1, 5)`.
//!
//! The crate is organised around one rule: every closed form is checked
//! against the plain recurrence. [`sequences::term`] iterates the recurrence
//! and is the ground truth; [`closed_forms`], [`series`], [`sums`] and
//! [`identities`] compute the same quantities by other routes (Binet sums in
//! `Q(ω)`, period-3 decompositions, power-series division, summation
//! formulas) and the [`identities`] harness compares the two exactly.
//!
//! ```
//! use jacobsthal3::{closed_forms, sequences, SequenceParams};
//!
//! let p = SequenceParams::jacobsthal();
//! for n in 0..20 {
//!     assert_eq!(sequences::term(&p, n), closed_forms::binet_term(&p, n).unwrap());
//! }
//! ```

pub mod arith;
pub mod cli;
pub mod closed_forms;
mod error;
pub mod export;
pub mod identities;
pub mod sequences;
pub mod series;
pub mod sums;

pub use arith::{EisensteinRational, Rational};
pub use closed_forms::BinetCoefficients;
pub use error::{Error, Result};
pub use identities::{CheckResult, IdentityId, Report};
pub use sequences::{CompanionSet, PeriodicTriple, SequenceParams};
pub use series::Poly;
pub use sums::StridedSumContext;
