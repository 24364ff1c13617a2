//! Exact Heisenberg and Virasoro operators on the representation rings of
//! wreath products `Γ_n = Γ ∼ S_n`, with brute-force group-theoretic oracles.
//!
//! The Fock-space side lives in [`symfun`] and [`operators`]; the group side
//! in [`groups`], [`wreath`] and [`oracle`]; [`charmap`] connects the two.

pub mod charmap;
pub mod combinatorics;
pub mod error;
pub mod groups;
pub mod operators;
pub mod oracle;
pub mod report;
pub mod scalars;
pub mod symfun;
pub mod wreath;

pub use charmap::{ch, ch_classes, ch_inverse, degree_formula, irreducible_character};
pub use combinatorics::{Partition, TypeFunction};
pub use error::{Error, Result};
pub use groups::{BaseGroup, ClassFunction, GroupTable};
pub use operators::{FockOperator, GradedWindow};
pub use oracle::{verify, VerifyParams, THEOREMS};
pub use report::Report;
pub use scalars::{Rational, Scalar};
pub use symfun::{Alphabet, BasisTag, Monomial, SymFunc};
pub use wreath::{WreathClasses, WreathElement, DEFAULT_CAP};
