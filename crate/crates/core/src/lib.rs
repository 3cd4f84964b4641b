//! Exact quasi-valuations over ordered monoids.
//!
//! The crate covers ℤᵏ-lex value groups and their divisible hulls, the cut
//! monoid of ℤᵏ in canonical finite form, valuations on ℚ, ℚ(t) and ℚ(√d),
//! quasi-valuations built from them (n-adic, Kummer-style, minima of
//! valuations, filter quasi-valuations), the amalgamated order used to
//! compare monoid values against the divisible hull, and sampled checkers
//! for the structural identities these objects satisfy.

pub mod cut;
pub mod domination;
pub mod error;
pub mod fields;
pub mod filter;
pub mod oracle;
pub mod ordered;
pub mod quasival;
pub mod report;
pub mod sample;
pub mod valuation;
pub mod value;

pub use error::{Error, Result};
