//! Exact computation of twisted Alexander polynomials of finitely presented
//! groups and of the cohomological data deciding whether an abelian
//! representation `ρ_α` of a rational-homology-circle group deforms to
//! irreducible representations.
//!
//! The layers build on each other:
//!
//! * [`presentation`]: free words, group rings, Fox derivatives, parsing.
//! * [`lattice`]: abelianization, Smith normal form over ℤ, `H₁` and its splitting.
//! * [`field`]: ℚ, cyclotomic fields and one simple extension holding `z`.
//! * [`laurent`]: `K[t^±1]`, matrices over it, GCDs of minors, exact linear algebra.
//! * [`alexander`]: twisted Jacobians and the sequence `Δ₀, Δ₁, …`.
//! * [`deformation`]: `H¹(π; C_α)`, cocycles, cup products and the verdict.
//! * [`report`]: JSON/text reports; [`numeric`]: floating-point cross-checks.

pub mod alexander;
pub mod deformation;
pub mod error;
pub mod field;
pub mod lattice;
pub mod laurent;
pub mod matrix;
pub mod numeric;
pub mod presentation;
pub mod report;

pub use error::{Error, Result};
