//! Characters, cocycles, the cup-product obstruction and the deformability verdict.

mod character;
mod cocycle;
mod obstruction;
mod verdict;

pub use character::{Character, CharacterAlpha, Sign};
pub use cocycle::{
    character_matrix, coboundary_vector, cocycle_eval, cocycle_generator, dim_h1, evaluated_d_jacobian,
    evaluated_jacobian, CocycleVec, Homomorphism, OneCochain, ProductCochain,
};
pub use obstruction::{
    cup_obstruction, cup_obstruction_scaled, two_cocycle_is_coboundary, Coboundary, Cup, CupObstruction, Neg,
    ObstructionResult, Sum, TwoCochain, ZeroCochain,
};
pub use verdict::{
    deformability_verdict, point_minpoly, zero_order, Components, DeformabilityReport, LinearDecision, QuadConePoint,
    Verdict,
};
