//! Extending sl(2)-module structures to the Witt algebra, its two halves,
//! and the Virasoro algebra.

pub mod action;
pub mod cert;
pub mod closed;
pub mod counter;
pub mod criterion;
pub mod generic;
pub mod glue;
pub mod intermediate;
pub mod lift;
pub mod pin;

pub use action::{extend_action, sl2_ops, Algebra, Branch, Side, WittAction};
pub use cert::{BoundaryFamily, InfeasibilityCertificate, QPoly, Stage, Witness};
pub use closed::{
    closed_form_dense, closed_form_lowest, closed_form_verma, coefficient_identity, dense_coeff, functor_image,
    intertwines, matrix_closed_form, scalar_coeff, verma_plus_leak,
};
pub use counter::{counterexample_certify, deep_analysis, symbolic_boundary, Certification, CertifyOutcome};
pub use criterion::criterion_check;
pub use generic::{extend_generic, extend_side, ExtensionOutcome, Status};
pub use glue::{glue_vir, glue_witt, GlueError, Glued};
pub use intermediate::{intermediate_iso, make_intermediate, IsoResult};
pub use lift::{lift_linear, lift_linear_fixed, linear_residual, Lift, LiftFamily};
pub use pin::{commutant_solutions, first_case_shape, pin_quadratic, pin_quadratic_with, quadratic_residual, PinOutcome};

#[cfg(test)]
mod tests;
