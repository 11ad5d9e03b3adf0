//! Exact scalars, matrices and linear algebra.

pub mod field;
pub mod linear;
pub mod matrix;
pub mod quad;
pub mod ratfunc;
pub mod special;

pub use field::{rat, Field, Rational};
pub use linear::{solve_linear, AffineSolutionSet, InconsistencyWitness, LinearSolution};
pub use matrix::{FieldMatrix, Matrix};
pub use quad::QuadScalar;
pub use ratfunc::{Poly, RatFunc};
pub use special::{matrix_pochhammer, nilpotent_sqrt, odd_double_factorial, pochhammer};
