//! Exact computations for G2 inside so(7), graded by Z2^3 through the
//! oriented Fano plane, and for the color algebras obtained from it by sign
//! changes.
//!
//! All arithmetic is exact over Q(i, √2).

pub mod algebra;
pub mod exec;
pub mod fano;
pub mod fixtures;
pub mod gmatrix;
pub mod grading;
pub mod scalars;
pub mod search;
pub mod verify;

mod transcribed;

pub use algebra::{
    build_a, build_basis, build_m, predicted_bracket, render_table, structure_constants,
    BracketEntry, BracketKind, BracketTable, GradedBasis, TableFormat,
};
pub use exec::{configure_threads, Execution};
pub use fano::FanoPlane;
pub use gmatrix::GradedMatrix;
pub use grading::{classify_sign_factor, GradeLabel, SignFactor};
pub use scalars::Scalar;
pub use search::{
    canonicalize, search_colorings, verify_solution, ColoringSolution, SignAssignment,
};
pub use verify::VerificationReport;
