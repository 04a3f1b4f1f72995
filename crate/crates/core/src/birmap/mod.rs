//! Rational maps between projective, multi-projective and affine spaces.
//!
//! Every composition is reduced at once, so degrees always refer to
//! representatives without a common factor.

mod affine;
mod literal;
mod matrix;
mod multi;
mod polymatrix;
mod projective;

pub use affine::{monomial_map, AffineMap};
pub use literal::{literal_kind, parse_affine_map, parse_multi_map, parse_projective_map};
pub use matrix::{matrix_group_check, IntMatrix, MatrixFactor, QMatrix};
pub use multi::MultiProjectiveMap;
pub use polymatrix::PolyMatrix;
pub use projective::{DegreeSequence, ProjectiveMap, Pullback};

use alloc::string::String;

use crate::exactpoly::{ParseError, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("every component is zero")]
    ZeroMap,
    #[error("component {0} is not homogeneous of the common degree")]
    NotHomogeneous(usize),
    #[error("cannot compose: source is {source_space}, target is {target_space}")]
    SpaceMismatch { source_space: String, target_space: String },
    #[error("shapes differ")]
    ShapeMismatch,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix determinant is not ±1")]
    NotUnimodular,
    #[error("integer overflow in matrix arithmetic")]
    Overflow,
    #[error("diagonal scale factors must be nonzero")]
    ZeroScale,
    #[error("map is undefined on the chart x{0} = 1")]
    UndefinedOnChart(usize),
    #[error("the zero polynomial defines no hypersurface")]
    ZeroHypersurface,
    #[error("map is not a self-map")]
    NotSelfMap,
    #[error("Jacobian determinant vanishes identically")]
    DegenerateJacobian,
    #[error("second block still depends on the first factor")]
    FibrationNotPreserved,
    #[error("line lies in the plane x{0} = 0")]
    LineInHyperplane(usize),
    #[error("two of the intersection points coincide")]
    CoincidentIntersections,
    #[error("the two points are proportional")]
    ProportionalPoints,
    #[error("{0}")]
    Other(String),
}

/// Name of `ℙ^a × ℙ^b × …` for error messages.
fn space_name(blocks: &[usize]) -> String {
    let parts: alloc::vec::Vec<String> = blocks.iter().map(|b| alloc::format!("P^{}", b.saturating_sub(1))).collect();
    parts.join(" x ")
}
