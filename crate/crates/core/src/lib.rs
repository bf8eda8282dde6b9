//! Exact-arithmetic computation of truncated normal forms of
//! omega-Hamiltonian vector fields under finite semisymplectic symmetry
//! groups.
//!
//! Everything is computed over arbitrary-precision rationals: polynomial
//! arithmetic, graded subspaces, homological solves and the Lie-series
//! changes of coordinates are all exact, and every graded decomposition the
//! pipelines rely on is certified by rank checks at runtime.

pub mod engine;
pub mod error;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod scalar;
pub mod subspace;
pub mod symmetry;
pub mod symplectic;

pub use engine::{
    ad_matrix, complement_basis, equivariant_complement, equivariant_normal_form,
    homological_split, lie_transform, normal_form, AdOperator, DegreeCertificate, DegreeRecord,
    EquivariantCertificate, HomologicalSplit, NormalFormReport, SymmetryCertificate,
};
pub use error::{Error, Result};
pub use matrix::QMatrix;
pub use monomial::{basis_dimension, monomial_basis, DegreeBasis, Monomial};
pub use poly::{compose_jet, fischer_ip, Jet, SparsePoly};
pub use scalar::{format_scalar, frac, int, parse_scalar, Scalar};
pub use subspace::GradedSubspace;
pub use symmetry::{CosetStructure, FiniteSymmetryGroup, Sign, SignHomomorphism, SymmetryType};
pub use symplectic::{
    classify_matrix, hamiltonian_field, is_hamiltonian_matrix, lie_bracket, poisson,
    quadratic_from_matrix, MatrixClass, PolyVectorField, SymplecticForm,
};
