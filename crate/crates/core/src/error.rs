//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("cannot parse `{input}` as an exact rational")]
    InvalidRational { input: String },

    #[error("zero denominator in rational `{input}`")]
    ZeroDenominator { input: String },

    #[error("polynomial is not homogeneous of degree {degree} in {context}")]
    NonHomogeneous { context: &'static str, degree: u32 },

    #[error("expected a homogeneous quadratic, found degree {found:?}")]
    NotQuadratic { found: Option<u32> },

    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not omega-Hamiltonian: {identity} does not vanish")]
    NotHamiltonianMatrix { identity: &'static str },

    #[error("group closure exceeded {max_size} elements")]
    ClosureExceeded { max_size: usize },

    #[error("sign propagation assigned two different values to element {element}")]
    InconsistentSigns { element: usize },

    #[error("generator {index} is singular")]
    SingularGenerator { index: usize },

    #[error("no generators supplied")]
    NoGenerators,

    #[error("group is not semisymplectic: elements {offenders:?} are neither symplectic nor antisymplectic")]
    NotSemisymplectic { offenders: Vec<usize> },

    #[error("sigma_1 disagrees with the symplectic class of elements {offenders:?}")]
    SigmaMismatch { offenders: Vec<usize> },

    #[error("character is not multiplicative on the pair ({i}, {j})")]
    NonMultiplicativeCharacter { i: usize, j: usize },

    #[error("S is not symplectic: L^T is not an omega-Hamiltonian matrix")]
    SNotSymplectic,

    #[error("direct-sum certificate failed at degree {degree}: image {image_dim} + kernel {kernel_dim} with intersection {intersection_dim} does not decompose the {ambient_dim}-dimensional space")]
    ComplementCertificateFailed {
        degree: u32,
        ambient_dim: usize,
        image_dim: usize,
        kernel_dim: usize,
        intersection_dim: usize,
    },

    #[error("equivariant decomposition certificate failed at degree {degree}")]
    DecompositionCertificateFailed { degree: u32 },

    #[error("restricted homological solve failed at degree {degree}")]
    EquivariantSolveFailed { degree: u32 },

    #[error("generator degree must be at least 3, found {found}")]
    GeneratorDegreeTooLow { found: u32 },

    #[error(
        "input has terms of degree below 2; the origin is not a singular point with zero value"
    )]
    NonEquilibriumInput,

    #[error("symmetry hypothesis failed: {hypothesis}")]
    SymmetryHypothesisFailed { hypothesis: String },

    #[error("certificate violated after construction: {check}")]
    CertificateViolation { check: String },
}

pub type Result<T> = std::result::Result<T, Error>;
