use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ground set of size {n} exceeds the limit of {max} vertices")]
    GroundSetTooLarge { n: usize, max: usize },

    #[error("exhaustive enumeration over 2^{n} subsets refused (limit is n <= {max})")]
    ExhaustiveLimit { n: usize, max: usize },

    #[error("vertex label {label} is outside 1..={n}")]
    LabelOutOfRange { label: i64, n: usize },

    #[error("operation is undefined on the void complex")]
    VoidComplex,

    #[error("complex is not pure")]
    NotPure,

    #[error("ground sets differ: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("Bier sphere needs a proper subcomplex of the simplex (not void, not the full simplex)")]
    DegenerateBierInput,

    #[error("degree {degree} is out of range for a complex of dimension {dim}")]
    DegreeOutOfRange { degree: isize, dim: isize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{0} is not a face of the ambient complex")]
    NotAFace(crate::FaceSet),

    #[error("cochain is not a cocycle")]
    NotACocycle,

    #[error("counting cochain needs a pure complex of dimension {expected}, got {actual}")]
    CountingDimension { expected: isize, actual: isize },

    #[error("sphere enumeration is only implemented for degree 1 (got {0})")]
    UnsupportedDegree(usize),

    #[error("exact colouring is limited to {limit} vertices, graph has {vertices}")]
    ColoringTooLarge { vertices: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("input contains no facets")]
    EmptyInput,

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// True for refusals caused by size limits rather than malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ExhaustiveLimit { .. } | Error::ColoringTooLarge { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
