use thiserror::Error;

/// Errors produced by parsing, validation and the belt/Tor preconditions.
#[derive(Debug, Error)]
pub enum Error {
    /// The adjacency-row text violates the grammar or the symmetry rules.
    #[error("adjacency rows: {0}")]
    AdjacencyRows(String),

    /// A planar_code byte stream is malformed.
    #[error("planar_code: {0}")]
    PlanarCode(String),

    /// A rotation system or face list fails the embedded-sphere invariants.
    #[error("invalid rotation system: {0}")]
    RotationSystem(String),

    /// The input graph admits no triangulation face assignment.
    #[error("not a planar triangulation: {0}")]
    NotTriangulation(String),

    /// The input graph admits more than one triangulation face assignment.
    #[error("ambiguous input: multiple inequivalent face assignments")]
    AmbiguousFaces,

    /// An operation that assumes no 3-belts was called on a polytope that
    /// has one.
    #[error("precondition violated: polytope has {0} 3-belt(s)")]
    ThreeBeltsPresent(usize),

    /// A degree-(-1,4) or degree-(-2,8) generator does not exist in the
    /// given polytope.
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    /// Vertex-split positions would leave a vertex of degree < 3.
    #[error("vertex split: {0}")]
    VertexSplit(String),

    /// Enumeration bounds, tuple extraction and catalog requirements.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// JSON (de)serialization of polytopes and reports.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// File I/O when loading catalogs.
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
