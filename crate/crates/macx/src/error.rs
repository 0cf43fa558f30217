use thiserror::Error;

/// Errors for construction, validation, and guarded enumeration.
#[derive(Debug, Error)]
pub enum MacxError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("a complex must contain the empty face; the void complex is rejected")]
    VoidComplex,
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("ground sets collide on label `{0}`")]
    LabelCollision(String),
    #[error("ground sets overlap outside the gluing face (label `{0}`)")]
    OverlapOutsideFace(String),
    #[error("the gluing set is not a common face of both complexes")]
    NotACommonFace,
    #[error("the full simplex has no Alexander dual")]
    FullSimplex,
    #[error("expected a nonempty vertex set")]
    EmptyGround,
    #[error("map is not simplicial: image of facet {0} is not a face of the target")]
    NotSimplicial(String),
    #[error("operands live on different complexes")]
    MismatchedComplex,
    #[error("operands have different coefficient rings")]
    MismatchedRing(String),
    #[error("operation requires field coefficients, got {0}")]
    FieldRequired(String),
    #[error("operation is implemented over F2 only, got {0}")]
    F2Required(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("face enumeration guard exceeded: {found} faces > cap {cap} (raise --max-faces)")]
    FaceGuard { found: usize, cap: usize },
    #[error("subset scan guard exceeded: {m} vertices > cap {cap} (raise --max-subsets)")]
    SubsetGuard { m: usize, cap: usize },
    #[error("collapse budget of {0} steps exhausted; search inconclusive")]
    BudgetExhausted(usize),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, MacxError>;
