use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("missing base semiring for the {0} action")]
    MissingBase(String),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("base mismatch: {0}")]
    BaseMismatch(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture parameter out of range: {0}")]
    BadParameter(String),
    #[error("size cap exceeded: {needed} > {cap}")]
    SizeCapExceeded { needed: u128, cap: usize },
    #[error("malformed pair ({0}, {1})")]
    MalformedPair(usize, usize),
    #[error("partition is not a congruence: {0}")]
    IncompatiblePartition(String),
    #[error("congruence verification failed: {0}")]
    CongruenceVerificationFailed(String),
    #[error("map is not balanced: {0}")]
    NotBalanced(String),
    #[error("ill-defined extension: {0}")]
    IllDefined(String),
    #[error("missing action: {0}")]
    MissingAction(String),
    #[error("not firm: {0}")]
    NotFirm(String),
    #[error("not cancellative: {0}")]
    NotCancellative(String),
    #[error("not unital: {0}")]
    NotUnital(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("formula disagreement: {0}")]
    FormulaDisagreement(String),
    #[error("invalid semimonoid: {0}")]
    InvalidSemimonoid(String),
    #[error("invalid semicomonoid: {0}")]
    InvalidSemicomonoid(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("no linear lift: {0}")]
    NotLiftable(String),
}

impl Error {
    /// Stable kebab-case identifier, used in reports.
    pub fn id(&self) -> &'static str {
        match self {
            Error::MalformedTable(_) => "malformed-table",
            Error::MissingBase(_) => "missing-base",
            Error::KindMismatch(_) => "kind-mismatch",
            Error::BaseMismatch(_) => "base-mismatch",
            Error::UnknownFixture(_) => "unknown-fixture",
            Error::BadParameter(_) => "bad-parameter",
            Error::SizeCapExceeded { .. } => "size-cap-exceeded",
            Error::MalformedPair(..) => "malformed-pair",
            Error::IncompatiblePartition(_) => "incompatible-partition",
            Error::CongruenceVerificationFailed(_) => "congruence-verification-failed",
            Error::NotBalanced(_) => "not-balanced",
            Error::IllDefined(_) => "ill-defined",
            Error::MissingAction(_) => "missing-action",
            Error::NotFirm(_) => "not-firm",
            Error::NotCancellative(_) => "not-cancellative",
            Error::NotUnital(_) => "not-unital",
            Error::ShapeMismatch(_) => "shape-mismatch",
            Error::FormulaDisagreement(_) => "formula-disagreement",
            Error::InvalidSemimonoid(_) => "invalid-semimonoid",
            Error::InvalidSemicomonoid(_) => "invalid-semicomonoid",
            Error::InvalidMorphism(_) => "invalid-morphism",
            Error::NotLiftable(_) => "not-liftable",
        }
    }
}
