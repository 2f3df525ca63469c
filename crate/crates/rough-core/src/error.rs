use thiserror::Error;

/// Errors produced while building or analysing decision tables.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),

    #[error("duplicate attribute name `{0}`")]
    DuplicateAttribute(String),

    #[error("decision attribute `{0}` also appears among the condition attributes")]
    DecisionIsCondition(String),

    #[error("row {row}: expected {expected} values, found {found}")]
    RowWidth {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("row {row}: empty value for attribute `{attribute}`")]
    EmptyValue { row: usize, attribute: String },

    #[error("object id {id} is outside the universe of {universe} objects")]
    ObjectOutOfBounds { id: usize, universe: usize },

    #[error("operation is undefined for an empty table")]
    EmptyUniverse,

    #[error("{count} condition attributes exceed the exhaustive-search cap of {cap}")]
    AttributeCapExceeded { count: usize, cap: usize },

    #[error("a rule needs at least one condition")]
    EmptyRule,

    #[error("attribute `{0}` appears twice in the rule conditions")]
    DuplicateCondition(String),

    #[error("object is missing attribute `{0}` referenced by a rule")]
    MissingAttribute(String),

    #[error("csv line {line}: {message}")]
    Csv { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
