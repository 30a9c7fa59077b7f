use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree must be positive")]
    ZeroDegree,

    #[error("not a permutation of {degree} points: {reason}")]
    NotBijective { degree: usize, reason: String },

    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("element closure exceeds the bound of {bound} elements")]
    ElementBoundExceeded { bound: usize },

    #[error("group of order {order} exceeds the subgroup-enumeration bound of {bound}")]
    SubgroupBoundExceeded { order: usize, bound: usize },

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error(transparent)]
    Group(#[from] GroupError),

    #[error("residual is not supported for class `{0}`")]
    UnsupportedResidual(String),

    #[error("h-function is not invariable")]
    NotInvariable,

    #[error("h-function values do not match its support")]
    MalformedHFunction,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InjectorError {
    #[error(transparent)]
    Class(#[from] ClassError),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("iteration count must be at least 1")]
    ZeroIterations,
}

impl From<GroupError> for InjectorError {
    fn from(e: GroupError) -> Self {
        InjectorError::Class(ClassError::Group(e))
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("{label}: constructed order {found}, expected {expected}")]
    OrderMismatch {
        label: String,
        expected: usize,
        found: usize,
    },

    #[error("duplicate group label `{0}`")]
    DuplicateLabel(String),

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    File(#[from] FileError),

    #[error(transparent)]
    Group(#[from] GroupError),
}
