use thiserror::Error;

use crate::base::Capability;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("instance `{instance}` lacks the {capability} capability")]
    CapabilityMissing {
        instance: &'static str,
        capability: Capability,
    },

    #[error("{name} expects {expected} argument(s), got {got}")]
    Arity {
        name: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not structurally isomorphic: `{src}` vs `{dst}`")]
    NotIsomorphic { src: String, dst: String },

    #[error("no morphism {dom} -> {cod} in {instance}")]
    NoSuchMorphism {
        instance: &'static str,
        dom: String,
        cod: String,
    },

    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unassigned scalar `{0}`")]
    UnassignedScalar(String),

    #[error("scalar not expressible in this field: {0}")]
    InexpressibleScalar(String),

    #[error("foreign leaf: {0}")]
    ForeignLeaf(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
