//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator of `{expr}` vanishes under the given binding")]
    Pole { expr: String },
    #[error("closed-form fit failed: {reason}")]
    FitFailure { reason: String },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown builtin algebra `{0}`")]
    UnknownBuiltin(String),
    #[error("undeclared generator family `{0}`")]
    UnknownFamily(String),
    #[error("algebra `{0}` has no grading family L")]
    MissingGrading(String),
    #[error("algebra `{algebra}` has central families; extend the centerless algebra")]
    HasCenter { algebra: String },
    #[error("family sets of `{0}` and `{1}` do not match")]
    FamilyMismatch(String, String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModuleError {
    #[error("unknown builtin module `{0}`")]
    UnknownBuiltin(String),
    #[error("generator family `{0}` does not act on this module")]
    UnknownFamily(String),
    #[error("no action rule guard matches indices ({i}, {j}) for {family} on {basis}")]
    GuardGap {
        family: String,
        basis: String,
        i: i64,
        j: i64,
    },
    #[error("joint weights collide on {0} and {1}; diagonal submodule search is unsound here")]
    WeightCollision(String, String),
    #[error("subset is not invariant: action of {generator} maps {vector} outside it")]
    NotInvariant { generator: String, vector: String },
    #[error("parameters must be bound to rationals: `{0}` is unbound")]
    UnboundParameter(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
