//! Symbolic variables.
//!
//! A variable is either a *parameter* (a, b, alpha, c_H, ...) or an *index*
//! symbol (i, j, k, ...). Index variables are the ones that evaluation paths
//! substitute integers into; parameters stay symbolic unless an algebra or
//! module is explicitly specialized. Both kinds live in the same polynomial
//! ring, so coefficients like (i^3 - i)(b - b^2) mix them freely.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    Parameter,
    Index,
}

/// An interned symbolic variable. Ordering is by name, which fixes the
/// monomial order (and hence canonical forms) independently of declaration
/// order.
#[derive(Debug, Clone, Eq)]
pub struct Variable {
    name: Arc<str>,
    kind: VarKind,
}

impl Variable {
    pub fn parameter(name: &str) -> Self {
        Variable {
            name: Arc::from(name),
            kind: VarKind::Parameter,
        }
    }

    pub fn index(name: &str) -> Self {
        Variable {
            name: Arc::from(name),
            kind: VarKind::Index,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> VarKind {
        self.kind
    }

    pub fn is_index(&self) -> bool {
        self.kind == VarKind::Index
    }
}

impl PartialEq for Variable {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.kind == other.kind
    }
}

impl std::hash::Hash for Variable {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name.hash(state);
        self.kind.hash(state);
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.name
            .as_ref()
            .cmp(other.name.as_ref())
            .then(self.kind.cmp(&other.kind))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The index symbols used by bracket and action rules.
pub fn idx_i() -> Variable {
    Variable::index("i")
}

pub fn idx_j() -> Variable {
    Variable::index("j")
}
