//! Exact symbolic workbench for graded Lie superalgebras of
//! Heisenberg-Virasoro type and the intermediate-series modules of the
//! Ramond N=2 superconformal algebra.
//!
//! Everything is computed over exact rational functions: bracket identities,
//! module axioms, central-extension (2-cocycle) spaces, and the
//! classification constraint systems are all verified on finite index
//! windows with zero tolerance. No floating point anywhere.

pub mod algebra;
pub mod builtins;
pub mod classify;
pub mod cocycle;
pub mod error;
pub mod extension;
pub mod interp;
pub mod linsolve;
pub mod module;
pub mod module_builtins;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod threads;
pub mod var;

pub use error::{AlgebraError, ExactError, ModuleError};
pub use poly::{Polynomial, Rational};
pub use scalar::{Binding, Bindings, Scalar};
pub use var::{VarKind, Variable};
