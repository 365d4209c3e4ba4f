//! Exact computations in finite-dimensional Novikov algebras over Q and F_p:
//! identities, ideals, series, radicals, hearts and quasiregularity.

pub mod algebra;
pub mod error;
pub mod families;
pub mod linalg;
pub mod quasiregular;
pub mod radicals;
pub mod scalars;
pub mod structure;
pub mod subspaces;

pub use algebra::{Algebra, Element, Identity, IdentityFailure, IdentityReport, QuotientMap, Side};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use scalars::{FieldKind, FieldSpec, Scalar};
pub use subspaces::Subspace;

/// Default dimension cap for exhaustive subspace walks.
pub const DEFAULT_CAP: usize = 6;
