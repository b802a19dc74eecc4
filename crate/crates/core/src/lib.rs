//! Geometric-algebra kernel with a conformal-model layer.
//!
//! The crate is organised bottom-up:
//!
//! * [`ga`]: real Clifford algebras `Cl(p,q)` over an orthonormal basis,
//!   sparse multivectors, products, duality, versors and the bivector
//!   exponential.
//! * [`conformal`]: conformal models of flat target spaces (points as null
//!   vectors, circles/shells as blades, direct and dual incidence).
//! * [`little_groups`]: isometry algebras as bivector spaces, stabilizer
//!   (little) subalgebras of fixed vectors and their invariant-based
//!   classification.
//! * [`so21`]: truncated matrix realisations of the unitary so(2,1) series
//!   in the weight basis, with commutator and Casimir checks.
//! * [`invariants`]: the seeded property suite behind `cga selftest`.

pub mod conformal;
pub mod error;
pub mod ga;
pub mod invariants;
pub mod linalg;
pub mod little_groups;
pub mod so21;

pub use conformal::{ConformalModel, Convention, Representation, RoundBlade, RoundKind, TargetPoint};
pub use error::{Error, Result};
pub use ga::{Blade, Multivector, Signature, Versor};
pub use little_groups::{AlgebraName, ClassificationLabel, Comparison, LieAlgebraPresentation, StabilizerResult};
pub use so21::{RepLabel, TruncatedRep};
