//! Exact computations in the two-parameter Schur algebra attached to the
//! Hecke algebra of type B.
//!
//! The crate is organised bottom-up:
//!
//! - [`laurent`], [`coeff`], [`linalg`]: the coefficient ring
//!   `Z[q^{±1},Q^{±1}]`, its specializations, and exact elimination;
//! - [`weyl`]: signed permutations, lengths, distinguished (double) coset
//!   representatives and admissible triples;
//! - [`shapes`], [`tableaux`]: bicompositions, bitableaux, bitabloids and
//!   the typed-tableau combinatorics;
//! - [`hecke`]: the Hecke algebra on its natural basis with the structural
//!   elements built from it;
//! - [`perm_module`]: the cyclic right modules on their bitabloid bases;
//! - [`schur`]: homomorphism spaces, the standard basis maps and the
//!   commutant oracle;
//! - [`weyl_module`]: Specht and Weyl modules, Gram forms and irreducible
//!   dimensions;
//! - [`verify`]: named, individually runnable invariant suites.
//!
//! All computation is exact; there is no floating point anywhere.

pub mod coeff;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod par;
pub mod perm_module;
pub mod schur;
pub mod shapes;
pub mod tableaux;
pub mod verify;
pub mod weyl;
pub mod weyl_module;

pub use coeff::{CoeffField, CoeffRing, GenericRing, PrimeFieldSpec, RationalSpec, Specialization};
pub use laurent::LaurentPoly;
pub use shapes::Bicomposition;
pub use weyl::SignedPerm;

/// Errors surfaced by the library.  Most precondition violations on internal
/// paths are asserts; these are the ones a caller can trigger or must handle.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid specialization: {0}")]
    InvalidSpecialization(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("solution is not Laurent-integral")]
    NonIntegralSolution,
    #[error("element is not a distinguished representative")]
    NotDistinguished,
    #[error("triple is not admissible")]
    NotAdmissible,
    #[error("{0}")]
    Internal(String),
}
