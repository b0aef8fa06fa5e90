//! Finite semirings and semimodules, the cancellative reflection, Takahashi's
//! tensor-like product, and law checkers for the semiunital semimonoidal
//! structure on bisemimodules, semiunital semirings, semicounital semicorings
//! and J-(co)monads.
//!
//! Every structure is finite and stored as explicit operation data over the
//! index set `0..n`, with zero at index 0 and (for semirings) one at index 1.
//! All laws are decided by exhaustive evaluation.

pub mod algebra;
pub mod congruence;
pub mod error;
pub mod jstructures;
pub mod par;
pub mod report;
pub mod semistructures;
pub mod tensor;
pub mod variety;

pub use algebra::{
    AbelianQuotient, Action, GroupBasis, LinearMap, MapKind, Monoid, Semimodule, Semiring,
    Structure, StructureMap,
};
pub use error::{Error, Result};
pub use report::LawReport;

/// Default bound on the size of an explicitly enumerated free semimodule.
pub const DEFAULT_CAP: usize = 4096;
