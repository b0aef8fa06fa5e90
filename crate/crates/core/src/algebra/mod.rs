//! Finite semirings, semimodules, bisemimodules and structure maps.

mod abelian;
pub mod fixtures;
mod hom;
mod iso;
mod maps;
mod module;
mod monoid;
mod ops;
mod semiring;

pub use abelian::{abelian_quotient, AbelianQuotient, GroupBasis};
pub use hom::{hom_module, hom_sample, hom_set, module_generators, HomModule, Sides};
pub use iso::{
    canonical_relabel, canonicalize, find_isomorphism, find_monoid_isomorphism,
    find_semiring_isomorphism, isomorphic, relabel_module,
};
pub use maps::{check_linear, same_object, validate_map, LinearMap, MapKind, Structure, StructureMap};
pub use module::{validate_semimodule, Action, Semimodule};
pub use monoid::{validate_monoid, AddOp, Monoid};
pub use ops::OpsView;
pub use semiring::{validate_semiring, Semiring};
pub(crate) use maps::probes as maps_probes;
