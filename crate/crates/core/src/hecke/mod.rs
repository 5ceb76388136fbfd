//! Ariki-Koike algebras: parameters, the normal-form engine, modules and identity checks.

mod algebra;
mod module;
mod params;
mod verify;

pub use algebra::{Algebra, AlgebraElement, BasisLabel};
pub use module::{is_closed, relation_failures, spin, spin_from, ModuleRep, RightModule};
pub use params::{preset, Generic, Params, Preset, RootOfUnity};
pub use verify::{random_element, verify_relations, RelationReport, Verdict};

#[cfg(test)]
mod tests;
