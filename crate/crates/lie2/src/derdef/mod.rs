//! Derivations, the derivation Lie 2- and 3-algebras, infinitesimal
//! deformations over dual numbers, and abelian extensions.

pub mod der3;
pub mod derivations;
pub mod deform;
pub mod extension;

pub use der3::{build_der3, Deg, Lie3Strict};
pub use derivations::{build_der, derivation_space, DerAlgebra, Derivation0, DerivationSpace};
pub use deform::{deform, trivializing_equivalence, Deformation};
pub use extension::{abelian_extension, extension_equivalence, AbelianExtension};
