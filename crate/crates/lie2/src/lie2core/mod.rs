//! The Lie 2-algebra data model, axiom verifier, homomorphism and 2-morphism
//! calculus, transport of structure and skeletalization.

pub mod algebra;
pub mod hom;
pub mod invariants;
pub mod report;
pub mod skeletal;

pub use algebra::{verify_l2a, Lie2Algebra, Lie2Candidate};
pub use hom::{compose, invert, Hom2, TwoMorphism};
pub use invariants::{equivalence_invariants, EquivalenceInvariants};
pub use report::{AxiomReport, Failure};
pub use skeletal::{skeletalize, transport_structure, Skeletalization};
