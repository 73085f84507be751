//! Exact rational linear algebra substrate: named spaces, linear maps,
//! multilinear tensors with symmetry blocks, subspaces, quotients and solving.

pub mod linmap;
pub mod mat;
pub mod space;
pub mod subspace;
pub mod tensor;

pub use linmap::LinMap;
pub use mat::{Mat, Vector};
pub use space::FinSpace;
pub use subspace::Subspace;
pub use tensor::{MultiTensor, Symmetry};
