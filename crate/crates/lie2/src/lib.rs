//! Computational toolkit for finite-dimensional Lie 2-algebras over exact
//! rational scalars.
//!
//! The library models 2-term L-infinity algebras with named bases, verifies
//! their axioms by exhaustive evaluation on canonical basis tuples, and builds
//! everything that grows out of them: homomorphisms and 2-morphisms,
//! skeletalization, the generalized Chevalley-Eilenberg cohomology with its
//! six-component coboundary, derivations and deformations, crossed modules,
//! the automorphism 2-group, and the homotopy Poisson / Courant side of the
//! dual picture. All arithmetic is exact; every check is a decidable equality.

pub mod autint;
pub mod cecohom;
pub mod cohomology;
pub mod constructions;
pub mod crossedmod;
pub mod derdef;
pub mod error;
pub mod exactlin;
pub mod fmt;
pub mod hpoisson;
pub mod report;
pub mod ring;
pub mod sample;
pub mod scalar;

#[cfg(test)]
pub mod testfix;

pub mod lie2core;

pub use error::{Error, Result};
pub use ring::{Dual, Field, Ring};
pub use scalar::{DualScalar, Scalar};
