//! The symbolic graded side: polynomial functions on the shifted dual, the
//! homotopy Poisson brackets, the linear Courant algebroid, and the
//! quasi-Poisson groupoid data.

pub mod brackets;
pub mod courant;
pub mod gpoly;
pub mod quasi;

pub use brackets::BracketFamily;
pub use courant::{build_courant, CourantData, CourantSection};
pub use gpoly::{GradedPoly, Monomial};
pub use quasi::{build_quasi_poisson, quasi_poisson_master_check, MasterCheckOutcome, QuasiPoissonData};
