//! Factory for the concrete Lie 2-algebras: `gl` of a complex, skeletal
//! models from classification data, string algebras, Leibniz
//! skew-symmetrization, omni-Lie algebras, semidirect and crossed products,
//! and the strict <-> crossed-module dictionary.

pub mod action2;
pub mod complex2;
pub mod crossed;
pub mod leibniz;
pub mod lie;
pub mod omni;
pub mod quadruple;
pub mod reps;

pub use action2::{crossed_product, ActionByDerivations};
pub use complex2::{gl_lie_algebra, gl_of_complex, GlComplex, TwoComplex};
pub use crossed::{
    ad_crossed_module, crossed_to_strict, ideal_inclusion, strict_to_crossed, LieCrossedModule,
};
pub use leibniz::{skew_symmetrize, LeibnizAlgebra, SkewSymmetrization};
pub use lie::{heisenberg3, sl2, solvable2, LieAlgebra};
pub use omni::{omni_leibniz, omni_lie, OmniBasis};
pub use quadruple::{skeletal_from_quadruple, string, string_killing};
pub use reps::{semidirect, RepUTH};
