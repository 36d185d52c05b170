//! Hopf-Galois structures on dihedral extensions of the rationals.
//!
//! The crate builds every regular subgroup of `Perm(D_p)` normalized by the
//! left regular representation, descends the group algebras `L[N]` to the
//! Hopf algebras `H = (L[N])^G`, and checks their Hopf, Hopf-Galois,
//! isomorphism and Wedderburn-Artin structure. All arithmetic is exact.

pub mod algebra;
pub mod analysis;
pub mod catalog;
pub mod descent;
pub mod error;
pub mod galois;
pub mod groups;
pub mod hopf;
pub mod hp_form;
pub mod linalg;
pub mod wedderburn;

pub use error::{Error, Result};
