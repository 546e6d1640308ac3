//! Combinatorial models of simple root systems, inner involutions and
//! parabolic subsets, with exhaustive verification of which parabolic pairs
//! `(P₁, P₂)` have `P₁ ∩ P₂` parabolic in `K` and `P₁P₂` dense in `G`, and
//! closed-orbit counts on double flag varieties `G/P₁ × G/P₂`.
//!
//! Everything is exact integer arithmetic on roots written in the simple-root
//! basis.

pub mod cli;
pub mod density;
pub mod error;
mod linalg;
pub mod orbits;
pub mod parabolic;
pub mod rootset;
pub mod rootsys;
pub mod sympair;
mod unionfind;
pub mod weyl;

pub use error::{Error, Result};
pub use rootset::RootSet;
pub use rootsys::{build_root_system, CartanType, RootDatum, TypeLabel};
pub use sympair::{cartan_decomposition, CartanDecomposition, InvolutionSpec, Sign};
