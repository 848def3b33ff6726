//! Exact finite computations behind G₂-instantons on the resolution of the
//! generalised Kummer orbifold T⁷/Γ.
//!
//! The crate is organised by subsystem:
//!
//! * [`forms`]: exact exterior algebra on ℝ⁷, the standard G₂ 3-form, its
//!   type decompositions and the induced cross product.
//! * [`quaternion`]: quaternions, the hyperkähler moment map of the
//!   Eguchi-Hanson quotient and the U(2)/{±1} isometry action.
//! * [`orbifold`]: affine isometries of ℝ⁷ and T⁷, the group Γ, its fixed
//!   tori and the deck-group relations.
//! * [`census`]: enumeration of holonomy assignments into the Klein
//!   four-group and the irreducibility/rigidity criterion.
//! * [`symmetry`]: lattice isometries preserving φ₀, the orbifold
//!   automorphism group and orbit counting on census assignments.
//! * [`index`]: the character-sum index formula for ASD instantons on ALE
//!   spaces.
//!
//! All arithmetic is exact (arbitrary precision rationals or bit masks).

pub mod census;
pub mod checks;
pub mod cyclotomic;
pub mod error;
pub mod forms;
pub mod index;
pub mod linalg;
pub mod orbifold;
pub mod perm;
pub mod quaternion;
pub mod rational;
pub mod symmetry;

pub use error::{Error, Result};
pub use rational::Q;
