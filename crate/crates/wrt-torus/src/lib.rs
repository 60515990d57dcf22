//! Quantum representations of the modular group for the torus.
//!
//! The crate builds the level-k quantum (Witten–Reshetikhin–Turaev)
//! representations of SL(2,Z) and its central extensions for a compact simple
//! simply-connected group, evaluates their characters — the invariants of
//! torus bundles — and verifies the semiclassical trace expansion and the
//! underlying theta-function identities numerically at desk scale.
//!
//! Module map:
//! - [`cartan`]: exact root-system, lattice and Weyl-group data (types A–G);
//! - [`alcove`]: admissible weights C_k and alcove points Alc ∩ k⁻¹Λ*;
//! - [`word`], [`extension`]: SL(2,Z) words and the extensions M₂, Mp, M∞;
//! - [`modrep`]: S/T generator matrices in both normalizations and the
//!   representations R₂^alt, R_ev, R_odd, R∞ with their comparison map;
//! - [`fixedpt`]: exact fixed-point data of A⊗w on (t/Λ)² with Chern–Simons
//!   phases;
//! - [`maslov`]: the metaplectic index entering the trace asymptotics;
//! - [`semiclassics`]: exact characters vs. the fixed-point approximation;
//! - [`thetalab`]: floating-point verification of the theta-function layer;
//! - [`corpus`]: the regression corpus and its runner.

pub mod alcove;
pub mod cartan;
pub mod cmatrix;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod extension;
pub mod fixedpt;
pub mod maslov;
pub mod modrep;
pub mod semiclassics;
pub mod snf;
pub mod thetalab;
pub mod word;

pub use error::{Error, Result};
