//! Exact computation with even integer lattices and configurations of
//! (-2)-curves.
//!
//! Everything here works over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in the crate. Definite lattices follow
//! the negative definite convention: roots have norm `-2` and the ADE Gram
//! matrices carry `-2` on the diagonal.
//!
//! Module map:
//!
//! * [`lattice`]: Gram matrices, signature, discriminant, ADE and hyperbolic
//!   constructors, sublattice embeddings and orthogonal complements.
//! * [`discform`]: Smith normal form and discriminant groups `(A_L, q_L)`.
//! * [`glue`]: isotropic subgroups, overlattices, saturation, minimal glue
//!   vectors and concentration, plus the overlattice threshold scans.
//! * [`roots`]: root enumeration, root spans and ADE classification.
//! * [`curvegraph`]: dual graphs of (-2)-curves and elliptic configurations.
//! * [`paperlab`]: end-to-end checks on the isotropic ten-sequence model,
//!   the over-exceptional lattice predicates and the K3 figure pipeline.
//!
//! The crate is `no_std` (it only needs `alloc`).

#![no_std]

extern crate alloc;

pub mod arith;
pub mod catalog;
pub mod curvegraph;
pub mod discform;
pub mod paperlab;
mod error;
pub mod glue;
pub mod lattice;
pub mod matrix;
pub mod roots;
pub mod shortvec;

pub use arith::{Int, QMod1, QMod2, Rat};
pub use error::{Error, Result};
pub use lattice::{AdeFamily, AdeType, Embedding, IntegerLattice, LatticeVector, Signature};
pub use matrix::IntMatrix;

/// Resource caps shared by the enumeration routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest discriminant group that subgroup and element scans will walk.
    pub max_group_order: u64,
    /// Largest rank accepted by short-vector enumeration.
    pub max_rank: usize,
    /// Largest curve graph accepted by the configuration search.
    pub max_graph: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: 10_000,
            max_rank: 26,
            max_graph: 64,
        }
    }
}
