//! Squarefree monomial ideals, their squarefree powers, and the normalized
//! depth function `g_I(k) = depth(S/I^[k]) - (d_k - 1)`.
//!
//! Depth is computed from multigraded Betti numbers over a prime field using
//! Hochster's formula, so every value is exact for the chosen characteristic.

pub mod complex;
pub mod depth;
pub mod error;
pub mod family;
pub mod graph;
pub mod ideal;
pub mod linalg;
pub mod search;

pub use depth::{
    betti_table, depth, g_profile, proj_dim, regularity, BettiTable, DepthReport, GEntry, GProfile,
};
pub use error::{Error, Result};
pub use family::{build_family, verify_theorem, FamilyReport};
pub use graph::Graph;
pub use ideal::{Ideal, Monomial, PrimeSupport};
pub use linalg::FieldSpec;
pub use search::{scan, Finding, ScanOptions, ScanOutcome, ScanSummary, SearchConfig};
