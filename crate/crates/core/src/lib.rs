//! Generalized reciprocal distance matrices of connected graphs.
//!
//! For a connected graph `G` with reciprocal distance (Harary) matrix `RD`
//! and diagonal reciprocal transmission matrix `RT`, this crate studies the
//! convex family
//!
//! ```text
//! RD_α(G) = α·RT(G) + (1 − α)·RD(G),   0 ≤ α ≤ 1
//! ```
//!
//! which runs from `RD` (α = 0) through `RQ/2` (α = ½) to `RT` (α = 1).
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`graph`] | graphs, graph6 and edge-list I/O, distances, invariants, canonical forms, enumeration |
//! | [`matrices`] | `RD`, `RT`, `RL`, `RQ`, `A`, `A_α` and `RD_α` |
//! | [`eigen`] | cyclic Jacobi eigensolver, spectral radius, Perron vector, energy |
//! | [`closed_forms`] | exact spectra of complete, bipartite, split, wheel, multipartite and cluster graphs |
//! | [`bounds`] | lower and upper bounds on the spectral radius |
//! | [`psd`] | smallest α making `RD_α` positive semidefinite |
//! | [`extremal`] | exhaustive maximizer search over small graph classes |

pub mod bounds;
pub mod closed_forms;
pub mod eigen;
mod error;
pub mod extremal;
pub mod graph;
pub mod matrices;
pub mod psd;

pub use error::{Error, Result};
pub use graph::Graph;
pub use matrices::{Alpha, Matrix, MatrixBundle};
