//! A_α spectral machinery for simple graphs.
//!
//! `A_α(G) = α·D(G) + (1 − α)·A(G)` interpolates between the adjacency
//! matrix (α = 0) and half the signless Laplacian (α = 1/2). This crate
//! computes its spectral radius and Perron vector, generates the extremal
//! families for cut vertices and matching number, implements the graph
//! rewritings used in the extremal arguments and checks the resulting
//! inequalities exhaustively on small graphs.
//!
//! The spectral code is generic over the scalar type; the aliases below fix
//! it to `f64` (used by the verification harness) or `f32`.

pub mod enumeration;
pub mod families;
pub mod graph;
pub mod scalar;
pub mod spectral;
pub mod structure;
pub mod transforms;
pub mod verify;

pub use graph::{CanonicalCode, Graph, GraphError};
pub use scalar::{Real, Scalar};
pub use spectral::{AlphaParam, PowerOptions, SpectralError, SpectralResult};

pub type AlphaF64 = AlphaParam<f64>;
pub type AlphaF32 = AlphaParam<f32>;
pub type SpectralResultF64 = SpectralResult<f64>;
pub type SpectralResultF32 = SpectralResult<f32>;
pub type PowerOptionsF64 = PowerOptions<f64>;

/// Default α grid for harness runs.
pub const DEFAULT_ALPHA_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 0.99];

/// Version string embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
