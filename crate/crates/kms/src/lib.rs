//! Numerical pipeline for locating multiple positive solutions of the
//! degenerate nonlocal boundary value problem
//!
//! ```text
//!     -a(∫_Ω u^p dx) Δu = f(u)   in Ω,    u = 0 on ∂Ω,
//! ```
//!
//! where the diffusion coefficient `a` vanishes at prescribed knots
//! `0 = t_0 < t_1 < … < t_K` and is positive between them.  For every bump
//! `(t_{k-1}, t_k)` the pipeline freezes the nonlocal argument at a constant
//! `α`, solves the resulting local problem by monotone sub/supersolution
//! iteration, and locates fixed points of the mass map
//! `𝒫_k(α) = ∫_Ω u_α^p dx`.  Each fixed point is a genuine solution of the
//! nonlocal problem; two per bump yield `2K` solutions with interleaved
//! `L^p` masses.
//!
//! Modules follow the pipeline stages:
//!
//! * [`discretization`] — tensor meshes, the discrete Dirichlet Laplacian,
//!   quadrature and norms;
//! * [`spectral`] — principal eigenpair, torsion function and the
//!   `H¹₀ → L¹` embedding constant;
//! * [`model`] — problem data `(a, f)`, truncation, hypothesis checker and
//!   the closed-form example generator;
//! * [`local_solver`] — the frozen problem solved from both sides;
//! * [`fixed_point`] — curve scan, bound certificates and the theorem
//!   report;
//! * [`cli`] / [`config`] — JSON configuration and artifact emission.

pub mod cg;
pub mod cli;
pub mod config;
pub mod discretization;
pub mod error;
pub mod fixed_point;
pub mod local_solver;
pub mod model;
pub mod spectral;

pub use error::{Error, Result};
