//! Principal Dirichlet eigenpair of `-Δ_h`, the torsion function, and the
//! best constant of the embedding `H¹₀(Ω) → L¹(Ω)`.
//!
//! These four domain constants — `λ₁`, the normalized eigenfunctions
//! `φ₁`/`e₁`, and `C₁` — feed every hypothesis margin and bound
//! certificate downstream.

use crate::cg::cg;
use crate::discretization::{sup_norm, Mesh};
use crate::error::{Error, Result};
use serde::Serialize;

/// Relative CG residual used for all linear solves in this module.
pub const CG_TOL: f64 = 1e-12;

/// Default relative tolerance on the eigen-residual.
pub const EIGEN_TOL: f64 = 1e-10;

/// Normalization conventions for positive eigenfunctions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMode {
    /// Unit discrete Dirichlet energy (the `H¹₀` convention, yields `φ₁`).
    GradNorm,
    /// Unit sup norm (the `L^∞` convention, yields `e₁`).
    SupNorm,
}

/// Principal eigenpair plus the embedding constant, precomputed once per
/// mesh and shared immutably.
#[derive(Debug, Clone, Serialize)]
pub struct EigenPack {
    pub lambda1: f64,
    /// Positive eigenfunction with unit gradient norm.
    #[serde(skip)]
    pub phi1: Vec<f64>,
    /// Positive eigenfunction with unit sup norm.
    #[serde(skip)]
    pub e1: Vec<f64>,
    /// Best constant of the embedding `H¹₀(Ω) → L¹(Ω)`.
    pub c1: f64,
    /// |Ω|.
    pub volume: f64,
    /// Cache of `∫ e₁^p` for the model's exponent.
    pub int_e1_pow_p: f64,
}

/// Solve `-Δ_h w = rhs` with zero Dirichlet data by conjugate gradients.
pub fn solve_poisson(mesh: &Mesh, rhs: &[f64]) -> Result<Vec<f64>> {
    let apply = |x: &[f64], out: &mut [f64]| mesh.neg_laplacian_into(x, out);
    let cap = 10 * mesh.n().max(100);
    Ok(cg(apply, rhs, None, CG_TOL, cap)?.x)
}

/// Smallest Dirichlet eigenvalue and a positive eigenvector, by inverse
/// power iteration with CG inner solves.
///
/// Terminates when `‖-Δ_h v - λ v‖_∞ ≤ tol · λ` with `v` scaled to unit
/// sup norm.
pub fn principal_eigenpair(mesh: &Mesh, tol: f64) -> Result<(f64, Vec<f64>)> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = mesh.n();
    let cap = 10 * n.max(100);
    // A positive start keeps every iterate positive: the inverse of the
    // M-matrix -Δ_h has positive entries.
    let mut v = vec![1.0; n];
    let mut lambda = 0.0;
    let max_outer = 50_000;
    let mut residual = f64::INFINITY;
    for _ in 0..max_outer {
        let apply = |x: &[f64], out: &mut [f64]| mesh.neg_laplacian_into(x, out);
        let w = cg(apply, &v, Some(&v), CG_TOL.min(tol * 1e-2), cap)?.x;
        // Rayleigh quotient of w: wᵀ(-Δ_h w) = wᵀ v.
        let wv: f64 = w.iter().zip(&v).map(|(a, b)| a * b).sum();
        let ww: f64 = w.iter().map(|a| a * a).sum();
        lambda = wv / ww;
        let scale = 1.0 / sup_norm(&w);
        v = w.iter().map(|x| x * scale).collect();
        let av = mesh.neg_laplacian(&v);
        residual = av
            .iter()
            .zip(&v)
            .fold(0.0_f64, |m, (a, b)| m.max((a - lambda * b).abs()));
        if residual <= tol * lambda {
            if v.iter().any(|&x| x <= 0.0) {
                return Err(Error::NonConvergence {
                    what: "inverse power iteration (lost nodal positivity)".into(),
                    iterations: max_outer,
                    residual,
                });
            }
            return Ok((lambda, v));
        }
    }
    Err(Error::NonConvergence {
        what: "inverse power iteration".into(),
        iterations: max_outer,
        residual: residual / lambda.max(f64::MIN_POSITIVE),
    })
}

/// Rescale a nonnegative, nonzero field to the requested unit norm.
pub fn normalize(mesh: &Mesh, v: &[f64], mode: NormMode) -> Result<Vec<f64>> {
    let norm = match mode {
        NormMode::GradNorm => mesh.grad_norm_sq(v).sqrt(),
        NormMode::SupNorm => sup_norm(v),
    };
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::InvalidModel("cannot normalize a zero field".into()));
    }
    Ok(v.iter().map(|x| x / norm).collect())
}

/// Torsion function: the solution of `-Δ_h w = 1`, `w = 0` on the boundary.
pub fn torsion_function(mesh: &Mesh) -> Result<Vec<f64>> {
    solve_poisson(mesh, &vec![1.0; mesh.n()])
}

/// Best constant of `H¹₀(Ω) → L¹(Ω)`, computed as `(∫_Ω w dx)^{1/2}` with
/// `w` the torsion function.
///
/// Maximizing `|u|₁` under `‖u‖ = 1` has Euler–Lagrange equation
/// `-Δu = const`, so the maximizer is a multiple of `w` and the maximum
/// value is `(∫ w)^{1/2}`; the brute-force oracle in the tests checks this
/// characterization directly.
pub fn sobolev_c1(mesh: &Mesh) -> Result<f64> {
    let w = torsion_function(mesh)?;
    Ok(mesh.integrate_power(&w, 1.0)?.sqrt())
}

/// Assemble the full eigen pack for a mesh and mass exponent `p`.
pub fn compute_eigenpack(mesh: &Mesh, p: f64, eigen_tol: f64) -> Result<EigenPack> {
    let (lambda1, v) = principal_eigenpair(mesh, eigen_tol)?;
    let phi1 = normalize(mesh, &v, NormMode::GradNorm)?;
    let e1 = normalize(mesh, &v, NormMode::SupNorm)?;
    let c1 = sobolev_c1(mesh)?;
    let int_e1_pow_p = mesh.integrate_power(&e1, p)?;
    Ok(EigenPack {
        lambda1,
        phi1,
        e1,
        c1,
        volume: mesh.volume(),
        int_e1_pow_p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discretization::{build_mesh, DomainSpec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn mesh_1d(length: f64, cells: usize) -> Mesh {
        build_mesh(&DomainSpec {
            extents: vec![length],
            cells: vec![cells],
        })
        .unwrap()
    }

    #[test]
    fn eigenvalue_on_pi_interval() {
        let m = mesh_1d(PI, 512);
        let (l, v) = principal_eigenpair(&m, EIGEN_TOL).unwrap();
        assert!((l - 1.0).abs() < 1e-3, "lambda1 {l}");
        assert!(v.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn eigenvalue_on_unit_interval() {
        let m = mesh_1d(1.0, 512);
        let (l, _) = principal_eigenpair(&m, EIGEN_TOL).unwrap();
        assert!((l - PI * PI).abs() < 1e-2, "lambda1 {l}");
    }

    #[test]
    fn eigenvalue_on_square() {
        let m = build_mesh(&DomainSpec {
            extents: vec![1.0, 1.0],
            cells: vec![64, 64],
        })
        .unwrap();
        let (l, v) = principal_eigenpair(&m, EIGEN_TOL).unwrap();
        assert!((l - 2.0 * PI * PI).abs() < 5e-2, "lambda1 {l}");
        assert!(v.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn eigen_residual_bound() {
        let m = mesh_1d(1.0, 128);
        let (l, v) = principal_eigenpair(&m, EIGEN_TOL).unwrap();
        let av = m.neg_laplacian(&v);
        let res = av
            .iter()
            .zip(&v)
            .fold(0.0_f64, |mx, (a, b)| mx.max((a - l * b).abs()));
        assert!(res <= EIGEN_TOL * l);
    }

    #[test]
    fn normalize_modes() {
        let m = mesh_1d(PI, 512);
        let two_sin = m.project(|x| 2.0 * x[0].sin());
        let e = normalize(&m, &two_sin, NormMode::SupNorm).unwrap();
        let sin = m.project(|x| x[0].sin());
        let diff = e
            .iter()
            .zip(&sin)
            .fold(0.0_f64, |mx, (a, b)| mx.max((a - b).abs()));
        assert!(diff < 1e-12);

        // Idempotence.
        let again = normalize(&m, &e, NormMode::SupNorm).unwrap();
        assert_eq!(e, again);

        // Grad-normalized sin is sin·(2/π)^{1/2} up to O(h²).
        let phi = normalize(&m, &sin, NormMode::GradNorm).unwrap();
        let factor = (2.0 / PI).sqrt();
        let diff = phi
            .iter()
            .zip(&sin)
            .fold(0.0_f64, |mx, (a, b)| mx.max((a - factor * b).abs()));
        assert!(diff < 1e-4, "diff {diff}");

        assert!(normalize(&m, &vec![0.0; m.n()], NormMode::SupNorm).is_err());
    }

    #[test]
    fn torsion_on_unit_interval() {
        let m = mesh_1d(1.0, 512);
        let w = torsion_function(&m).unwrap();
        let exact = m.project(|x| x[0] * (1.0 - x[0]) / 2.0);
        let diff = w
            .iter()
            .zip(&exact)
            .fold(0.0_f64, |mx, (a, b)| mx.max((a - b).abs()));
        assert!(diff < 1e-5, "diff {diff}");
        assert!((sup_norm(&w) - 0.125).abs() < 1e-5);
    }

    #[test]
    fn torsion_on_pi_interval() {
        let m = mesh_1d(PI, 512);
        let w = torsion_function(&m).unwrap();
        assert!((sup_norm(&w) - PI * PI / 8.0).abs() < 1e-3);
    }

    #[test]
    fn poisson_is_linear() {
        let m = mesh_1d(1.0, 64);
        let w1 = solve_poisson(&m, &vec![1.0; m.n()]).unwrap();
        let w2 = solve_poisson(&m, &vec![2.0; m.n()]).unwrap();
        let diff = w1
            .iter()
            .zip(&w2)
            .fold(0.0_f64, |mx, (a, b)| mx.max((2.0 * a - b).abs()));
        assert!(diff < 1e-10);
    }

    #[test]
    fn c1_values() {
        let m = mesh_1d(1.0, 512);
        assert!((sobolev_c1(&m).unwrap() - (1.0 / 12.0_f64).sqrt()).abs() < 1e-4);
        let m = mesh_1d(PI, 512);
        assert!((sobolev_c1(&m).unwrap() - (PI.powi(3) / 12.0).sqrt()).abs() < 1e-3);
    }

    #[test]
    fn c1_is_the_embedding_maximum() {
        let m = mesh_1d(1.0, 64);
        let c1 = sobolev_c1(&m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let u: Vec<f64> = (0..m.n()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let ratio = m.lp_norm(&u, 1.0) / m.grad_norm_sq(&u).sqrt();
            assert!(ratio <= c1 * (1.0 + 1e-8), "ratio {ratio} exceeds C1 {c1}");
        }
        // The torsion function attains the maximum.
        let w = torsion_function(&m).unwrap();
        let ratio = m.lp_norm(&w, 1.0) / m.grad_norm_sq(&w).sqrt();
        assert!(ratio >= c1 * (1.0 - 1e-8));
    }

    #[test]
    fn rayleigh_minimality() {
        let m = mesh_1d(1.0, 64);
        let (l, _) = principal_eigenpair(&m, EIGEN_TOL).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let u: Vec<f64> = (0..m.n()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let quotient = m.grad_norm_sq(&u) / m.integrate_power(&u, 2.0).unwrap();
            assert!(l <= quotient * (1.0 + EIGEN_TOL));
        }
    }

    #[test]
    fn mesh_convergence_second_order() {
        // Errors in λ₁ and C₁ must shrink by ~4 per mesh halving.
        let exact_l = PI * PI;
        let exact_c = (1.0 / 12.0_f64).sqrt();
        let mut errs_l = Vec::new();
        let mut errs_c = Vec::new();
        for cells in [64, 128, 256] {
            let m = mesh_1d(1.0, cells);
            let (l, _) = principal_eigenpair(&m, EIGEN_TOL).unwrap();
            errs_l.push((l - exact_l).abs());
            errs_c.push((sobolev_c1(&m).unwrap() - exact_c).abs());
        }
        for errs in [errs_l, errs_c] {
            for i in 0..errs.len() - 1 {
                let ratio = errs[i] / errs[i + 1];
                assert!(
                    (3.5..=4.5).contains(&ratio),
                    "refinement ratio {ratio} outside [3.5, 4.5]"
                );
            }
        }
    }
}
