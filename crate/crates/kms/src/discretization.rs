//! Uniform tensor meshes on intervals and axis-aligned rectangles, the
//! second-order discrete Dirichlet Laplacian, nodal quadrature and norms.
//!
//! Interior nodes are ordered lexicographically: in 2-D the node with
//! indices `(ix, iy)` (both 1-based over the interior) sits at flat index
//! `iy_inner * nx_inner + ix_inner`, i.e. the x index varies fastest.
//! Fields carry one value per interior node and implicitly vanish on the
//! boundary.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::io::Write;

/// Requested domain: an interval or an axis-aligned rectangle with a
/// uniform grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DomainSpec {
    /// Length of the domain along each axis (1 or 2 entries).
    pub extents: Vec<f64>,
    /// Number of grid cells along each axis; at least 4 per axis.
    pub cells: Vec<usize>,
}

/// Immutable uniform tensor grid.  Shareable across threads; every field
/// operation is a pure function of its inputs.
#[derive(Debug, Clone)]
pub struct Mesh {
    extents: Vec<f64>,
    cells: Vec<usize>,
    h: Vec<f64>,
    inner: Vec<usize>,
    n: usize,
    cell_volume: f64,
    volume: f64,
}

/// Build a mesh from a domain spec, rejecting degenerate requests.
pub fn build_mesh(spec: &DomainSpec) -> Result<Mesh> {
    let dim = spec.extents.len();
    if dim == 0 || dim > 2 {
        return Err(Error::InvalidDomain(format!(
            "dimension must be 1 or 2, got {dim}"
        )));
    }
    if spec.cells.len() != dim {
        return Err(Error::InvalidDomain(format!(
            "{} extent(s) but {} cell count(s)",
            dim,
            spec.cells.len()
        )));
    }
    for (&l, &c) in spec.extents.iter().zip(&spec.cells) {
        if !(l > 0.0) || !l.is_finite() {
            return Err(Error::InvalidDomain(format!("extent {l} must be positive")));
        }
        if c < 4 {
            return Err(Error::InvalidDomain(format!(
                "cell count {c} < 4 (need at least 3 interior nodes per axis)"
            )));
        }
    }
    let h: Vec<f64> = spec
        .extents
        .iter()
        .zip(&spec.cells)
        .map(|(&l, &c)| l / c as f64)
        .collect();
    let inner: Vec<usize> = spec.cells.iter().map(|&c| c - 1).collect();
    let n = inner.iter().product();
    let cell_volume = h.iter().product();
    let volume = spec.extents.iter().product();
    Ok(Mesh {
        extents: spec.extents.clone(),
        cells: spec.cells.clone(),
        h,
        inner,
        n,
        cell_volume,
        volume,
    })
}

impl Mesh {
    pub fn dim(&self) -> usize {
        self.extents.len()
    }

    /// Interior node count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn extents(&self) -> &[f64] {
        &self.extents
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// Grid spacing per axis.
    pub fn spacing(&self) -> &[f64] {
        &self.h
    }

    /// Quadrature weight of one interior node.
    pub fn cell_volume(&self) -> f64 {
        self.cell_volume
    }

    /// Measure of the domain, |Ω|.
    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Coordinates of interior node `idx`.
    pub fn coords(&self, idx: usize) -> Vec<f64> {
        assert!(idx < self.n, "node index out of range");
        match self.dim() {
            1 => vec![(idx as f64 + 1.0) * self.h[0]],
            _ => {
                let nx = self.inner[0];
                let ix = idx % nx;
                let iy = idx / nx;
                vec![(ix as f64 + 1.0) * self.h[0], (iy as f64 + 1.0) * self.h[1]]
            }
        }
    }

    /// Sample a function of the coordinates at every interior node.
    pub fn project(&self, f: impl Fn(&[f64]) -> f64) -> Vec<f64> {
        (0..self.n).map(|i| f(&self.coords(i))).collect()
    }

    /// Apply the negative discrete Laplacian (second-order central stencil,
    /// zero Dirichlet data) writing into `out`.
    pub fn neg_laplacian_into(&self, u: &[f64], out: &mut [f64]) {
        assert_eq!(u.len(), self.n, "field/mesh size mismatch");
        assert_eq!(out.len(), self.n, "output/mesh size mismatch");
        match self.dim() {
            1 => {
                let inv_h2 = 1.0 / (self.h[0] * self.h[0]);
                let n = self.n;
                for i in 0..n {
                    let left = if i > 0 { u[i - 1] } else { 0.0 };
                    let right = if i + 1 < n { u[i + 1] } else { 0.0 };
                    out[i] = (2.0 * u[i] - left - right) * inv_h2;
                }
            }
            _ => {
                let nx = self.inner[0];
                let ny = self.inner[1];
                let inv_hx2 = 1.0 / (self.h[0] * self.h[0]);
                let inv_hy2 = 1.0 / (self.h[1] * self.h[1]);
                for iy in 0..ny {
                    for ix in 0..nx {
                        let i = iy * nx + ix;
                        let l = if ix > 0 { u[i - 1] } else { 0.0 };
                        let r = if ix + 1 < nx { u[i + 1] } else { 0.0 };
                        let d = if iy > 0 { u[i - nx] } else { 0.0 };
                        let t = if iy + 1 < ny { u[i + nx] } else { 0.0 };
                        out[i] = (2.0 * u[i] - l - r) * inv_hx2 + (2.0 * u[i] - d - t) * inv_hy2;
                    }
                }
            }
        }
    }

    /// `-Δ_h u` with homogeneous Dirichlet boundary data.
    pub fn neg_laplacian(&self, u: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        self.neg_laplacian_into(u, &mut out);
        out
    }

    /// Nodal quadrature of `u^q`: `Σ u_i^q · ω`.  Coincides with the
    /// composite trapezoid rule because boundary values vanish.
    pub fn integrate_power(&self, u: &[f64], q: f64) -> Result<f64> {
        assert_eq!(u.len(), self.n, "field/mesh size mismatch");
        assert!(q >= 0.0, "exponent must be nonnegative");
        let integer_q = q.fract() == 0.0;
        let mut sum = 0.0;
        for &v in u {
            if v < 0.0 && !integer_q {
                return Err(Error::NegativePower {
                    value: v,
                    exponent: q,
                });
            }
            sum += if q == 1.0 {
                v
            } else if q == 2.0 {
                v * v
            } else {
                v.powf(q)
            };
        }
        Ok(sum * self.cell_volume)
    }

    /// Discrete Dirichlet energy `uᵀ(-Δ_h u)·ω`, the consistent
    /// approximation of `∫|∇u|²`.
    pub fn grad_norm_sq(&self, u: &[f64]) -> f64 {
        let au = self.neg_laplacian(u);
        u.iter().zip(&au).map(|(x, y)| x * y).sum::<f64>() * self.cell_volume
    }

    /// `L^r` norm of `u` via nodal quadrature of `|u|^r`.
    pub fn lp_norm(&self, u: &[f64], r: f64) -> f64 {
        assert!(r >= 1.0, "lp_norm needs r >= 1");
        let abs: Vec<f64> = u.iter().map(|v| v.abs()).collect();
        self.integrate_power(&abs, r)
            .expect("|u| is nonnegative")
            .powf(1.0 / r)
    }

    /// Export a field as CSV, one row per interior node:
    /// coordinates followed by the value.
    pub fn write_field_csv<W: Write>(&self, u: &[f64], mut w: W) -> Result<()> {
        assert_eq!(u.len(), self.n, "field/mesh size mismatch");
        match self.dim() {
            1 => writeln!(w, "x,value")?,
            _ => writeln!(w, "x,y,value")?,
        }
        for i in 0..self.n {
            let c = self.coords(i);
            for x in &c {
                write!(w, "{x},")?;
            }
            writeln!(w, "{}", u[i])?;
        }
        Ok(())
    }
}

/// Maximum absolute nodal value.
pub fn sup_norm(u: &[f64]) -> f64 {
    u.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
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
    fn mesh_1d_four_cells() {
        let m = mesh_1d(PI, 4);
        assert_eq!(m.n(), 3);
        assert!((m.spacing()[0] - PI / 4.0).abs() < 1e-15);
        let xs: Vec<f64> = (0..3).map(|i| m.coords(i)[0]).collect();
        assert!((xs[0] - PI / 4.0).abs() < 1e-15);
        assert!((xs[1] - PI / 2.0).abs() < 1e-15);
        assert!((xs[2] - 3.0 * PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn mesh_2d_unit_square() {
        let m = build_mesh(&DomainSpec {
            extents: vec![1.0, 1.0],
            cells: vec![4, 4],
        })
        .unwrap();
        assert_eq!(m.n(), 9);
        assert!((m.cell_volume() - 1.0 / 16.0).abs() < 1e-15);
        assert!((m.volume() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn too_few_cells_rejected() {
        let err = build_mesh(&DomainSpec {
            extents: vec![1.0],
            cells: vec![3],
        });
        assert!(err.is_err());
    }

    #[test]
    fn laplacian_exact_on_quadratics() {
        let m = mesh_1d(1.0, 4);
        let u = m.project(|x| x[0] * (1.0 - x[0]));
        let lu = m.neg_laplacian(&u);
        for v in lu {
            assert!((v - 2.0).abs() < 1e-12, "got {v}");
        }
    }

    #[test]
    fn laplacian_of_zero_is_zero() {
        let m = mesh_1d(1.0, 8);
        let lu = m.neg_laplacian(&vec![0.0; m.n()]);
        assert!(sup_norm(&lu) == 0.0);
    }

    #[test]
    fn laplacian_close_to_eigenfunction() {
        let m = mesh_1d(PI, 512);
        let h = m.spacing()[0];
        let u = m.project(|x| x[0].sin());
        let lu = m.neg_laplacian(&u);
        let err = u
            .iter()
            .zip(&lu)
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()));
        assert!(err <= h * h, "err {err} vs h^2 {}", h * h);
    }

    #[test]
    fn integrate_sin() {
        let m = mesh_1d(PI, 512);
        let u = m.project(|x| x[0].sin());
        assert!((m.integrate_power(&u, 1.0).unwrap() - 2.0).abs() < 1e-3);
        assert!((m.integrate_power(&u, 2.0).unwrap() - PI / 2.0).abs() < 1e-3);
        assert_eq!(m.integrate_power(&vec![0.0; m.n()], 3.0).unwrap(), 0.0);
    }

    #[test]
    fn negative_value_with_fractional_power() {
        let m = mesh_1d(1.0, 4);
        let mut u = vec![1.0; m.n()];
        u[1] = -0.5;
        assert!(m.integrate_power(&u, 1.5).is_err());
        assert!(m.integrate_power(&u, 2.0).is_ok());
    }

    #[test]
    fn grad_norm_of_sin() {
        let m = mesh_1d(PI, 512);
        let u = m.project(|x| x[0].sin());
        assert!((m.grad_norm_sq(&u) - PI / 2.0).abs() < 1e-2);
        assert_eq!(m.grad_norm_sq(&vec![0.0; m.n()]), 0.0);
    }

    #[test]
    fn grad_norm_scales_quadratically() {
        let m = mesh_1d(2.0, 32);
        let u = m.project(|x| x[0] * (2.0 - x[0]) * (0.3 + x[0]));
        let base = m.grad_norm_sq(&u);
        let scaled: Vec<f64> = u.iter().map(|v| 3.0 * v).collect();
        assert!((m.grad_norm_sq(&scaled) - 9.0 * base).abs() < 1e-10 * base.abs().max(1.0));
    }

    #[test]
    fn sup_and_lp_norms() {
        let m = mesh_1d(PI, 512);
        let u = m.project(|x| x[0].sin());
        assert!((sup_norm(&u) - 1.0).abs() < 1e-4);
        assert_eq!(sup_norm(&vec![0.0; m.n()]), 0.0);
    }

    #[test]
    fn cauchy_schwarz_on_random_fields() {
        let m = mesh_1d(2.0, 64);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let u: Vec<f64> = (0..m.n()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let l1 = m.lp_norm(&u, 1.0);
            let l2 = m.lp_norm(&u, 2.0);
            assert!(l1 <= m.volume().sqrt() * l2 * (1.0 + 1e-12));
        }
    }

    #[test]
    fn laplacian_symmetry_and_positivity() {
        for m in [
            mesh_1d(1.3, 17),
            build_mesh(&DomainSpec {
                extents: vec![1.0, 2.0],
                cells: vec![9, 13],
            })
            .unwrap(),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..20 {
                let u: Vec<f64> = (0..m.n()).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let v: Vec<f64> = (0..m.n()).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let au = m.neg_laplacian(&u);
                let av = m.neg_laplacian(&v);
                let uav: f64 = u.iter().zip(&av).map(|(a, b)| a * b).sum();
                let vau: f64 = v.iter().zip(&au).map(|(a, b)| a * b).sum();
                let scale = uav.abs().max(1.0);
                assert!((uav - vau).abs() <= 1e-10 * scale);
                assert!(m.grad_norm_sq(&u) > 0.0);
            }
        }
    }

    #[test]
    fn quadrature_matches_trapezoid() {
        // With zero boundary values the trapezoid rule reduces to the
        // interior nodal sum times h.
        let m = mesh_1d(1.0, 16);
        let u = m.project(|x| (3.0 * x[0]).sin().abs() + x[0]);
        let h = m.spacing()[0];
        let trapezoid: f64 = {
            let mut vals = vec![0.0];
            vals.extend_from_slice(&u);
            vals.push(0.0);
            (0..vals.len() - 1)
                .map(|i| 0.5 * h * (vals[i] + vals[i + 1]))
                .sum()
        };
        let nodal = m.integrate_power(&u, 1.0).unwrap();
        assert!((trapezoid - nodal).abs() < 1e-14);
    }

    #[test]
    fn csv_export_shape() {
        let m = mesh_1d(1.0, 4);
        let u = m.project(|x| x[0]);
        let mut buf = Vec::new();
        m.write_field_csv(&u, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 4); // header + 3 nodes
        assert!(text.starts_with("x,value"));
    }
}
