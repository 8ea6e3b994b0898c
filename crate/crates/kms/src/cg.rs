//! Matrix-free conjugate gradients for the symmetric positive definite
//! operators assembled elsewhere (shifted discrete Laplacians).

use crate::error::{Error, Result};

/// Outcome of a CG solve.
#[derive(Debug, Clone)]
pub struct CgSolve {
    pub x: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solve `A x = b` for an SPD operator given as `apply(x, out)`.
///
/// Converges when the 2-norm residual drops below `rel_tol * ||b||`
/// (or below `rel_tol` absolutely when `b = 0`).  `x0` warm-starts the
/// iteration.
pub fn cg<F>(
    apply: F,
    b: &[f64],
    x0: Option<&[f64]>,
    rel_tol: f64,
    max_iter: usize,
) -> Result<CgSolve>
where
    F: Fn(&[f64], &mut [f64]),
{
    let n = b.len();
    let norm_b = dot(b, b).sqrt();
    let target = if norm_b > 0.0 { rel_tol * norm_b } else { rel_tol };

    let mut x = match x0 {
        Some(v) => {
            assert_eq!(v.len(), n, "warm start length mismatch");
            v.to_vec()
        }
        None => vec![0.0; n],
    };
    let mut ax = vec![0.0; n];
    apply(&x, &mut ax);
    let mut r: Vec<f64> = b.iter().zip(&ax).map(|(bi, ai)| bi - ai).collect();
    let mut rr = dot(&r, &r);
    if rr.sqrt() <= target {
        return Ok(CgSolve {
            x,
            iterations: 0,
            residual: rr.sqrt(),
        });
    }
    let mut p = r.clone();
    let mut ap = vec![0.0; n];

    for iter in 1..=max_iter {
        apply(&p, &mut ap);
        let pap = dot(&p, &ap);
        if pap <= 0.0 {
            return Err(Error::NonConvergence {
                what: "conjugate gradients (operator not positive definite)".into(),
                iterations: iter,
                residual: rr.sqrt(),
            });
        }
        let alpha = rr / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        let rr_new = dot(&r, &r);
        if rr_new.sqrt() <= target {
            return Ok(CgSolve {
                x,
                iterations: iter,
                residual: rr_new.sqrt(),
            });
        }
        let beta = rr_new / rr;
        rr = rr_new;
        for i in 0..n {
            p[i] = r[i] + beta * p[i];
        }
    }
    Err(Error::NonConvergence {
        what: "conjugate gradients".into(),
        iterations: max_iter,
        residual: rr.sqrt(),
    })
}
