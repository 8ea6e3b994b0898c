//! Evaluate the mass map `𝒫_k(α) = ∫_Ω u_α^p dx` across each bump, certify
//! the pointwise bounds that make its geometry rigorous, locate its fixed
//! points by bracketing and bisection, and assemble the final report with
//! the ordered chain of solution masses.

use crate::discretization::Mesh;
use crate::error::{Error, Result};
use crate::local_solver::{
    certify_energy_bound, monotone_solve, subsolution_ordering_holds, LocalProblem, LocalSolution,
    Side,
};
use crate::model::{check_hypotheses, HypothesisReport, ModelSpec};
use crate::spectral::{solve_poisson, EigenPack};
use rayon::prelude::*;
use serde::Serialize;

/// Relative slack allowed on the Claim-2 upper bound.
const UPPER_BOUND_SLACK: f64 = 1e-6;

/// Resolved engine parameters (defaults are filled by the config layer).
#[derive(Debug, Clone, Copy)]
pub struct ScanSettings {
    /// Curve samples per bump (≥ 16).
    pub n_samples: usize,
    /// Endpoint margin as a fraction of the bump width.
    pub delta_frac: f64,
    /// Sup-norm increment tolerance for the local solves.
    pub local_tol: f64,
    /// Absolute floor on `a(α)`.
    pub a_min: f64,
    /// Bracket width and fixed-point defect tolerance.
    pub refine_tol: f64,
    /// Bound on the residual of the assembled nonlocal equation.
    pub nonlocal_tol: f64,
}

/// One sample of the mass curve with its certified bounds.
#[derive(Debug, Clone, Serialize)]
pub struct CurvePoint {
    pub alpha: f64,
    /// `𝒫_k(α) = ∫ u_α^p`.
    pub p_value: f64,
    /// `g(α) = 𝒫_k(α) - α`; fixed points are its zeros.
    pub g: f64,
    pub a_alpha: f64,
    /// Claim-1 lower bound `ψ^{-1}(λ₁ a(α))^p ∫ e₁^p`.
    pub lower_bound: f64,
    /// Claim-2 upper bound `(max f) C₁ t★^{p-1} |Ω|^{1/2} / (a(α) λ₁^{1/2})`.
    pub upper_bound: f64,
}

/// Curve point plus the per-point certificates gathered during the scan.
#[derive(Debug, Clone, Serialize)]
pub struct CertifiedPoint {
    #[serde(flatten)]
    pub point: CurvePoint,
    /// Relative gap of the duality identity
    /// `𝒫_k(α) = (1/a(α)) ∫ f★(u_α) w_α`.
    pub eq12_gap: f64,
    /// `‖w_α‖ / (λ₁^{-1/2} t★^{p-1} |Ω|^{1/2})`; must not exceed 1.
    pub eq15_ratio: f64,
    pub lemma2_ok: bool,
    pub lemma3_ok: bool,
}

/// A located fixed point of `𝒫_k`, i.e. a solution of the nonlocal problem.
#[derive(Debug, Clone, Serialize)]
pub struct FixedPoint {
    pub alpha_star: f64,
    /// Position among the bump's crossings, in increasing `α` (1-based).
    pub index_in_bump: usize,
    pub bracket: (f64, f64),
    /// `∫ u^p` at the fixed point.
    pub mass: f64,
    /// `|𝒫_k(α★) - α★|`.
    pub defect: f64,
    /// `‖-a(∫u^p) Δ_h u - f(u)‖_∞` for the assembled nonlocal equation.
    pub nonlocal_residual: f64,
    /// `|a(∫u^p) - a(α★)|`.
    pub nonlocal_coeff_gap: f64,
    /// Local Lipschitz scale `|a'(α★)|` used to judge the coefficient gap.
    pub a_prime_abs: f64,
    #[serde(skip)]
    pub u: Vec<f64>,
}

/// Per-bump slice of the final report.
#[derive(Debug, Clone, Serialize)]
pub struct BumpReport {
    pub k: usize,
    pub interval: (f64, f64),
    pub n_curve_points: usize,
    pub fixed_points: Vec<FixedPoint>,
    /// True when more than the two guaranteed crossings were found.
    pub extra_crossings: bool,
}

/// Worst-case margins of the certified inequalities over every scanned
/// point of every bump.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateSummary {
    pub points_checked: usize,
    /// `min (𝒫 - lower bound)`; Claim 1 requires ≥ -1e-8.
    pub claim1_min_margin: f64,
    /// `min (upper bound·(1+1e-6) - 𝒫)`; Claim 2 requires ≥ 0.
    pub claim2_min_margin: f64,
    pub eq12_max_gap: f64,
    pub eq15_max_ratio: f64,
    pub lemma2_all_hold: bool,
    pub lemma3_all_hold: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainEntry {
    pub label: String,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderingReport {
    pub holds: bool,
    pub chain: Vec<ChainEntry>,
    pub min_margin: f64,
}

/// The full multiplicity report: at least two solutions per bump with the
/// interleaved mass chain and every certificate gathered on the way.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub schema_version: u32,
    pub k_bumps: usize,
    pub hypotheses: HypothesisReport,
    pub bumps: Vec<BumpReport>,
    pub ordering: OrderingReport,
    pub certificates: CertificateSummary,
}

/// Solve the frozen problem at `α` (sub side) and package the curve point
/// with its certificates and the solution itself.
pub fn eval_p(
    model: &ModelSpec,
    mesh: &Mesh,
    eig: &EigenPack,
    alpha: f64,
    settings: &ScanSettings,
) -> Result<(CertifiedPoint, LocalSolution)> {
    let problem = LocalProblem::new(model, mesh, eig, alpha, settings.a_min)?;
    let sol = monotone_solve(&problem, Side::Sub, settings.local_tol, None)?;
    let p = model.p();
    let p_value = mesh.integrate_power(&sol.u, p)?;

    let level = model.psi_inverse(eig.lambda1 * problem.a_alpha)?;
    let lower_bound = level.powf(p) * eig.int_e1_pow_p;
    let (_, max_f) = model.max_f();
    let t_star = model.t_star();
    let upper_bound = max_f * eig.c1 * t_star.powf(p - 1.0) * eig.volume.sqrt()
        / (problem.a_alpha * eig.lambda1.sqrt());

    let diag = claim2_diagnostic(model, mesh, eig, &sol)?;
    let lemma2_ok = certify_energy_bound(&problem, &sol, None)?;
    let lemma3_ok = subsolution_ordering_holds(&problem, &sol.u)?;

    let point = CurvePoint {
        alpha,
        p_value,
        g: p_value - alpha,
        a_alpha: problem.a_alpha,
        lower_bound,
        upper_bound,
    };
    Ok((
        CertifiedPoint {
            point,
            eq12_gap: diag.rel_gap,
            eq15_ratio: diag.norm_ratio,
            lemma2_ok,
            lemma3_ok,
        },
        sol,
    ))
}

/// Outcome of the Claim-2 duality diagnostic at one solution.
#[derive(Debug, Clone, Serialize)]
pub struct Claim2Diag {
    /// Relative gap between `∫ u^p` and `(1/a(α)) ∫ f★(u) w`.
    pub rel_gap: f64,
    /// Discrete `‖w‖`.
    pub w_grad_norm: f64,
    /// `λ₁^{-1/2} t★^{p-1} |Ω|^{1/2}`.
    pub w_norm_bound: f64,
    /// `‖w‖ / bound`.
    pub norm_ratio: f64,
}

/// Solve `-Δ_h w = u_α^{p-1}` and compare the direct mass with the duality
/// identity `(1/a(α)) ∫ f★(u_α) w`; also certify the norm bound on `w`.
pub fn claim2_diagnostic(
    model: &ModelSpec,
    mesh: &Mesh,
    eig: &EigenPack,
    sol: &LocalSolution,
) -> Result<Claim2Diag> {
    let p = model.p();
    let rhs: Vec<f64> = if p == 1.0 {
        vec![1.0; mesh.n()]
    } else {
        sol.u.iter().map(|&v| v.powf(p - 1.0)).collect()
    };
    let w = solve_poisson(mesh, &rhs)?;
    let a_alpha = model.a_of(sol.alpha);
    let p_direct = mesh.integrate_power(&sol.u, p)?;
    let p_dual = sol
        .u
        .iter()
        .zip(&w)
        .map(|(&ui, &wi)| model.eval_fstar(ui) * wi)
        .sum::<f64>()
        * mesh.cell_volume()
        / a_alpha;
    let rel_gap = (p_direct - p_dual).abs() / p_direct.abs().max(f64::MIN_POSITIVE);

    let w_grad_norm = mesh.grad_norm_sq(&w).sqrt();
    let w_norm_bound =
        model.t_star().powf(p - 1.0) * eig.volume.sqrt() / eig.lambda1.sqrt();
    Ok(Claim2Diag {
        rel_gap,
        w_grad_norm,
        w_norm_bound,
        norm_ratio: w_grad_norm / w_norm_bound,
    })
}

/// Scan the mass curve of bump `k` on a uniform `α` grid, skipping points
/// where `a(α)` is below the floor.  Points are evaluated in parallel;
/// the output is sorted by `α` and independent of the evaluation order.
pub fn scan_curve(
    model: &ModelSpec,
    mesh: &Mesh,
    eig: &EigenPack,
    k: usize,
    settings: &ScanSettings,
) -> Result<Vec<CertifiedPoint>> {
    if settings.n_samples < 16 {
        return Err(Error::InvalidConfig(format!(
            "n_samples = {} must be at least 16",
            settings.n_samples
        )));
    }
    let (t_lo, t_hi) = model.knots().interval(k);
    let width = t_hi - t_lo;
    let delta = settings.delta_frac * width;
    if !(delta > 0.0 && delta < width / 4.0) {
        return Err(Error::InvalidConfig(format!(
            "endpoint margin {delta} outside (0, {})",
            width / 4.0
        )));
    }
    let lo = t_lo + delta;
    let hi = t_hi - delta;
    let n = settings.n_samples;
    let points: Vec<Option<CertifiedPoint>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let alpha = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            match eval_p(model, mesh, eig, alpha, settings) {
                Ok((cp, _)) => Ok(Some(cp)),
                Err(Error::DegenerateCoefficient { .. }) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;
    let curve: Vec<CertifiedPoint> = points.into_iter().flatten().collect();
    if curve.len() < 2 {
        return Err(Error::InvalidConfig(format!(
            "bump {k}: fewer than 2 curve points clear the a(α) floor"
        )));
    }
    Ok(curve)
}

/// Indices `i` such that `g` changes sign between samples `i` and `i+1`.
pub fn detect_brackets(curve: &[CurvePoint]) -> Vec<usize> {
    curve
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0].g == 0.0 || (w[0].g > 0.0) != (w[1].g > 0.0))
        .map(|(i, _)| i)
        .collect()
}

/// Bisect a sign-change bracket of a continuous function until both the
/// bracket width and `|g|` at the midpoint drop below `tol`.
pub fn refine_bracket(
    g: &mut dyn FnMut(f64) -> Result<f64>,
    mut lo: f64,
    mut hi: f64,
    mut g_lo: f64,
    tol: f64,
) -> Result<(f64, f64, f64)> {
    let mut mid = 0.5 * (lo + hi);
    let mut g_mid = g(mid)?;
    for _ in 0..200 {
        if (hi - lo) <= tol && g_mid.abs() <= tol {
            return Ok((mid, lo, hi));
        }
        if g_mid == 0.0 {
            return Ok((mid, lo, hi));
        }
        if (g_mid > 0.0) == (g_lo > 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
        mid = 0.5 * (lo + hi);
        g_mid = g(mid)?;
    }
    Err(Error::NonConvergence {
        what: "fixed-point bisection".into(),
        iterations: 200,
        residual: g_mid.abs(),
    })
}

fn curve_dump(curve: &[CertifiedPoint]) -> String {
    let mut s = String::from("alpha,P,g,a_alpha,lower_bound,upper_bound\n");
    for cp in curve {
        let p = &cp.point;
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            p.alpha, p.p_value, p.g, p.a_alpha, p.lower_bound, p.upper_bound
        ));
    }
    s
}

/// Locate every fixed point of `𝒫_k` flagged by sign changes of the
/// scanned curve, refining each bracket with PDE-backed bisection.
///
/// Fewer than two crossings is a hard error carrying the hypothesis
/// margins and the curve as diagnostics — under (H0)–(H4) the theorem
/// guarantees at least two.
pub fn find_fixed_points(
    model: &ModelSpec,
    mesh: &Mesh,
    eig: &EigenPack,
    k: usize,
    curve: &[CertifiedPoint],
    settings: &ScanSettings,
) -> Result<Vec<FixedPoint>> {
    let raw: Vec<CurvePoint> = curve.iter().map(|c| c.point.clone()).collect();
    let brackets = detect_brackets(&raw);
    if brackets.len() < 2 {
        let hyp = check_hypotheses_dump(model, eig);
        return Err(Error::TooFewCrossings {
            k,
            found: brackets.len(),
            diagnostic: format!("{hyp}\n{}", curve_dump(curve)),
        });
    }

    let mut out = Vec::new();
    for (idx, &i) in brackets.iter().enumerate() {
        let (lo, hi) = (raw[i].alpha, raw[i + 1].alpha);
        let g_lo = raw[i].g;
        let mut last: Option<(CertifiedPoint, LocalSolution)> = None;
        let mut g_eval = |alpha: f64| -> Result<f64> {
            let r = eval_p(model, mesh, eig, alpha, settings)?;
            let g = r.0.point.g;
            last = Some(r);
            Ok(g)
        };
        let (alpha_star, b_lo, b_hi) =
            refine_bracket(&mut g_eval, lo, hi, g_lo, settings.refine_tol)?;
        let (cp, sol) = last.expect("bisection evaluated g at least once");
        debug_assert_eq!(cp.point.alpha, alpha_star);

        let mass = cp.point.p_value;
        let a_mass = model.a_of(mass);
        let a_star = model.a_of(alpha_star);
        let lap = mesh.neg_laplacian(&sol.u);
        let nonlocal_residual = sol
            .u
            .iter()
            .zip(&lap)
            .map(|(&ui, &li)| (a_mass * li - model.eval_fstar(ui)).abs())
            .fold(0.0_f64, f64::max);
        let da = 1e-7 * (hi - lo).max(settings.refine_tol);
        let a_prime_abs =
            ((model.a_of(alpha_star + da) - model.a_of(alpha_star - da)) / (2.0 * da)).abs();

        out.push(FixedPoint {
            alpha_star,
            index_in_bump: idx + 1,
            bracket: (b_lo, b_hi),
            mass,
            defect: (mass - alpha_star).abs(),
            nonlocal_residual,
            nonlocal_coeff_gap: (a_mass - a_star).abs(),
            a_prime_abs,
            u: sol.u,
        })
    }
    Ok(out)
}

fn check_hypotheses_dump(model: &ModelSpec, eig: &EigenPack) -> String {
    let rep = check_hypotheses(model, eig);
    serde_json::to_string(&rep).unwrap_or_else(|_| "hypothesis report unavailable".into())
}

/// Run scan + refinement over every bump, verify the interleaved mass
/// chain, and assemble the report.
pub fn assemble_theorem(
    model: &ModelSpec,
    mesh: &Mesh,
    eig: &EigenPack,
    settings: &ScanSettings,
    hypotheses: HypothesisReport,
) -> Result<TheoremReport> {
    let k_bumps = model.knots().count();
    let mut bumps = Vec::new();
    let mut summary = CertificateSummary {
        points_checked: 0,
        claim1_min_margin: f64::INFINITY,
        claim2_min_margin: f64::INFINITY,
        eq12_max_gap: 0.0,
        eq15_max_ratio: 0.0,
        lemma2_all_hold: true,
        lemma3_all_hold: true,
    };
    for k in 1..=k_bumps {
        let curve = scan_curve(model, mesh, eig, k, settings)?;
        for cp in &curve {
            summary.points_checked += 1;
            summary.claim1_min_margin = summary
                .claim1_min_margin
                .min(cp.point.p_value - cp.point.lower_bound);
            summary.claim2_min_margin = summary
                .claim2_min_margin
                .min(cp.point.upper_bound * (1.0 + UPPER_BOUND_SLACK) - cp.point.p_value);
            summary.eq12_max_gap = summary.eq12_max_gap.max(cp.eq12_gap);
            summary.eq15_max_ratio = summary.eq15_max_ratio.max(cp.eq15_ratio);
            summary.lemma2_all_hold &= cp.lemma2_ok;
            summary.lemma3_all_hold &= cp.lemma3_ok;
        }
        let fixed_points = find_fixed_points(model, mesh, eig, k, &curve, settings)?;
        let (t_lo, t_hi) = model.knots().interval(k);
        bumps.push(BumpReport {
            k,
            interval: (t_lo, t_hi),
            n_curve_points: curve.len(),
            extra_crossings: fixed_points.len() > 2,
            fixed_points,
        });
    }

    // The interleaved chain:
    // 0 < m_{1,1} < … < t_1 < m_{2,1} < … < t_{K-1} < … < t_K.
    let mut chain = vec![ChainEntry {
        label: "0".into(),
        value: 0.0,
    }];
    for bump in &bumps {
        let mut masses: Vec<(usize, f64)> = bump
            .fixed_points
            .iter()
            .map(|fp| (fp.index_in_bump, fp.mass))
            .collect();
        masses.sort_by(|a, b| a.1.total_cmp(&b.1));
        for (idx, mass) in masses {
            chain.push(ChainEntry {
                label: format!("mass[{},{}]", bump.k, idx),
                value: mass,
            });
        }
        chain.push(ChainEntry {
            label: format!("t_{}", bump.k),
            value: bump.interval.1,
        });
    }
    let mut min_margin = f64::INFINITY;
    let mut holds = true;
    for w in chain.windows(2) {
        let margin = w[1].value - w[0].value;
        min_margin = min_margin.min(margin);
        holds &= margin > 0.0;
    }
    let ordering = OrderingReport {
        holds,
        chain,
        min_margin,
    };
    if !ordering.holds {
        let detail = ordering
            .chain
            .iter()
            .map(|e| format!("{} = {}", e.label, e.value))
            .collect::<Vec<_>>()
            .join(" ; ");
        return Err(Error::OrderingViolation(detail));
    }

    Ok(TheoremReport {
        schema_version: 1,
        k_bumps,
        hypotheses,
        bumps,
        ordering,
        certificates: summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discretization::{build_mesh, DomainSpec, Mesh};
    use crate::model::{CoefficientA, Knots, ModelSpec, NonlinearityF};
    use crate::spectral::{compute_eigenpack, EIGEN_TOL};
    use std::f64::consts::PI;

    fn mesh_1d(length: f64, cells: usize) -> Mesh {
        build_mesh(&DomainSpec {
            extents: vec![length],
            cells: vec![cells],
        })
        .unwrap()
    }

    fn settings() -> ScanSettings {
        ScanSettings {
            n_samples: 24,
            delta_frac: 1e-3,
            local_tol: 1e-10,
            a_min: 1e-12,
            refine_tol: 1e-8,
            nonlocal_tol: 1e-6,
        }
    }

    /// f(t) = 1 - t with a single wide bump peaking at a(α) = 1.
    fn affine_model() -> ModelSpec {
        ModelSpec::new(
            1.0,
            Knots::new(&[2.0], 1.0).unwrap(),
            CoefficientA::Bumps {
                amplitudes: vec![1.0],
            },
            NonlinearityF::Affine,
        )
        .unwrap()
    }

    #[test]
    fn mass_of_analytic_solution() {
        // a(α) = 1, f(t) = 1 - t on (0, π): P = π - 2 tanh(π/2).
        let mesh = mesh_1d(PI, 512);
        let eig = compute_eigenpack(&mesh, 1.0, EIGEN_TOL).unwrap();
        let model = affine_model();
        let (cp, _) = eval_p(&model, &mesh, &eig, 1.0, &settings()).unwrap();
        let exact = PI - 2.0 * (PI / 2.0).tanh();
        assert!(
            (cp.point.p_value - exact).abs() < 1e-3,
            "P {} vs {exact}",
            cp.point.p_value
        );
        // Claim-1 lower bound: ψ^{-1}(1)·∫e₁ = ½·2 = 1 ≤ P.
        assert!((cp.point.lower_bound - 1.0).abs() < 1e-3);
        assert!(cp.point.lower_bound <= cp.point.p_value);
        assert!(cp.point.p_value <= cp.point.upper_bound * (1.0 + 1e-6));
    }

    #[test]
    fn mass_converges_second_order() {
        let model = affine_model();
        let exact = PI - 2.0 * (PI / 2.0).tanh();
        let mut errs = Vec::new();
        for cells in [64, 128, 256] {
            let mesh = mesh_1d(PI, cells);
            let eig = compute_eigenpack(&mesh, 1.0, EIGEN_TOL).unwrap();
            let (cp, _) = eval_p(&model, &mesh, &eig, 1.0, &settings()).unwrap();
            errs.push((cp.point.p_value - exact).abs());
        }
        for w in errs.windows(2) {
            let rate = (w[0] / w[1]).log2();
            assert!((1.5..=2.5).contains(&rate), "rate {rate}");
        }
    }

    #[test]
    fn claim2_reduces_to_torsion_for_p1() {
        let mesh = mesh_1d(PI, 256);
        let eig = compute_eigenpack(&mesh, 1.0, EIGEN_TOL).unwrap();
        let model = affine_model();
        let (_, sol) = eval_p(&model, &mesh, &eig, 1.0, &settings()).unwrap();
        let diag = claim2_diagnostic(&model, &mesh, &eig, &sol).unwrap();
        assert!(diag.rel_gap <= 1e-6, "gap {}", diag.rel_gap);
        assert!(diag.norm_ratio <= 1.0, "ratio {}", diag.norm_ratio);
        // For p = 1 the dual weight is the torsion function itself.
        let w = crate::spectral::torsion_function(&mesh).unwrap();
        let expected = crate::discretization::sup_norm(&w);
        assert!((expected - PI * PI / 8.0).abs() < 1e-3);
    }

    #[test]
    fn synthetic_brackets_and_refinement() {
        // g(α) = (α - 0.3)(α - 0.7) sampled on (0, 1).
        let g_fn = |a: f64| (a - 0.3) * (a - 0.7);
        let curve: Vec<CurvePoint> = (0..=20)
            .map(|i| {
                let alpha = 0.05 + 0.9 * i as f64 / 20.0;
                CurvePoint {
                    alpha,
                    p_value: alpha + g_fn(alpha),
                    g: g_fn(alpha),
                    a_alpha: 1.0,
                    lower_bound: 0.0,
                    upper_bound: 10.0,
                }
            })
            .collect();
        let brackets = detect_brackets(&curve);
        assert_eq!(brackets.len(), 2);
        for (i, root) in brackets.iter().zip([0.3, 0.7]) {
            let (lo, hi) = (curve[*i].alpha, curve[*i + 1].alpha);
            assert!(lo < root && root < hi);
            let mut g = |a: f64| Ok(g_fn(a));
            let (found, _, _) = refine_bracket(&mut g, lo, hi, g_fn(lo), 1e-10).unwrap();
            assert!((found - root).abs() < 1e-9, "found {found}");
        }
    }

    #[test]
    fn monotone_curve_without_crossing_is_an_error() {
        let mesh = mesh_1d(PI, 32);
        let eig = compute_eigenpack(&mesh, 1.0, EIGEN_TOL).unwrap();
        let model = affine_model();
        // A strictly positive g with no sign change.
        let curve: Vec<CertifiedPoint> = (0..16)
            .map(|i| {
                let alpha = 0.1 + 0.05 * i as f64;
                CertifiedPoint {
                    point: CurvePoint {
                        alpha,
                        p_value: alpha + 1.0,
                        g: 1.0,
                        a_alpha: 1.0,
                        lower_bound: 0.0,
                        upper_bound: 10.0,
                    },
                    eq12_gap: 0.0,
                    eq15_ratio: 0.5,
                    lemma2_ok: true,
                    lemma3_ok: true,
                }
            })
            .collect();
        let err = find_fixed_points(&model, &mesh, &eig, 1, &curve, &settings());
        assert!(matches!(err, Err(Error::TooFewCrossings { found: 0, .. })));
    }

    #[test]
    fn scan_rejects_bad_parameters() {
        let mesh = mesh_1d(PI, 32);
        let eig = compute_eigenpack(&mesh, 1.0, EIGEN_TOL).unwrap();
        let model = affine_model();
        let mut s = settings();
        s.n_samples = 8;
        assert!(scan_curve(&model, &mesh, &eig, 1, &s).is_err());
        let mut s = settings();
        s.delta_frac = 0.3;
        assert!(scan_curve(&model, &mesh, &eig, 1, &s).is_err());
    }
}
