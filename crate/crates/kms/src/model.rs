//! Problem data: the vanishing coefficient `a`, the nonlinearity `f`, its
//! truncation `f★`, the limit `γ = lim_{t→0⁺} f(t)/t`, the decreasing map
//! `ψ(t) = f★(t)/t` and its inverse, the hypothesis checker, and the
//! closed-form example generator.

use crate::error::{Error, Result};
use crate::spectral::EigenPack;
use serde::Serialize;

/// Sample count for interval maxima before golden-section refinement.
const SCAN_POINTS: usize = 10_000;
/// Sample count for sign/monotonicity checks.
const CHECK_POINTS: usize = 1000;

/// The knot sequence `0 = t_0 < t_1 < … < t_K` together with the ceiling
/// `t★` at which `f` vanishes.
#[derive(Debug, Clone)]
pub struct Knots {
    /// All knots including `t_0 = 0`.
    t: Vec<f64>,
    t_star: f64,
}

impl Knots {
    /// Build from the positive knots `t_1 < … < t_K`.
    pub fn new(positive_knots: &[f64], t_star: f64) -> Result<Self> {
        if positive_knots.is_empty() {
            return Err(Error::InvalidModel(
                "(H0) requires at least one positive knot".into(),
            ));
        }
        if !(t_star > 0.0) || !t_star.is_finite() {
            return Err(Error::InvalidModel(format!(
                "t_star = {t_star} must be positive"
            )));
        }
        let mut t = vec![0.0];
        t.extend_from_slice(positive_knots);
        for w in t.windows(2) {
            if !(w[1] > w[0]) || !w[1].is_finite() {
                return Err(Error::InvalidModel(format!(
                    "(H0) requires strictly increasing knots 0 = t_0 < t_1 < … < t_K; \
                     got {} after {}",
                    w[1], w[0]
                )));
            }
        }
        Ok(Knots { t, t_star })
    }

    /// Number of bumps `K`.
    pub fn count(&self) -> usize {
        self.t.len() - 1
    }

    /// All knots including `t_0 = 0`.
    pub fn all(&self) -> &[f64] {
        &self.t
    }

    /// Endpoints of bump `k` (1-based): `(t_{k-1}, t_k)`.
    pub fn interval(&self, k: usize) -> (f64, f64) {
        assert!(k >= 1 && k <= self.count(), "bump index out of range");
        (self.t[k - 1], self.t[k])
    }

    /// The last knot `t_K`.
    pub fn t_max(&self) -> f64 {
        *self.t.last().unwrap()
    }

    pub fn t_star(&self) -> f64 {
        self.t_star
    }
}

/// The diffusion coefficient `a`, vanishing at every knot and positive
/// strictly inside each bump.
#[derive(Debug, Clone)]
pub enum CoefficientA {
    /// One sine arch per bump: `a(t) = A_k sin(π (t - t_{k-1}) / (t_k - t_{k-1}))`.
    Bumps { amplitudes: Vec<f64> },
    /// User-sampled table with linear interpolation.
    Table { points: Vec<(f64, f64)> },
}

impl CoefficientA {
    /// Evaluate `a(t)`; zero outside `[0, t_K]`.
    pub fn eval(&self, knots: &Knots, t: f64) -> f64 {
        if t <= 0.0 || t >= knots.t_max() {
            return match self {
                CoefficientA::Bumps { .. } => 0.0,
                CoefficientA::Table { points } => table_interp(points, t.clamp(0.0, knots.t_max())),
            };
        }
        match self {
            CoefficientA::Bumps { amplitudes } => {
                let ts = knots.all();
                // Knots are few; a linear scan is fine.
                let k = ts.windows(2).position(|w| t <= w[1]).unwrap();
                let (lo, hi) = (ts[k], ts[k + 1]);
                amplitudes[k] * (std::f64::consts::PI * (t - lo) / (hi - lo)).sin()
            }
            CoefficientA::Table { points } => table_interp(points, t),
        }
    }

    fn validate(&self, knots: &Knots) -> Result<()> {
        match self {
            CoefficientA::Bumps { amplitudes } => {
                if amplitudes.len() != knots.count() {
                    return Err(Error::InvalidModel(format!(
                        "{} bump amplitude(s) for {} knot interval(s)",
                        amplitudes.len(),
                        knots.count()
                    )));
                }
                if let Some(a) = amplitudes.iter().find(|&&a| !(a > 0.0)) {
                    return Err(Error::InvalidModel(format!(
                        "(H0) requires positive bump amplitudes, got {a}"
                    )));
                }
            }
            CoefficientA::Table { points } => {
                if points.len() < 2 {
                    return Err(Error::InvalidModel("coefficient table too short".into()));
                }
                for w in points.windows(2) {
                    if !(w[1].0 > w[0].0) {
                        return Err(Error::InvalidModel(
                            "coefficient table abscissae must increase strictly".into(),
                        ));
                    }
                }
                let (first, last) = (points[0].0, points.last().unwrap().0);
                if first > 0.0 || last < knots.t_max() {
                    return Err(Error::InvalidModel(
                        "coefficient table must cover [0, t_K]".into(),
                    ));
                }
                for &tk in knots.all() {
                    let v = table_interp(points, tk);
                    if v.abs() > 1e-12 {
                        return Err(Error::InvalidModel(format!(
                            "(H0) requires a(t_k) = 0; table gives a({tk}) = {v:.3e}"
                        )));
                    }
                }
            }
        }
        // Sampled strict positivity inside every bump.
        for k in 1..=knots.count() {
            let (lo, hi) = knots.interval(k);
            for j in 1..CHECK_POINTS {
                let t = lo + (hi - lo) * j as f64 / CHECK_POINTS as f64;
                let v = self.eval(knots, t);
                if !(v > 0.0) {
                    return Err(Error::InvalidModel(format!(
                        "(H0) requires a > 0 inside ({lo}, {hi}); a({t}) = {v:.3e}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn table_interp(points: &[(f64, f64)], t: f64) -> f64 {
    if t <= points[0].0 {
        return points[0].1;
    }
    if t >= points.last().unwrap().0 {
        return points.last().unwrap().1;
    }
    let i = points.partition_point(|&(x, _)| x <= t);
    let (x0, y0) = points[i - 1];
    let (x1, y1) = points[i];
    y0 + (y1 - y0) * (t - x0) / (x1 - x0)
}

/// The nonlinearity `f`, positive on `(0, t★)` with `f(t★) = 0` and
/// `f(t)/t` strictly decreasing.
#[derive(Debug, Clone)]
pub enum NonlinearityF {
    /// The closed-form family `f(t) = γ t (1 - t/t★) / (1 + c t)`.
    Section3 { gamma: f64, c: f64 },
    /// `f(t) = t★ - t`; has `f(0) > 0` and hence `γ = +∞`.
    Affine,
    /// User-sampled table over `[0, t★]` with linear interpolation.
    Table { points: Vec<(f64, f64)> },
}

impl NonlinearityF {
    /// Evaluate the raw `f` (no truncation).
    pub fn eval(&self, t_star: f64, t: f64) -> f64 {
        match self {
            NonlinearityF::Section3 { gamma, c } => {
                gamma * t * (1.0 - t / t_star) / (1.0 + c * t)
            }
            NonlinearityF::Affine => t_star - t,
            NonlinearityF::Table { points } => table_interp(points, t),
        }
    }
}

/// Complete problem data for one run.
///
/// Immutable after construction; every evaluator is pure and reentrant.
#[derive(Debug, Clone)]
pub struct ModelSpec {
    p: f64,
    knots: Knots,
    a: CoefficientA,
    f: NonlinearityF,
    /// Cached `lim_{t→0⁺} f(t)/t`; `+∞` when `f(0) > 0`.
    gamma: f64,
}

impl ModelSpec {
    /// Validate all (H0)/(H1)-shaped structural invariants and cache `γ`.
    pub fn new(p: f64, knots: Knots, a: CoefficientA, f: NonlinearityF) -> Result<Self> {
        if !(p >= 1.0) {
            return Err(Error::InvalidModel(format!("p = {p} must be >= 1")));
        }
        a.validate(&knots)?;
        let t_star = knots.t_star();

        // f > 0 strictly inside (0, t★), f(t★) = 0.
        for j in 1..CHECK_POINTS {
            let t = t_star * j as f64 / CHECK_POINTS as f64;
            let v = f.eval(t_star, t);
            if !(v > 0.0) {
                return Err(Error::InvalidModel(format!(
                    "(H0) requires f > 0 on (0, t_star); f({t}) = {v:.3e}"
                )));
            }
        }
        let f_at_star = f.eval(t_star, t_star);
        if f_at_star.abs() > 1e-12 {
            return Err(Error::InvalidModel(format!(
                "(H0) requires f(t_star) = 0; got {f_at_star:.3e}"
            )));
        }
        let f0 = f.eval(t_star, 0.0);
        if f0 < 0.0 {
            return Err(Error::InvalidModel(format!("f(0) = {f0} is negative")));
        }

        // (H1): f(t)/t strictly decreasing, sampled.
        let mut prev = f64::INFINITY;
        for j in 1..=CHECK_POINTS {
            let t = t_star * j as f64 / (CHECK_POINTS + 1) as f64;
            let q = f.eval(t_star, t) / t;
            if q >= prev {
                return Err(Error::InvalidModel(format!(
                    "(H1) requires f(t)/t strictly decreasing; violated near t = {t}"
                )));
            }
            prev = q;
        }

        let gamma = if f0 > 0.0 {
            f64::INFINITY
        } else {
            let limit = gamma_limit(|t| f.eval(t_star, t), t_star)?;
            if let NonlinearityF::Section3 { gamma, .. } = f {
                let rel = (limit - gamma).abs() / gamma.abs().max(f64::MIN_POSITIVE);
                if rel > 1e-6 {
                    return Err(Error::InvalidModel(format!(
                        "closed-form gamma {gamma} disagrees with the numerical limit \
                         {limit} (relative gap {rel:.3e})"
                    )));
                }
                gamma
            } else {
                limit
            }
        };
        Ok(ModelSpec { p, knots, a, f, gamma })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn knots(&self) -> &Knots {
        &self.knots
    }

    pub fn coefficient(&self) -> &CoefficientA {
        &self.a
    }

    pub fn nonlinearity(&self) -> &NonlinearityF {
        &self.f
    }

    pub fn t_star(&self) -> f64 {
        self.knots.t_star()
    }

    /// `γ = lim_{t→0⁺} f(t)/t`, `+∞` when `f(0) > 0`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Evaluate `a(t)`.
    pub fn a_of(&self, t: f64) -> f64 {
        self.a.eval(&self.knots, t)
    }

    /// The truncation `f★`: `f(0)` below zero, `f` on `(0, t★)`, zero above.
    pub fn eval_fstar(&self, t: f64) -> f64 {
        let t_star = self.t_star();
        if t <= 0.0 {
            self.f.eval(t_star, 0.0)
        } else if t < t_star {
            self.f.eval(t_star, t)
        } else {
            0.0
        }
    }

    /// The antiderivative `F★(s) = ∫₀^s f★`; constant for `s ≥ t★`.
    pub fn eval_big_fstar(&self, t: f64) -> f64 {
        let t_star = self.t_star();
        if t <= 0.0 {
            // f★ is the constant f(0) below zero.
            return self.f.eval(t_star, 0.0) * t;
        }
        let s = t.min(t_star);
        match &self.f {
            NonlinearityF::Affine => t_star * s - 0.5 * s * s,
            NonlinearityF::Section3 { gamma, c } => {
                // t(1 - t/t★)/(1 + ct) = At + B - B/(1 + ct) with
                // A = -1/(c t★), B = (1 + 1/(c t★))/c.
                let a = -1.0 / (c * t_star);
                let b = (1.0 - a) / c;
                gamma * (0.5 * a * s * s + b * s - (b / c) * (1.0 + c * s).ln())
            }
            NonlinearityF::Table { .. } => {
                adaptive_simpson(|x| self.eval_fstar(x), 0.0, s, 1e-10)
            }
        }
    }

    /// Invert `ψ(t) = f★(t)/t` on `(0, t★)` by bisection; `ψ` is strictly
    /// decreasing from `γ` to `0`, so the preimage of any `s ∈ (0, γ)` is
    /// unique.
    pub fn psi_inverse(&self, s: f64) -> Result<f64> {
        if !(s > 0.0 && s < self.gamma) {
            return Err(Error::PsiDomain {
                value: s,
                gamma: self.gamma,
            });
        }
        let t_star = self.t_star();
        let psi = |t: f64| self.eval_fstar(t) / t;
        let mut lo = t_star * 1e-18;
        let mut hi = t_star;
        if psi(lo) <= s {
            return Ok(lo);
        }
        let tol = 1e-12 * t_star;
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if psi(mid) > s {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Maximum of `f` on `[0, t★]` and its location.
    pub fn max_f(&self) -> (f64, f64) {
        let t_star = self.t_star();
        max_scan_golden(|t| self.f.eval(t_star, t), 0.0, t_star, SCAN_POINTS)
    }

    /// Global maximum of `a` on `[0, t_K]`.
    pub fn max_a(&self) -> f64 {
        (1..=self.knots.count())
            .map(|k| {
                let (lo, hi) = self.knots.interval(k);
                max_scan_golden(|t| self.a_of(t), lo, hi, SCAN_POINTS).1
            })
            .fold(0.0_f64, f64::max)
    }
}

/// Numerical limit of `f(t)/t` as `t → 0⁺` by Richardson extrapolation on
/// the dyadic samples `t = t★·2^{-j}`, `j = 10…20`.
pub fn gamma_limit(f: impl Fn(f64) -> f64, t_star: f64) -> Result<f64> {
    let g: Vec<f64> = (10..=20)
        .map(|j| {
            let t = t_star * (2.0_f64).powi(-j);
            f(t) / t
        })
        .collect();
    // Two Richardson stages: eliminate the O(t) then the O(t²) error term.
    let r1: Vec<f64> = g.windows(2).map(|w| 2.0 * w[1] - w[0]).collect();
    let r2: Vec<f64> = r1
        .windows(2)
        .map(|w| (4.0 * w[1] - w[0]) / 3.0)
        .collect();
    let last = *r2.last().unwrap();
    let prev = r2[r2.len() - 2];
    if !last.is_finite() || (last - prev).abs() > 1e-9 * last.abs().max(1.0) {
        return Err(Error::NonConvergence {
            what: "gamma extrapolation".into(),
            iterations: r2.len(),
            residual: (last - prev).abs(),
        });
    }
    Ok(last)
}

/// Maximize a continuous function on `[lo, hi]`: dense scan followed by
/// golden-section refinement around the best sample.  Returns
/// `(argmax, max)`.
pub fn max_scan_golden(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> (f64, f64) {
    assert!(hi > lo && n >= 2);
    let step = (hi - lo) / n as f64;
    let (mut best_i, mut best) = (0usize, f64::NEG_INFINITY);
    for i in 0..=n {
        let v = f(lo + step * i as f64);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let mut a = lo + step * best_i.saturating_sub(1) as f64;
    let mut b = (lo + step * (best_i + 1) as f64).min(hi);
    // Golden-section search for the maximum on the bracketing cell pair.
    let inv_phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if b - a < 1e-14 * (hi - lo).max(1.0) {
            break;
        }
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    let xm = 0.5 * (a + b);
    let fm = f(xm);
    if fm >= best {
        (xm, fm)
    } else {
        (lo + step * best_i as f64, best)
    }
}

/// Adaptive Simpson quadrature with a relative tolerance.
pub fn adaptive_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
        }
    }
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    let scale = whole.abs().max(1e-300);
    recurse(&f, a, b, fa, fm, fb, whole, rel_tol * scale, 50)
}

/// Verdict on one hypothesis: whether it holds and with what margin
/// (`None` means the margin is unbounded, e.g. (H3) with `γ = +∞`).
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub margin: Option<f64>,
    pub detail: String,
}

/// Outcome of checking (H0)–(H4).  Advisory: `solve` refuses to run when a
/// hypothesis fails unless forced.
#[derive(Debug, Clone, Serialize)]
pub struct HypothesisReport {
    pub h0: Verdict,
    pub h1: Verdict,
    pub h2: Verdict,
    pub h3: Verdict,
    pub h4: Verdict,
}

impl HypothesisReport {
    pub fn all_hold(&self) -> bool {
        self.h0.holds && self.h1.holds && self.h2.holds && self.h3.holds && self.h4.holds
    }

    pub fn failing(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (name, v) in [
            ("H0", &self.h0),
            ("H1", &self.h1),
            ("H2", &self.h2),
            ("H3", &self.h3),
            ("H4", &self.h4),
        ] {
            if !v.holds {
                out.push(name);
            }
        }
        out
    }
}

/// Check (H0)–(H4) for a model against the domain constants.
pub fn check_hypotheses(model: &ModelSpec, eig: &EigenPack) -> HypothesisReport {
    let knots = model.knots();
    let t_star = model.t_star();

    // (H0): sign structure of a and f, sampled.
    let mut min_a_inside = f64::INFINITY;
    for k in 1..=knots.count() {
        let (lo, hi) = knots.interval(k);
        for j in 1..CHECK_POINTS {
            let t = lo + (hi - lo) * j as f64 / CHECK_POINTS as f64;
            min_a_inside = min_a_inside.min(model.a_of(t));
        }
    }
    let mut min_f_inside = f64::INFINITY;
    for j in 1..CHECK_POINTS {
        let t = t_star * j as f64 / CHECK_POINTS as f64;
        min_f_inside = min_f_inside.min(model.eval_fstar(t));
    }
    let knot_defect = knots
        .all()
        .iter()
        .map(|&tk| model.a_of(tk).abs())
        .fold(0.0_f64, f64::max);
    let f_star_defect = model.nonlinearity().eval(t_star, t_star).abs();
    let h0_margin = min_a_inside.min(min_f_inside) - knot_defect.max(f_star_defect);
    let h0 = Verdict {
        holds: min_a_inside > 0.0
            && min_f_inside > 0.0
            && knot_defect <= 1e-12
            && f_star_defect <= 1e-12,
        margin: Some(h0_margin),
        detail: format!(
            "min a inside bumps {min_a_inside:.3e}, min f on (0,t*) {min_f_inside:.3e}, \
             |a(t_k)| <= {knot_defect:.3e}, |f(t*)| = {f_star_defect:.3e}"
        ),
    };

    // (H1): strict decrease of f(t)/t, sampled.
    let mut min_drop = f64::INFINITY;
    let mut prev = f64::INFINITY;
    for j in 1..=CHECK_POINTS {
        let t = t_star * j as f64 / (CHECK_POINTS + 1) as f64;
        let q = model.eval_fstar(t) / t;
        if prev.is_finite() {
            min_drop = min_drop.min(prev - q);
        }
        prev = q;
    }
    let h1 = Verdict {
        holds: min_drop > 0.0,
        margin: Some(min_drop),
        detail: format!("minimal sampled decrease of f(t)/t: {min_drop:.3e}"),
    };

    // (H2): t_K < t★^p ∫ e₁^p.
    let rhs = t_star.powf(model.p()) * eig.int_e1_pow_p;
    let h2_margin = rhs - knots.t_max();
    let h2 = Verdict {
        holds: h2_margin > 0.0,
        margin: Some(h2_margin),
        detail: format!(
            "t_K = {} vs t*^p ∫e1^p = {rhs:.6}",
            knots.t_max()
        ),
    };

    // (H3): max a on [0, t_K] < γ/λ₁.
    let max_a = model.max_a();
    let h3 = if model.gamma().is_finite() {
        let bound = model.gamma() / eig.lambda1;
        Verdict {
            holds: max_a < bound,
            margin: Some(bound - max_a),
            detail: format!("max a = {max_a:.6} vs gamma/lambda1 = {bound:.6}"),
        }
    } else {
        Verdict {
            holds: true,
            margin: None,
            detail: "gamma = +inf (f(0) > 0), (H3) holds trivially".into(),
        }
    };

    // (H4): max f · t★^{p-1} < (λ₁^{1/2}/C₁|Ω|^{1/2}) max_{[t_{k-1},t_k]} a(t)t
    // for every k.
    let lhs = model.max_f().1 * t_star.powf(model.p() - 1.0);
    let factor = eig.lambda1.sqrt() / (eig.c1 * eig.volume.sqrt());
    let mut h4_margin = f64::INFINITY;
    let mut worst_k = 1;
    for k in 1..=knots.count() {
        let (lo, hi) = knots.interval(k);
        let (_, max_at) = max_scan_golden(|t| model.a_of(t) * t, lo, hi, SCAN_POINTS);
        let margin = factor * max_at - lhs;
        if margin < h4_margin {
            h4_margin = margin;
            worst_k = k;
        }
    }
    let h4 = Verdict {
        holds: h4_margin > 0.0,
        margin: Some(h4_margin),
        detail: format!(
            "worst bump k = {worst_k}: (lambda1^1/2 / C1 |Omega|^1/2) max a(t)t exceeds \
             max f · t*^(p-1) = {lhs:.6e} by {h4_margin:.6e}"
        ),
    };

    HypothesisReport { h0, h1, h2, h3, h4 }
}

/// Constants derived while constructing the closed-form example.
#[derive(Debug, Clone, Serialize)]
pub struct ExampleParams {
    /// `A = min_k max_{[t_{k-1},t_k]} a(t)·t`.
    pub a_t_min_max: f64,
    /// `M = λ₁^{1/2} A / (C₁ |Ω|^{1/2} t★^{p-1})`.
    pub m: f64,
    pub eta: f64,
    pub c: f64,
}

/// Construct the closed-form nonlinearity `f(t) = γ t (1 - t/t★)/(1 + c t)`
/// for given knots and coefficient, choosing `η` as 1.01× its lower bound
/// and `c = η²γ - (γ/t★ + 1)η`.  The result is guaranteed to pass
/// `check_hypotheses`, otherwise an error names the blocking hypothesis.
pub fn generate_example(
    knots: Knots,
    a: CoefficientA,
    gamma: f64,
    eig: &EigenPack,
    p: f64,
) -> Result<(ModelSpec, ExampleParams)> {
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(Error::InvalidModel(format!(
            "example generator needs a finite positive gamma, got {gamma}"
        )));
    }
    let t_star = knots.t_star();
    let a_t_min_max = (1..=knots.count())
        .map(|k| {
            let (lo, hi) = knots.interval(k);
            max_scan_golden(|t| a.eval(&knots, t) * t, lo, hi, SCAN_POINTS).1
        })
        .fold(f64::INFINITY, f64::min);
    let m = eig.lambda1.sqrt() * a_t_min_max / (eig.c1 * eig.volume.sqrt() * t_star.powf(p - 1.0));
    let eta = 1.01 * (gamma / m).max(t_star / m).max(1.0 / t_star + 1.0 / gamma);
    let c = eta * eta * gamma - (gamma / t_star + 1.0) * eta;
    debug_assert!(c > 0.0, "eta above its lower bound forces c > 0");

    let model = ModelSpec::new(p, knots, a, NonlinearityF::Section3 { gamma, c })?;
    let report = check_hypotheses(&model, eig);
    if !report.all_hold() {
        return Err(Error::HypothesisVeto {
            failing: report.failing().join(", "),
        });
    }
    Ok((
        model,
        ExampleParams {
            a_t_min_max,
            m,
            eta,
            c,
        },
    ))
}
