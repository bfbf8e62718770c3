//! Quadrature engines: Mellin integrals on (0, ∞), the sine-power
//! oscillatory integrals and the iterated double integrals built from them.

mod oscillatory;
pub mod tanh_sinh;

use std::cell::Cell;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::{ClosedIntegrand, ClosedIntegrand2};
use tanh_sinh::{tanh_sinh_unit, TanhSinhOptions};

pub use oscillatory::{integrate_oscillatory, integrate_sin_power};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_floor: f64,
    pub max_levels: usize,
    pub osc_max_intervals: usize,
    pub accel_order: usize,
    pub split_point: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_floor: 1e-14,
            max_levels: 12,
            osc_max_intervals: 2000,
            accel_order: 12,
            split_point: 1.0,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || self.max_levels < 3 || !(self.split_point > 0.0) {
            return Err(QuadError::DomainError(format!("invalid quadrature config {self:?}")));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    fn tanh_sinh(&self) -> TanhSinhOptions {
        TanhSinhOptions { rel_tol: self.rel_tol, abs_tol: self.abs_floor, max_levels: self.max_levels, min_levels: 3 }
    }

    fn accepts(&self, value: f64, err: f64) -> bool {
        err <= self.abs_floor.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub est_abs_err: f64,
    pub evals: usize,
    pub converged: bool,
}

impl QuadResult {
    fn combine(self, other: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            est_abs_err: self.est_abs_err + other.est_abs_err,
            evals: self.evals + other.evals,
            converged: self.converged && other.converged,
        }
    }

    fn scale(self, c: f64) -> QuadResult {
        QuadResult { value: c * self.value, est_abs_err: c.abs() * self.est_abs_err, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("integral diverges: {0}")]
    DivergentIntegral(String),
    #[error("no convergence (value {:e}, estimated error {:e})", .0.value, .0.est_abs_err)]
    NoConvergence(QuadResult),
    #[error("domain error: {0}")]
    DomainError(String),
}

pub type Result<T> = std::result::Result<T, QuadError>;

fn finish(r: QuadResult, cfg: &QuadConfig) -> Result<QuadResult> {
    let converged = r.converged && r.value.is_finite() && cfg.accepts(r.value, r.est_abs_err);
    let r = QuadResult { converged, ..r };
    if converged {
        Ok(r)
    } else {
        Err(QuadError::NoConvergence(r))
    }
}

/// ∫₀¹ x^α g(x) dx.
pub fn integrate_01_singular<G: Fn(f64) -> f64>(g: G, alpha: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    if !(alpha > -1.0) {
        return Err(QuadError::DivergentIntegral(format!("x^{alpha} is not integrable at 0")));
    }
    let o = tanh_sinh_unit(|x, _| x.powf(alpha) * g(x), &cfg.tanh_sinh());
    finish(QuadResult { value: o.value, est_abs_err: o.est_abs_err, evals: o.evals, converged: o.converged }, cfg)
}

/// Checks the Mellin strip `−singular < s < decay`.
pub fn mellin_strip_check(s: f64, singular: f64, decay: f64) -> Result<()> {
    if !(s + singular > 0.0) {
        return Err(QuadError::DivergentIntegral(format!("s = {s} diverges at 0 (singular exponent {singular})")));
    }
    if !(s < decay) {
        return Err(QuadError::DivergentIntegral(format!("s = {s} diverges at ∞ (decay exponent {decay})")));
    }
    Ok(())
}

/// ∫₀^∞ x^{s−1} f(x) dx.
pub fn mellin_integral(f: &ClosedIntegrand, s: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    cfg.validate()?;
    mellin_strip_check(s, f.singular_exponent, f.decay_exponent)?;
    finish(mellin_raw(|x| f.eval(x), s, cfg.split_point, cfg), cfg)
}

/// Two panels: `c^s∫₀¹ y^{s−1} f(cy) dy` and, with x = c/u,
/// `c^s∫₀¹ u^{−s−1} f(c/u) du`.
pub(crate) fn mellin_raw<F: Fn(f64) -> f64>(f: F, s: f64, split: f64, cfg: &QuadConfig) -> QuadResult {
    mellin_panels(f, s, split, cfg).scale(split.powf(s))
}

/// The two panels of [`mellin_raw`] without the `c^s` factor.
fn mellin_panels<F: Fn(f64) -> f64>(f: F, s: f64, split: f64, cfg: &QuadConfig) -> QuadResult {
    let opts = cfg.tanh_sinh();
    let near = tanh_sinh_unit(
        |y, _| {
            let v = f(split * y);
            // Overflow at the extreme nodes of an integrable singularity.
            if !v.is_finite() && (y < 1e-100 || split * y < 1e-100) {
                return 0.0;
            }
            y.powf(s - 1.0) * v
        },
        &opts,
    );
    let far = tanh_sinh_unit(
        |u, _| {
            let v = f(split / u);
            if v == 0.0 {
                return 0.0;
            }
            v.signum() * (v.abs().ln() - (s + 1.0) * u.ln()).exp()
        },
        &opts,
    );
    let a = QuadResult { value: near.value, est_abs_err: near.est_abs_err, evals: near.evals, converged: near.converged };
    let b = QuadResult { value: far.value, est_abs_err: far.est_abs_err, evals: far.evals, converged: far.converged };
    a.combine(b)
}

/// ∫₀^∞ ∫₀^∞ x^{s−1} sinⁿ(t) f₂(x, t) dx dt.
///
/// For f₂ = h(c·x^q·t) the inner integral I(t) behaves like t^{−s/q}, so the
/// outer integral runs with σ = s/q and the bounded factor t^σ·I(t). The
/// inner integral runs at a tenth of the outer tolerance with its split
/// point at the integrand's natural scale for each t.
pub fn double_mellin_sin(f2: &ClosedIntegrand2, s: f64, n: u32, cfg: &QuadConfig) -> Result<QuadResult> {
    cfg.validate()?;
    let sigma = s / f2.q;
    oscillatory::check_phi_domain(n, sigma)?;
    mellin_strip_check(s, f2.singular_exponent_x(), f2.decay_exponent_x())?;
    let inner_cfg = QuadConfig { rel_tol: cfg.rel_tol / 10.0, ..*cfg };
    let inner_err = Cell::new(0.0f64);
    let inner_bad = Cell::new(false);
    let inner_evals = Cell::new(0usize);
    let scaled = |t: f64| {
        let split = cfg.split_point * f2.x_scale(t);
        let r = mellin_panels(|x| f2.eval(x, t), s, split, &inner_cfg);
        if !r.converged {
            inner_bad.set(true);
        }
        inner_evals.set(inner_evals.get() + r.evals);
        inner_err.set(inner_err.get().max(r.est_abs_err / r.value.abs().max(f64::MIN_POSITIVE)));
        (sigma * t.ln() + s * split.ln()).exp() * r.value
    };
    let outer = match integrate_sin_power(n, sigma, scaled, cfg) {
        Ok(r) | Err(QuadError::NoConvergence(r)) => r,
        Err(e) => return Err(e),
    };
    let r = QuadResult {
        est_abs_err: outer.est_abs_err + inner_err.get() * outer.value.abs(),
        evals: outer.evals + inner_evals.get(),
        converged: outer.converged && !inner_bad.get(),
        ..outer
    };
    finish(r, cfg)
}

/// Gauss–Legendre nodes and weights on [0, 1].
pub(crate) fn gauss_legendre(n: usize) -> &'static [(f64, f64)] {
    static RULES: OnceLock<Vec<Vec<(f64, f64)>>> = OnceLock::new();
    let rules = RULES.get_or_init(|| GL_ORDERS.iter().map(|&m| legendre_rule(m)).collect());
    let i = GL_ORDERS.iter().position(|&m| m == n).expect("unsupported Gauss–Legendre order");
    &rules[i]
}

pub(crate) const GL_ORDERS: [usize; 3] = [16, 32, 64];

fn legendre_rule(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        out.push((0.5 * (1.0 - z), 0.5 * w));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}
