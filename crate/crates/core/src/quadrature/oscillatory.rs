//! ∫₀^∞ sinⁿ(t)·t^{−σ}·G(t) dt for slowly varying G.
//!
//! The head [0, π] goes to tanh-sinh. Past π the integrand is cut into
//! panels on which it alternates in sign: length π for odd n, and for
//! even n one panel length per 2-adic class of the frequencies in the
//! cosine expansion of sinⁿ. The alternating panel sums are accelerated by
//! repeated averaging of partial sums.

use std::f64::consts::PI;

use super::tanh_sinh::tanh_sinh_unit;
use super::{finish, gauss_legendre, QuadConfig, QuadError, QuadResult, Result};

const PANEL_ORDER: usize = 32;

pub(crate) fn check_phi_domain(n: u32, sigma: f64) -> Result<()> {
    if n == 0 {
        return Err(QuadError::DomainError("n = 0 diverges for every s".into()));
    }
    if !(sigma > 0.0 && sigma < n as f64 + 1.0) {
        return Err(QuadError::DomainError(format!("s = {sigma} outside (0, {})", n + 1)));
    }
    if n % 2 == 0 && sigma <= 1.0 {
        return Err(QuadError::DomainError(format!("even n = {n} needs s > 1, got {sigma}")));
    }
    Ok(())
}

/// Φ(n, s) = ∫₀^∞ sinⁿt / tˢ dt.
pub fn integrate_oscillatory(n: u32, s: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    cfg.validate()?;
    check_phi_domain(n, s)?;
    let mean_tail = PI.powf(1.0 - s) / (s - 1.0);
    finish(engine(n, s, &|_| 1.0, Some(mean_tail), cfg), cfg)
}

/// ∫₀^∞ sinⁿ(t)·t^{−σ}·G(t) dt with G bounded and slowly varying.
pub fn integrate_sin_power<G: Fn(f64) -> f64>(n: u32, sigma: f64, g: G, cfg: &QuadConfig) -> Result<QuadResult> {
    cfg.validate()?;
    check_phi_domain(n, sigma)?;
    finish(engine(n, sigma, &g, None, cfg), cfg)
}

fn ln_binom(n: u32, k: u32) -> f64 {
    (1..=k).map(|i| ((n - k + i) as f64 / i as f64).ln()).sum()
}

fn engine(n: u32, sigma: f64, g: &dyn Fn(f64) -> f64, mean_tail: Option<f64>, cfg: &QuadConfig) -> QuadResult {
    let nf = n as f64;
    let ts = cfg.tanh_sinh();
    let head = tanh_sinh_unit(
        |x, xc| {
            let sn = (PI * x.min(xc)).sin();
            if sn == 0.0 {
                return 0.0;
            }
            let t = PI * x;
            PI * (nf * sn.ln() - sigma * t.ln()).exp() * g(t)
        },
        &ts,
    );
    let mut total = QuadResult { value: head.value, est_abs_err: head.est_abs_err, evals: head.evals, converged: head.converged };
    let kernel = |t: f64| t.powf(-sigma) * g(t);

    if n % 2 == 1 {
        // sinⁿ(π(k+1)+τ) = (−1)^{k+1} sinⁿτ
        let w = |tau: f64| tau.sin().powi(n as i32);
        let scale = total.value.abs();
        let r = alternating_panels(&w, PI, PI, &kernel, scale, cfg);
        total = total.combine(r.scale(-1.0));
        return total;
    }

    // sin^{2M}t = 4^{−M}[C(2M,M) + 2Σ_j (−1)^j C(2M,M−j) cos 2jt]
    let m = n / 2;
    let ln4m = nf * 2f64.ln();
    let a0 = (ln_binom(n, m) - ln4m).exp();
    let mean = match mean_tail {
        Some(v) => QuadResult { value: a0 * v, est_abs_err: 0.0, evals: 0, converged: true },
        None => {
            // t = π/u
            let o = tanh_sinh_unit(|u, _| PI.powf(1.0 - sigma) * u.powf(sigma - 2.0) * g(PI / u), &ts);
            QuadResult { value: a0 * o.value, est_abs_err: a0 * o.est_abs_err, evals: o.evals, converged: o.converged }
        }
    };
    total = total.combine(mean);
    let scale = total.value.abs();
    let coeff: Vec<f64> = (1..=m)
        .map(|j| {
            let sgn = if j % 2 == 0 { 1.0 } else { -1.0 };
            2.0 * sgn * (ln_binom(n, m - j) - ln4m).exp()
        })
        .collect();
    let mut a = 0;
    while (1u32 << a) <= m {
        let group: Vec<(f64, f64)> = (1..=m)
            .filter(|&j| j.trailing_zeros() == a)
            .map(|j| (2.0 * j as f64, coeff[(j - 1) as usize]))
            .collect();
        let w = |tau: f64| group.iter().map(|&(fr, c)| c * (fr * tau).cos()).sum::<f64>();
        let len = PI / (1u64 << (a + 1)) as f64;
        let r = alternating_panels(&w, PI, len, &kernel, scale, cfg);
        total = total.combine(r);
        a += 1;
    }
    total
}

/// Σ_k (−1)^k ∫₀^L w(τ)·kernel(start + kL + τ) dτ.
fn alternating_panels(
    w: &dyn Fn(f64) -> f64,
    start: f64,
    len: f64,
    kernel: &dyn Fn(f64) -> f64,
    scale: f64,
    cfg: &QuadConfig,
) -> QuadResult {
    let first = |order: usize| -> f64 {
        gauss_legendre(order).iter().map(|&(x, wt)| wt * len * w(x * len) * kernel(start + x * len)).sum()
    };
    let (p32, p64) = (first(PANEL_ORDER), first(2 * PANEL_ORDER));
    let diff = (p64 - p32).abs();
    let target0 = cfg.abs_floor.max(0.25 * cfg.rel_tol * scale);
    // The doubled rule converges spectrally, so its error is far below `diff`.
    let (order, panel_err) = if diff <= 0.1 * target0 {
        (PANEL_ORDER, diff)
    } else {
        (2 * PANEL_ORDER, diff * (diff / p64.abs().max(f64::MIN_POSITIVE)).min(1.0))
    };
    let wts: Vec<(f64, f64)> =
        gauss_legendre(order).iter().map(|&(x, wt)| (x * len, wt * len * w(x * len))).collect();
    let panel = |k: usize| {
        let base = start + k as f64 * len;
        wts.iter().map(|&(tau, c)| c * kernel(base + tau)).sum::<f64>()
    };
    let mut evals = 3 * PANEL_ORDER;

    let depth = cfg.accel_order.max(2);
    let mut terms: Vec<f64> = Vec::new();
    let mut count = 2 * depth + 8;
    let mut best = (0.0, f64::INFINITY);
    loop {
        while terms.len() < count {
            let k = terms.len();
            let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
            terms.push(sgn * panel(k));
            evals += order;
        }
        let (value, err) = averaged(&terms, depth);
        if err < best.1 {
            best = (value, err);
        }
        let target = cfg.abs_floor.max(0.25 * cfg.rel_tol * scale.max(value.abs()));
        if err <= target || 2 * count > cfg.osc_max_intervals {
            let (value, err) = if err <= target { (value, err) } else { best };
            return QuadResult {
                value,
                est_abs_err: err + panel_err,
                evals,
                converged: err <= target,
            };
        }
        count *= 2;
    }
}

/// Repeated averaging of partial sums; returns the depth-`d` estimate and
/// its distance from the depth-`d−1` estimate.
fn averaged(terms: &[f64], d: usize) -> (f64, f64) {
    let n = terms.len();
    let mut partial = Vec::with_capacity(n);
    let mut s = 0.0;
    for &t in terms {
        s += t;
        partial.push(s);
    }
    let mut row: Vec<f64> = partial[n - 1 - d..].to_vec();
    let mut prev = row[row.len() - 1];
    for _ in 0..d {
        prev = row[row.len() - 1];
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
    }
    (row[0], (row[0] - prev).abs())
}
