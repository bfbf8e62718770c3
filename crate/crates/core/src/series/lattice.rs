//! Lattice sums `Σ_m f(mx)`, theta sums `Σ_n f(πn²x)` and their product.

use std::f64::consts::PI;

use super::{ClosedIntegrand, Result, SeriesError};
use crate::quadrature::tanh_sinh::{tanh_sinh_unit, TanhSinhOptions};
use crate::specfun::BERNOULLI_EVEN;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum LatticeMode {
    None,
    /// Σ_{m≥1} f(mx)
    LinearM,
    /// Σ_{n≥1} f(πn²x)
    ThetaN2,
    /// Σ_{n,m≥1} f(mπn²x)
    DoubleMN,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Truncation {
    pub tail_tol: f64,
    pub max_terms: usize,
}

impl Default for Truncation {
    fn default() -> Self {
        Self { tail_tol: 1e-14, max_terms: 1_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LatticeSpec {
    pub mode: LatticeMode,
    pub truncation: Truncation,
}

impl LatticeSpec {
    pub fn new(mode: LatticeMode) -> Self {
        Self { mode, truncation: Truncation::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeValue {
    pub value: f64,
    pub tail_est: f64,
    pub terms: usize,
    pub truncated: bool,
}

/// Checks that the lattice converges for `f`.
pub fn check_lattice(f: &ClosedIntegrand, mode: LatticeMode) -> Result<()> {
    let d = f.decay_exponent;
    match mode {
        LatticeMode::None => Ok(()),
        LatticeMode::LinearM | LatticeMode::DoubleMN if d <= 1.0 => Err(SeriesError::DivergentLattice(d)),
        LatticeMode::ThetaN2 if d <= 0.5 => Err(SeriesError::DivergentLattice(d)),
        _ => Ok(()),
    }
}

pub fn lattice_sum(f: &ClosedIntegrand, spec: &LatticeSpec, x: f64) -> Result<LatticeValue> {
    check_lattice(f, spec.mode)?;
    let tr = &spec.truncation;
    match spec.mode {
        LatticeMode::None => Ok(LatticeValue { value: f.eval(x), tail_est: 0.0, terms: 1, truncated: false }),
        LatticeMode::LinearM => linear(f, x, tr),
        LatticeMode::ThetaN2 => theta(|y| Ok(f.eval(y)), x, tr),
        LatticeMode::DoubleMN => theta(|y| linear(f, y, tr).map(|v| v.value), x, tr),
    }
}

/// Terms summed directly before the remainder of a theta sum is replaced by
/// its midpoint Euler–Maclaurin tail.
const THETA_DIRECT: usize = 2000;

fn theta<G: FnMut(f64) -> Result<f64>>(mut g: G, x: f64, tr: &Truncation) -> Result<LatticeValue> {
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    let cut = if tr.max_terms > THETA_DIRECT { THETA_DIRECT } else { tr.max_terms };
    for n in 1..=cut {
        let nf = n as f64;
        let t = g(PI * nf * nf * x)?;
        sum += t;
        if n >= 2 && t.abs() <= tr.tail_tol * sum.abs() && t.abs() <= prev {
            return Ok(LatticeValue { value: sum, tail_est: t.abs(), terms: n, truncated: false });
        }
        prev = t.abs();
    }
    if cut < tr.max_terms {
        return theta_tail(g, x, sum, cut);
    }
    Ok(LatticeValue { value: sum, tail_est: prev, terms: tr.max_terms, truncated: true })
}

/// Σ_{n>N} g(n) ≈ ∫_{N+½}^∞ g + g'(N+½)/24 with g(n) = G(πn²x).
fn theta_tail<G: FnMut(f64) -> Result<f64>>(mut g: G, x: f64, head: f64, n: usize) -> Result<LatticeValue> {
    let a = n as f64 + 0.5;
    let mut err = None;
    let mut at = |m: f64| match g(PI * m * m * x) {
        Ok(v) => v,
        Err(e) => {
            err.get_or_insert(e);
            0.0
        }
    };
    let opts = TanhSinhOptions { rel_tol: 1e-13, abs_tol: 0.0, max_levels: 8, min_levels: 3 };
    let int = tanh_sinh_unit(
        |u, _| {
            let v = at(a / u) * a / (u * u);
            if v.is_finite() { v } else { 0.0 }
        },
        &opts,
    );
    let h = 1e-3 * a;
    let dg = (at(a + h) - at(a - h)) / (2.0 * h);
    if let Some(e) = err {
        return Err(e);
    }
    let value = head + int.value + dg / 24.0;
    let tail_est = int.est_abs_err + dg.abs() / (a * a);
    Ok(LatticeValue { value, tail_est, terms: n, truncated: !int.converged })
}

fn linear(f: &ClosedIntegrand, x: f64, tr: &Truncation) -> Result<LatticeValue> {
    if let (Some(rho), Some(i0)) = (f.taylor_radius(), f.tail_integral(0.0)) {
        if x <= rho.min(2.0 * PI) / 8.0 {
            if let Some(v) = small_x(f, i0, x, tr) {
                return Ok(v);
            }
        }
    }
    if f.decay_exponent.is_infinite() {
        return geometric(f, x, tr);
    }
    let d = f.decay_exponent;
    let x0 = f.decay_bound.map_or(1.0, |(_, x0)| x0);
    if f.tail_integral(1.0).is_none() {
        return Err(SeriesError::MissingTail(f.id.clone()));
    }
    let em3 = 7.0 / 5760.0 * d * (d + 1.0) * (d + 2.0);
    let mut sum = 0.0;
    for m in 1..=tr.max_terms {
        sum += f.eval(m as f64 * x);
        let mh = m as f64 + 0.5;
        let l = mh * x;
        if m < 2 || l < x0 {
            continue;
        }
        let fl = f.eval(l);
        let est = em3 * fl.abs() / (mh * mh * mh);
        if est <= tr.tail_tol * sum.abs() || m == tr.max_terms {
            let h = 1e-4 * l;
            let df = (f.eval(l + h) - f.eval(l - h)) / (2.0 * h);
            let tail = f.tail_integral(l).unwrap_or(0.0) / x + x / 24.0 * df;
            return Ok(LatticeValue {
                value: sum + tail,
                tail_est: est,
                terms: m,
                truncated: est > tr.tail_tol * sum.abs(),
            });
        }
    }
    unreachable!("loop returns at m == max_terms")
}

fn geometric(f: &ClosedIntegrand, x: f64, tr: &Truncation) -> Result<LatticeValue> {
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    for m in 1..=tr.max_terms {
        let t = f.eval(m as f64 * x);
        sum += t;
        if t == 0.0 {
            return Ok(LatticeValue { value: sum, tail_est: 0.0, terms: m, truncated: false });
        }
        let r = t.abs() / prev;
        if m >= 2 && r < 1.0 {
            let tail = t.abs() * r / (1.0 - r);
            if tail <= tr.tail_tol * sum.abs() {
                return Ok(LatticeValue { value: sum, tail_est: tail, terms: m, truncated: false });
            }
        }
        prev = t.abs();
    }
    Ok(LatticeValue { value: sum, tail_est: prev, terms: tr.max_terms, truncated: true })
}

/// Euler–Maclaurin expansion about x = 0:
/// F(x) = I₀/x − f(0)/2 − Σ_k B_{2k}/(2k)·c_{2k−1}·x^{2k−1}.
fn small_x(f: &ClosedIntegrand, i0: f64, x: f64, tr: &Truncation) -> Option<LatticeValue> {
    let c = |n| f.taylor_coeff(n).unwrap_or(0.0);
    let mut value = i0 / x - 0.5 * c(0);
    let mut last = 0.0;
    let mut xp = x;
    let mut terms = 0;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let k2 = 2 * (j + 1);
        let t = b / k2 as f64 * c(k2 - 1) * xp;
        value -= t;
        last = t.abs();
        terms = j + 1;
        if last <= tr.tail_tol * value.abs() * 1e-2 {
            break;
        }
        xp *= x * x;
    }
    let truncated = last > tr.tail_tol * value.abs();
    (!truncated && value.is_finite()).then_some(LatticeValue { value, tail_est: last, terms, truncated })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp_kernel() -> ClosedIntegrand {
        ClosedIntegrand::new("exp", |u| (-u).exp(), f64::INFINITY, 0.0)
    }

    fn cubic() -> ClosedIntegrand {
        ClosedIntegrand::new("cubic", |u| (1.0 + u).powi(-3), 3.0, 0.0)
            .with_taylor(|n| (if n % 2 == 0 { 1.0 } else { -1.0 }) * ((n + 1) * (n + 2)) as f64 / 2.0, 1.0)
            .with_tail_integral(|l| 0.5 * (1.0 + l).powi(-2))
    }

    #[test]
    fn bose_from_exponential() {
        let spec = LatticeSpec::new(LatticeMode::LinearM);
        let v = lattice_sum(&exp_kernel(), &spec, 2f64.ln()).unwrap();
        assert!((v.value - 1.0).abs() < 1e-13, "{v:?}");
        for i in 0..40 {
            let x = 0.1 * (200f64).powf(i as f64 / 39.0);
            let v = lattice_sum(&exp_kernel(), &spec, x).unwrap().value;
            let want = 1.0 / x.exp_m1();
            assert!((v - want).abs() <= 1e-12 * want, "x={x}: {v} vs {want}");
        }
    }

    #[test]
    fn cubic_lattice_is_zeta3_minus_one() {
        let spec = LatticeSpec { mode: LatticeMode::LinearM, truncation: Truncation { tail_tol: 1e-12, max_terms: 1_000_000 } };
        let v = lattice_sum(&cubic(), &spec, 1.0).unwrap();
        assert!((v.value - 0.20205690315959429).abs() < 1e-12, "{v:?}");
    }

    #[test]
    fn cubic_lattice_regimes_agree() {
        let spec = LatticeSpec::new(LatticeMode::LinearM);
        // both sides of the small-x switch at x = 1/8
        let f = cubic();
        let a = lattice_sum(&f, &spec, 0.1249).unwrap().value;
        let plain = ClosedIntegrand::new("c", |u| (1.0 + u).powi(-3), 3.0, 0.0)
            .with_tail_integral(|l| 0.5 * (1.0 + l).powi(-2));
        let b = lattice_sum(&plain, &spec, 0.1249).unwrap().value;
        assert!((a - b).abs() < 1e-11 * a, "{a} {b}");
    }

    #[test]
    fn theta_leading_term() {
        let spec = LatticeSpec::new(LatticeMode::ThetaN2);
        let v = lattice_sum(&exp_kernel(), &spec, 3.0).unwrap().value;
        let lead = (-PI * 3.0).exp();
        assert!((v - lead).abs() / v < 1e-10);
    }

    #[test]
    fn theta_tail_matches_jacobi_inversion() {
        // Σ_{n≥1} e^{−πn²x} = (x^{−1/2}(1 + 2Σ e^{−πn²/x}) − 1)/2
        let spec = LatticeSpec::new(LatticeMode::ThetaN2);
        for x in [1e-4, 1e-7, 1e-10] {
            let v = lattice_sum(&exp_kernel(), &spec, x).unwrap();
            let want = 0.5 * (x.powf(-0.5) - 1.0);
            assert!((v.value - want).abs() <= 1e-12 * want, "x={x}: {v:?} vs {want}");
        }
    }

    #[test]
    fn underflowing_terms_stop_the_sum() {
        let spec = LatticeSpec::new(LatticeMode::LinearM);
        let v = lattice_sum(&exp_kernel(), &spec, 2000.0).unwrap();
        assert_eq!((v.value, v.terms), (0.0, 1));
    }

    #[test]
    fn slow_decay_diverges() {
        let f = ClosedIntegrand::new("g", |u| 1.0 / (1.0 + u), 1.0, 0.0);
        let spec = LatticeSpec::new(LatticeMode::LinearM);
        assert_eq!(lattice_sum(&f, &spec, 1.0), Err(SeriesError::DivergentLattice(1.0)));
    }

    #[test]
    fn partial_sums_monotone_for_positive_kernels() {
        let f = exp_kernel();
        let mut prev = 0.0;
        for n in 1..20 {
            let spec = LatticeSpec { mode: LatticeMode::ThetaN2, truncation: Truncation { tail_tol: 0.0, max_terms: n } };
            let v = lattice_sum(&f, &spec, 0.01).unwrap().value;
            assert!(v >= prev);
            prev = v;
        }
    }
}
