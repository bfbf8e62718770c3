//! Coefficient functions, the series shapes built from them, lattice sums and
//! the closed-form integrand catalog.
//!
//! Every series here has the Ramanujan shape `Σ φ(r)·(−y)^r / r!` (or the
//! factorial-free variant) for some argument `y` derived from `x`:
//!
//! | kind               | series                              |
//! |--------------------|-------------------------------------|
//! | `Classic`          | Σ φ(n)(−x)ⁿ/n!                      |
//! | `HardyNoFactorial` | Σ φ(n)(−x)ⁿ                         |
//! | `KForm`            | Σ φ(r)(−x^k/k)^r/r!                 |
//! | `PKForm`           | Σ φ(r)(−x^k/p)^r/r!                 |
//! | `PowerK`           | Σ φ(r)(−x^k)^r                      |
//! | `EvenPowerK`       | Σ φ(2r)(−x^{2k})^r                  |
//! | `F1Cosine`         | Σ φ(2n)(−x²)ⁿ/(2n)!                 |
//! | `F2NoFact`         | Σ φ(n)(−x)ⁿ                         |
//! | `F3EvenNoFact`     | Σ φ(2n)(−x²)ⁿ                       |
//! | `F4RNoFact`        | Σ φ(rn)(−x^r)ⁿ                      |
//! | `DoubleXT`         | Σ φ(n)(−xt)ⁿ/n!                     |
//!
//! Non-integer `k` uses the sign `(−1)^r`, not `(−1)^{kr}`.

mod catalog;
mod lattice;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use catalog::{closed_integrand, closed_integrand2, integrand_ids, Params};
pub use lattice::{check_lattice, lattice_sum, LatticeMode, LatticeSpec, LatticeValue, Truncation};

/// Hard cap on series terms.
pub const MAX_SERIES_TERMS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("series did not converge after {0} terms")]
    NoConvergence(usize),
    #[error("argument {0} outside the radius of convergence")]
    RadiusExceeded(f64),
    #[error("lattice sum diverges (decay exponent {0} too small)")]
    DivergentLattice(f64),
    #[error("unknown integrand `{0}`")]
    UnknownIntegrand(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("coefficient function vanishes at 0")]
    ZeroLeading,
    #[error("lattice tail integral unavailable for `{0}`")]
    MissingTail(String),
}

pub type Result<T> = std::result::Result<T, SeriesError>;

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
pub type RealFn2 = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// Hardy-type growth bound `|φ(v+iw)| < C·e^{Pv + A|w|}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Growth {
    pub p: f64,
    pub a: f64,
    pub c: f64,
}

#[derive(Clone)]
pub struct PhiSpec {
    pub id: String,
    eval: RealFn,
    pub valid_interval: (f64, f64),
    pub growth: Option<Growth>,
    pub note: String,
}

impl PhiSpec {
    pub fn new<F>(id: &str, eval: F, valid_interval: (f64, f64)) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let v0 = eval(0.0);
        if v0 == 0.0 || !v0.is_finite() {
            return Err(SeriesError::ZeroLeading);
        }
        Ok(Self { id: id.into(), eval: Arc::new(eval), valid_interval, growth: None, note: String::new() })
    }

    pub fn with_growth(mut self, g: Growth) -> Self {
        self.growth = Some(g);
        self
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = note.into();
        self
    }

    /// φ ≡ 1.
    pub fn one() -> Self {
        Self::new("one", |_| 1.0, (f64::NEG_INFINITY, f64::INFINITY)).expect("φ(0)=1")
    }

    #[inline]
    pub fn eval(&self, u: f64) -> f64 {
        (self.eval)(u)
    }
}

impl fmt::Debug for PhiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PhiSpec").field("id", &self.id).field("valid_interval", &self.valid_interval).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SeriesKind {
    Classic,
    HardyNoFactorial,
    KForm,
    PKForm,
    PowerK,
    EvenPowerK,
    F1Cosine,
    F2NoFact,
    F3EvenNoFact,
    F4RNoFact,
    DoubleXT,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesForm {
    pub kind: SeriesKind,
    pub k: f64,
    pub p: f64,
    pub r_step: u32,
}

impl SeriesForm {
    pub fn new(kind: SeriesKind) -> Self {
        Self { kind, k: 1.0, p: 1.0, r_step: 1 }
    }

    pub fn k(mut self, k: f64) -> Self {
        self.k = k;
        self
    }

    pub fn p(mut self, p: f64) -> Self {
        self.p = p;
        self
    }

    pub fn r_step(mut self, r: u32) -> Self {
        self.r_step = r;
        self
    }

    fn has_factorial(&self) -> bool {
        matches!(
            self.kind,
            SeriesKind::Classic | SeriesKind::KForm | SeriesKind::PKForm | SeriesKind::F1Cosine | SeriesKind::DoubleXT
        )
    }

    /// The argument `y` such that the series is `Σ c_r (−y)^r`, plus the
    /// index map `r ↦ u` at which φ is sampled.
    fn reduce(&self, x: f64) -> (f64, f64) {
        match self.kind {
            SeriesKind::Classic | SeriesKind::HardyNoFactorial | SeriesKind::F2NoFact | SeriesKind::DoubleXT => {
                (x, 1.0)
            }
            SeriesKind::KForm => (x.powf(self.k) / self.k, 1.0),
            SeriesKind::PKForm => (x.powf(self.k) / self.p, 1.0),
            SeriesKind::PowerK => (x.powf(self.k), 1.0),
            SeriesKind::EvenPowerK => (x.powf(2.0 * self.k), 2.0),
            SeriesKind::F1Cosine | SeriesKind::F3EvenNoFact => (x * x, 2.0),
            SeriesKind::F4RNoFact => {
                let r = self.r_step as f64;
                (x.powf(r), r)
            }
        }
    }
}

/// Value of a truncated series with an estimate of the truncation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub trunc_err: f64,
    pub terms: usize,
}

/// Sums `Σ term(r)` for r = 0, 1, …; `term` returns the signed term.
///
/// Stops once three consecutive terms fall below `tol·|sum|` with
/// non-increasing magnitude. The error estimate is the next term for
/// alternating tails and a geometric bound otherwise.
pub fn sum_terms<F: FnMut(usize) -> f64>(mut term: F, tol: f64) -> Result<SeriesValue> {
    let mut sum = 0.0;
    let mut prev_abs = f64::INFINITY;
    let mut small = 0;
    for r in 0..MAX_SERIES_TERMS {
        let t = term(r);
        if !t.is_finite() {
            return Err(SeriesError::NoConvergence(r));
        }
        sum += t;
        let a = t.abs();
        if a <= tol * sum.abs() && a <= prev_abs {
            small += 1;
        } else {
            small = 0;
        }
        if small >= 3 || (a == 0.0 && r > 0 && prev_abs == 0.0) {
            let next = term(r + 1);
            let alternating = next * t < 0.0;
            let ratio = if a > 0.0 { (next.abs() / a).min(0.99) } else { 0.0 };
            let trunc_err = if alternating { next.abs() } else { next.abs() / (1.0 - ratio) };
            return Ok(SeriesValue { value: sum, trunc_err, terms: r + 1 });
        }
        prev_abs = a;
    }
    Err(SeriesError::NoConvergence(MAX_SERIES_TERMS))
}

/// Generic evaluator for every single-variable form.
pub fn eval_series(phi: &PhiSpec, form: &SeriesForm, x: f64, tol: f64) -> Result<SeriesValue> {
    let (y, step) = form.reduce(x);
    if y == 0.0 {
        return Ok(SeriesValue { value: phi.eval(0.0), trunc_err: 0.0, terms: 1 });
    }
    let fact = form.has_factorial();
    if !fact && y.abs() >= 1.0 {
        return Err(SeriesError::RadiusExceeded(x));
    }
    // F1Cosine divides by (2n)!, so the running factor advances two steps.
    let cosine = form.kind == SeriesKind::F1Cosine;
    let mut pow = 1.0;
    sum_terms(
        |r| {
            if r > 0 {
                let rf = r as f64;
                pow *= -y;
                if fact {
                    if cosine {
                        pow /= (2.0 * rf - 1.0) * (2.0 * rf);
                    } else {
                        pow /= rf;
                    }
                }
            }
            phi.eval(step * r as f64) * pow
        },
        tol,
    )
}

/// Σ φ(n)(−x)ⁿ/n!.
pub fn eval_classic(phi: &PhiSpec, x: f64, tol: f64) -> Result<f64> {
    eval_series(phi, &SeriesForm::new(SeriesKind::Classic), x, tol).map(|v| v.value)
}

/// Σ φ(r)(−x^k/k)^r/r!.
pub fn eval_k_form(phi: &PhiSpec, k: f64, x: f64, tol: f64) -> Result<f64> {
    eval_series(phi, &SeriesForm::new(SeriesKind::KForm).k(k), x, tol).map(|v| v.value)
}

/// Σ φ(r)(−x^k/p)^r/r!.
pub fn eval_pk_form(phi: &PhiSpec, p: f64, k: f64, x: f64, tol: f64) -> Result<f64> {
    eval_series(phi, &SeriesForm::new(SeriesKind::PKForm).k(k).p(p), x, tol).map(|v| v.value)
}

/// Factorial-free forms; the raw series has radius 1 in its reduced argument.
pub fn eval_nofact(phi: &PhiSpec, form: &SeriesForm, x: f64, tol: f64) -> Result<f64> {
    eval_series(phi, form, x, tol).map(|v| v.value)
}

/// Σ φ(n)(−xt)ⁿ/n!.
pub fn eval_double_xt(phi: &PhiSpec, x: f64, t: f64, tol: f64) -> Result<f64> {
    eval_series(phi, &SeriesForm::new(SeriesKind::DoubleXT), x * t, tol).map(|v| v.value)
}

/// Defining series attached to a catalog integrand, used by the
/// registration self-test.
#[derive(Debug, Clone)]
pub struct DefiningSeries {
    pub phi: PhiSpec,
    pub form: SeriesForm,
    /// Radius of convergence in the reduced argument.
    pub radius: f64,
}

#[derive(Clone)]
pub struct ClosedIntegrand {
    pub id: String,
    eval: RealFn,
    /// `f(x) = O(x^{−decay})` at ∞; `INFINITY` for exponential decay.
    pub decay_exponent: f64,
    /// `f(x) = O(x^{singular})` at 0⁺.
    pub singular_exponent: f64,
    /// `(K, X₀)` with `|f(x)| ≤ K·x^{−decay}` for `x ≥ X₀`.
    pub decay_bound: Option<(f64, f64)>,
    pub series: Option<DefiningSeries>,
    taylor: Option<(Arc<dyn Fn(usize) -> f64 + Send + Sync>, f64)>,
    tail_integral: Option<RealFn>,
}

impl ClosedIntegrand {
    pub fn new<F>(id: &str, eval: F, decay_exponent: f64, singular_exponent: f64) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            id: id.into(),
            eval: Arc::new(eval),
            decay_exponent,
            singular_exponent,
            decay_bound: None,
            series: None,
            taylor: None,
            tail_integral: None,
        }
    }

    pub fn with_series(mut self, phi: PhiSpec, form: SeriesForm, radius: f64) -> Self {
        self.series = Some(DefiningSeries { phi, form, radius });
        self
    }

    pub fn with_decay_bound(mut self, k: f64, x0: f64) -> Self {
        self.decay_bound = Some((k, x0));
        self
    }

    /// Taylor coefficients `c_n` at 0 with radius of convergence.
    pub fn with_taylor<F>(mut self, coeff: F, radius: f64) -> Self
    where
        F: Fn(usize) -> f64 + Send + Sync + 'static,
    {
        self.taylor = Some((Arc::new(coeff), radius));
        self
    }

    /// `L ↦ ∫_L^∞ f(u) du`.
    pub fn with_tail_integral<F>(mut self, tail: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        self.tail_integral = Some(Arc::new(tail));
        self
    }

    /// Values that overflow far out in a decaying tail are flushed to zero.
    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        let v = (self.eval)(x);
        if !v.is_finite() && x > 1.0 && self.decay_exponent > 0.0 {
            return 0.0;
        }
        v
    }

    pub fn taylor_coeff(&self, n: usize) -> Option<f64> {
        self.taylor.as_ref().map(|(c, _)| c(n))
    }

    pub fn taylor_radius(&self) -> Option<f64> {
        self.taylor.as_ref().map(|(_, r)| *r)
    }

    pub fn tail_integral(&self, l: f64) -> Option<f64> {
        self.tail_integral.as_ref().map(|t| t(l))
    }

    /// Largest relative deviation from the defining series over 50
    /// log-spaced points in (0, 0.5], skipping points beyond half the
    /// series' radius.
    pub fn self_test(&self) -> Option<f64> {
        let ds = self.series.as_ref()?;
        let mut worst: f64 = 0.0;
        for i in 0..50 {
            let x = 0.5 * 10f64.powf(-6.0 * i as f64 / 49.0);
            let (y, _) = ds.form.reduce(x);
            if y.abs() >= 0.5 * ds.radius || y.abs() > 40.0 {
                continue;
            }
            let Ok(sv) = eval_series(&ds.phi, &ds.form, x, 1e-16) else {
                return Some(f64::INFINITY);
            };
            let c = self.eval(x);
            let d = (c - sv.value).abs() / c.abs().max(f64::MIN_POSITIVE);
            worst = worst.max(d);
        }
        Some(worst)
    }
}

impl fmt::Debug for ClosedIntegrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClosedIntegrand")
            .field("id", &self.id)
            .field("decay_exponent", &self.decay_exponent)
            .field("singular_exponent", &self.singular_exponent)
            .finish()
    }
}

/// Two-variable integrand `f(x, t) = h(c·x^q·t)` for the double integrals.
#[derive(Clone)]
pub struct ClosedIntegrand2 {
    pub id: String,
    pub base: ClosedIntegrand,
    pub q: f64,
    pub c: f64,
    pub series: Option<PhiSpec>,
}

impl ClosedIntegrand2 {
    pub fn new(id: &str, base: ClosedIntegrand, q: f64, c: f64) -> Self {
        Self { id: id.into(), base, q, c, series: None }
    }

    #[inline]
    pub fn eval(&self, x: f64, t: f64) -> f64 {
        self.base.eval(self.c * x.powf(self.q) * t)
    }

    /// Natural x-scale at fixed t, where the argument of `h` is 1.
    pub fn x_scale(&self, t: f64) -> f64 {
        (self.c * t).powf(-1.0 / self.q)
    }

    pub fn decay_exponent_x(&self) -> f64 {
        self.q * self.base.decay_exponent
    }

    pub fn singular_exponent_x(&self) -> f64 {
        self.q * self.base.singular_exponent
    }
}

impl fmt::Debug for ClosedIntegrand2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClosedIntegrand2").field("id", &self.id).field("q", &self.q).field("c", &self.c).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_recip() -> PhiSpec {
        PhiSpec::new("recip", |u| 1.0 / (u + 1.0), (-1.0, f64::INFINITY)).unwrap()
    }

    #[test]
    fn classic_examples() {
        let one = PhiSpec::one();
        assert!((eval_classic(&one, 1.0, 1e-16).unwrap() - 0.36787944117144233).abs() < 1e-15);
        assert!((eval_classic(&phi_recip(), 1.0, 1e-16).unwrap() - 0.6321205588285577).abs() < 1e-15);
        assert_eq!(eval_classic(&phi_recip(), 0.0, 1e-16).unwrap(), 1.0);
    }

    #[test]
    fn k_and_pk_forms() {
        let one = PhiSpec::one();
        assert!((eval_k_form(&one, 2.0, 1.0, 1e-16).unwrap() - 0.6065306597126334).abs() < 1e-15);
        assert!((eval_pk_form(&one, 3.0, 1.0, 3.0, 1e-16).unwrap() - 0.36787944117144233).abs() < 1e-15);
        assert_eq!(eval_k_form(&one, 2.0, 0.0, 1e-16).unwrap(), 1.0);
        for &x in &[0.1, 0.7, 2.3] {
            let a = eval_classic(&phi_recip(), x, 1e-16).unwrap();
            assert_eq!(eval_k_form(&phi_recip(), 1.0, x, 1e-16).unwrap(), a);
            assert_eq!(eval_pk_form(&phi_recip(), 1.0, 1.0, x, 1e-16).unwrap(), a);
            let b = eval_k_form(&phi_recip(), 1.7, x, 1e-16).unwrap();
            assert_eq!(eval_pk_form(&phi_recip(), 1.7, 1.7, x, 1e-16).unwrap(), b);
        }
    }

    #[test]
    fn nofact_examples() {
        let one = PhiSpec::one();
        let v = eval_nofact(&one, &SeriesForm::new(SeriesKind::PowerK).k(2.0), 0.5, 1e-15).unwrap();
        assert!((v - 0.8).abs() < 1e-13);
        let v = eval_nofact(&one, &SeriesForm::new(SeriesKind::F2NoFact), 0.5, 1e-15).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-13);
        let v = eval_nofact(&one, &SeriesForm::new(SeriesKind::F4RNoFact).r_step(3), 0.5, 1e-15).unwrap();
        assert!((v - 1.0 / 1.125).abs() < 1e-13);
        assert_eq!(
            eval_nofact(&one, &SeriesForm::new(SeriesKind::F2NoFact), 1.5, 1e-15),
            Err(SeriesError::RadiusExceeded(1.5))
        );
    }

    #[test]
    fn cosine_form_is_cos() {
        let one = PhiSpec::one();
        let v = eval_series(&one, &SeriesForm::new(SeriesKind::F1Cosine), 1.3, 1e-16).unwrap();
        assert!((v.value - 1.3f64.cos()).abs() < 1e-15);
    }

    #[test]
    fn zero_leading_rejected() {
        assert_eq!(PhiSpec::new("z", |u| u, (0.0, 1.0)).err(), Some(SeriesError::ZeroLeading));
    }

    #[test]
    fn alternating_estimate_bounds_error() {
        let one = PhiSpec::one();
        for &x in &[0.2, 1.0, 3.0] {
            let sv = eval_series(&one, &SeriesForm::new(SeriesKind::Classic), x, 1e-8).unwrap();
            let err = (sv.value - (-x).exp()).abs();
            assert!(err <= sv.trunc_err + 1e-16, "x={x} err={err} est={}", sv.trunc_err);
        }
    }
}
