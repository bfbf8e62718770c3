//! Factory for the closed-form integrands.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::OnceLock;

use super::{ClosedIntegrand, ClosedIntegrand2, PhiSpec, Result, SeriesError, SeriesForm, SeriesKind};
use crate::specfun::{self, EULER_GAMMA};

pub type Params = BTreeMap<String, f64>;

const IDS: &[&str] = &[
    "exp",
    "bose",
    "exp_k",
    "exp_pk",
    "geometric_k",
    "geometric_even_k",
    "log1p_over_x",
    "hyp2f1_k",
    "touchard_k",
    "mobius_theta_k",
    "binomial_k",
    "frac_exp",
    "loggamma_comb",
    "digamma_comb",
    "inv_binomial",
    "sqrt_binomial",
    "sinh_asinh",
    "cosh_asinh",
    "cos_kernel",
    "f2_geometric",
    "f3_invsqrt",
    "f4_root",
    "cos_atan",
    "sin_atan",
];

pub fn integrand_ids() -> &'static [&'static str] {
    IDS
}

fn get(p: &Params, key: &str, default: f64) -> f64 {
    p.get(key).copied().unwrap_or(default)
}

fn positive(p: &Params, key: &str, default: f64) -> Result<f64> {
    let v = get(p, key, default);
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(SeriesError::BadParams(format!("{key} must be positive, got {v}")))
    }
}

fn gam(x: f64) -> f64 {
    specfun::gamma(x).unwrap_or(f64::NAN)
}

fn lgam(x: f64) -> f64 {
    specfun::ln_gamma(x).unwrap_or(f64::NAN)
}

fn phi(id: &str, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Result<PhiSpec> {
    PhiSpec::new(id, f, (0.0, f64::INFINITY))
}

/// Γ(a+u)/Γ(a); a product for integer u.
fn rising(a: f64, u: f64) -> f64 {
    if u >= 0.0 && u.fract() == 0.0 && u < 1e4 {
        specfun::pochhammer(a, u as u32)
    } else {
        gam(a + u) / gam(a)
    }
}

fn sign(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// ζ(n) for n = 0..=130, with ζ(1) unused.
fn zeta_int(n: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        (0..=130).map(|n| if n < 2 { f64::NAN } else { specfun::zeta(n as f64).unwrap_or(1.0) }).collect()
    });
    if n < t.len() {
        t[n]
    } else {
        1.0
    }
}

/// Builds a catalog integrand and runs the registration self-test.
pub fn closed_integrand(id: &str, params: &Params) -> Result<ClosedIntegrand> {
    let f = build(id, params)?;
    if let Some(dev) = f.self_test() {
        if !(dev <= 1e-10) {
            return Err(SeriesError::BadParams(format!("`{id}` deviates from its series by {dev:e}")));
        }
    }
    Ok(f)
}

/// `(x, t) ↦ h(c·x^q·t)` with `h = closed_integrand(id, params)`,
/// `q = params.q` (default 1) and `c = params.xt_scale` (default 1).
pub fn closed_integrand2(id: &str, params: &Params) -> Result<ClosedIntegrand2> {
    let base = closed_integrand(id, params)?;
    let q = positive(params, "q", 1.0)?;
    let c = positive(params, "xt_scale", 1.0)?;
    Ok(ClosedIntegrand2::new(&format!("{id}_xt"), base, q, c))
}

fn build(id: &str, p: &Params) -> Result<ClosedIntegrand> {
    let inf = f64::INFINITY;
    Ok(match id {
        "exp" => {
            let a = positive(p, "a", 1.0)?;
            ClosedIntegrand::new(id, move |x| (-a * x).exp(), inf, 0.0)
                .with_series(phi("a^n", move |u| a.powf(u))?, SeriesForm::new(SeriesKind::Classic), inf)
                .with_taylor(move |n| (-a).powi(n as i32) / gam(n as f64 + 1.0), inf)
                .with_tail_integral(move |l| (-a * l).exp() / a)
        }
        "bose" => {
            // 1/(e^{a·x^k} − 1)
            let a = positive(p, "a", 1.0)?;
            let k = positive(p, "k", 1.0)?;
            ClosedIntegrand::new(id, move |x| 1.0 / (a * x.powf(k)).exp_m1(), inf, -k)
        }
        "exp_k" => {
            let a = positive(p, "a", 1.0)?;
            let k = positive(p, "k", 1.0)?;
            ClosedIntegrand::new(id, move |x| (-a * x.powf(k) / k).exp(), inf, 0.0)
                .with_series(phi("a^r", move |u| a.powf(u))?, SeriesForm::new(SeriesKind::KForm).k(k), inf)
        }
        "exp_pk" => {
            let a = positive(p, "a", 1.0)?;
            let k = positive(p, "k", 1.0)?;
            let pp = positive(p, "p", 1.0)?;
            ClosedIntegrand::new(id, move |x| (-a * x.powf(k) / pp).exp(), inf, 0.0).with_series(
                phi("a^r", move |u| a.powf(u))?,
                SeriesForm::new(SeriesKind::PKForm).k(k).p(pp),
                inf,
            )
        }
        "geometric_k" => {
            let a = positive(p, "a", 1.0)?;
            let k = positive(p, "k", 1.0)?;
            ClosedIntegrand::new(id, move |x| 1.0 / (1.0 + a * x.powf(k)), k, 0.0).with_series(
                phi("a^r", move |u| a.powf(u))?,
                SeriesForm::new(SeriesKind::PowerK).k(k),
                1.0 / a,
            )
        }
        "geometric_even_k" => {
            let a = positive(p, "a", 1.0)?;
            let k = positive(p, "k", 1.0)?;
            ClosedIntegrand::new(id, move |x| 1.0 / (1.0 + a * a * x.powf(2.0 * k)), 2.0 * k, 0.0).with_series(
                phi("a^u", move |u| a.powf(u))?,
                SeriesForm::new(SeriesKind::EvenPowerK).k(k),
                1.0 / (a * a),
            )
        }
        "log1p_over_x" => ClosedIntegrand::new(id, |x| if x == 0.0 { 1.0 } else { x.ln_1p() / x }, 1.0, 0.0)
            .with_series(phi("1/(n+1)", |u| 1.0 / (u + 1.0))?, SeriesForm::new(SeriesKind::HardyNoFactorial), 1.0),
        "hyp2f1_k" => {
            let (a, b, c) = (positive(p, "alpha", 2.0)?, positive(p, "beta", 3.0)?, positive(p, "gamma", 4.0)?);
            let k = positive(p, "k", 1.0)?;
            ClosedIntegrand::new(
                id,
                move |x| specfun::hyp2f1(a, b, c, -x.powf(k) / k).unwrap_or(f64::NAN),
                k * a.min(b),
                0.0,
            )
            .with_series(
                phi("(α)_r(β)_r/(γ)_r", move |u| rising(a, u) * rising(b, u) / rising(c, u))?,
                SeriesForm::new(SeriesKind::KForm).k(k),
                1.0,
            )
        }
        "touchard_k" => {
            let m = get(p, "m", 2.0);
            if !(m >= 0.0 && m.fract() == 0.0 && m <= 30.0) {
                return Err(SeriesError::BadParams(format!("m must be an integer in [0, 30], got {m}")));
            }
            let k = positive(p, "k", 1.0)?;
            let st = stirling2_row(m as usize + 1);
            ClosedIntegrand::new(
                id,
                move |x| {
                    let y = x.powf(k) / k;
                    // Σ_{j≥1} S(m+1, j)(−y)^{j−1}
                    let poly = st.iter().skip(1).rev().fold(0.0, |acc, &s| acc * -y + s);
                    (-y).exp() * poly
                },
                inf,
                0.0,
            )
            .with_series(phi("(1+r)^m", move |u| (1.0 + u).powf(m))?, SeriesForm::new(SeriesKind::KForm).k(k), inf)
        }
        "mobius_theta_k" => {
            let k = positive(p, "k", 1.0)?;
            ClosedIntegrand::new(id, move |x| mobius_theta(x.powf(k) / k), 0.5 * k, 0.0).with_series(
                phi("1/ζ(2r+2)", |u| 1.0 / specfun::zeta(2.0 * u + 2.0).unwrap_or(f64::NAN))?,
                SeriesForm::new(SeriesKind::KForm).k(k),
                inf,
            )
        }
        "binomial_k" => {
            let k = positive(p, "k", 1.0)?;
            let m = positive(p, "m", 1.0)?;
            ClosedIntegrand::new(id, move |x| (1.0 + x.powf(k) / k).powf(-m), k * m, 0.0).with_series(
                phi("(m)_r", move |u| rising(m, u))?,
                SeriesForm::new(SeriesKind::KForm).k(k),
                1.0,
            )
        }
        "frac_exp" => {
            // c^r·e^{c(a − x^q/k)}, the r-th derivative of e^{ct} at t = a − x^q/k
            let c = positive(p, "c", 1.0)?;
            let a = get(p, "a", 0.0);
            let r = get(p, "r", 0.0);
            let k = positive(p, "k", 1.0)?;
            let q = positive(p, "q", k)?;
            let pre = c.powf(r) * (c * a).exp();
            ClosedIntegrand::new(id, move |x| pre * (-c * x.powf(q) / k).exp(), inf, 0.0).with_series(
                phi("c^{r+n}e^{ca}", move |u| pre * c.powf(u))?,
                SeriesForm::new(SeriesKind::PKForm).k(q).p(k),
                inf,
            )
        }
        "loggamma_comb" => {
            let pp = positive(p, "p", 1.0)?;
            let k = positive(p, "k", 1.0)?;
            ClosedIntegrand::new(id, move |x| loggamma_comb(x.powf(k) / pp), k, 0.0).with_series(
                phi("Γ(r+1)ζ(r+2)/(r+2)", |u| gam(u + 1.0) * zeta_real(u + 2.0) / (u + 2.0))?,
                SeriesForm::new(SeriesKind::PKForm).k(k).p(pp),
                1.0,
            )
        }
        "digamma_comb" => {
            let pp = positive(p, "p", 1.0)?;
            let k = positive(p, "k", 1.0)?;
            ClosedIntegrand::new(id, move |x| digamma_comb(x.powf(k) / pp), k, 0.0).with_series(
                phi("Γ(r+1)ζ(r+2)", |u| gam(u + 1.0) * zeta_real(u + 2.0))?,
                SeriesForm::new(SeriesKind::PKForm).k(k).p(pp),
                1.0,
            )
        }
        "inv_binomial" => {
            let al = positive(p, "alpha", 1.0)?;
            let v = positive(p, "v", 3.0)?;
            let mut f = ClosedIntegrand::new(id, move |x| (1.0 + al * x).powf(-v), v, 0.0)
                .with_series(phi("α^n(v)_n", move |u| al.powf(u) * rising(v, u))?, SeriesForm::new(SeriesKind::Classic), 1.0 / al)
                .with_taylor(move |n| (-al).powi(n as i32) * rising(v, n as f64) / gam(n as f64 + 1.0), 1.0 / al)
                .with_decay_bound(al.powf(-v), 1.0 / al);
            if v > 1.0 {
                f = f.with_tail_integral(move |l| (1.0 + al * l).powf(1.0 - v) / (al * (v - 1.0)));
            }
            f
        }
        "sqrt_binomial" => {
            let mu = positive(p, "mu", 6.0)?;
            let coef = move |u: f64| mu * (lgam(mu + 2.0 * u) - lgam(mu + u + 1.0)).exp();
            let mut f = ClosedIntegrand::new(id, move |x| (2.0 / (1.0 + (1.0 + 4.0 * x).sqrt())).powf(mu), 0.5 * mu, 0.0)
                .with_series(phi("μΓ(μ+2n)/Γ(μ+n+1)", coef)?, SeriesForm::new(SeriesKind::Classic), 0.25)
                .with_taylor(move |n| sign(n) * mu * (lgam(mu + 2.0 * n as f64) - lgam(mu + n as f64 + 1.0) - lgam(n as f64 + 1.0)).exp(), 0.25)
                .with_decay_bound(1.0, 1.0);
            if mu > 2.0 {
                f = f.with_tail_integral(move |l| {
                    let w1 = 1.0 + (1.0 + 4.0 * l).sqrt();
                    2f64.powf(mu - 1.0) * (w1.powf(2.0 - mu) / (mu - 2.0) - w1.powf(1.0 - mu) / (mu - 1.0))
                });
            }
            f
        }
        "sinh_asinh" => {
            let v = get(p, "v", 0.5);
            ClosedIntegrand::new(id, move |x| (v * x.asinh()).sinh() / (1.0 + x * x).sqrt(), 1.0 - v.abs(), 1.0)
        }
        "cosh_asinh" => {
            let v = get(p, "v", 0.5);
            ClosedIntegrand::new(id, move |x| (v * x.asinh()).cosh() / (1.0 + x * x).sqrt(), 1.0 - v.abs(), 0.0)
        }
        "cos_kernel" => ClosedIntegrand::new(id, f64::cos, 0.0, 0.0).with_series(
            PhiSpec::one(),
            SeriesForm::new(SeriesKind::F1Cosine),
            inf,
        ),
        "f2_geometric" => ClosedIntegrand::new(id, |x| 1.0 / (1.0 + x), 1.0, 0.0).with_series(
            PhiSpec::one(),
            SeriesForm::new(SeriesKind::F2NoFact),
            1.0,
        ),
        "f3_invsqrt" => ClosedIntegrand::new(id, |x| 1.0 / (1.0 + x * x).sqrt(), 1.0, 0.0).with_series(
            phi("Γ((1+u)/2)/(√πΓ(1+u/2))", |u| gam(0.5 * (1.0 + u)) / (PI.sqrt() * gam(1.0 + 0.5 * u)))?,
            SeriesForm::new(SeriesKind::F3EvenNoFact),
            1.0,
        ),
        "f4_root" => {
            let r = get(p, "r", 3.0);
            if !(r >= 1.0 && r.fract() == 0.0) {
                return Err(SeriesError::BadParams(format!("r must be a natural number, got {r}")));
            }
            let g1 = gam(1.0 / r);
            ClosedIntegrand::new(id, move |x| (1.0 + x.powf(r)).powf(-1.0 / r), 1.0, 0.0).with_series(
                phi("Γ((1+u)/r)/(Γ(1/r)Γ(1+u/r))", move |u| gam((1.0 + u) / r) / (g1 * gam(1.0 + u / r)))?,
                SeriesForm::new(SeriesKind::F4RNoFact).r_step(r as u32),
                1.0,
            )
        }
        "cos_atan" => {
            let v = positive(p, "v", 1.0)?;
            let gv = gam(v);
            ClosedIntegrand::new(id, move |u| (v * u.sqrt().atan()).cos() * (1.0 + u).powf(-0.5 * v), 0.5 * v, 0.0)
                .with_series(
                    phi("Γ(v+2n)n!/(Γ(v)(2n)!)", move |u| gam(v + 2.0 * u) * gam(1.0 + u) / (gv * gam(1.0 + 2.0 * u)))?,
                    SeriesForm::new(SeriesKind::Classic),
                    1.0,
                )
        }
        "sin_atan" => {
            let v = positive(p, "v", 1.0)?;
            let g2v = gam(2.0 * v);
            ClosedIntegrand::new(
                id,
                move |u| {
                    if u == 0.0 {
                        2.0 * v
                    } else {
                        (2.0 * v * u.sqrt().atan()).sin() / (u.sqrt() * (1.0 + u).powf(v))
                    }
                },
                v + 0.5,
                0.0,
            )
            .with_series(
                phi("n!Γ(2v+2n+1)/(Γ(2v)Γ(2n+2))", move |u| {
                    gam(1.0 + u) * gam(2.0 * v + 2.0 * u + 1.0) / (g2v * gam(2.0 * u + 2.0))
                })?,
                SeriesForm::new(SeriesKind::Classic),
                1.0,
            )
        }
        other => return Err(SeriesError::UnknownIntegrand(other.into())),
    })
}

fn zeta_real(s: f64) -> f64 {
    if s.fract() == 0.0 && s >= 2.0 {
        zeta_int(s as usize)
    } else {
        specfun::zeta(s).unwrap_or(f64::NAN)
    }
}

/// Row n of the Stirling numbers of the second kind, `S(n, 0..=n)`.
fn stirling2_row(n: usize) -> Vec<f64> {
    let mut row = vec![1.0];
    for i in 1..=n {
        let mut next = vec![0.0; i + 1];
        for j in 1..=i {
            let a = if j < row.len() { j as f64 * row[j] } else { 0.0 };
            next[j] = a + row[j - 1];
        }
        row = next;
    }
    row
}

/// (ln Γ(1+u) + γu)/u².
fn loggamma_comb(u: f64) -> f64 {
    if u < 0.5 {
        // Σ_{r≥0} ζ(r+2)(−u)^r/(r+2)
        let mut sum = 0.0;
        let mut pw = 1.0;
        for r in 0..120 {
            let t = zeta_int(r + 2) * pw / (r + 2) as f64;
            sum += t;
            if t.abs() < 1e-18 * sum.abs() {
                break;
            }
            pw *= -u;
        }
        sum
    } else if u < 1e15 {
        (specfun::ln_gamma(1.0 + u).unwrap_or(f64::NAN) + EULER_GAMMA * u) / (u * u)
    } else {
        // Stirling: ln Γ(1+u) ≈ (u+½)ln u − u + ½ln 2π
        let lg = (1.0 + 0.5 / u) * u.ln() - 1.0 + 0.5 * (2.0 * PI).ln() / u;
        (lg + EULER_GAMMA) / u
    }
}

/// (ψ(1+u) + γ)/u.
fn digamma_comb(u: f64) -> f64 {
    if u < 0.5 {
        // Σ_{r≥0} ζ(r+2)(−u)^r
        let mut sum = 0.0;
        let mut pw = 1.0;
        for r in 0..120 {
            let t = zeta_int(r + 2) * pw;
            sum += t;
            if t.abs() < 1e-18 * sum.abs() {
                break;
            }
            pw *= -u;
        }
        sum
    } else {
        (specfun::digamma(1.0 + u).unwrap_or(f64::NAN) + EULER_GAMMA) / u
    }
}

const SIEVE_LIMIT: usize = 2_000_000;
const SPLIT_MAX: usize = 20_000;
const TAIL_TERMS: usize = 16;

struct MobiusTables {
    mu: Vec<i8>,
    /// `tails[N][j-1] = Σ_{n>N} μ(n) n^{−2j−2}` for j = 1..=TAIL_TERMS.
    tails: Vec<[f64; TAIL_TERMS]>,
}

fn mobius_tables() -> &'static MobiusTables {
    static T: OnceLock<MobiusTables> = OnceLock::new();
    T.get_or_init(|| {
        let mut mu = vec![1i8; SIEVE_LIMIT + 1];
        let mut composite = vec![false; SIEVE_LIMIT + 1];
        mu[0] = 0;
        for i in 2..=SIEVE_LIMIT {
            if composite[i] {
                continue;
            }
            for j in (i..=SIEVE_LIMIT).step_by(i) {
                if j > i {
                    composite[j] = true;
                }
                mu[j] = -mu[j];
            }
            if let Some(sq) = i.checked_mul(i) {
                for j in (sq..=SIEVE_LIMIT).step_by(sq) {
                    mu[j] = 0;
                }
            }
        }
        let mut acc = [0.0; TAIL_TERMS];
        let mut tails = vec![[0.0; TAIL_TERMS]; SPLIT_MAX + 1];
        for n in (1..=SIEVE_LIMIT).rev() {
            if n <= SPLIT_MAX {
                tails[n] = acc;
            }
            if mu[n] != 0 {
                let q = 1.0 / (n as f64 * n as f64);
                let mut pw = q * q * mu[n] as f64;
                for a in acc.iter_mut() {
                    *a += pw;
                    pw *= q;
                }
            }
        }
        tails[0] = acc;
        MobiusTables { mu, tails }
    })
}

/// Σ_{n≥1} μ(n)/n²·e^{−y/n²} = Σ_r (−y)^r/(r!·ζ(2r+2)).
fn mobius_theta(y: f64) -> f64 {
    if y <= 1.0 {
        let mut sum = 0.0;
        let mut pw = 1.0;
        for r in 0..60 {
            let t = pw / zeta_int(2 * r + 2);
            sum += t;
            if t.abs() < 1e-18 {
                break;
            }
            pw *= -y / (r + 1) as f64;
        }
        return sum;
    }
    let split_max = SPLIT_MAX as f64;
    if y > 0.25 * split_max * split_max {
        return 0.0;
    }
    let t = mobius_tables();
    let n_split = (2.0 * y.sqrt()).ceil().max(64.0) as usize;
    let mut head = 0.0;
    let mut partial = 0.0;
    for n in 1..=n_split {
        let m = t.mu[n];
        if m != 0 {
            let q = 1.0 / (n as f64 * n as f64);
            head += m as f64 * q * (-y * q).exp();
            partial += m as f64 * q;
        }
    }
    // Σ_{n>N} μ(n)n^{−2}e^{−y/n²} = Σ_j (−y)^j/j!·Σ_{n>N} μ(n)n^{−2j−2}
    let mut tail = 6.0 / (PI * PI) - partial;
    let mut pw = 1.0;
    for (j, tj) in t.tails[n_split].iter().enumerate() {
        pw *= -y / (j + 1) as f64;
        tail += pw * tj;
    }
    head + tail
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, f64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn catalog_examples() {
        let f = closed_integrand("bose", &Params::new()).unwrap();
        assert!((f.eval(1.0) - 0.5819767068693265).abs() < 1e-15);
        let f = closed_integrand("binomial_k", &params(&[("k", 2.0), ("m", 3.0)])).unwrap();
        assert!((f.eval(1.0) - 8.0 / 27.0).abs() < 1e-15);
        let f = closed_integrand("loggamma_comb", &params(&[("p", 1.0), ("k", 1.0)])).unwrap();
        assert!((f.eval(1e-12) - PI * PI / 12.0).abs() < 1e-11);
    }

    #[test]
    fn unknown_and_bad() {
        assert!(matches!(closed_integrand("nope", &Params::new()), Err(SeriesError::UnknownIntegrand(_))));
        assert!(matches!(
            closed_integrand("touchard_k", &params(&[("m", 1.5)])),
            Err(SeriesError::BadParams(_))
        ));
        assert!(matches!(closed_integrand("binomial_k", &params(&[("k", -1.0)])), Err(SeriesError::BadParams(_))));
    }

    #[test]
    fn every_integrand_passes_self_test() {
        let sets: &[(&str, &[(&str, f64)])] = &[
            ("exp", &[("a", 2.0)]),
            ("exp_k", &[("k", 2.5)]),
            ("exp_pk", &[("p", 3.0), ("k", 2.0)]),
            ("geometric_k", &[("k", 3.0)]),
            ("geometric_even_k", &[("k", 1.5), ("a", 0.7)]),
            ("log1p_over_x", &[]),
            ("hyp2f1_k", &[("k", 2.0)]),
            ("touchard_k", &[("m", 3.0), ("k", 2.0)]),
            ("mobius_theta_k", &[("k", 2.0)]),
            ("binomial_k", &[("k", 2.0), ("m", 3.0)]),
            ("frac_exp", &[("c", 2.0), ("r", 1.5), ("k", 2.0)]),
            ("frac_exp", &[("c", 2.0), ("r", 1.5), ("k", 2.0), ("q", 4.0)]),
            ("loggamma_comb", &[("p", 3.0), ("k", 2.0)]),
            ("digamma_comb", &[("p", 3.0), ("k", 2.0)]),
            ("inv_binomial", &[("alpha", 1.0), ("v", 3.0)]),
            ("sqrt_binomial", &[("mu", 6.0)]),
            ("cos_kernel", &[]),
            ("f2_geometric", &[]),
            ("f3_invsqrt", &[]),
            ("f4_root", &[("r", 3.0)]),
            ("cos_atan", &[("v", 2.5)]),
            ("sin_atan", &[("v", 1.5)]),
        ];
        for (id, kv) in sets {
            let f = build(id, &params(kv)).unwrap();
            let dev = f.self_test().expect("has series");
            assert!(dev <= 1e-10, "{id}: {dev:e}");
        }
    }

    #[test]
    fn touchard_matches_series_at_moderate_y() {
        let f = closed_integrand("touchard_k", &params(&[("m", 2.0), ("k", 1.0)])).unwrap();
        let y: f64 = 3.0;
        let want = (-y).exp() * (1.0 - 3.0 * y + y * y);
        assert!((f.eval(y) - want).abs() < 1e-15);
    }

    #[test]
    fn mobius_theta_branches_agree() {
        // power series is still accurate at y = 2, which takes the sieve branch
        let y: f64 = 2.0;
        let mut sum = 0.0;
        let mut pw = 1.0;
        for r in 0..60 {
            sum += pw / zeta_int(2 * r + 2);
            pw *= -y / (r + 1) as f64;
        }
        assert!((mobius_theta(y) - sum).abs() < 1e-15, "{} {}", mobius_theta(y), sum);
        assert!((mobius_theta(1.0 + 1e-12) - mobius_theta(1.0)).abs() < 1e-12);
    }

    #[test]
    fn stirling_rows() {
        assert_eq!(stirling2_row(3), vec![0.0, 1.0, 3.0, 1.0]);
        assert_eq!(stirling2_row(4), vec![0.0, 1.0, 7.0, 6.0, 1.0]);
    }
}
