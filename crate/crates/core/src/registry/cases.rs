//! Case definitions.

use std::f64::consts::PI;

use super::{CaseClass, Constraint, Expr, IdentityCase, IntegrandSpec, Lhs, ParamRange, Result, Rhs};
use crate::phi_ns::{in_strip as phi_in_strip, phi_ns, phi_ns_closed, phi_ns_recursive};
use crate::quadrature::QuadConfig;
use crate::series::{LatticeMode, Params};
use crate::specfun::{cos_pi, gamma, gamma_k, gamma_pk, sin_pi, xi_completed, zeta, SpecFunError};

use CaseClass::{A, B, F};

/// Distance from an integer below which a pole guard rejects a sample.
const GUARD: f64 = 1e-8;

fn pm(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn off_integer(x: f64) -> bool {
    (x - x.round()).abs() > GUARD
}

fn is_integer(x: f64) -> bool {
    x.fract() == 0.0
}

/// π / sin(πx), guarded.
fn pi_csc(x: f64) -> Result<f64> {
    let sn = sin_pi(x);
    if sn.abs() < GUARD {
        return Err(SpecFunError::PoleArgument(x).into());
    }
    Ok(PI / sn)
}

fn phi(n: f64, s: f64) -> Result<f64> {
    Ok(phi_ns(n as u32, s, &QuadConfig::default())?.value)
}

fn factorial(j: f64) -> f64 {
    (1..=j as u32).map(f64::from).product()
}

/// Φ(2j+3, 3) = √π(j+3/2)Γ(j+½)/(4(j+1)!).
fn entry_s3(j: f64) -> Result<f64> {
    Ok(PI.sqrt() * (j + 1.5) * gamma(j + 0.5)? / (4.0 * factorial(j + 1.0)))
}

/// Φ(2j+4, 4) = √π(j+2)Γ(j+½)/(6(j+1)!).
fn entry_s4(j: f64) -> Result<f64> {
    Ok(PI.sqrt() * (j + 2.0) * gamma(j + 0.5)? / (6.0 * factorial(j + 1.0)))
}

/// ζ(s)Γ(s)Γ((1−s+v)/2)Γ((1−s−v)/2)/(2^s π), the common factor of the
/// sinh/cosh lattice forms.
fn asinh_block(s: f64, v: f64) -> Result<f64> {
    Ok(zeta(s)? * gamma(s)? * gamma(0.5 * (1.0 - s + v))? * gamma(0.5 * (1.0 - s - v))? / (2f64.powf(s) * PI))
}

struct Builder(IdentityCase);

fn case(case_id: &'static str, paper_ref: &'static str, class: CaseClass, lhs: Lhs) -> Builder {
    Builder(IdentityCase {
        case_id,
        paper_ref,
        class,
        params: Vec::new(),
        lhs,
        rhs: Rhs { text: "", eval: |_| Ok(f64::NAN) },
        strip: Vec::new(),
        default_samples: Vec::new(),
    })
}

impl Builder {
    fn param(mut self, name: &str, lo: f64, hi: f64) -> Self {
        self.0.params.push(ParamRange { name: name.into(), lo, hi, integer: false });
        self
    }

    fn int(mut self, name: &str, lo: f64, hi: f64) -> Self {
        self.0.params.push(ParamRange { name: name.into(), lo, hi, integer: true });
        self
    }

    fn rhs(mut self, text: &'static str, eval: fn(&Params) -> Result<f64>) -> Self {
        self.0.rhs = Rhs { text, eval };
        self
    }

    fn when(mut self, text: &'static str, holds: fn(&Params) -> bool) -> Self {
        self.0.strip.push(Constraint { text, holds });
        self
    }

    fn sample(mut self, pairs: &[(&str, f64)]) -> Self {
        self.0.default_samples.push(pm(pairs));
        self
    }

    fn done(self) -> IdentityCase {
        self.0
    }
}

fn mellin(integrand: &'static str, bind_text: &'static str, bind: fn(&Params) -> Params, weight: &'static str, w: fn(&Params) -> f64) -> IntegrandSpec {
    IntegrandSpec {
        integrand,
        bind,
        bind_text,
        lattice: LatticeMode::None,
        weight_exponent: Expr { text: weight, eval: w },
        prefactor: None,
        double_sin_n: None,
    }
}

impl IntegrandSpec {
    fn lattice(mut self, mode: LatticeMode) -> Self {
        self.lattice = mode;
        self
    }

    fn prefactor(mut self, text: &'static str, eval: fn(&Params) -> f64) -> Self {
        self.prefactor = Some(Expr { text, eval });
        self
    }

    fn double(mut self, text: &'static str, eval: fn(&Params) -> f64) -> Self {
        self.double_sin_n = Some(Expr { text, eval });
        self
    }

    fn lhs(self) -> Lhs {
        Lhs::Integral(self)
    }
}

fn sin_power(n: &'static str, nf: fn(&Params) -> f64, s: &'static str, sf: fn(&Params) -> f64) -> Lhs {
    Lhs::SinPower { n: Expr { text: n, eval: nf }, s: Expr { text: s, eval: sf } }
}

fn ws(p: &Params) -> f64 {
    p["s"]
}

fn wn(p: &Params) -> f64 {
    p["n"]
}

pub(super) fn all() -> Vec<IdentityCase> {
    let mut v = classic_and_k();
    v.extend(pk_cases());
    v.extend(zeta_cases());
    v.extend(formal_cases());
    v.extend(double_cases());
    v
}

fn classic_and_k() -> Vec<IdentityCase> {
    vec![
        case(
            "eq1.1",
            "This formal identity was stated by S. Ramanujan",
            A,
            mellin("exp", "a = a", |p| pm(&[("a", p["a"])]), "s", ws).lhs(),
        )
        .param("s", 0.2, 8.0)
        .param("a", 0.5, 3.0)
        .rhs("Γ(s)·a^{−s}", |p| Ok(gamma(p["s"])? * p["a"].powf(-p["s"])))
        .when("s > 0", |p| p["s"] > 0.0)
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("s", 0.5), ("a", 1.0)])
        .sample(&[("s", 2.0), ("a", 1.0)])
        .sample(&[("s", 3.7), ("a", 2.5)])
        .done(),
        case(
            "eq1.5",
            "for all 0<Re s<δ",
            A,
            mellin("log1p_over_x", "", |_| Params::new(), "s", ws).lhs(),
        )
        .param("s", 0.05, 0.95)
        .rhs("π/((1−s)·sin πs)", |p| Ok(pi_csc(p["s"])? / (1.0 - p["s"])))
        .when("0 < s < 1", |p| p["s"] > 0.0 && p["s"] < 1.0)
        .sample(&[("s", 0.25)])
        .sample(&[("s", 0.5)])
        .sample(&[("s", 0.8)])
        .done(),
        case(
            "def2.1",
            "we define k-gamma function as",
            A,
            mellin("exp_k", "a = 1, k = k", |p| pm(&[("a", 1.0), ("k", p["k"])]), "s", ws).lhs(),
        )
        .param("s", 0.2, 6.0)
        .param("k", 0.5, 3.0)
        .rhs("Γ_k(s) = k^{s/k−1}·Γ(s/k)", |p| Ok(p["k"].powf(p["s"] / p["k"] - 1.0) * gamma(p["s"] / p["k"])?))
        .when("s > 0", |p| p["s"] > 0.0)
        .when("k > 0", |p| p["k"] > 0.0)
        .sample(&[("s", 1.0), ("k", 1.0)])
        .sample(&[("s", 1.5), ("k", 2.0)])
        .sample(&[("s", 2.5), ("k", 0.7)])
        .done(),
        case(
            "thm2.1",
            "Assuming that there exists a \"natural\" continuous extension of φ(r)",
            A,
            mellin("exp_k", "a = a, k = k", |p| pm(&[("a", p["a"]), ("k", p["k"])]), "s", ws).lhs(),
        )
        .param("s", 0.2, 6.0)
        .param("k", 0.5, 3.0)
        .param("a", 0.5, 3.0)
        .rhs("Γ_k(s)·φ(−s/k), φ(r) = a^r", |p| Ok(gamma_k(p["s"], p["k"])? * p["a"].powf(-p["s"] / p["k"])))
        .when("s > 0", |p| p["s"] > 0.0)
        .when("k > 0", |p| p["k"] > 0.0)
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("s", 1.5), ("k", 2.0), ("a", 3.0)])
        .sample(&[("s", 0.7), ("k", 1.5), ("a", 0.5)])
        .sample(&[("s", 3.0), ("k", 1.0), ("a", 2.0)])
        .done(),
        case(
            "cor2.1.1",
            "Now using the reflection formula",
            A,
            mellin("geometric_k", "a = a, k = k", |p| pm(&[("a", p["a"]), ("k", p["k"])]), "s", ws).lhs(),
        )
        .param("s", 0.1, 5.0)
        .param("k", 0.5, 5.0)
        .param("a", 0.5, 2.0)
        .rhs("(1/k)·φ(−s/k)·π/sin(sπ/k), φ(r) = a^r", |p| {
            let (s, k) = (p["s"], p["k"]);
            Ok(p["a"].powf(-s / k) * pi_csc(s / k)? / k)
        })
        .when("0 < s < k", |p| p["s"] > 0.0 && p["s"] < p["k"])
        .when("sin(sπ/k) ≠ 0", |p| off_integer(p["s"] / p["k"]))
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("s", 1.0), ("k", 3.0), ("a", 1.0)])
        .sample(&[("s", 0.5), ("k", 2.0), ("a", 2.0)])
        .sample(&[("s", 1.2), ("k", 1.7), ("a", 0.8)])
        .done(),
        case(
            "cor2.1.2",
            "Substituting φ(p) with φ(2p)",
            A,
            mellin("geometric_even_k", "a = a, k = k", |p| pm(&[("a", p["a"]), ("k", p["k"])]), "s", ws).lhs(),
        )
        .param("s", 0.1, 5.0)
        .param("k", 0.5, 3.0)
        .param("a", 0.5, 2.0)
        .rhs("(1/(2k))·φ(−s/k)·π/sin(sπ/(2k)), φ(u) = a^u", |p| {
            let (s, k) = (p["s"], p["k"]);
            Ok(p["a"].powf(-s / k) * pi_csc(s / (2.0 * k))? / (2.0 * k))
        })
        .when("0 < s < 2k", |p| p["s"] > 0.0 && p["s"] < 2.0 * p["k"])
        .when("sin(sπ/(2k)) ≠ 0", |p| off_integer(p["s"] / (2.0 * p["k"])))
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("s", 1.0), ("k", 1.0), ("a", 1.0)])
        .sample(&[("s", 0.5), ("k", 2.0), ("a", 1.5)])
        .sample(&[("s", 2.5), ("k", 1.5), ("a", 0.7)])
        .done(),
        case(
            "eq2.6",
            "This is comparatively easy way of deriving",
            A,
            mellin("exp_k", "a = a, k = k", |p| pm(&[("a", p["a"]), ("k", p["k"])]), "k·s", |p| p["k"] * p["s"])
                .prefactor("k^{1−s}", |p| p["k"].powf(1.0 - p["s"]))
                .lhs(),
        )
        .param("s", 0.2, 5.0)
        .param("k", 0.5, 3.0)
        .param("a", 0.5, 3.0)
        .rhs("Γ(s)·φ(−s), φ(r) = a^r", |p| Ok(gamma(p["s"])? * p["a"].powf(-p["s"])))
        .when("s > 0", |p| p["s"] > 0.0)
        .when("k > 0", |p| p["k"] > 0.0)
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("s", 1.5), ("k", 2.0), ("a", 1.0)])
        .sample(&[("s", 0.8), ("k", 0.5), ("a", 2.0)])
        .sample(&[("s", 3.0), ("k", 1.5), ("a", 1.0)])
        .done(),
        case(
            "thm2.2.i",
            "defined for 0<x<1 by the usual power series",
            A,
            mellin(
                "hyp2f1_k",
                "alpha, beta, gamma, k",
                |p| pm(&[("alpha", p["alpha"]), ("beta", p["beta"]), ("gamma", p["gamma"]), ("k", p["k"])]),
                "s",
                ws,
            )
            .lhs(),
        )
        .param("alpha", 0.5, 4.0)
        .param("beta", 0.5, 4.0)
        .param("gamma", 0.5, 5.0)
        .param("k", 0.5, 3.0)
        .param("s", 0.05, 6.0)
        .rhs("k^{s/k−1}Γ(s/k)·Γ(γ)/(Γ(α)Γ(β))·Γ(α−s/k)Γ(β−s/k)/Γ(γ−s/k)", |p| {
            let (a, b, c, k) = (p["alpha"], p["beta"], p["gamma"], p["k"]);
            let u = p["s"] / k;
            Ok(gamma_k(p["s"], k)? * gamma(c)? / (gamma(a)? * gamma(b)?) * gamma(a - u)? * gamma(b - u)?
                / gamma(c - u)?)
        })
        .when("0 < s/k < min(α, β)", |p| p["s"] > 0.0 && p["s"] / p["k"] < p["alpha"].min(p["beta"]))
        .when("γ − s/k ∉ {0, −1, −2, …}", |p| {
            let g = p["gamma"] - p["s"] / p["k"];
            g > 0.0 || off_integer(g)
        })
        .when("α, β, γ, k > 0", |p| p["alpha"] > 0.0 && p["beta"] > 0.0 && p["gamma"] > 0.0 && p["k"] > 0.0)
        .sample(&[("alpha", 2.0), ("beta", 3.0), ("gamma", 4.0), ("k", 1.0), ("s", 1.0)])
        .sample(&[("alpha", 2.0), ("beta", 3.0), ("gamma", 4.0), ("k", 2.0), ("s", 1.2)])
        .sample(&[("alpha", 1.5), ("beta", 2.5), ("gamma", 3.0), ("k", 1.0), ("s", 0.7)])
        .done(),
        case(
            "thm2.2.ii",
            "suppose that m is real",
            A,
            mellin("touchard_k", "m = m, k = k", |p| pm(&[("m", p["m"]), ("k", p["k"])]), "s", ws).lhs(),
        )
        .int("m", 0.0, 6.0)
        .param("k", 0.5, 3.0)
        .param("s", 0.05, 3.0)
        .rhs("k^{s/k−1}·Γ(s/k)·(1−s/k)^m", |p| Ok(gamma_k(p["s"], p["k"])? * (1.0 - p["s"] / p["k"]).powf(p["m"])))
        .when("0 < s/k < 1", |p| p["s"] > 0.0 && p["s"] < p["k"])
        .when("m ∈ {0, 1, …, 30}", |p| is_integer(p["m"]) && (0.0..=30.0).contains(&p["m"]))
        .sample(&[("m", 2.0), ("k", 1.0), ("s", 0.5)])
        .sample(&[("m", 3.0), ("k", 2.0), ("s", 1.2)])
        .sample(&[("m", 1.0), ("k", 1.5), ("s", 0.9)])
        .done(),
        case(
            "thm2.2.iii",
            "simply substitute φ(r)=(r+1)^m and φ(r)=1/ζ(2n+2)",
            A,
            mellin("mobius_theta_k", "k = k", |p| pm(&[("k", p["k"])]), "s", ws).lhs(),
        )
        .param("k", 0.5, 3.0)
        .param("s", 0.05, 1.5)
        .rhs("k^{s/k−1}·Γ(s/k)/ζ(2−2s/k)", |p| Ok(gamma_k(p["s"], p["k"])? / zeta(2.0 - 2.0 * p["s"] / p["k"])?))
        .when("0 < s/k < 1/2", |p| p["s"] > 0.0 && p["s"] < 0.5 * p["k"])
        .sample(&[("k", 1.0), ("s", 0.25)])
        .sample(&[("k", 2.0), ("s", 0.6)])
        .sample(&[("k", 1.5), ("s", 0.3)])
        .done(),
        case(
            "thm2.2.iv",
            "If |x^k|<k",
            A,
            mellin("binomial_k", "k = k, m = m", |p| pm(&[("k", p["k"]), ("m", p["m"])]), "s", ws).lhs(),
        )
        .param("k", 0.5, 3.0)
        .param("m", 0.5, 4.0)
        .param("s", 0.05, 6.0)
        .rhs("k^{s/k−1}·Γ(s/k)·Γ(m−s/k)/Γ(m)", |p| {
            let u = p["s"] / p["k"];
            Ok(gamma_k(p["s"], p["k"])? * gamma(p["m"] - u)? / gamma(p["m"])?)
        })
        .when("0 < s < m·k", |p| p["s"] > 0.0 && p["s"] < p["m"] * p["k"])
        .when("k, m > 0", |p| p["k"] > 0.0 && p["m"] > 0.0)
        .sample(&[("k", 2.0), ("m", 3.0), ("s", 1.5)])
        .sample(&[("k", 1.0), ("m", 2.0), ("s", 1.0)])
        .sample(&[("k", 0.8), ("m", 1.5), ("s", 0.6)])
        .done(),
        case(
            "thm2.3",
            "denotes the r^{th} fractional derivative",
            A,
            mellin(
                "frac_exp",
                "c, a, r, k",
                |p| pm(&[("c", p["c"]), ("a", p["a"]), ("r", p["r"]), ("k", p["k"])]),
                "s",
                ws,
            )
            .lhs(),
        )
        .param("c", 0.5, 3.0)
        .param("a", -1.0, 1.0)
        .param("r", 0.0, 3.0)
        .param("k", 0.5, 3.0)
        .param("s", 0.2, 5.0)
        .rhs("k^{s/k−1}·Γ(s/k)·f^{(r−s/k)}(a), f(t) = e^{ct}", |p| {
            let (c, k) = (p["c"], p["k"]);
            Ok(gamma_k(p["s"], k)? * c.powf(p["r"] - p["s"] / k) * (c * p["a"]).exp())
        })
        .when("s > 0", |p| p["s"] > 0.0)
        .when("c, k > 0", |p| p["c"] > 0.0 && p["k"] > 0.0)
        .sample(&[("c", 2.0), ("a", 0.0), ("r", 1.5), ("k", 2.0), ("s", 1.0)])
        .sample(&[("c", 1.0), ("a", 0.5), ("r", 0.7), ("k", 1.0), ("s", 2.2)])
        .sample(&[("c", 0.8), ("a", -0.3), ("r", 2.0), ("k", 1.5), ("s", 0.6)])
        .done(),
        case(
            "cor2.3.1",
            "Set s=1/2 and replace x by x^2",
            A,
            mellin(
                "frac_exp",
                "c, a, r, k, q = 2k",
                |p| pm(&[("c", p["c"]), ("a", p["a"]), ("r", p["r"]), ("k", p["k"]), ("q", 2.0 * p["k"])]),
                "1",
                |_| 1.0,
            )
            .lhs(),
        )
        .param("c", 0.5, 3.0)
        .param("a", -1.0, 1.0)
        .param("r", 0.0, 3.0)
        .param("k", 0.5, 3.0)
        .rhs("(k^{1/(2k)−1}/2)·Γ(1/(2k))·f^{(r−1/(2k))}(a), f(t) = e^{ct}", |p| {
            let (c, k) = (p["c"], p["k"]);
            let u = 0.5 / k;
            Ok(0.5 * k.powf(u - 1.0) * gamma(u)? * c.powf(p["r"] - u) * (c * p["a"]).exp())
        })
        .when("c, k > 0", |p| p["c"] > 0.0 && p["k"] > 0.0)
        .sample(&[("c", 2.0), ("a", 0.0), ("r", 1.5), ("k", 2.0)])
        .sample(&[("c", 1.0), ("a", 0.5), ("r", 0.5), ("k", 1.0)])
        .sample(&[("c", 0.7), ("a", -0.2), ("r", 2.5), ("k", 0.6)])
        .done(),
    ]
}

fn pk_bind(p: &Params) -> Params {
    pm(&[("p", p["p"]), ("k", p["k"])])
}

/// pΓk(s)·Γ(1−s/k)ζ(2−s/k)/(2−s/k)
fn loggamma_rhs(s: f64, p: f64, k: f64) -> Result<f64> {
    let u = s / k;
    Ok(gamma_pk(s, p, k)? * gamma(1.0 - u)? * zeta(2.0 - u)? / (2.0 - u))
}

/// pΓk(s)·ζ(2−s/k)Γ(1−s/k)
fn digamma_rhs(s: f64, p: f64, k: f64) -> Result<f64> {
    let u = s / k;
    Ok(gamma_pk(s, p, k)? * zeta(2.0 - u)? * gamma(1.0 - u)?)
}

fn pk_grid(b: Builder) -> Builder {
    let mut b = b;
    for &(k, p) in &[(1.0, 1.0), (2.0, 3.0)] {
        for &s in &[0.5, 0.75, 0.3, 0.9] {
            b = b.sample(&[("s", s), ("k", k), ("p", p)]);
        }
    }
    b
}

fn pk_fixed(b: Builder) -> Builder {
    b.sample(&[("k", 1.0), ("p", 1.0)]).sample(&[("k", 2.0), ("p", 3.0)])
}

fn pk_cases() -> Vec<IdentityCase> {
    vec![
        case(
            "def3.1",
            "we define p-k gamma function as",
            A,
            mellin("exp_pk", "a = 1, k = k, p = p", |p| pm(&[("a", 1.0), ("k", p["k"]), ("p", p["p"])]), "s", ws).lhs(),
        )
        .param("s", 0.2, 6.0)
        .param("k", 0.5, 3.0)
        .param("p", 0.5, 4.0)
        .rhs("pΓk(s) = p^{s/k}/k·Γ(s/k)", |p| Ok(p["p"].powf(p["s"] / p["k"]) / p["k"] * gamma(p["s"] / p["k"])?))
        .when("s > 0", |p| p["s"] > 0.0)
        .when("p, k > 0", |p| p["p"] > 0.0 && p["k"] > 0.0)
        .sample(&[("s", 1.5), ("k", 2.0), ("p", 3.0)])
        .sample(&[("s", 0.5), ("k", 1.0), ("p", 1.0)])
        .sample(&[("s", 2.5), ("k", 1.5), ("p", 0.5)])
        .done(),
        case(
            "def3.2",
            "The relation of p-k gamma function with k-gamma function",
            A,
            mellin("exp_pk", "a = 1, k = k, p = p", |p| pm(&[("a", 1.0), ("k", p["k"]), ("p", p["p"])]), "s", ws).lhs(),
        )
        .param("s", 0.2, 6.0)
        .param("k", 0.5, 3.0)
        .param("p", 0.5, 4.0)
        .rhs("(p/k)^{s/k}·Γ_k(s)", |p| Ok((p["p"] / p["k"]).powf(p["s"] / p["k"]) * gamma_k(p["s"], p["k"])?))
        .when("s > 0", |p| p["s"] > 0.0)
        .when("p, k > 0", |p| p["p"] > 0.0 && p["k"] > 0.0)
        .sample(&[("s", 1.5), ("k", 2.0), ("p", 3.0)])
        .sample(&[("s", 4.0), ("k", 2.5), ("p", 0.8)])
        .done(),
        case(
            "thm3.1",
            "derived classically from the original Ramanujan’s Master Theorem",
            A,
            mellin(
                "exp_pk",
                "a = a, k = k, p = p",
                |p| pm(&[("a", p["a"]), ("k", p["k"]), ("p", p["p"])]),
                "s",
                ws,
            )
            .lhs(),
        )
        .param("s", 0.2, 6.0)
        .param("k", 0.5, 3.0)
        .param("p", 0.5, 4.0)
        .param("a", 0.5, 3.0)
        .rhs("pΓk(s)·φ(−s/k), φ(r) = a^r", |p| Ok(gamma_pk(p["s"], p["p"], p["k"])? * p["a"].powf(-p["s"] / p["k"])))
        .when("s > 0", |p| p["s"] > 0.0)
        .when("a, p, k > 0", |p| p["a"] > 0.0 && p["p"] > 0.0 && p["k"] > 0.0)
        .sample(&[("s", 1.5), ("k", 2.0), ("p", 3.0), ("a", 2.0)])
        .sample(&[("s", 0.6), ("k", 1.0), ("p", 1.0), ("a", 0.7)])
        .sample(&[("s", 3.0), ("k", 1.5), ("p", 0.5), ("a", 1.0)])
        .done(),
        case(
            "cor3.1.1",
            "Replace x with x^m",
            A,
            mellin(
                "exp_pk",
                "a = a, k = m·k, p = p",
                |p| pm(&[("a", p["a"]), ("k", p["m"] * p["k"]), ("p", p["p"])]),
                "s − v + 1",
                |p| p["s"] - p["v"] + 1.0,
            )
            .lhs(),
        )
        .param("s", 0.2, 5.0)
        .param("v", -1.0, 2.0)
        .int("m", 1.0, 3.0)
        .param("k", 0.5, 2.0)
        .param("p", 0.5, 3.0)
        .param("a", 0.5, 2.0)
        .rhs("(1/m)·pΓk((s−v+1)/m)·φ((v−s−1)/(mk)), φ(r) = a^r", |p| {
            let (m, k) = (p["m"], p["k"]);
            let sigma = p["s"] - p["v"] + 1.0;
            Ok(gamma_pk(sigma / m, p["p"], k)? * p["a"].powf(-sigma / (m * k)) / m)
        })
        .when("s − v + 1 > 0", |p| p["s"] - p["v"] + 1.0 > 0.0)
        .when("m ∈ ℕ", |p| is_integer(p["m"]) && p["m"] >= 1.0)
        .when("a, p, k, s > 0", |p| p["a"] > 0.0 && p["p"] > 0.0 && p["k"] > 0.0 && p["s"] > 0.0)
        .sample(&[("s", 2.0), ("v", 0.5), ("m", 2.0), ("k", 1.5), ("p", 2.0), ("a", 1.0)])
        .sample(&[("s", 1.0), ("v", 0.0), ("m", 1.0), ("k", 1.0), ("p", 1.0), ("a", 1.0)])
        .sample(&[("s", 3.0), ("v", 1.5), ("m", 3.0), ("k", 0.7), ("p", 0.8), ("a", 2.0)])
        .done(),
        pk_grid(
            case("eq3.4", "valid for 0<s<1", A, mellin("loggamma_comb", "p = p, k = k", pk_bind, "s", ws).lhs())
                .param("s", 0.05, 2.5)
                .param("k", 0.5, 3.0)
                .param("p", 0.5, 4.0)
                .rhs("pΓk(s)·Γ(1−s/k)ζ(2−s/k)/(2−s/k)", |p| loggamma_rhs(p["s"], p["p"], p["k"]))
                .when("0 < s/k < 1", |p| p["s"] > 0.0 && p["s"] < p["k"])
                .when("p > 0", |p| p["p"] > 0.0),
        )
        .done(),
        pk_fixed(
            case("eq3.5", "For s=1/2 and s=3/4", A, mellin("loggamma_comb", "p = p, k = k", pk_bind, "1/2", |_| 0.5).lhs())
                .param("k", 0.6, 3.0)
                .param("p", 0.5, 4.0)
                .rhs("p^{1/(2k)}/k·Γ(1/(2k))Γ(1−1/(2k))ζ(2−1/(2k))/(2−1/(2k))", |p| {
                    let u = 0.5 / p["k"];
                    Ok(p["p"].powf(u) / p["k"] * gamma(u)? * gamma(1.0 - u)? * zeta(2.0 - u)? / (2.0 - u))
                })
                .when("k > 1/2", |p| p["k"] > 0.5)
                .when("p > 0", |p| p["p"] > 0.0),
        )
        .done(),
        pk_fixed(
            case("eq3.6", "For s=1/2 and s=3/4", A, mellin("loggamma_comb", "p = p, k = k", pk_bind, "3/4", |_| 0.75).lhs())
                .param("k", 0.8, 3.0)
                .param("p", 0.5, 4.0)
                .rhs("p^{3/(4k)}/k·Γ(3/(4k))Γ(1−3/(4k))ζ(2−3/(4k))/(2−3/(4k))", |p| {
                    let u = 0.75 / p["k"];
                    Ok(p["p"].powf(u) / p["k"] * gamma(u)? * gamma(1.0 - u)? * zeta(2.0 - u)? / (2.0 - u))
                })
                .when("k > 3/4", |p| p["k"] > 0.75)
                .when("p > 0", |p| p["p"] > 0.0),
        )
        .done(),
        pk_grid(
            case("eq3.9", "This can be also written as", A, mellin("digamma_comb", "p = p, k = k", pk_bind, "s", ws).lhs())
                .param("s", 0.05, 2.5)
                .param("k", 0.5, 3.0)
                .param("p", 0.5, 4.0)
                .rhs("pΓk(s)·ζ(2−s/k)Γ(1−s/k)", |p| digamma_rhs(p["s"], p["p"], p["k"]))
                .when("0 < s/k < 1", |p| p["s"] > 0.0 && p["s"] < p["k"])
                .when("p > 0", |p| p["p"] > 0.0),
        )
        .done(),
        pk_fixed(
            case("eq3.10", "For s=1/2 and s=3/4", A, mellin("digamma_comb", "p = p, k = k", pk_bind, "1/2", |_| 0.5).lhs())
                .param("k", 0.6, 3.0)
                .param("p", 0.5, 4.0)
                .rhs("p^{1/(2k)}/k·Γ(1/(2k))ζ(2−1/(2k))Γ(1−1/(2k))", |p| {
                    let u = 0.5 / p["k"];
                    Ok(p["p"].powf(u) / p["k"] * gamma(u)? * zeta(2.0 - u)? * gamma(1.0 - u)?)
                })
                .when("k > 1/2", |p| p["k"] > 0.5)
                .when("p > 0", |p| p["p"] > 0.0),
        )
        .done(),
        pk_fixed(
            case("eq3.11", "For s=1/2 and s=3/4", A, mellin("digamma_comb", "p = p, k = k", pk_bind, "3/4", |_| 0.75).lhs())
                .param("k", 0.8, 3.0)
                .param("p", 0.5, 4.0)
                .rhs("p^{3/(4k)}/k·Γ(3/(4k))ζ(2−3/(4k))Γ(1−3/(4k))", |p| {
                    let u = 0.75 / p["k"];
                    Ok(p["p"].powf(u) / p["k"] * gamma(u)? * zeta(2.0 - u)? * gamma(1.0 - u)?)
                })
                .when("k > 3/4", |p| p["k"] > 0.75)
                .when("p > 0", |p| p["p"] > 0.0),
        )
        .done(),
    ]
}

fn zeta_cases() -> Vec<IdentityCase> {
    use LatticeMode::{LinearM, ThetaN2};
    vec![
        case(
            "thm4.1",
            "If F(x) admits the expansions of the following form",
            A,
            mellin("exp", "a = a", |p| pm(&[("a", p["a"])]), "s", ws).lattice(LinearM).lhs(),
        )
        .param("s", 1.1, 8.0)
        .param("a", 0.5, 3.0)
        .rhs("ζ(s)Γ(s)·φ(−s), φ(n) = a^n", |p| Ok(zeta(p["s"])? * gamma(p["s"])? * p["a"].powf(-p["s"])))
        .when("s > 1", |p| p["s"] > 1.0)
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("s", 2.0), ("a", 1.0)])
        .sample(&[("s", 3.0), ("a", 0.5)])
        .sample(&[("s", 1.5), ("a", 2.0)])
        .done(),
        case(
            "cor4.1.1",
            "The proof follows by substituting a=1",
            A,
            mellin("bose", "a = 1", |_| pm(&[("a", 1.0)]), "s", ws).lhs(),
        )
        .param("s", 1.1, 8.0)
        .rhs("ζ(s)Γ(s)", |p| Ok(zeta(p["s"])? * gamma(p["s"])?))
        .when("s > 1", |p| p["s"] > 1.0)
        .sample(&[("s", 1.5)])
        .sample(&[("s", 2.0)])
        .sample(&[("s", 3.0)])
        .sample(&[("s", 4.0)])
        .done(),
        case(
            "eq4.7",
            "expand e^{−amx} in its Maclaurin series",
            A,
            mellin("bose", "a = a", |p| pm(&[("a", p["a"])]), "s", ws).lhs(),
        )
        .param("s", 1.1, 8.0)
        .param("a", 0.5, 3.0)
        .rhs("ζ(s)Γ(s)·a^{−s}", |p| Ok(zeta(p["s"])? * gamma(p["s"])? * p["a"].powf(-p["s"])))
        .when("s > 1", |p| p["s"] > 1.0)
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("s", 2.0), ("a", 2.0)])
        .sample(&[("s", 3.0), ("a", 0.5)])
        .sample(&[("s", 1.5), ("a", 1.3)])
        .done(),
        case(
            "cor4.1.2",
            "Define the notation",
            A,
            mellin("bose", "a = a/k, k = k", |p| pm(&[("a", p["a"] / p["k"]), ("k", p["k"])]), "s", ws).lhs(),
        )
        .param("s", 0.6, 8.0)
        .param("k", 0.5, 3.0)
        .param("a", 0.5, 3.0)
        .rhs("ζ(s/k)·Γ_k(s)·φ(−s/k), φ(n) = a^n", |p| {
            let u = p["s"] / p["k"];
            Ok(zeta(u)? * gamma_k(p["s"], p["k"])? * p["a"].powf(-u))
        })
        .when("s/k > 1", |p| p["s"] > p["k"])
        .when("a, k > 0", |p| p["a"] > 0.0 && p["k"] > 0.0)
        .sample(&[("s", 3.0), ("k", 2.0), ("a", 1.0)])
        .sample(&[("s", 2.5), ("k", 1.0), ("a", 1.0)])
        .sample(&[("s", 4.0), ("k", 1.5), ("a", 2.0)])
        .done(),
        case(
            "cor4.1.3",
            "using the definition of ξ function",
            A,
            mellin("bose", "a = 1", |_| pm(&[("a", 1.0)]), "s", ws).lattice(ThetaN2).prefactor("1/2", |_| 0.5).lhs(),
        )
        .param("s", 2.2, 8.0)
        .rhs("ζ(s/2)·ξ(s)/(s(s−1)), ξ(s) = π^{−s/2}s(s−1)ζ(s)Γ(s/2)", |p| {
            let s = p["s"];
            Ok(zeta(0.5 * s)? * xi_completed(s)? / (s * (s - 1.0)))
        })
        .when("s > 2", |p| p["s"] > 2.0)
        .sample(&[("s", 4.0)])
        .done(),
        case(
            "cor4.1.4",
            "for any real number c",
            A,
            mellin("bose", "a = a, k = c", |p| pm(&[("a", p["a"]), ("k", p["c"])]), "s − v + 1", |p| {
                p["s"] - p["v"] + 1.0
            })
            .lhs(),
        )
        .param("s", 0.5, 6.0)
        .param("v", -1.0, 2.0)
        .param("c", 0.5, 3.0)
        .param("a", 0.5, 3.0)
        .rhs("(1/c)·ζ((s−v+1)/c)·Γ((s−v+1)/c)·φ((v−s−1)/c), φ(n) = a^n", |p| {
            let u = (p["s"] - p["v"] + 1.0) / p["c"];
            Ok(zeta(u)? * gamma(u)? * p["a"].powf(-u) / p["c"])
        })
        .when("(s−v+1)/c > 1", |p| p["c"] > 0.0 && p["s"] - p["v"] + 1.0 > p["c"])
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("s", 3.0), ("v", 0.0), ("c", 2.0), ("a", 1.0)])
        .sample(&[("s", 2.0), ("v", 0.5), ("c", 1.0), ("a", 1.0)])
        .sample(&[("s", 4.0), ("v", 1.0), ("c", 1.5), ("a", 2.0)])
        .done(),
        case(
            "ex4.1.2",
            "valid for |arg α|<π",
            A,
            mellin("inv_binomial", "alpha = α, v = v", |p| pm(&[("alpha", p["alpha"]), ("v", p["v"])]), "s", ws)
                .lattice(LinearM)
                .lhs(),
        )
        .param("alpha", 0.5, 3.0)
        .param("v", 1.5, 6.0)
        .param("s", 1.05, 5.0)
        .rhs("ζ(s)Γ(s)Γ(v−s)/(α^s·Γ(v))", |p| {
            let (s, v) = (p["s"], p["v"]);
            Ok(zeta(s)? * gamma(s)? * gamma(v - s)? / (p["alpha"].powf(s) * gamma(v)?))
        })
        .when("1 < s < v", |p| p["s"] > 1.0 && p["s"] < p["v"])
        .when("α > 0", |p| p["alpha"] > 0.0)
        .sample(&[("alpha", 1.0), ("v", 3.0), ("s", 2.0)])
        .sample(&[("alpha", 2.0), ("v", 4.0), ("s", 1.5)])
        .sample(&[("alpha", 0.5), ("v", 2.5), ("s", 1.8)])
        .done(),
        case(
            "ex4.1.3",
            "Substitute x with mx, sum on m",
            A,
            mellin("sqrt_binomial", "mu = μ", |p| pm(&[("mu", p["mu"])]), "s", ws).lattice(LinearM).lhs(),
        )
        .param("mu", 2.5, 10.0)
        .param("s", 1.05, 4.5)
        .rhs("μΓ(s)ζ(s)Γ(μ−2s)/Γ(μ−s+1)", |p| {
            let (s, mu) = (p["s"], p["mu"]);
            Ok(mu * gamma(s)? * zeta(s)? * gamma(mu - 2.0 * s)? / gamma(mu - s + 1.0)?)
        })
        .when("1 < s < μ/2", |p| p["s"] > 1.0 && p["s"] < 0.5 * p["mu"])
        .sample(&[("mu", 6.0), ("s", 2.0)])
        .sample(&[("mu", 5.0), ("s", 1.5)])
        .sample(&[("mu", 8.0), ("s", 3.0)])
        .done(),
    ]
}

fn formal_cases() -> Vec<IdentityCase> {
    use LatticeMode::LinearM;
    let v_bind = |p: &Params| pm(&[("v", p["v"])]);
    vec![
        case(
            "ex4.1.1",
            "consider the following two expansion",
            F,
            mellin("sinh_asinh", "v = v", v_bind, "s", ws).lattice(LinearM).lhs(),
        )
        .param("s", 0.05, 0.95)
        .param("v", -0.9, 0.9)
        .rhs("ζ(s)Γ(s)Γ((1−s+v)/2)Γ((1−s−v)/2)/(2^s·π·csc(πs/2)·csc(πv/2))", |p| {
            let (s, v) = (p["s"], p["v"]);
            Ok(asinh_block(s, v)? * sin_pi(0.5 * s) * sin_pi(0.5 * v))
        })
        .when("0 < s < 1 − |v|", |p| p["s"] > 0.0 && p["s"] < 1.0 - p["v"].abs())
        .sample(&[("s", 0.3), ("v", 0.5)])
        .sample(&[("s", 0.2), ("v", -0.3)])
        .sample(&[("s", 0.5), ("v", 0.25)])
        .done(),
        case(
            "ex4.1.1.cosh",
            "consider the following two expansion",
            F,
            mellin("cosh_asinh", "v = v", v_bind, "s", ws).lattice(LinearM).lhs(),
        )
        .param("s", 0.05, 0.95)
        .param("v", -0.9, 0.9)
        .rhs("ζ(s)Γ(s)Γ((1−s+v)/2)Γ((1−s−v)/2)/(2^s·π·sec(πs/2)·sec(πv/2))", |p| {
            let (s, v) = (p["s"], p["v"]);
            Ok(asinh_block(s, v)? * cos_pi(0.5 * s) * cos_pi(0.5 * v))
        })
        .when("0 < s < 1 − |v|", |p| p["s"] > 0.0 && p["s"] < 1.0 - p["v"].abs())
        .sample(&[("s", 0.3), ("v", 0.5)])
        .sample(&[("s", 0.6), ("v", 0.2)])
        .done(),
        case(
            "thm4.2.i",
            "where r is any natural number",
            F,
            mellin("cos_kernel", "", |_| Params::new(), "s", ws).lattice(LinearM).lhs(),
        )
        .param("s", 0.05, 0.95)
        .rhs("Γ(s)·φ(−s)·ζ(s)·cos(πs/2), φ ≡ 1", |p| {
            let s = p["s"];
            Ok(gamma(s)? * zeta(s)? * cos_pi(0.5 * s))
        })
        .when("0 < s < 1", |p| p["s"] > 0.0 && p["s"] < 1.0)
        .sample(&[("s", 0.25)])
        .sample(&[("s", 0.5)])
        .sample(&[("s", 0.75)])
        .done(),
        case(
            "thm4.2.ii",
            "where r is any natural number",
            F,
            mellin("f2_geometric", "", |_| Params::new(), "s", ws).lattice(LinearM).lhs(),
        )
        .param("s", 0.05, 0.95)
        .rhs("(π/sin πs)·φ(−s)·ζ(s), φ ≡ 1", |p| Ok(pi_csc(p["s"])? * zeta(p["s"])?))
        .when("0 < s < 1", |p| p["s"] > 0.0 && p["s"] < 1.0)
        .sample(&[("s", 0.25)])
        .sample(&[("s", 0.5)])
        .sample(&[("s", 0.75)])
        .done(),
        case(
            "thm4.2.iii",
            "where r is any natural number",
            F,
            mellin("f3_invsqrt", "", |_| Params::new(), "s", ws).lattice(LinearM).lhs(),
        )
        .param("s", 0.05, 0.95)
        .rhs("(π/(2 sin(πs/2)))·φ(−s)·ζ(s), φ(u) = Γ((1+u)/2)/(√π·Γ(1+u/2))", |p| {
            let s = p["s"];
            let phi = gamma(0.5 * (1.0 - s))? / (PI.sqrt() * gamma(1.0 - 0.5 * s)?);
            Ok(0.5 * pi_csc(0.5 * s)? * phi * zeta(s)?)
        })
        .when("0 < s < 1", |p| p["s"] > 0.0 && p["s"] < 1.0)
        .sample(&[("s", 0.25)])
        .sample(&[("s", 0.5)])
        .sample(&[("s", 0.75)])
        .done(),
        case(
            "thm4.2.iv",
            "where r is any natural number",
            F,
            mellin("f4_root", "r = r", |p| pm(&[("r", p["r"])]), "s", ws).lattice(LinearM).lhs(),
        )
        .int("r", 1.0, 6.0)
        .param("s", 0.05, 0.95)
        .rhs("(π/(r sin(πs/r)))·φ(−s)·ζ(s), φ(u) = Γ((1+u)/r)/(Γ(1/r)·Γ(1+u/r))", |p| {
            let (s, r) = (p["s"], p["r"]);
            let phi = gamma((1.0 - s) / r)? / (gamma(1.0 / r)? * gamma(1.0 - s / r)?);
            Ok(pi_csc(s / r)? / r * phi * zeta(s)?)
        })
        .when("0 < s < 1", |p| p["s"] > 0.0 && p["s"] < 1.0)
        .when("r ∈ ℕ", |p| is_integer(p["r"]) && p["r"] >= 1.0)
        .sample(&[("r", 3.0), ("s", 0.5)])
        .sample(&[("r", 2.0), ("s", 0.3)])
        .sample(&[("r", 4.0), ("s", 0.7)])
        .done(),
        case(
            "ex5.1.2",
            "sinh(ν sinh^{−1} xt)",
            F,
            mellin("sinh_asinh", "v = v", v_bind, "s", ws).lattice(LinearM).double("n", wn).lhs(),
        )
        .param("s", 0.05, 0.95)
        .param("v", -0.9, 0.9)
        .int("n", 1.0, 7.0)
        .rhs("ζ(s)Γ(s)Γ((1−s+v)/2)Γ((1−s−v)/2)·Φ(n,s)/(2^s·π·csc(πs/2)·csc(πv/2))", |p| {
            let (s, v) = (p["s"], p["v"]);
            Ok(asinh_block(s, v)? * sin_pi(0.5 * s) * sin_pi(0.5 * v) * phi(p["n"], s)?)
        })
        .when("0 < s < 1 − |v|", |p| p["s"] > 0.0 && p["s"] < 1.0 - p["v"].abs())
        .when("Φ(n, s) converges", |p| is_integer(p["n"]) && phi_in_strip(p["n"] as u32, p["s"]))
        .sample(&[("s", 0.3), ("v", 0.5), ("n", 1.0)])
        .sample(&[("s", 0.2), ("v", -0.3), ("n", 3.0)])
        .done(),
        case(
            "ex5.1.2.cosh",
            "cosh(v sinh^{−1} xt)",
            F,
            mellin("cosh_asinh", "v = v", v_bind, "s", ws).lattice(LinearM).double("n", wn).lhs(),
        )
        .param("s", 0.05, 0.95)
        .param("v", -0.9, 0.9)
        .int("n", 1.0, 7.0)
        .rhs("ζ(s)Γ(s)Γ((1−s+v)/2)Γ((1−s−v)/2)·Φ(n,s)/(2^s·π·sec(πs/2)·sec(πv/2))", |p| {
            let (s, v) = (p["s"], p["v"]);
            let c = cos_pi(0.5 * s) * cos_pi(0.5 * v);
            Ok(asinh_block(s, v)? * c * phi(p["n"], s)?)
        })
        .when("0 < s < 1 − |v|", |p| p["s"] > 0.0 && p["s"] < 1.0 - p["v"].abs())
        .when("Φ(n, s) converges", |p| is_integer(p["n"]) && phi_in_strip(p["n"] as u32, p["s"]))
        .sample(&[("s", 0.3), ("v", 0.5), ("n", 1.0)])
        .sample(&[("s", 0.6), ("v", 0.2), ("n", 3.0)])
        .done(),
    ]
}

fn phi_ok(n: f64, s: f64) -> bool {
    is_integer(n) && n >= 1.0 && phi_in_strip(n as u32, s)
}

fn j3(p: &Params) -> f64 {
    2.0 * p["j"] + 3.0
}

fn j4(p: &Params) -> f64 {
    2.0 * p["j"] + 4.0
}

fn double_cases() -> Vec<IdentityCase> {
    vec![
        case(
            "thm5.1.exp",
            "where n, s are any non-negative integer",
            B,
            mellin("exp", "a = a", |p| pm(&[("a", p["a"])]), "s", ws).double("n", wn).lhs(),
        )
        .param("s", 0.2, 5.0)
        .int("n", 1.0, 7.0)
        .param("a", 0.5, 3.0)
        .rhs("Γ(s)·φ(−s)·Φ(n,s), φ(k) = a^k", |p| Ok(gamma(p["s"])? * p["a"].powf(-p["s"]) * phi(p["n"], p["s"])?))
        .when("0 < s < n+1", |p| p["s"] > 0.0 && p["s"] < p["n"] + 1.0)
        .when("Φ(n, s) converges", |p| phi_ok(p["n"], p["s"]))
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("s", 2.0), ("n", 3.0), ("a", 1.0)])
        .sample(&[("s", 2.0), ("n", 3.0), ("a", 2.0)])
        .sample(&[("s", 0.5), ("n", 1.0), ("a", 1.0)])
        .done(),
        case(
            "thm5.2.entry30",
            "the issue can be resolved by the following integral formula",
            B,
            sin_power("2j+1", |p| 2.0 * p["j"] + 1.0, "1", |_| 1.0),
        )
        .int("j", 0.0, 6.0)
        .rhs("√π·Γ(j+½)/(2·j!)", |p| Ok(phi_ns_closed(2 * p["j"] as u32 + 1, 1)?))
        .when("j ∈ {0, 1, …}", |p| is_integer(p["j"]) && p["j"] >= 0.0)
        .sample(&[("j", 0.0)])
        .sample(&[("j", 1.0)])
        .sample(&[("j", 2.0)])
        .done(),
        case(
            "thm5.2.entry30.even",
            "the issue can be resolved by the following integral formula",
            B,
            sin_power("2j+2", |p| 2.0 * p["j"] + 2.0, "2", |_| 2.0),
        )
        .int("j", 0.0, 6.0)
        .rhs("√π·Γ(j+½)/(2·j!)", |p| Ok(phi_ns_closed(2 * p["j"] as u32 + 2, 2)?))
        .when("j ∈ {0, 1, …}", |p| is_integer(p["j"]) && p["j"] >= 0.0)
        .sample(&[("j", 0.0)])
        .sample(&[("j", 1.0)])
        .sample(&[("j", 2.0)])
        .done(),
        case("thm5.2.i", "For s>2 we have the following theorem", B, sin_power("n", wn, "s", ws))
            .int("n", 3.0, 14.0)
            .int("s", 3.0, 8.0)
            .rhs("(n(n−1)Φ(n−2,s−2) − n²Φ(n,s−2))/((s−1)(s−2))", |p| {
                Ok(phi_ns_recursive(p["n"] as u32, p["s"], &QuadConfig::default())?)
            })
            .when("3 ≤ s ≤ n, integers", |p| {
                is_integer(p["n"]) && is_integer(p["s"]) && p["s"] >= 3.0 && p["s"] <= p["n"]
            })
            .when("n odd or s even", |p| p["n"] % 2.0 == 1.0 || p["s"] % 2.0 == 0.0)
            .sample(&[("n", 3.0), ("s", 3.0)])
            .sample(&[("n", 4.0), ("s", 4.0)])
            .sample(&[("n", 5.0), ("s", 4.0)])
            .sample(&[("n", 7.0), ("s", 5.0)])
            .sample(&[("n", 8.0), ("s", 6.0)])
            .done(),
        case("thm5.2.ii.s3", "For s>2 we have the following theorem", B, sin_power("2j+3", j3, "3", |_| 3.0))
            .int("j", 0.0, 6.0)
            .rhs("√π(j+3/2)Γ(j+½)/(4(j+1)!)", |p| entry_s3(p["j"]))
            .when("j ∈ {0, 1, …}", |p| is_integer(p["j"]) && p["j"] >= 0.0)
            .sample(&[("j", 0.0)])
            .sample(&[("j", 1.0)])
            .sample(&[("j", 3.0)])
            .done(),
        case("thm5.2.ii.s4", "For s>2 we have the following theorem", B, sin_power("2j+4", j4, "4", |_| 4.0))
            .int("j", 0.0, 6.0)
            .rhs("√π(j+2)Γ(j+½)/(6(j+1)!)", |p| entry_s4(p["j"]))
            .when("j ∈ {0, 1, …}", |p| is_integer(p["j"]) && p["j"] >= 0.0)
            .sample(&[("j", 0.0)])
            .sample(&[("j", 1.0)])
            .sample(&[("j", 3.0)])
            .done(),
        case(
            "eq5.4",
            "substitute x with xt for 0<m<∞",
            B,
            mellin("cos_atan", "v = v", |p| pm(&[("v", p["v"])]), "s", ws).double("n", wn).lhs(),
        )
        .param("v", 0.7, 3.0)
        .param("s", 0.05, 0.45)
        .int("n", 1.0, 5.0)
        .rhs("Γ(s)Γ(v−2s)Γ(1−s)·Φ(n,s)/(Γ(v)Γ(1−2s))", |p| {
            let (s, v) = (p["s"], p["v"]);
            Ok(gamma(s)? * gamma(v - 2.0 * s)? * gamma(1.0 - s)? * phi(p["n"], s)? / (gamma(v)? * gamma(1.0 - 2.0 * s)?))
        })
        .when("0 < s < 1/2", |p| p["s"] > 0.0 && p["s"] < 0.5)
        .when("v > 2s", |p| p["v"] > 2.0 * p["s"])
        .when("Φ(n, s) converges", |p| phi_ok(p["n"], p["s"]))
        .sample(&[("v", 1.0), ("s", 0.3), ("n", 1.0)])
        .sample(&[("v", 2.0), ("s", 0.25), ("n", 3.0)])
        .sample(&[("v", 1.5), ("s", 0.4), ("n", 1.0)])
        .done(),
        case(
            "eq5.6",
            "Similarly, the expansion",
            B,
            mellin("sin_atan", "v = v", |p| pm(&[("v", p["v"])]), "s", ws).double("n", wn).lhs(),
        )
        .param("v", 0.7, 3.0)
        .param("s", 0.05, 0.95)
        .int("n", 1.0, 5.0)
        .rhs("Γ(s)Γ(2v−2s+1)Γ(1−s)·Φ(n,s)/(Γ(2v)Γ(2−2s))", |p| {
            let (s, v) = (p["s"], p["v"]);
            Ok(gamma(s)? * gamma(2.0 * v - 2.0 * s + 1.0)? * gamma(1.0 - s)? * phi(p["n"], s)?
                / (gamma(2.0 * v)? * gamma(2.0 - 2.0 * s)?))
        })
        .when("0 < s < 1", |p| p["s"] > 0.0 && p["s"] < 1.0)
        .when("v > s + 1/2", |p| p["v"] > p["s"] + 0.5)
        .when("Φ(n, s) converges", |p| phi_ok(p["n"], p["s"]))
        .sample(&[("v", 1.2), ("s", 0.5), ("n", 1.0)])
        .sample(&[("v", 1.5), ("s", 0.3), ("n", 3.0)])
        .sample(&[("v", 2.0), ("s", 0.7), ("n", 1.0)])
        .done(),
        case(
            "cor5.1.1.i",
            "has expansion of the form",
            B,
            mellin(
                "exp",
                "a = a, q = k, xt_scale = 1/p",
                |p| pm(&[("a", p["a"]), ("q", p["k"]), ("xt_scale", 1.0 / p["p"])]),
                "s",
                ws,
            )
            .double("n", wn)
            .lhs(),
        )
        .param("s", 1.0, 12.0)
        .param("k", 0.5, 3.0)
        .param("p", 0.5, 3.0)
        .param("a", 0.5, 2.0)
        .int("n", 2.0, 7.0)
        .rhs("pΓk(s)·φ(−s/k)·Φ(n, s/k), φ(r) = a^r", |p| {
            let (s, k) = (p["s"], p["k"]);
            Ok(gamma_pk(s, p["p"], k)? * p["a"].powf(-s / k) * phi(p["n"], s / k)?)
        })
        .when("2 < s/k < n+1", |p| p["s"] > 2.0 * p["k"] && p["s"] < (p["n"] + 1.0) * p["k"])
        .when("Φ(n, s/k) converges", |p| phi_ok(p["n"], p["s"] / p["k"]))
        .when("a, p, k > 0", |p| p["a"] > 0.0 && p["p"] > 0.0 && p["k"] > 0.0)
        .sample(&[("s", 5.0), ("k", 2.0), ("p", 2.0), ("a", 1.0), ("n", 3.0)])
        .sample(&[("s", 3.0), ("k", 1.0), ("p", 1.0), ("a", 1.0), ("n", 3.0)])
        .sample(&[("s", 4.5), ("k", 1.5), ("p", 3.0), ("a", 0.8), ("n", 4.0)])
        .done(),
        case(
            "cor5.1.1.ii",
            "by setting p=k",
            B,
            mellin(
                "exp",
                "a = a, q = k, xt_scale = 1/k",
                |p| pm(&[("a", p["a"]), ("q", p["k"]), ("xt_scale", 1.0 / p["k"])]),
                "s",
                ws,
            )
            .double("n", wn)
            .lhs(),
        )
        .param("s", 1.0, 12.0)
        .param("k", 0.5, 3.0)
        .param("a", 0.5, 2.0)
        .int("n", 2.0, 7.0)
        .rhs("Γ_k(s)·φ(−s/k)·Φ(n, s/k), φ(r) = a^r", |p| {
            let (s, k) = (p["s"], p["k"]);
            Ok(gamma_k(s, k)? * p["a"].powf(-s / k) * phi(p["n"], s / k)?)
        })
        .when("2 < s/k < n+1", |p| p["s"] > 2.0 * p["k"] && p["s"] < (p["n"] + 1.0) * p["k"])
        .when("Φ(n, s/k) converges", |p| phi_ok(p["n"], p["s"] / p["k"]))
        .when("a, k > 0", |p| p["a"] > 0.0 && p["k"] > 0.0)
        .sample(&[("s", 5.0), ("k", 2.0), ("a", 1.0), ("n", 3.0)])
        .sample(&[("s", 3.5), ("k", 1.0), ("a", 1.5), ("n", 5.0)])
        .done(),
        case(
            "cor5.1.2",
            "Substitute x with x t",
            B,
            mellin(
                "frac_exp",
                "c, a, r, k = 1",
                |p| pm(&[("c", p["c"]), ("a", p["a"]), ("r", p["r"]), ("k", 1.0)]),
                "s",
                ws,
            )
            .double("n", wn)
            .lhs(),
        )
        .param("c", 0.5, 3.0)
        .param("a", -1.0, 1.0)
        .param("r", 0.0, 3.0)
        .param("s", 0.2, 5.0)
        .int("n", 1.0, 7.0)
        .rhs("Γ(s)·f^{(r−s)}(a)·Φ(n,s), f(t) = e^{ct}", |p| {
            let (c, s) = (p["c"], p["s"]);
            Ok(gamma(s)? * c.powf(p["r"] - s) * (c * p["a"]).exp() * phi(p["n"], s)?)
        })
        .when("0 < s < n+1", |p| p["s"] > 0.0 && p["s"] < p["n"] + 1.0)
        .when("Φ(n, s) converges", |p| phi_ok(p["n"], p["s"]))
        .when("c > 0", |p| p["c"] > 0.0)
        .sample(&[("c", 2.0), ("a", 0.0), ("r", 1.5), ("s", 2.0), ("n", 3.0)])
        .sample(&[("c", 1.0), ("a", 0.5), ("r", 1.0), ("s", 0.5), ("n", 1.0)])
        .done(),
        case(
            "cor5.1.3.i",
            "are special cases of corollary (i)",
            B,
            mellin("bose", "a = 1", |_| pm(&[("a", 1.0)]), "s", ws).double("n", wn).lhs(),
        )
        .param("s", 2.05, 8.0)
        .int("n", 2.0, 8.0)
        .rhs("Γ(s)ζ(s)·Φ(n,s)", |p| Ok(gamma(p["s"])? * zeta(p["s"])? * phi(p["n"], p["s"])?))
        .when("2 < s < n+1", |p| p["s"] > 2.0 && p["s"] < p["n"] + 1.0)
        .when("Φ(n, s) converges", |p| phi_ok(p["n"], p["s"]))
        .sample(&[("s", 3.0), ("n", 3.0)])
        .sample(&[("s", 2.5), ("n", 4.0)])
        .sample(&[("s", 4.0), ("n", 5.0)])
        .done(),
        case(
            "cor5.1.3.ii",
            "are special cases of corollary (i)",
            B,
            mellin("bose", "a = 1", |_| pm(&[("a", 1.0)]), "3", |_| 3.0).double("2j+3", j3).lhs(),
        )
        .int("j", 0.0, 4.0)
        .rhs("Γ(3)ζ(3)·√π(j+3/2)Γ(j+½)/(4(j+1)!)", |p| Ok(gamma(3.0)? * zeta(3.0)? * entry_s3(p["j"])?))
        .when("j ∈ {0, 1, …}", |p| is_integer(p["j"]) && p["j"] >= 0.0)
        .sample(&[("j", 0.0)])
        .sample(&[("j", 1.0)])
        .done(),
        case(
            "cor5.1.3.iii",
            "are special cases of corollary (i)",
            B,
            mellin("bose", "a = 1", |_| pm(&[("a", 1.0)]), "4", |_| 4.0).double("2j+4", j4).lhs(),
        )
        .int("j", 0.0, 4.0)
        .rhs("Γ(4)ζ(4)·√π(j+2)Γ(j+½)/(6(j+1)!)", |p| Ok(gamma(4.0)? * zeta(4.0)? * entry_s4(p["j"])?))
        .when("j ∈ {0, 1, …}", |p| is_integer(p["j"]) && p["j"] >= 0.0)
        .sample(&[("j", 0.0)])
        .sample(&[("j", 1.0)])
        .done(),
        case(
            "cor5.2.1.i",
            "follows by letting s=3",
            B,
            mellin("exp", "a = a", |p| pm(&[("a", p["a"])]), "3", |_| 3.0).double("2j+3", j3).lhs(),
        )
        .int("j", 0.0, 4.0)
        .param("a", 0.5, 3.0)
        .rhs("√π·Γ(3)·φ(−3)·(j+3/2)Γ(j+½)/(4(j+1)!), φ(k) = a^k", |p| {
            Ok(gamma(3.0)? * p["a"].powi(-3) * entry_s3(p["j"])?)
        })
        .when("j ∈ {0, 1, …}", |p| is_integer(p["j"]) && p["j"] >= 0.0)
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("j", 0.0), ("a", 1.0)])
        .sample(&[("j", 1.0), ("a", 2.0)])
        .done(),
        case(
            "cor5.2.1.ii",
            "follows by letting s=3",
            B,
            mellin("exp", "a = a", |p| pm(&[("a", p["a"])]), "4", |_| 4.0).double("2j+4", j4).lhs(),
        )
        .int("j", 0.0, 4.0)
        .param("a", 0.5, 3.0)
        .rhs("√π·Γ(4)·φ(−4)·(j+2)Γ(j+½)/(6(j+1)!), φ(k) = a^k", |p| {
            Ok(gamma(4.0)? * p["a"].powi(-4) * entry_s4(p["j"])?)
        })
        .when("j ∈ {0, 1, …}", |p| is_integer(p["j"]) && p["j"] >= 0.0)
        .when("a > 0", |p| p["a"] > 0.0)
        .sample(&[("j", 0.0), ("a", 1.0)])
        .sample(&[("j", 1.0), ("a", 0.5)])
        .done(),
    ]
}
