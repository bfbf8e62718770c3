//! Property tests for the special functions, series, quadrature and Φ(n, s).

use std::f64::consts::PI;

use proptest::prelude::*;
use rmtverify::phi_ns::{phi_ns_closed, phi_ns_quadrature};
use rmtverify::quadrature::{integrate_oscillatory, mellin_integral, QuadConfig};
use rmtverify::series::{
    closed_integrand, eval_classic, eval_k_form, eval_pk_form, eval_series, integrand_ids, lattice_sum,
    ClosedIntegrand, LatticeMode, LatticeSpec, Params, PhiSpec, SeriesForm, SeriesKind,
};
use rmtverify::specfun::{digamma, gamma, gamma_k, hyp2f1, ln_gamma, xi_completed, zeta};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn params(kv: &[(&str, f64)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gamma_recurrence(x in 0.1f64..50.0) {
        let r = rel(gamma(x + 1.0).unwrap(), x * gamma(x).unwrap());
        prop_assert!(r <= 1e-12, "x={x} rel={r:e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gamma_reflection(x in 0.001f64..0.999) {
        let v = gamma(x).unwrap() * gamma(1.0 - x).unwrap() * (PI * x).sin() / PI;
        prop_assert!((v - 1.0).abs() <= 1e-11, "x={x} v={v}");
    }

    #[test]
    fn digamma_is_log_gamma_slope(x in 0.3f64..40.0) {
        let h = 1e-5;
        let fd = (ln_gamma(x + h).unwrap() - ln_gamma(x - h).unwrap()) / (2.0 * h);
        prop_assert!((digamma(x).unwrap() - fd).abs() <= 1e-8);
    }

    #[test]
    fn xi_is_symmetric(s in -9.0f64..10.0) {
        prop_assume!((s - s.round()).abs() > 1e-3 && (0.5 - s).abs() > 1e-3);
        let (a, b) = (xi_completed(s).unwrap(), xi_completed(1.0 - s).unwrap());
        prop_assert!(rel(a, b) <= 1e-10, "s={s} {a} {b}");
    }

    #[test]
    fn hyp2f1_pfaff(a in 0.1f64..3.0, b in 0.1f64..3.0, c in 0.5f64..4.0) {
        let x = -0.5;
        let direct = hyp2f1(a, b, c, x).unwrap();
        let pfaff = (1.0 - x).powf(-a) * hyp2f1(a, c - b, c, x / (x - 1.0)).unwrap();
        prop_assert!((direct - pfaff).abs() <= 1e-11 * direct.abs().max(1.0));
    }

    #[test]
    fn mellin_of_exp_is_gamma(s in 0.1f64..20.0) {
        let f = closed_integrand("exp", &Params::new()).unwrap();
        let r = mellin_integral(&f, s, &QuadConfig::default()).unwrap();
        prop_assert!(rel(r.value, gamma(s).unwrap()) <= 1e-10);
    }

    #[test]
    fn phi_is_positive(n in 1u32..9, t in 0.02f64..0.98) {
        let lo = if n % 2 == 0 { 1.0 } else { 0.0 };
        let s = lo + t * (n as f64 + 1.0 - lo);
        prop_assume!(s > 0.05);
        let v = phi_ns_quadrature(n, s, &QuadConfig::default()).unwrap().value;
        prop_assert!(v > 0.0, "Φ({n},{s}) = {v}");
    }
}

#[test]
fn gamma_k_at_multiples() {
    for k in [0.5f64, 1.0, 2.0, 3.7] {
        for s in 1..=10u32 {
            let fact: f64 = (1..s).map(f64::from).product();
            let want = k.powi(s as i32 - 1) * fact;
            let got = gamma_k(s as f64 * k, k).unwrap();
            assert!(rel(got, want) <= 1e-12, "k={k} s={s}: {got} vs {want}");
        }
    }
}

#[test]
fn zeta_against_dirichlet_sums() {
    let n = 1_000_000u32;
    for s in [2.0f64, 3.0, 4.0, 6.0] {
        let head: f64 = (1..n).rev().map(|m| (m as f64).powf(-s)).sum();
        let nf = n as f64;
        // Euler–Maclaurin tail from N
        let tail = nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s) + s / 12.0 * nf.powf(-s - 1.0);
        assert!(rel(zeta(s).unwrap(), head + tail) <= 1e-12, "s={s}");
    }
}

#[test]
fn catalog_series_agree_with_closed_forms() {
    let defaults: &[(&str, &[(&str, f64)])] =
        &[("sqrt_binomial", &[("mu", 6.0)]), ("inv_binomial", &[("alpha", 1.0), ("v", 3.0)]), ("f4_root", &[("r", 3.0)])];
    let mut tested = 0;
    for id in integrand_ids() {
        let kv = defaults.iter().find(|(d, _)| d == id).map_or(&[][..], |(_, kv)| *kv);
        let Ok(f) = closed_integrand(id, &params(kv)) else { continue };
        if let Some(dev) = f.self_test() {
            assert!(dev <= 1e-10, "{id}: {dev:e}");
            tested += 1;
        }
    }
    assert!(tested >= 15, "{tested}");
}

#[test]
fn unit_k_and_p_collapse_to_classic() {
    let phi = PhiSpec::new("recip", |u| 1.0 / (1.0 + u), (-0.5, f64::INFINITY)).unwrap();
    for i in 0..30 {
        let x = 0.05 + 0.1 * i as f64;
        let c = eval_classic(&phi, x, 1e-16).unwrap();
        assert_eq!(c, eval_k_form(&phi, 1.0, x, 1e-16).unwrap());
        assert_eq!(c, eval_pk_form(&phi, 1.0, 1.0, x, 1e-16).unwrap());
    }
}

#[test]
fn bose_lattice_of_exponential() {
    let f = closed_integrand("exp", &Params::new()).unwrap();
    let spec = LatticeSpec::new(LatticeMode::LinearM);
    for i in 0..60 {
        let x = 0.1 * 200f64.powf(i as f64 / 59.0);
        let v = lattice_sum(&f, &spec, x).unwrap().value;
        let want = 1.0 / x.exp_m1();
        assert!(rel(v, want) <= 1e-12, "x={x}: {v} vs {want}");
    }
}

#[test]
fn alternating_truncation_estimates_bound_the_error() {
    // e^{−x}: φ ≡ 1 in the classic form
    let phi = PhiSpec::one();
    for x in [0.1, 0.5, 1.0, 2.0, 5.0] {
        for tol in [1e-4, 1e-8] {
            let sv = eval_series(&phi, &SeriesForm::new(SeriesKind::Classic), x, tol).unwrap();
            let err = (sv.value - (-x).exp()).abs();
            let roundoff = 8.0 * f64::EPSILON * sv.value.abs();
            assert!(err <= sv.trunc_err + roundoff, "x={x} tol={tol}: {err:e} > {:e}", sv.trunc_err);
        }
    }
}

fn mellin(f: &ClosedIntegrand, s: f64, cfg: &QuadConfig) -> f64 {
    mellin_integral(f, s, cfg).unwrap().value
}

#[test]
fn mellin_scaling_law() {
    let cfg = QuadConfig::default();
    let cases: [(&str, f64); 3] = [("bose", 2.5), ("geometric_k", 0.7), ("exp_k", 1.3)];
    for (id, s) in cases {
        let kv: &[(&str, f64)] = if id == "geometric_k" { &[("k", 2.0)] } else { &[("k", 2.0)][..0] };
        let f = closed_integrand(id, &params(kv)).unwrap();
        let base = mellin(&f, s, &cfg);
        for a in [0.5, 2.0, 5.0] {
            let g = closed_integrand(id, &params(kv)).unwrap();
            let scaled = ClosedIntegrand::new("scaled", move |x| g.eval(a * x), f.decay_exponent, f.singular_exponent);
            let v = mellin(&scaled, s, &cfg);
            assert!(rel(v, a.powf(-s) * base) <= 1e-9, "{id} a={a}");
        }
    }
}

#[test]
fn mellin_split_point_independence() {
    for (id, s) in [("bose", 3.0), ("log1p_over_x", 0.5), ("exp", 4.5)] {
        let f = closed_integrand(id, &Params::new()).unwrap();
        let vals: Vec<f64> = [0.5, 1.0, 2.0]
            .iter()
            .map(|&c| mellin(&f, s, &QuadConfig { split_point: c, ..QuadConfig::default() }))
            .collect();
        assert!(rel(vals[0], vals[1]) <= 1e-9 && rel(vals[2], vals[1]) <= 1e-9, "{id}: {vals:?}");
    }
}

#[test]
fn error_estimates_are_honest() {
    let f = closed_integrand("exp", &Params::new()).unwrap();
    let cfg = QuadConfig::default();
    let mut honest = 0;
    let total = 200;
    for i in 0..total {
        let s = 0.1 + 19.9 * i as f64 / (total - 1) as f64;
        let r = mellin_integral(&f, s, &cfg).unwrap();
        let err = (r.value - gamma(s).unwrap()).abs();
        if err <= 3.0 * r.est_abs_err {
            honest += 1;
        }
    }
    assert!(honest * 100 >= 95 * total, "{honest}/{total}");
}

#[test]
fn oscillatory_reproduces_closed_values() {
    let cfg = QuadConfig::default();
    for (n, s, want) in [(1, 1, PI / 2.0), (2, 2, PI / 2.0), (3, 3, 3.0 * PI / 8.0), (4, 4, PI / 3.0)] {
        let q = integrate_oscillatory(n, s as f64, &cfg).unwrap().value;
        assert!(rel(q, want) <= 1e-8);
        assert!(rel(phi_ns_closed(n, s).unwrap(), want) <= 1e-14);
    }
    for n in 1..=15u32 {
        for s in 1..=4u32 {
            if let Ok(c) = phi_ns_closed(n, s) {
                let q = phi_ns_quadrature(n, s as f64, &cfg).unwrap().value;
                assert!(rel(q, c) <= 1e-8, "Φ({n},{s}): {q} vs {c}");
            }
        }
    }
}

#[test]
fn recursion_residual_is_tiny() {
    let cfg = QuadConfig::default();
    let q = |n: u32, s: u32| integrate_oscillatory(n, s as f64, &cfg).unwrap().value;
    for n in 3..=14u32 {
        for s in 3..=n.min(8) {
            if n % 2 == 0 && s < 4 {
                continue;
            }
            let (nf, sf) = (n as f64, s as f64);
            let lead = (sf - 1.0) * (sf - 2.0) * q(n, s);
            let res = lead - nf * (nf - 1.0) * q(n - 2, s - 2) + nf * nf * q(n, s - 2);
            assert!(res.abs() <= 1e-9 * lead.abs(), "n={n} s={s}: {res:e}");
        }
    }
}
