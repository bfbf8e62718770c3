//! Φ(n, s) = ∫₀^∞ sinⁿt / tˢ dt by closed form, two-step recursion in s,
//! and oscillatory quadrature.
//!
//! The integral converges for 0 < s < n+1, and for even n only when s > 1
//! (the mean of sinⁿ is non-zero).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quadrature::{integrate_oscillatory, QuadConfig, QuadError, QuadResult};
use crate::specfun::{gamma, gamma_guarded, SpecFunError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhiPath {
    ClosedForm,
    Recursion,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhiNS {
    pub n: u32,
    pub s: f64,
    pub value: f64,
    pub path: PhiPath,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PhiError {
    #[error("parity of n = {n} does not match s = {s}")]
    ParityMismatch { n: u32, s: u32 },
    #[error("no closed form for s = {0}")]
    UnsupportedS(f64),
    #[error("Φ({n}, {s}) is outside its convergence strip")]
    DomainError { n: u32, s: f64 },
    #[error("recursion reaches the divergent base Φ({n}, {s})")]
    DivergentBase { n: u32, s: f64 },
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

pub type Result<T> = std::result::Result<T, PhiError>;

pub fn in_strip(n: u32, s: f64) -> bool {
    n > 0 && s > 0.0 && s < n as f64 + 1.0 && (n % 2 == 1 || s > 1.0)
}

fn check(n: u32, s: f64) -> Result<()> {
    if in_strip(n, s) {
        Ok(())
    } else {
        Err(PhiError::DomainError { n, s })
    }
}

fn factorial(j: u32) -> f64 {
    (1..=j).map(f64::from).product()
}

/// Closed forms for s ∈ {1, 2, 3, 4}:
///
/// * Φ(2j+1, 1) = Φ(2j+2, 2) = √π Γ(j+½) / (2·j!)
/// * Φ(2j+3, 3) = √π (j+3/2) Γ(j+½) / (4·(j+1)!)
/// * Φ(2j+4, 4) = √π (j+2) Γ(j+½) / (6·(j+1)!)
pub fn phi_ns_closed(n: u32, s: u32) -> Result<f64> {
    let odd = n % 2 == 1;
    let (j, ok) = match s {
        1 => (n.saturating_sub(1) / 2, odd),
        2 => (n.saturating_sub(2) / 2, !odd && n >= 2),
        3 => (n.saturating_sub(3) / 2, odd && n >= 3),
        4 => (n.saturating_sub(4) / 2, !odd && n >= 4),
        _ => return Err(PhiError::UnsupportedS(s as f64)),
    };
    if !ok {
        return Err(PhiError::ParityMismatch { n, s });
    }
    let jf = j as f64;
    let g = PI.sqrt() * gamma(jf + 0.5)?;
    Ok(match s {
        1 | 2 => g / (2.0 * factorial(j)),
        3 => g * (jf + 1.5) / (4.0 * factorial(j + 1)),
        _ => g * (jf + 2.0) / (6.0 * factorial(j + 1)),
    })
}

pub fn phi_ns_quadrature(n: u32, s: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    check(n, s)?;
    Ok(integrate_oscillatory(n, s, cfg)?)
}

/// (s−1)(s−2)Φ(n,s) = n(n−1)Φ(n−2,s−2) − n²Φ(n,s−2), descending until
/// s ≤ 2. Integer bases use the closed forms, others the quadrature.
pub fn phi_ns_recursive(n: u32, s: f64, cfg: &QuadConfig) -> Result<f64> {
    check(n, s)?;
    if !(s > 2.0) {
        return Err(PhiError::DomainError { n, s });
    }
    descend(n, s, cfg)
}

fn descend(n: u32, s: f64, cfg: &QuadConfig) -> Result<f64> {
    if s <= 2.0 {
        return base(n, s, cfg);
    }
    if !in_strip(n, s) {
        return Err(PhiError::DomainError { n, s });
    }
    let nf = n as f64;
    let mut acc = -nf * nf * descend(n, s - 2.0, cfg)?;
    if n >= 2 {
        acc += nf * (nf - 1.0) * descend(n - 2, s - 2.0, cfg)?;
    }
    Ok(acc / ((s - 1.0) * (s - 2.0)))
}

fn base(n: u32, s: f64, cfg: &QuadConfig) -> Result<f64> {
    if n == 0 || (n % 2 == 0 && s <= 1.0) {
        return Err(PhiError::DivergentBase { n, s });
    }
    if !in_strip(n, s) {
        return Err(PhiError::DomainError { n, s });
    }
    if s.fract() == 0.0 {
        if let Ok(v) = phi_ns_closed(n, s as u32) {
            return Ok(v);
        }
    }
    Ok(integrate_oscillatory(n, s, cfg)?.value)
}

/// Best available path: closed form, then recursion, then quadrature.
pub fn phi_ns(n: u32, s: f64, cfg: &QuadConfig) -> Result<PhiNS> {
    check(n, s)?;
    if s.fract() == 0.0 && s <= 4.0 {
        if let Ok(value) = phi_ns_closed(n, s as u32) {
            return Ok(PhiNS { n, s, value, path: PhiPath::ClosedForm });
        }
    }
    if s > 2.0 && s.fract() == 0.0 {
        if let Ok(value) = phi_ns_recursive(n, s, cfg) {
            return Ok(PhiNS { n, s, value, path: PhiPath::Recursion });
        }
    }
    let value = phi_ns_quadrature(n, s, cfg)?.value;
    Ok(PhiNS { n, s, value, path: PhiPath::Quadrature })
}

/// ∫₀^∞ sin t·t^{−s} dt = Γ(1−s)cos(πs/2) for 0 < s < 2; an oracle
/// independent of the recursion.
pub fn sine_mellin_oracle(s: f64) -> Result<f64> {
    if !(s > 0.0 && s < 2.0) {
        return Err(PhiError::DomainError { n: 1, s });
    }
    if (s - 1.0).abs() < 1e-12 {
        return Ok(PI / 2.0);
    }
    Ok(gamma_guarded(1.0 - s, 0.0)? * (PI * s / 2.0).cos())
}
