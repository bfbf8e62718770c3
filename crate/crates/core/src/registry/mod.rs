//! The identity catalog: each case pairs an executable left-hand integral
//! with a closed-form right-hand side, a validity strip and sample points.

mod cases;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::phi_ns::PhiError;
use crate::quadrature::{
    double_mellin_sin, integrate_oscillatory, mellin_integral, QuadConfig, QuadError, QuadResult,
};
use crate::series::{
    check_lattice, closed_integrand, closed_integrand2, lattice_sum, ClosedIntegrand, ClosedIntegrand2, LatticeMode,
    LatticeSpec, Params, SeriesError,
};
use crate::specfun::SpecFunError;

/// Convergence class of a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseClass {
    /// absolutely convergent
    A,
    /// conditionally convergent, oscillatory
    B,
    /// formal; only the right-hand side is evaluated
    F,
}

impl fmt::Display for CaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CaseClass::A => "A",
            CaseClass::B => "B",
            CaseClass::F => "F",
        };
        f.write_str(c)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegistryError {
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("case `{case}` is missing parameter `{name}`")]
    MissingParam { case: String, name: String },
    #[error("case `{case}`: parameters violate `{constraint}`")]
    StripViolation { case: String, constraint: String },
    #[error("pole argument: {0}")]
    PoleArgument(String),
    #[error("case `{0}` is formal and has no left-hand evaluation plan")]
    FormalCase(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    SpecFun(SpecFunError),
    #[error(transparent)]
    Phi(PhiError),
}

impl From<SpecFunError> for RegistryError {
    fn from(e: SpecFunError) -> Self {
        match e {
            SpecFunError::PoleArgument(x) => RegistryError::PoleArgument(format!("{x}")),
            other => RegistryError::SpecFun(other),
        }
    }
}

impl From<PhiError> for RegistryError {
    fn from(e: PhiError) -> Self {
        match e {
            PhiError::SpecFun(s) => s.into(),
            other => RegistryError::Phi(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, RegistryError>;

pub type ParamFn = fn(&Params) -> f64;

/// A numeric function of the case parameters with its printed form.
#[derive(Clone, Copy)]
pub struct Expr {
    pub text: &'static str,
    pub eval: ParamFn,
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text)
    }
}

#[derive(Clone, Copy)]
pub struct Rhs {
    pub text: &'static str,
    pub eval: fn(&Params) -> Result<f64>,
}

impl fmt::Debug for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text)
    }
}

/// One inequality or pole guard of a validity strip.
#[derive(Clone, Copy)]
pub struct Constraint {
    pub text: &'static str,
    pub holds: fn(&Params) -> bool,
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text)
    }
}

/// A case parameter and the box the random sampler draws it from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamRange {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    pub integer: bool,
}

#[derive(Debug, Clone)]
pub struct IntegrandSpec {
    pub integrand: &'static str,
    /// Maps case parameters to integrand parameters.
    pub bind: fn(&Params) -> Params,
    pub bind_text: &'static str,
    pub lattice: LatticeMode,
    /// Exponent `w` of the Mellin weight `x^{w−1}`.
    pub weight_exponent: Expr,
    pub prefactor: Option<Expr>,
    /// Power of `sin t` for the double integral over (x, t).
    pub double_sin_n: Option<Expr>,
}

#[derive(Debug, Clone)]
pub enum Lhs {
    Integral(IntegrandSpec),
    /// ∫₀^∞ sinⁿt·t^{−s} dt by oscillatory quadrature.
    SinPower { n: Expr, s: Expr },
}

#[derive(Debug, Clone)]
pub struct IdentityCase {
    pub case_id: &'static str,
    /// Short quotation locating the identity in its source text.
    pub paper_ref: &'static str,
    pub class: CaseClass,
    pub params: Vec<ParamRange>,
    pub lhs: Lhs,
    pub rhs: Rhs,
    pub strip: Vec<Constraint>,
    pub default_samples: Vec<Params>,
}

impl IdentityCase {
    pub fn check_params(&self, params: &Params) -> Result<()> {
        for p in &self.params {
            if !params.get(&p.name).is_some_and(|v| v.is_finite()) {
                return Err(RegistryError::MissingParam { case: self.case_id.into(), name: p.name.clone() });
            }
        }
        Ok(())
    }

    /// The first violated strip constraint, if any.
    pub fn violation(&self, params: &Params) -> Option<&'static str> {
        self.strip.iter().find(|c| !(c.holds)(params)).map(|c| c.text)
    }

    pub fn in_strip(&self, params: &Params) -> bool {
        self.check_params(params).is_ok() && self.violation(params).is_none()
    }

    fn require_strip(&self, params: &Params) -> Result<()> {
        self.check_params(params)?;
        match self.violation(params) {
            Some(c) => Err(RegistryError::StripViolation { case: self.case_id.into(), constraint: c.into() }),
            None => Ok(()),
        }
    }

    /// The catalog integrand behind the left-hand side, with parameters bound.
    pub fn integrand(&self, params: &Params) -> Result<Option<(ClosedIntegrand, LatticeMode)>> {
        match &self.lhs {
            Lhs::Integral(spec) => Ok(Some((closed_integrand(spec.integrand, &(spec.bind)(params))?, spec.lattice))),
            Lhs::SinPower { .. } => Ok(None),
        }
    }

    pub fn manifest(&self) -> CaseManifest {
        let lhs = match &self.lhs {
            Lhs::Integral(s) => LhsManifest::Integral {
                integrand: s.integrand.into(),
                params: s.bind_text.into(),
                lattice: s.lattice,
                weight_exponent: s.weight_exponent.text.into(),
                prefactor: s.prefactor.map(|e| e.text.into()),
                double_sin_n: s.double_sin_n.map(|e| e.text.into()),
            },
            Lhs::SinPower { n, s } => LhsManifest::SinPower { n: n.text.into(), s: s.text.into() },
        };
        CaseManifest {
            case_id: self.case_id.into(),
            paper_ref: self.paper_ref.into(),
            class: self.class,
            params: self.params.clone(),
            lhs,
            rhs: self.rhs.text.into(),
            strip: self.strip.iter().map(|c| c.text.into()).collect(),
            default_samples: self.default_samples.clone(),
        }
    }
}

/// Serializable view of a case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseManifest {
    pub case_id: String,
    pub paper_ref: String,
    pub class: CaseClass,
    pub params: Vec<ParamRange>,
    pub lhs: LhsManifest,
    pub rhs: String,
    pub strip: Vec<String>,
    pub default_samples: Vec<Params>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LhsManifest {
    Integral {
        integrand: String,
        params: String,
        lattice: LatticeMode,
        weight_exponent: String,
        prefactor: Option<String>,
        double_sin_n: Option<String>,
    },
    SinPower {
        n: String,
        s: String,
    },
}

/// The full catalog, sorted by case id.
pub fn build_catalog() -> &'static [IdentityCase] {
    static CATALOG: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut v = cases::all();
        v.sort_by(|a, b| a.case_id.cmp(b.case_id));
        v
    })
}

pub fn find_case(case_id: &str) -> Result<&'static IdentityCase> {
    build_catalog()
        .iter()
        .find(|c| c.case_id == case_id)
        .ok_or_else(|| RegistryError::UnknownCase(case_id.into()))
}

pub fn manifest() -> Vec<CaseManifest> {
    build_catalog().iter().map(IdentityCase::manifest).collect()
}

pub fn case_rhs(case: &IdentityCase, params: &Params) -> Result<f64> {
    case.require_strip(params)?;
    let v = (case.rhs.eval)(params)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(RegistryError::PoleArgument(format!("`{}` right-hand side is {v}", case.case_id)))
    }
}

/// An executable left-hand integral.
#[derive(Clone)]
pub enum LhsPlan {
    Mellin { integrand: ClosedIntegrand, s: f64, prefactor: f64 },
    DoubleSin { integrand: ClosedIntegrand2, s: f64, n: u32, prefactor: f64 },
    SinPower { n: u32, s: f64 },
}

impl fmt::Debug for LhsPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LhsPlan::Mellin { integrand, s, prefactor } => {
                write!(f, "{prefactor}·mellin_integral({}, {s})", integrand.id)
            }
            LhsPlan::DoubleSin { integrand, s, n, prefactor } => {
                write!(f, "{prefactor}·double_mellin_sin({}, {s}, {n})", integrand.id)
            }
            LhsPlan::SinPower { n, s } => write!(f, "integrate_oscillatory({n}, {s})"),
        }
    }
}

impl LhsPlan {
    pub fn engine(&self) -> &'static str {
        match self {
            LhsPlan::Mellin { .. } => "mellin_integral",
            LhsPlan::DoubleSin { .. } => "double_mellin_sin",
            LhsPlan::SinPower { .. } => "integrate_oscillatory",
        }
    }

    pub fn execute(&self, cfg: &QuadConfig) -> std::result::Result<QuadResult, QuadError> {
        let scaled = |r: QuadResult, c: f64| QuadResult { value: c * r.value, est_abs_err: c.abs() * r.est_abs_err, ..r };
        match self {
            LhsPlan::Mellin { integrand, s, prefactor } => {
                mellin_integral(integrand, *s, cfg).map(|r| scaled(r, *prefactor))
            }
            LhsPlan::DoubleSin { integrand, s, n, prefactor } => {
                double_mellin_sin(integrand, *s, *n, cfg).map(|r| scaled(r, *prefactor))
            }
            LhsPlan::SinPower { n, s } => integrate_oscillatory(*n, *s, cfg),
        }
    }
}

fn as_count(x: f64) -> Result<u32> {
    if x >= 0.0 && x.fract() == 0.0 && x <= u32::MAX as f64 {
        Ok(x as u32)
    } else {
        Err(RegistryError::Series(SeriesError::BadParams(format!("expected a non-negative integer, got {x}"))))
    }
}

pub fn case_lhs_plan(case: &IdentityCase, params: &Params) -> Result<LhsPlan> {
    if case.class == CaseClass::F {
        return Err(RegistryError::FormalCase(case.case_id.into()));
    }
    case.require_strip(params)?;
    match &case.lhs {
        Lhs::SinPower { n, s } => Ok(LhsPlan::SinPower { n: as_count((n.eval)(params))?, s: (s.eval)(params) }),
        Lhs::Integral(spec) => {
            let bound = (spec.bind)(params);
            let s = (spec.weight_exponent.eval)(params);
            let prefactor = spec.prefactor.map_or(1.0, |e| (e.eval)(params));
            if let Some(n) = spec.double_sin_n {
                let n = as_count((n.eval)(params))?;
                return Ok(LhsPlan::DoubleSin { integrand: closed_integrand2(spec.integrand, &bound)?, s, n, prefactor });
            }
            let base = closed_integrand(spec.integrand, &bound)?;
            let integrand = match spec.lattice {
                LatticeMode::None => base,
                mode => lattice_integrand(base, LatticeSpec::new(mode))?,
            };
            Ok(LhsPlan::Mellin { integrand, s, prefactor })
        }
    }
}

/// `x ↦ lattice_sum(f, spec, x)` as an integrand with the exponents of the
/// summed function.
pub fn lattice_integrand(f: ClosedIntegrand, spec: LatticeSpec) -> Result<ClosedIntegrand> {
    check_lattice(&f, spec.mode)?;
    let sing = f.singular_exponent.min(0.0);
    let singular = match spec.mode {
        LatticeMode::None => f.singular_exponent,
        LatticeMode::ThetaN2 => sing.min(-0.5),
        LatticeMode::LinearM | LatticeMode::DoubleMN => sing.min(-1.0),
    };
    let decay = f.decay_exponent;
    let id = format!("{}[{:?}]", f.id, spec.mode);
    Ok(ClosedIntegrand::new(
        &id,
        move |x| lattice_sum(&f, &spec, x).map_or(f64::NAN, |v| v.value),
        decay,
        singular,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, f64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    const REQUIRED: &[&str] = &[
        "eq1.1", "eq1.5", "def2.1", "thm2.1", "cor2.1.1", "cor2.1.2", "eq2.6", "thm2.2.i", "thm2.2.ii", "thm2.2.iii",
        "thm2.2.iv", "thm2.3", "cor2.3.1", "def3.1", "def3.2", "thm3.1", "cor3.1.1", "eq3.4", "eq3.5", "eq3.6",
        "eq3.9", "eq3.10", "eq3.11", "thm4.1", "cor4.1.1", "eq4.7", "cor4.1.2", "cor4.1.3", "cor4.1.4", "ex4.1.1",
        "ex4.1.2", "ex4.1.3", "thm4.2.i", "thm4.2.ii", "thm4.2.iii", "thm4.2.iv", "thm5.1.exp", "thm5.2.i",
        "thm5.2.ii.s3", "thm5.2.ii.s4", "ex5.1.2", "eq5.4", "eq5.6", "cor5.1.1.i", "cor5.1.1.ii", "cor5.1.2",
        "cor5.1.3.i", "cor5.1.3.ii", "cor5.1.3.iii", "cor5.2.1.i", "cor5.2.1.ii",
    ];

    #[test]
    fn catalog_is_complete_and_unique() {
        let cat = build_catalog();
        assert!(cat.len() >= 30);
        for id in REQUIRED {
            assert!(find_case(id).is_ok(), "missing {id}");
        }
        for w in cat.windows(2) {
            assert!(w[0].case_id < w[1].case_id, "duplicate or unsorted {}", w[1].case_id);
        }
        assert!(cat.iter().all(|c| !c.paper_ref.is_empty() && !c.default_samples.is_empty()));
    }

    #[test]
    fn classes_follow_the_ledger() {
        let formal: Vec<&str> =
            build_catalog().iter().filter(|c| c.class == CaseClass::F).map(|c| c.case_id).collect();
        for id in ["ex4.1.1", "thm4.2.i", "thm4.2.ii", "thm4.2.iii", "thm4.2.iv", "ex5.1.2"] {
            assert!(formal.contains(&id), "{id}");
        }
        for id in ["eq5.4", "eq5.6", "thm5.1.exp", "cor5.1.3.i"] {
            assert_eq!(find_case(id).unwrap().class, CaseClass::B, "{id}");
        }
        for c in build_catalog() {
            if let Lhs::Integral(s) = &c.lhs {
                if s.double_sin_n.is_some() {
                    assert_ne!(c.class, CaseClass::A, "{}", c.case_id);
                }
            }
        }
    }

    #[test]
    fn default_samples_sit_inside_their_strips() {
        for c in build_catalog() {
            for p in &c.default_samples {
                assert!(c.in_strip(p), "{} {p:?} violates {:?}", c.case_id, c.violation(p));
                let r = case_rhs(c, p).unwrap_or_else(|e| panic!("{} {p:?}: {e}", c.case_id));
                assert!(r.is_finite());
            }
        }
    }

    #[test]
    fn integrands_exist() {
        for c in build_catalog() {
            for p in &c.default_samples {
                if let Lhs::Integral(s) = &c.lhs {
                    let bound = (s.bind)(p);
                    let ok = if s.double_sin_n.is_some() {
                        closed_integrand2(s.integrand, &bound).is_ok()
                    } else {
                        closed_integrand(s.integrand, &bound).is_ok()
                    };
                    assert!(ok, "{} {p:?}", c.case_id);
                }
            }
        }
    }

    #[test]
    fn formal_cases_have_no_plan() {
        for c in build_catalog().iter().filter(|c| c.class == CaseClass::F) {
            let p = &c.default_samples[0];
            assert!(matches!(case_lhs_plan(c, p), Err(RegistryError::FormalCase(_))), "{}", c.case_id);
        }
    }

    #[test]
    fn rhs_examples() {
        let c = find_case("cor4.1.1").unwrap();
        assert!((case_rhs(c, &params(&[("s", 2.0)])).unwrap() - 1.6449340668482264).abs() < 1e-15);
        let c = find_case("ex4.1.3").unwrap();
        assert!((case_rhs(c, &params(&[("mu", 6.0), ("s", 2.0)])).unwrap() - 0.4112335167120566).abs() < 1e-15);
        let c = find_case("thm2.2.i").unwrap();
        let p = params(&[("alpha", 2.0), ("beta", 3.0), ("gamma", 4.0), ("k", 1.0), ("s", 1.0)]);
        assert!((case_rhs(c, &p).unwrap() - 1.5).abs() < 1e-14);
    }

    #[test]
    fn plan_wiring() {
        let plan = case_lhs_plan(find_case("cor4.1.1").unwrap(), &params(&[("s", 2.0)])).unwrap();
        assert_eq!(plan.engine(), "mellin_integral");
        let p = params(&[("s", 2.0), ("n", 3.0), ("a", 1.0)]);
        let plan = case_lhs_plan(find_case("thm5.1.exp").unwrap(), &p).unwrap();
        assert_eq!(plan.engine(), "double_mellin_sin");
    }

    #[test]
    fn strip_and_param_errors() {
        let c = find_case("cor4.1.1").unwrap();
        assert!(matches!(case_rhs(c, &params(&[("s", 0.5)])), Err(RegistryError::StripViolation { .. })));
        assert!(matches!(case_rhs(c, &Params::new()), Err(RegistryError::MissingParam { .. })));
        assert!(matches!(find_case("nope"), Err(RegistryError::UnknownCase(_))));
    }

    #[test]
    fn manifest_round_trips() {
        let m = manifest();
        let text = serde_json::to_string_pretty(&m).unwrap();
        let back: Vec<CaseManifest> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert!(text.contains("\"cor4.1.1\""));
    }
}
