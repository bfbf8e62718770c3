//! Evaluates catalog cases on both sides, applies the tolerance policy and
//! collects records into suite reports.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quadrature::{QuadConfig, QuadError};
use crate::registry::{build_catalog, case_lhs_plan, case_rhs, find_case, CaseClass, IdentityCase, RegistryError};
use crate::series::Params;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error("bad filter pattern `{0}`")]
    BadPattern(String),
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
}

pub type Result<T> = std::result::Result<T, VerifyError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    SkippedFormal,
    QuadratureFailure,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "Pass",
            Status::Fail => "Fail",
            Status::SkippedFormal => "SkippedFormal",
            Status::QuadratureFailure => "QuadratureFailure",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub case_id: String,
    pub params: Params,
    pub lhs: Option<f64>,
    pub lhs_err: Option<f64>,
    pub rhs: f64,
    pub rel_diff: Option<f64>,
    pub status: Status,
    #[serde(rename = "wall_ms", with = "millis")]
    pub wall_time: Duration,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

mod millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64() * 1e3)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let ms = f64::deserialize(d)?;
        Ok(Duration::from_secs_f64(ms.max(0.0) / 1e3))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TolerancePolicy {
    pub class_a_tol: f64,
    pub class_b_tol: f64,
    pub per_case: BTreeMap<String, f64>,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self { class_a_tol: 1e-8, class_b_tol: 1e-4, per_case: BTreeMap::new() }
    }
}

fn positive(t: f64) -> Result<f64> {
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(VerifyError::BadTolerance(t))
    }
}

impl TolerancePolicy {
    pub fn new(class_a_tol: f64, class_b_tol: f64) -> Result<Self> {
        Ok(Self { class_a_tol: positive(class_a_tol)?, class_b_tol: positive(class_b_tol)?, per_case: BTreeMap::new() })
    }

    pub fn with_override(mut self, case_id: &str, tol: f64) -> Result<Self> {
        self.per_case.insert(case_id.into(), positive(tol)?);
        Ok(self)
    }

    pub fn tol(&self, case: &IdentityCase) -> f64 {
        if let Some(&t) = self.per_case.get(case.case_id) {
            return t;
        }
        match case.class {
            CaseClass::A => self.class_a_tol,
            CaseClass::B | CaseClass::F => self.class_b_tol,
        }
    }
}

/// Pass iff the values agree and the quadrature's own error estimate is
/// small enough to support that agreement.
pub fn judge(lhs: f64, lhs_err: f64, rhs: f64, tol: f64) -> (f64, Status) {
    let diff = (lhs - rhs).abs();
    let rel = if rhs == 0.0 { diff } else { diff / rhs.abs() };
    let pass = rel <= tol && lhs_err <= tol * rhs.abs() / 2.0;
    (rel, if pass { Status::Pass } else { Status::Fail })
}

pub fn verify_case(case_id: &str, params: &Params, policy: &TolerancePolicy, cfg: &QuadConfig) -> Result<VerificationRecord> {
    verify_case_perturbed(case_id, params, policy, cfg, 0.0)
}

/// [`verify_case`] with the right-hand side scaled by `1 + rhs_perturbation`.
pub fn verify_case_perturbed(
    case_id: &str,
    params: &Params,
    policy: &TolerancePolicy,
    cfg: &QuadConfig,
    rhs_perturbation: f64,
) -> Result<VerificationRecord> {
    let case = find_case(case_id)?;
    verify_in(case, params, policy, cfg, rhs_perturbation)
}

fn verify_in(
    case: &IdentityCase,
    params: &Params,
    policy: &TolerancePolicy,
    cfg: &QuadConfig,
    rhs_perturbation: f64,
) -> Result<VerificationRecord> {
    let start = Instant::now();
    let rhs = case_rhs(case, params)? * (1.0 + rhs_perturbation);
    let mut rec = VerificationRecord {
        case_id: case.case_id.into(),
        params: params.clone(),
        lhs: None,
        lhs_err: None,
        rhs,
        rel_diff: None,
        status: Status::SkippedFormal,
        wall_time: Duration::ZERO,
        note: None,
    };
    if case.class != CaseClass::F {
        let plan = case_lhs_plan(case, params)?;
        match plan.execute(cfg) {
            Ok(r) => {
                let (rel, status) = judge(r.value, r.est_abs_err, rhs, policy.tol(case));
                rec.lhs = Some(r.value);
                rec.lhs_err = Some(r.est_abs_err);
                rec.rel_diff = Some(rel);
                rec.status = status;
            }
            Err(QuadError::NoConvergence(r)) => {
                rec.lhs = Some(r.value);
                rec.lhs_err = Some(r.est_abs_err);
                rec.rel_diff = Some((r.value - rhs).abs() / rhs.abs());
                rec.status = Status::QuadratureFailure;
                rec.note = Some(format!("no convergence after {} evaluations", r.evals));
            }
            Err(e) => {
                rec.status = Status::QuadratureFailure;
                rec.note = Some(e.to_string());
            }
        }
    }
    rec.wall_time = start.elapsed();
    Ok(rec)
}

/// Union of case-id globs (`*`, `?`) and class selectors (`class:A`),
/// separated by commas.
#[derive(Debug, Clone)]
pub struct CaseFilter {
    classes: Vec<CaseClass>,
    globs: Vec<Regex>,
}

impl CaseFilter {
    pub fn all() -> Self {
        Self::parse("*").expect("`*` is a valid pattern")
    }

    pub fn parse(pattern: &str) -> Result<Self> {
        let bad = || VerifyError::BadPattern(pattern.into());
        let mut f = CaseFilter { classes: Vec::new(), globs: Vec::new() };
        for part in pattern.split(',').map(str::trim) {
            if part.is_empty() {
                return Err(bad());
            }
            if let Some(c) = part.strip_prefix("class:") {
                f.classes.push(match c.trim() {
                    "A" | "a" => CaseClass::A,
                    "B" | "b" => CaseClass::B,
                    "F" | "f" => CaseClass::F,
                    _ => return Err(bad()),
                });
                continue;
            }
            if part.chars().any(|ch| ch.is_whitespace() || ch == ':') {
                return Err(bad());
            }
            let mut re = String::from("^");
            for ch in part.chars() {
                match ch {
                    '*' => re.push_str(".*"),
                    '?' => re.push('.'),
                    c => re.push_str(&regex::escape(&c.to_string())),
                }
            }
            re.push('$');
            f.globs.push(Regex::new(&re).map_err(|_| bad())?);
        }
        Ok(f)
    }

    pub fn matches(&self, case: &IdentityCase) -> bool {
        self.classes.contains(&case.class) || self.globs.iter().any(|g| g.is_match(case.case_id))
    }

    pub fn select(&self) -> Vec<&'static IdentityCase> {
        build_catalog().iter().filter(|c| self.matches(c)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Sampler {
    /// The default samples of each case.
    Grid,
    /// `per_case` points drawn uniformly from each parameter box and kept
    /// only if they lie inside the strip.
    Random { seed: u64, per_case: usize },
}

const MAX_REJECTIONS: usize = 10_000;

fn case_seed(seed: u64, case_id: &str) -> u64 {
    // FNV-1a, so the stream for a case does not depend on the filter.
    case_id.bytes().fold(0xcbf2_9ce4_8422_2325u64 ^ seed, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub fn random_samples(case: &IdentityCase, seed: u64, count: usize) -> Vec<Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed(seed, case.case_id));
    let mut out = Vec::with_capacity(count);
    for _ in 0..MAX_REJECTIONS {
        if out.len() == count {
            break;
        }
        let p: Params = case
            .params
            .iter()
            .map(|r| {
                let v = if r.integer {
                    rng.gen_range(r.lo.ceil() as i64..=r.hi.floor() as i64) as f64
                } else {
                    rng.gen_range(r.lo..r.hi)
                };
                (r.name.clone(), v)
            })
            .collect();
        if case.in_strip(&p) && case_rhs(case, &p).is_ok() {
            out.push(p);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped_formal: usize,
    pub quad_failure: usize,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::SkippedFormal => s.skipped_formal += 1,
                Status::QuadratureFailure => s.quad_failure += 1,
            }
        }
        s
    }

    pub fn success(&self) -> bool {
        self.fail == 0 && self.quad_failure == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

/// Runs every selected case on every sample. Errors on individual samples
/// become `Fail` records; records come back in case-id order.
pub fn verify_suite(filter: &CaseFilter, sampler: Sampler, policy: &TolerancePolicy, cfg: &QuadConfig) -> SuiteReport {
    let jobs: Vec<(&IdentityCase, Params)> = filter
        .select()
        .into_iter()
        .flat_map(|case| {
            let samples = match sampler {
                Sampler::Grid => case.default_samples.clone(),
                Sampler::Random { seed, per_case } => random_samples(case, seed, per_case),
            };
            samples.into_iter().map(move |p| (case, p))
        })
        .collect();
    let records: Vec<VerificationRecord> = jobs
        .par_iter()
        .map(|(case, p)| {
            verify_in(case, p, policy, cfg, 0.0).unwrap_or_else(|e| VerificationRecord {
                case_id: case.case_id.into(),
                params: p.clone(),
                lhs: None,
                lhs_err: None,
                rhs: f64::NAN,
                rel_diff: None,
                status: Status::Fail,
                wall_time: Duration::ZERO,
                note: Some(e.to_string()),
            })
        })
        .collect();
    let summary = Summary::of(&records);
    SuiteReport { records, summary }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, f64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn bose_zeta_at_two() {
        let r = verify_case("cor4.1.1", &params(&[("s", 2.0)]), &TolerancePolicy::default(), &QuadConfig::default())
            .unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.rel_diff.unwrap() <= 1e-10, "{r:?}");
    }

    #[test]
    fn formal_case_is_skipped() {
        let r = verify_case("thm4.2.ii", &params(&[("s", 0.5)]), &TolerancePolicy::default(), &QuadConfig::default())
            .unwrap();
        assert_eq!(r.status, Status::SkippedFormal);
        assert!(r.lhs.is_none() && r.lhs_err.is_none() && r.rhs.is_finite());
    }

    #[test]
    fn perturbed_rhs_fails() {
        let r = verify_case_perturbed(
            "cor4.1.1",
            &params(&[("s", 2.0)]),
            &TolerancePolicy::default(),
            &QuadConfig::default(),
            1e-3,
        )
        .unwrap();
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn errors() {
        let (pol, cfg) = (TolerancePolicy::default(), QuadConfig::default());
        assert!(matches!(
            verify_case("nope", &Params::new(), &pol, &cfg),
            Err(VerifyError::Registry(RegistryError::UnknownCase(_)))
        ));
        assert!(matches!(
            verify_case("cor4.1.1", &params(&[("s", 0.5)]), &pol, &cfg),
            Err(VerifyError::Registry(RegistryError::StripViolation { .. }))
        ));
        assert!(TolerancePolicy::new(0.0, 1e-4).is_err());
        assert!(TolerancePolicy::default().with_override("x", f64::NAN).is_err());
    }

    #[test]
    fn judge_requires_both_sides() {
        assert_eq!(judge(1.0, 0.0, 1.0, 1e-8).1, Status::Pass);
        assert_eq!(judge(1.0, 1e-8, 1.0, 1e-8).1, Status::Fail);
        assert_eq!(judge(1.0 + 2e-8, 0.0, 1.0, 1e-8).1, Status::Fail);
    }

    #[test]
    fn filters() {
        assert!(CaseFilter::parse("").is_err());
        assert!(CaseFilter::parse("class:Z").is_err());
        assert!(CaseFilter::parse("a,,b").is_err());
        assert!(CaseFilter::parse("nomatch*").unwrap().select().is_empty());
        let thm2 = CaseFilter::parse("thm2.*").unwrap().select();
        assert!(!thm2.is_empty() && thm2.iter().all(|c| c.case_id.starts_with("thm2.")));
        let f = CaseFilter::parse("class:F").unwrap().select();
        assert!(f.iter().all(|c| c.class == CaseClass::F));
        let both = CaseFilter::parse("class:F,cor4.1.1").unwrap().select();
        assert_eq!(both.len(), f.len() + 1);
        assert_eq!(CaseFilter::all().select().len(), build_catalog().len());
        assert_eq!(CaseFilter::parse("cor4.1.?").unwrap().select().len(), 4);
    }

    #[test]
    fn random_samples_are_reproducible_and_in_strip() {
        let case = find_case("thm2.2.iv").unwrap();
        let a = random_samples(case, 7, 5);
        assert_eq!(a, random_samples(case, 7, 5));
        assert_ne!(a, random_samples(case, 8, 5));
        assert_eq!(a.len(), 5);
        assert!(a.iter().all(|p| case.in_strip(p)));
    }

    #[test]
    fn suite_records_are_ordered() {
        let f = CaseFilter::parse("thm2.*,class:F").unwrap();
        let rep = verify_suite(&f, Sampler::Grid, &TolerancePolicy::default(), &QuadConfig::default());
        let ids: Vec<&str> = rep.records.iter().map(|r| r.case_id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        assert_eq!(rep.summary, Summary::of(&rep.records));
        assert!(rep.summary.skipped_formal > 0);
    }
}
