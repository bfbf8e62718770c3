//! Command-line front end: list and inspect cases, run suites, export the
//! manifest.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::quadrature::QuadConfig;
use crate::registry::{find_case, manifest, IdentityCase};
use crate::verifier::{
    verify_suite, CaseFilter, Sampler, SuiteReport, Summary, TolerancePolicy, VerificationRecord, VerifyError,
};

pub const CSV_HEADER: [&str; 8] = ["case_id", "param_json", "lhs", "lhs_err", "rhs", "rel_diff", "status", "wall_ms"];

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Registry(#[from] crate::registry::RegistryError),
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid override `{0}`")]
    BadOverride(String),
    #[error("format `{0}` is not available for this command")]
    BadFormat(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "rmtverify", version, about = "Numerical verification of Mellin-transform identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalog cases.
    List {
        #[arg(long, default_value = "*")]
        filter: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Show one case in full.
    Show {
        case_id: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Verify a set of cases.
    Run(RunArgs),
    /// Write the catalog manifest as JSON.
    ExportManifest {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SamplerKind {
    Grid,
    Random,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, default_value = "*")]
    pub filter: String,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SamplerKind::Grid)]
    pub sampler: SamplerKind,
    /// Points per case for the random sampler.
    #[arg(long, default_value_t = 3)]
    pub samples: usize,
    /// Class-A tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub class_b_tol: Option<f64>,
    /// Per-case tolerance as `CASE_ID=TOL`; repeatable.
    #[arg(long = "case-tol")]
    pub case_tol: Vec<String>,
    #[arg(long)]
    pub quad_rel_tol: Option<f64>,
    #[arg(long)]
    pub max_levels: Option<usize>,
}

impl RunArgs {
    pub fn policy(&self) -> Result<TolerancePolicy> {
        let d = TolerancePolicy::default();
        let mut p = TolerancePolicy::new(self.tol.unwrap_or(d.class_a_tol), self.class_b_tol.unwrap_or(d.class_b_tol))?;
        for item in &self.case_tol {
            let bad = || CliError::BadOverride(item.clone());
            let (id, tol) = item.split_once('=').ok_or_else(bad)?;
            let tol: f64 = tol.trim().parse().map_err(|_| bad())?;
            find_case(id.trim()).map_err(|_| bad())?;
            p = p.with_override(id.trim(), tol)?;
        }
        Ok(p)
    }

    pub fn quad_config(&self) -> Result<QuadConfig> {
        let mut cfg = QuadConfig::default();
        if let Some(t) = self.quad_rel_tol {
            cfg.rel_tol = t;
        }
        if let Some(l) = self.max_levels {
            cfg.max_levels = l;
        }
        cfg.validate().map_err(|_| CliError::BadOverride(format!("{cfg:?}")))?;
        Ok(cfg)
    }

    pub fn sampler(&self) -> Sampler {
        match self.sampler {
            SamplerKind::Grid => Sampler::Grid,
            SamplerKind::Random => Sampler::Random { seed: self.seed, per_case: self.samples },
        }
    }
}

#[derive(Debug, Serialize)]
struct Meta {
    version: &'static str,
    seed: u64,
    sampler: Sampler,
    filter: String,
    policy: TolerancePolicy,
    cfg: QuadConfig,
}

#[derive(Debug, Serialize)]
struct JsonReport<'a> {
    meta: Meta,
    records: &'a [VerificationRecord],
    summary: Summary,
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn num(x: Option<f64>) -> String {
    x.map_or_else(String::new, |v| format!("{v:e}"))
}

fn params_text(r: &VerificationRecord) -> String {
    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")
}

pub fn write_csv<W: Write>(w: W, records: &[VerificationRecord]) -> Result<()> {
    let mut c = csv::Writer::from_writer(w);
    c.write_record(CSV_HEADER)?;
    for r in records {
        c.write_record([
            r.case_id.clone(),
            serde_json::to_string(&r.params)?,
            num(r.lhs),
            num(r.lhs_err),
            num(Some(r.rhs)),
            num(r.rel_diff),
            r.status.as_str().to_string(),
            format!("{:.3}", r.wall_time.as_secs_f64() * 1e3),
        ])?;
    }
    c.flush()?;
    Ok(())
}

fn write_human<W: Write>(mut w: W, report: &SuiteReport) -> Result<()> {
    for r in &report.records {
        let rhs_text = find_case(&r.case_id).map_or("", |c| c.rhs.text);
        write!(w, "{:<18} {:<14} {{{}}} rhs = {} = {:.15e}", r.status.as_str(), r.case_id, params_text(r), rhs_text, r.rhs)?;
        if let (Some(l), Some(e), Some(d)) = (r.lhs, r.lhs_err, r.rel_diff) {
            write!(w, "  lhs = {l:.15e} ± {e:.1e}  rel = {d:.2e}")?;
        }
        if let Some(n) = &r.note {
            write!(w, "  ({n})")?;
        }
        writeln!(w)?;
    }
    let s = report.summary;
    writeln!(w, "pass {}  fail {}  skipped_formal {}  quad_failure {}", s.pass, s.fail, s.skipped_formal, s.quad_failure)?;
    Ok(())
}

pub fn cmd_run(args: &RunArgs) -> Result<Summary> {
    let filter = CaseFilter::parse(&args.filter)?;
    let policy = args.policy()?;
    let cfg = args.quad_config()?;
    let sampler = args.sampler();
    let report = verify_suite(&filter, sampler, &policy, &cfg);
    let mut w = sink(&args.out)?;
    match args.format {
        Format::Json => {
            let meta = Meta {
                version: env!("CARGO_PKG_VERSION"),
                seed: args.seed,
                sampler,
                filter: args.filter.clone(),
                policy,
                cfg,
            };
            let doc = JsonReport { meta, records: &report.records, summary: report.summary };
            serde_json::to_writer_pretty(&mut w, &doc)?;
            writeln!(w)?;
        }
        Format::Csv => write_csv(&mut w, &report.records)?,
        Format::Human => write_human(&mut w, &report)?,
    }
    w.flush()?;
    Ok(report.summary)
}

fn strip_text(c: &IdentityCase) -> String {
    c.strip.iter().map(|k| k.text).collect::<Vec<_>>().join("; ")
}

pub fn cmd_list<W: Write>(mut w: W, filter: &str, format: Format) -> Result<usize> {
    let cases = CaseFilter::parse(filter)?.select();
    match format {
        Format::Human => {
            for c in &cases {
                writeln!(w, "{:<20} {}  {:<48} {}", c.case_id, c.class, strip_text(c), c.paper_ref)?;
            }
        }
        Format::Csv => {
            let mut out = csv::Writer::from_writer(&mut w);
            out.write_record(["case_id", "paper_ref", "class", "strip"])?;
            for c in &cases {
                out.write_record([c.case_id, c.paper_ref, &c.class.to_string(), &strip_text(c)])?;
            }
            out.flush()?;
        }
        Format::Json => {
            let rows: Vec<_> = cases.iter().map(|c| c.manifest()).collect();
            serde_json::to_writer_pretty(&mut w, &rows)?;
            writeln!(w)?;
        }
    }
    Ok(cases.len())
}

pub fn cmd_show<W: Write>(mut w: W, case_id: &str, format: Format) -> Result<()> {
    let m = find_case(case_id)?.manifest();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &m)?;
            writeln!(w)?;
        }
        Format::Human => {
            writeln!(w, "case_id   {}", m.case_id)?;
            writeln!(w, "class     {}", m.class)?;
            writeln!(w, "anchor    \"{}\"", m.paper_ref)?;
            writeln!(w, "lhs       {}", serde_json::to_string(&m.lhs)?)?;
            writeln!(w, "rhs       {}", m.rhs)?;
            writeln!(w, "strip     {}", m.strip.join("; "))?;
            for p in &m.params {
                writeln!(w, "param     {} ∈ [{}, {}]{}", p.name, p.lo, p.hi, if p.integer { " integer" } else { "" })?;
            }
            for s in &m.default_samples {
                writeln!(w, "sample    {}", serde_json::to_string(s)?)?;
            }
        }
        Format::Csv => return Err(CliError::BadFormat("csv".into())),
    }
    Ok(())
}

pub fn cmd_export_manifest(out: &Option<PathBuf>) -> Result<()> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, &manifest())?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

/// Runs a parsed command and returns the process exit code.
pub fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::List { filter, format } => {
            cmd_list(io::stdout().lock(), &filter, format)?;
            Ok(0)
        }
        Command::Show { case_id, format } => {
            cmd_show(io::stdout().lock(), &case_id, format)?;
            Ok(0)
        }
        Command::Run(args) => Ok(if cmd_run(&args)?.success() { 0 } else { 1 }),
        Command::ExportManifest { out } => {
            cmd_export_manifest(&out)?;
            Ok(0)
        }
    }
}

pub fn main() -> i32 {
    match execute(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(extra: &[&str]) -> RunArgs {
        let mut argv = vec!["rmtverify", "run"];
        argv.extend_from_slice(extra);
        match Cli::try_parse_from(argv).unwrap().command {
            Command::Run(a) => a,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn list_filters() {
        let mut buf = Vec::new();
        assert!(cmd_list(&mut buf, "*", Format::Human).unwrap() >= 30);
        assert_eq!(cmd_list(io::sink(), "nomatch*", Format::Human).unwrap(), 0);
        assert!(cmd_list(io::sink(), "class:Q", Format::Human).is_err());
        let mut csv = Vec::new();
        let n = cmd_list(&mut csv, "thm2.*", Format::Csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap().lines().count(), n + 1);
    }

    #[test]
    fn overrides() {
        let a = run_args(&["--tol", "1e-6", "--class-b-tol", "1e-3", "--case-tol", "cor4.1.1=1e-5"]);
        let p = a.policy().unwrap();
        assert_eq!((p.class_a_tol, p.class_b_tol), (1e-6, 1e-3));
        assert_eq!(p.per_case["cor4.1.1"], 1e-5);
        assert!(run_args(&["--case-tol", "nope=1e-5"]).policy().is_err());
        assert!(run_args(&["--case-tol", "cor4.1.1"]).policy().is_err());
        assert!(run_args(&["--tol=-1"]).policy().is_err());
        assert!(run_args(&["--max-levels", "1"]).quad_config().is_err());
        assert_eq!(run_args(&["--quad-rel-tol", "1e-8"]).quad_config().unwrap().rel_tol, 1e-8);
    }

    #[test]
    fn show_formats() {
        let mut buf = Vec::new();
        cmd_show(&mut buf, "thm2.2.iv", Format::Human).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("thm2.2.iv") && text.contains("Γ"));
        assert!(cmd_show(io::sink(), "thm2.2.iv", Format::Csv).is_err());
        assert!(cmd_show(io::sink(), "nope", Format::Json).is_err());
    }
}
