//! Batch jobs read from a JSON manifest, with optional golden values or
//! golden files of complex terms beside it.
//!
//! ```json
//! { "jobs": [
//!   { "name": "k2-rigid", "kind": "complex", "m": 2, "alpha": [2,3], "gamma": [1,1],
//!     "weight": [0,0], "golden": "goldens/k2_rigid.txt" },
//!   { "name": "k2-degree", "kind": "degree", "m": 2, "alpha": [2,3], "gamma": [1,1],
//!     "expected": "6" }
//! ] }
//! ```
//!
//! A golden file holds lines `F_i = <term>` (blank lines and `#` comments are
//! skipped). Terms are canonicalized before comparison, so only summand order
//! and exponent grouping may differ; anything else is a mismatch. A job may
//! list literal `normalize` replacements that are applied to the golden text
//! first; each must match exactly once.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::bott::{bott, BottOutcome, GrassmannianShape};
use crate::characters::{kronecker, KroneckerQuery};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::klw::{self, KroneckerSetting, LineWeight2};
use crate::quiver::{generic_hom_ext_default, DimensionVector, Quiver};
use crate::shorthand;
use crate::tensor::{self, LineWeight3, TensorSetting};

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(default)]
    pub jobs: Vec<Job>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Job {
    pub name: String,
    #[serde(flatten)]
    pub spec: JobSpec,
    /// Exact expected output (whitespace-trimmed).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    /// Golden file of `F_i = …` lines, relative to the manifest.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub golden: Option<String>,
    /// Only the terms listed in the golden file are compared.
    #[serde(default)]
    pub partial: bool,
    /// Literal `[from, to]` replacements applied to the golden text.
    #[serde(default)]
    pub normalize: Vec<(String, String)>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub tags: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum JobSpec {
    Complex {
        m: usize,
        alpha: [usize; 2],
        gamma: [usize; 2],
        #[serde(default)]
        weight: [i64; 2],
    },
    Degree {
        m: usize,
        alpha: [usize; 2],
        gamma: [usize; 2],
    },
    DualWeight {
        m: usize,
        alpha: [usize; 2],
        gamma: [usize; 2],
        weight: [i64; 2],
    },
    CmSearch {
        m: usize,
        alpha: [usize; 2],
        gamma: [usize; 2],
        w1: [i64; 2],
        w2: [i64; 2],
    },
    Tcomplex {
        alpha: [usize; 3],
        gamma: [usize; 3],
        #[serde(default)]
        weight: [i64; 3],
    },
    Tdegree {
        alpha: [usize; 3],
        gamma: [usize; 3],
    },
    Tcodim {
        alpha: [usize; 3],
        gamma: [usize; 3],
    },
    Ext {
        quiver: String,
        gamma: Vec<usize>,
        beta: Vec<usize>,
    },
    Kron {
        lambda: String,
        mu: String,
        nu: String,
    },
    Bott {
        r: usize,
        s: usize,
        mu: Vec<i64>,
        nu: Vec<i64>,
    },
}

/// Computed output: plain text, or complex terms by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Output {
    Text(String),
    Terms(BTreeMap<i64, String>),
}

impl Output {
    pub fn render(&self) -> String {
        match self {
            Output::Text(s) => s.clone(),
            Output::Terms(t) => {
                let mut out = String::new();
                for (i, s) in t {
                    let _ = writeln!(out, "F_{i} = {s}");
                }
                out.trim_end().to_string()
            }
        }
    }
}

/// A canonicalizer for golden terms, tied to the job that produced them.
type Canon = Box<dyn Fn(&str) -> Result<String> + Send + Sync>;

fn kronecker_setting(m: usize, alpha: [usize; 2], gamma: [usize; 2]) -> Result<KroneckerSetting> {
    KroneckerSetting::new(m, alpha, gamma)
}

/// Runs one job. Complex jobs also return the canonicalizer for their goldens.
pub fn execute(spec: &JobSpec, seed: u64, exec: Exec) -> Result<(Output, Option<Canon>)> {
    Ok(match spec {
        JobSpec::Complex {
            m,
            alpha,
            gamma,
            weight,
        } => {
            let s = kronecker_setting(*m, *alpha, *gamma)?;
            let c = klw::complex_with(&s, LineWeight2::new(weight[0], weight[1]), exec);
            let terms = c.terms.keys().map(|&i| (i, c.render_term(i))).collect();
            let canon: Canon =
                Box::new(|t: &str| shorthand::canonicalize(t, 3, shorthand::last_slot_size));
            (Output::Terms(terms), Some(canon))
        }
        JobSpec::Degree { m, alpha, gamma } => {
            let s = kronecker_setting(*m, *alpha, *gamma)?;
            (Output::Text(klw::degree_with(&s, exec)?.to_string()), None)
        }
        JobSpec::DualWeight {
            m,
            alpha,
            gamma,
            weight,
        } => {
            let s = kronecker_setting(*m, *alpha, *gamma)?;
            let d = klw::dual_weight(&s, LineWeight2::new(weight[0], weight[1]));
            (Output::Text(d.to_string()), None)
        }
        JobSpec::CmSearch {
            m,
            alpha,
            gamma,
            w1,
            w2,
        } => {
            let s = kronecker_setting(*m, *alpha, *gamma)?;
            let r = klw::cm_weight_search(&s, w1[0]..=w1[1], w2[0]..=w2[1], seed, exec);
            let mut out = String::new();
            if let Some(reason) = &r.reason {
                let _ = writeln!(out, "none: {reason}");
            }
            for w in &r.weights {
                let _ = writeln!(out, "{} {}", w.weight, w.certificate);
            }
            (Output::Text(out.trim_end().to_string()), None)
        }
        JobSpec::Tcomplex {
            alpha,
            gamma,
            weight,
        } => {
            let s = TensorSetting::new(*alpha, *gamma)?;
            let c = tensor::tensor_complex_with(&s, LineWeight3 { w: *weight }, exec);
            let terms = c.terms.keys().map(|&i| (i, c.render_term(i))).collect();
            let canon: Canon = Box::new(move |t: &str| c.canonicalize_term(t));
            (Output::Terms(terms), Some(canon))
        }
        JobSpec::Tdegree { alpha, gamma } => {
            let s = TensorSetting::new(*alpha, *gamma)?;
            (
                Output::Text(tensor::tensor_degree_with(&s, exec)?.to_string()),
                None,
            )
        }
        JobSpec::Tcodim { alpha, gamma } => {
            let s = TensorSetting::new(*alpha, *gamma)?;
            let cf = tensor::codim_and_fiber_with(&s, seed, exec)?;
            let mut out = format!("e={} h={}", cf.e, cf.h);
            if !cf.probe_agrees {
                let _ = write!(out, " probe_h={} (disagrees)", cf.probe_h);
            }
            (Output::Text(out), None)
        }
        JobSpec::Ext {
            quiver,
            gamma,
            beta,
        } => {
            let q: Quiver = quiver.parse()?;
            let he = generic_hom_ext_default(
                &q,
                &DimensionVector(gamma.clone()),
                &DimensionVector(beta.clone()),
                seed,
            )?;
            (
                Output::Text(format!("hom={} ext={} euler={}", he.hom, he.ext, he.euler)),
                None,
            )
        }
        JobSpec::Kron { lambda, mu, nu } => {
            let q = KroneckerQuery::new(lambda.parse()?, mu.parse()?, nu.parse()?)?;
            (Output::Text(kronecker(&q).to_string()), None)
        }
        JobSpec::Bott { r, s, mu, nu } => {
            let out = match bott(GrassmannianShape::new(*r, *s)?, mu, nu)? {
                BottOutcome::Zero => "0".to_string(),
                BottOutcome::NonZero {
                    cohom_degree,
                    result,
                    ..
                } => format!("H^{cohom_degree} = {result}"),
            };
            (Output::Text(out), None)
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobResult {
    pub name: String,
    pub tags: Vec<String>,
    pub passed: bool,
    pub output: String,
    /// Mismatch lines (`-` expected, `+` actual) or the error.
    pub diff: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub results: Vec<JobResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &JobResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(out, "{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
            for d in &r.diff {
                let _ = writeln!(out, "    {d}");
            }
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} jobs, {} passed, {} failed",
            self.results.len(),
            self.results.len() - failed,
            failed
        );
        out
    }
}

fn parse_golden(text: &str) -> Result<BTreeMap<i64, String>> {
    let mut out = BTreeMap::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| Error::Manifest(format!("golden line without '=': {line}")))?;
        let idx = lhs
            .trim()
            .strip_prefix("F_")
            .and_then(|x| x.trim_matches(|c| c == '{' || c == '}').parse::<i64>().ok())
            .ok_or_else(|| Error::Manifest(format!("bad term index in {line}")))?;
        if out.insert(idx, rhs.trim().to_string()).is_some() {
            return Err(Error::Manifest(format!("F_{idx} listed twice")));
        }
    }
    Ok(out)
}

fn apply_normalizations(mut text: String, rules: &[(String, String)]) -> Result<String> {
    for (from, to) in rules {
        let hits = text.matches(from.as_str()).count();
        if hits != 1 {
            return Err(Error::Manifest(format!(
                "normalization {from:?} -> {to:?} matched {hits} times"
            )));
        }
        text = text.replacen(from.as_str(), to, 1);
    }
    Ok(text)
}

fn compare_terms(
    actual: &BTreeMap<i64, String>,
    golden: &BTreeMap<i64, String>,
    partial: bool,
    canon: &Canon,
) -> Result<Vec<String>> {
    let mut diff = Vec::new();
    let mut indices: Vec<i64> = golden.keys().copied().collect();
    if !partial {
        indices.extend(actual.keys().copied());
        indices.sort_unstable();
        indices.dedup();
    }
    for i in indices {
        let want = match golden.get(&i) {
            Some(g) => canon(g)?,
            None => String::new(),
        };
        let got = actual.get(&i).cloned().unwrap_or_default();
        if want != got {
            diff.push(format!("- F_{i} = {want}"));
            diff.push(format!("+ F_{i} = {got}"));
        }
    }
    Ok(diff)
}

fn run_job(job: &Job, base: &Path, exec: Exec) -> JobResult {
    let mut result = JobResult {
        name: job.name.clone(),
        tags: job.tags.clone(),
        passed: false,
        output: String::new(),
        diff: Vec::new(),
    };
    let outcome = (|| -> Result<Vec<String>> {
        let (output, canon) = execute(&job.spec, job.seed, exec)?;
        result.output = output.render();
        let mut diff = Vec::new();
        if let Some(expected) = &job.expected {
            if expected.trim() != result.output.trim() {
                diff.push(format!("- {}", expected.trim()));
                diff.push(format!("+ {}", result.output.trim()));
            }
        }
        if let Some(golden) = &job.golden {
            let path = base.join(golden);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Manifest(format!("golden {}: {e}", path.display())))?;
            let text = apply_normalizations(text, &job.normalize)?;
            let golden = parse_golden(&text)?;
            match (&output, canon) {
                (Output::Terms(actual), Some(canon)) => {
                    diff.extend(compare_terms(actual, &golden, job.partial, &canon)?)
                }
                _ => {
                    return Err(Error::Manifest(
                        "golden files apply to complex jobs only".into(),
                    ))
                }
            }
        }
        if job.expected.is_none() && job.golden.is_none() && !job.normalize.is_empty() {
            return Err(Error::Manifest("normalize without a golden file".into()));
        }
        Ok(diff)
    })();
    match outcome {
        Ok(diff) => {
            result.passed = diff.is_empty();
            result.diff = diff;
        }
        Err(e) => result.diff = vec![format!("error: {e}")],
    }
    result
}

/// Runs every job (concurrently under [`Exec::Parallel`]); results keep the
/// manifest order.
pub fn run_manifest_str(text: &str, base: &Path, exec: Exec) -> Result<Report> {
    let manifest: Manifest =
        serde_json::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
    let results = exec.map(manifest.jobs, |job| run_job(&job, base, Exec::Sequential));
    Ok(Report { results })
}

pub fn run_manifest(path: &Path, exec: Exec) -> Result<Report> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
    let base: PathBuf = path.parent().map(Path::to_path_buf).unwrap_or_default();
    run_manifest_str(&text, &base, exec)
}
