use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qdet::bott::{bott, BottOutcome, GrassmannianShape};
use qdet::characters::{kronecker, KroneckerQuery};
use qdet::exec::Exec;
use qdet::klw::{self, KroneckerSetting, LineWeight2};
use qdet::manifest::{run_manifest, Report};
use qdet::modp::DEFAULT_PRIME;
use qdet::partition::Partition;
use qdet::quiver::{generic_hom_ext, DimensionVector, Quiver, DEFAULT_SAMPLES};
use qdet::tensor::{self, LineWeight3, TensorSetting};

#[derive(Parser, Debug)]
#[command(
    name = "qdet",
    version,
    about = "Determinantal complexes for Kronecker quivers and 3-tensors"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Shorthand)]
    format: Format,
    /// Seed for the randomized hom/ext and Jacobian probes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Shorthand,
    Json,
}

#[derive(clap::Args, Debug)]
struct Kron2 {
    /// Number of arrows.
    #[arg(long)]
    m: usize,
    #[arg(long, value_parser = pair)]
    alpha: [usize; 2],
    #[arg(long, value_parser = pair)]
    gamma: [usize; 2],
}

impl Kron2 {
    fn setting(&self) -> Result<KroneckerSetting> {
        Ok(KroneckerSetting::new(self.m, self.alpha, self.gamma)?)
    }
}

#[derive(clap::Args, Debug)]
struct Tensor3 {
    #[arg(long, value_parser = triple)]
    alpha: [usize; 3],
    #[arg(long, value_parser = triple)]
    gamma: [usize; 3],
}

impl Tensor3 {
    fn setting(&self) -> Result<TensorSetting> {
        Ok(TensorSetting::new(self.alpha, self.gamma)?)
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Kronecker coefficient g(λ, μ, ν), partitions like `2,1^2`.
    Kron {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
    },
    /// Cohomology of S^μ Q ⊗ S^ν S on Gr(r, s).
    Bott {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        /// Weight on Q (r - s entries).
        #[arg(long, value_parser = ints, allow_hyphen_values = true, default_value = "")]
        mu: Ints,
        /// Weight on S (s entries).
        #[arg(long, value_parser = ints, allow_hyphen_values = true, default_value = "")]
        nu: Ints,
    },
    /// Generic hom and ext between dimension vectors.
    Ext {
        /// `K3`, or arrows like `0->1,0->1`.
        #[arg(long)]
        quiver: Quiver,
        #[arg(long)]
        gamma: DimensionVector,
        #[arg(long)]
        beta: DimensionVector,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
    },
    /// Terms of the twisted complex for a Kronecker quiver.
    Complex {
        #[command(flatten)]
        k: Kron2,
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        weight: LineWeight2,
        /// General weight on Q_1 (β_1 entries); needs --omega2.
        #[arg(long, value_parser = ints, allow_hyphen_values = true, requires = "omega2")]
        omega1: Option<Ints>,
        /// General weight on S_2^* (γ_2 entries).
        #[arg(long, value_parser = ints, allow_hyphen_values = true, requires = "omega1")]
        omega2: Option<Ints>,
    },
    /// deg(q) times the degree of the variety.
    Degree {
        #[command(flatten)]
        k: Kron2,
    },
    /// Line weights with a Cohen-Macaulay twisted complex.
    CmSearch {
        #[command(flatten)]
        k: Kron2,
        /// Range `lo,hi` for w1.
        #[arg(long, value_parser = pair_i, allow_hyphen_values = true, default_value = "-2,3")]
        w1: [i64; 2],
        #[arg(long, value_parser = pair_i, allow_hyphen_values = true, default_value = "-2,3")]
        w2: [i64; 2],
    },
    /// The dual line weight.
    DualWeight {
        #[command(flatten)]
        k: Kron2,
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        weight: LineWeight2,
    },
    /// Terms of the twisted complex for 3-tensors.
    Tcomplex {
        #[command(flatten)]
        t: Tensor3,
        #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
        weight: LineWeight3,
    },
    /// deg(q) times the degree of the tensor variety.
    Tdegree {
        #[command(flatten)]
        t: Tensor3,
    },
    /// Codimension and generic fibre dimension of the tensor variety.
    Tcodim {
        #[command(flatten)]
        t: Tensor3,
    },
    /// Run a manifest of jobs and compare against goldens.
    Run {
        manifest: PathBuf,
        /// Only report jobs carrying this tag.
        #[arg(long)]
        tag: Option<String>,
    },
}

/// A comma-separated integer list, kept as one argument value.
#[derive(Clone, Debug)]
struct Ints(Vec<i64>);

fn parse_ints(s: &str) -> std::result::Result<Vec<i64>, String> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split([',', ';'])
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect()
}

fn ints(s: &str) -> std::result::Result<Ints, String> {
    parse_ints(s).map(Ints)
}

fn fixed<const N: usize>(s: &str) -> std::result::Result<[i64; N], String> {
    parse_ints(s)?
        .try_into()
        .map_err(|v: Vec<i64>| format!("expected {N} integers, got {}", v.len()))
}

fn pair_i(s: &str) -> std::result::Result<[i64; 2], String> {
    fixed::<2>(s)
}

fn naturals<const N: usize>(s: &str) -> std::result::Result<[usize; N], String> {
    let v = fixed::<N>(s)?;
    if v.iter().any(|&x| x < 0) {
        return Err("entries must be non-negative".into());
    }
    Ok(v.map(|x| x as usize))
}

fn pair(s: &str) -> std::result::Result<[usize; 2], String> {
    naturals::<2>(s)
}

fn triple(s: &str) -> std::result::Result<[usize; 3], String> {
    naturals::<3>(s)
}

/// Rendered output and whether the command succeeded.
struct Done {
    text: String,
    ok: bool,
}

impl Done {
    fn ok(text: String) -> Self {
        Done { text, ok: true }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn report_json(r: &Report) -> Value {
    let failed = r.failures().count();
    json!({
        "jobs": r.results,
        "passed": r.results.len() - failed,
        "failed": failed,
    })
}

fn execute(cli: &Cli, exec: Exec) -> Result<Done> {
    let json = cli.format == Format::Json;
    Ok(match &cli.cmd {
        Cmd::Kron { lambda, mu, nu } => {
            let g = kronecker(&KroneckerQuery::new(
                lambda.clone(),
                mu.clone(),
                nu.clone(),
            )?);
            Done::ok(if json {
                pretty(
                    &json!({ "lambda": lambda.parts(), "mu": mu.parts(), "nu": nu.parts(), "g": g }),
                )
            } else {
                g.to_string()
            })
        }
        Cmd::Bott { r, s, mu, nu } => {
            let out = bott(GrassmannianShape::new(*r, *s)?, &mu.0, &nu.0)?;
            Done::ok(match (&out, json) {
                (BottOutcome::Zero, false) => "0".into(),
                (
                    BottOutcome::NonZero {
                        cohom_degree,
                        result,
                        ..
                    },
                    false,
                ) => format!("H^{cohom_degree} = {result}"),
                (BottOutcome::Zero, true) => pretty(&json!({ "zero": true })),
                (
                    BottOutcome::NonZero {
                        cohom_degree,
                        result,
                        ..
                    },
                    true,
                ) => pretty(
                    &json!({ "zero": false, "degree": cohom_degree, "weight": result.entries() }),
                ),
            })
        }
        Cmd::Ext {
            quiver,
            gamma,
            beta,
            samples,
            prime,
        } => {
            let he = generic_hom_ext(quiver, gamma, beta, *samples, *prime, cli.seed)?;
            Done::ok(if json {
                pretty(&serde_json::to_value(he)?)
            } else {
                format!("hom={} ext={} euler={}", he.hom, he.ext, he.euler)
            })
        }
        Cmd::Complex {
            k,
            weight,
            omega1,
            omega2,
        } => {
            let s = k.setting()?;
            let c = match (omega1, omega2) {
                (Some(a), Some(b)) => klw::complex_general(&s, &a.0, &b.0, exec)?,
                _ => klw::complex_with(&s, *weight, exec),
            };
            Done::ok(if json {
                pretty(&c.to_json())
            } else {
                c.render_shorthand()
            })
        }
        Cmd::Degree { k } => {
            let d = klw::degree_with(&k.setting()?, exec)?;
            Done::ok(if json {
                pretty(&json!({ "degree": d.to_string() }))
            } else {
                d.to_string()
            })
        }
        Cmd::CmSearch { k, w1, w2 } => {
            let r =
                klw::cm_weight_search(&k.setting()?, w1[0]..=w1[1], w2[0]..=w2[1], cli.seed, exec);
            Done::ok(if json {
                pretty(&serde_json::to_value(&r)?)
            } else {
                let mut out = format!("hom={} ext={}\n", r.hom_ext.hom, r.hom_ext.ext);
                if let Some(reason) = &r.reason {
                    out.push_str(&format!("none: {reason}\n"));
                }
                for w in &r.weights {
                    out.push_str(&format!("{} {}\n", w.weight, w.certificate));
                }
                out
            })
        }
        Cmd::DualWeight { k, weight } => {
            let s = k.setting()?;
            let d = klw::dual_weight(&s, *weight);
            Done::ok(if json {
                pretty(&json!({ "weight": [weight.w1, weight.w2], "dual": [d.w1, d.w2] }))
            } else {
                d.to_string()
            })
        }
        Cmd::Tcomplex { t, weight } => {
            let c = tensor::tensor_complex_with(&t.setting()?, *weight, exec);
            Done::ok(if json {
                pretty(&c.to_json())
            } else {
                c.render_shorthand()
            })
        }
        Cmd::Tdegree { t } => {
            let d = tensor::tensor_degree_with(&t.setting()?, exec)?;
            Done::ok(if json {
                pretty(&json!({ "degree": d.to_string() }))
            } else {
                d.to_string()
            })
        }
        Cmd::Tcodim { t } => {
            let cf = tensor::codim_and_fiber_with(&t.setting()?, cli.seed, exec)?;
            if !cf.probe_agrees {
                eprintln!(
                    "warning: Jacobian probe gives h={}, expected {}",
                    cf.probe_h, cf.h
                );
            }
            Done::ok(if json {
                pretty(&serde_json::to_value(&cf)?)
            } else {
                format!("e={} h={}", cf.e, cf.h)
            })
        }
        Cmd::Run { manifest, tag } => {
            let mut report = run_manifest(manifest, exec)?;
            if let Some(tag) = tag {
                report.results.retain(|r| r.tags.contains(tag));
            }
            Done {
                ok: report.passed(),
                text: if json {
                    pretty(&report_json(&report))
                } else {
                    report.render()
                },
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| -> Result<Done> {
        let exec = match cli.jobs {
            Some(0) => bail!("--jobs must be at least 1"),
            Some(1) => Exec::Sequential,
            Some(n) => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .context("configuring the thread pool")?;
                Exec::Parallel
            }
            None => Exec::Parallel,
        };
        let done = execute(&cli, exec)?;
        let mut text = done.text.clone();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &cli.output {
            Some(path) => {
                fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?
            }
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(done)
    })();
    match result {
        Ok(done) if done.ok => ExitCode::SUCCESS,
        Ok(_) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
