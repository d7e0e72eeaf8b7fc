//! Command-line driver.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use homq::catalog::{self, matrices, planes, Instance, Params};
use homq::cobraid::CobraidedHomBialgebra;
use homq::comodule::{b_alpha, verify_hybe, Coaction, Comodule, PlaneKind};
use homq::findim::{materialize, materialize_cobraided, FinDimHomBialgebra, RKind};
use homq::frt::{frt_construct, frt_twist, FrtNaming, RMatrixSpec};
use homq::hombialg::verify_hom_bialgebra;
use homq::io;
use homq::linalg::Matrix;
use homq::report::Report;

const FALLBACK_DEGREE: usize = 2;

#[derive(Parser)]
#[command(
    name = "homq",
    version,
    about = "Exact verification of Hom-quantum groups, FRT constructions and comodules"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Truncation degree; defaults to HOMQ_DEFAULT_DEGREE, else 2.
    #[arg(long, global = true)]
    degree: Option<usize>,
    /// Instance parameter, repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE", global = true, value_parser = parse_param)]
    params: Vec<(String, String)>,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Record wall time per check.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full verification suite of a catalog name or JSON file.
    Verify { target: String },
    /// FRT construction.
    Frt {
        #[command(subcommand)]
        action: FrtCmd,
    },
    /// HYBE and α-commutation for a comodule operator.
    Hybe {
        target: String,
        /// `frt`, or `plane:standard|fermionic|mixed`.
        #[arg(long, default_value = "frt")]
        comodule: String,
        /// Include the B matrix in the output, or write it to the given path.
        #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
        emit_matrix: Option<String>,
    },
    /// Linear dual of a finite instance.
    Dualize { target: String },
    /// Emit the JSON of a catalog instance.
    Emit { target: String },
}

#[derive(Subcommand)]
enum FrtCmd {
    /// Build A(γ) from an R-matrix spec file or `sl2|mpq2|mq11`.
    Build {
        spec: String,
        /// Comma-separated λ-vector.
        #[arg(long, value_delimiter = ',')]
        lambda: Option<Vec<String>>,
    },
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got `{s}`"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(kind: &'static str, message: impl ToString) -> Failure {
        Failure {
            kind,
            message: message.to_string(),
        }
    }
}

impl From<catalog::CatalogError> for Failure {
    fn from(e: catalog::CatalogError) -> Failure {
        match e {
            catalog::CatalogError::Unknown(_) => Failure::new("unknown_instance", e),
            catalog::CatalogError::Parameter(_) => Failure::new("parameter_violation", e),
            _ => Failure::new("construction", e),
        }
    }
}

macro_rules! failure_from {
    ($($t:ty => $kind:literal),* $(,)?) => {
        $(impl From<$t> for Failure {
            fn from(e: $t) -> Failure {
                Failure::new($kind, e)
            }
        })*
    };
}

failure_from!(
    io::IoError => "malformed_json",
    homq::findim::FinDimError => "findim",
    homq::frt::FrtError => "frt",
    homq::comodule::ComoduleError => "comodule",
    homq::cobraid::CobraidError => "cobraid",
    homq::hombialg::HomError => "hom",
    homq::scalars::ScalarError => "parameter_violation",
    catalog::SuiteError => "verification",
);

struct Outcome {
    value: Value,
    passed: bool,
}

struct Ctx {
    degree: usize,
    params: Params,
    timings: bool,
}

impl Ctx {
    fn max_degree(&self) -> usize {
        (self.degree + 1).max(4)
    }

    fn report(&self, rep: Report) -> Value {
        let rep = if self.timings {
            rep.sorted()
        } else {
            rep.sorted().strip_timings()
        };
        serde_json::to_value(rep).expect("serializable")
    }
}

fn is_file(target: &str) -> bool {
    target.ends_with(".json") || Path::new(target).is_file()
}

fn read_json(path: &str) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::new("io", format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::new("malformed_json", format!("{path}: {e}")))
}

fn findim_suite(m: &FinDimHomBialgebra) -> Result<Report, Failure> {
    let mut rep = m.verify_hom_bialgebra();
    match m.r_kind() {
        RKind::Element => rep.extend(m.verify_braided()?),
        RKind::Form => rep.extend(m.verify_cobraided()?),
    }
    rep.push(m.check_alpha_invariance());
    Ok(rep)
}

fn verify(ctx: &Ctx, target: &str) -> Result<Outcome, Failure> {
    let rep = if is_file(target) {
        let v = read_json(target)?;
        if v.get("mu").is_some() {
            findim_suite(&FinDimHomBialgebra::from_json(&v)?)?
        } else {
            match io::instance_from_json(&v)? {
                (_, Some(c)) => catalog::cobraided_suite(&c, ctx.degree)?,
                (h, None) => {
                    let mut rep = h.pres().check_local_confluence(h.pres().max_degree());
                    rep.extend(verify_hom_bialgebra(&h, ctx.degree)?);
                    rep
                }
            }
        }
    } else {
        let inst = catalog::build(target, &ctx.params, ctx.max_degree())?;
        catalog::verify_suite(&inst, ctx.degree)?
    };
    let passed = rep.passed();
    Ok(Outcome {
        value: json!({"instance": target, "degree": ctx.degree, "passed": passed, "report": ctx.report(rep)}),
        passed,
    })
}

fn builtin_spec(name: &str) -> Option<RMatrixSpec> {
    let field = matrices::matrix_field();
    Some(match name {
        "sl2" => RMatrixSpec::sl2(&field),
        "mpq2" => RMatrixSpec::mpq2(&field),
        "mq11" => RMatrixSpec::mq11(&field),
        _ => return None,
    })
}

fn frt_build(ctx: &Ctx, spec: &str, lambda: Option<&[String]>) -> Result<Outcome, Failure> {
    let spec = match builtin_spec(spec) {
        Some(s) if !is_file(spec) => s,
        _ => RMatrixSpec::from_json(&read_json(spec)?)?,
    };
    let naming = if spec.dim() == 2 {
        FrtNaming::quantum_matrices()
    } else {
        FrtNaming::standard(spec.dim())
    };
    let mut inst = frt_construct(&spec, &naming, ctx.max_degree())?;
    if let Some(l) = lambda {
        if l.len() != spec.dim() {
            return Err(Failure::new(
                "parameter_violation",
                format!("λ-vector needs {} entries", spec.dim()),
            ));
        }
        let l = l.iter().map(|s| spec.field().parse(s)).collect::<Result<Vec<_>, _>>()?;
        inst = frt_twist(&inst, &l)?;
    }
    let mut value = io::cobraided_to_json(&inst.chb);
    value["relations"] = json!(inst.retained);
    if let Some(l) = &inst.lambda {
        value["lambda"] = json!(l.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    }
    Ok(Outcome { value, passed: true })
}

/// `ρ(v_i) = Σ_k T_i^k ⊗ v_k` on a host whose generators are named `a, b, c, d` or `T{i}{j}`.
fn matrix_comodule(c: Arc<CobraidedHomBialgebra>, lambda: &[String]) -> Result<Comodule, Failure> {
    let pres = c.h().pres().clone();
    let names = if pres.generator("a").is_some() {
        FrtNaming::quantum_matrices().names
    } else {
        let n = (1..=8)
            .find(|n| pres.generator(&format!("T{n}{n}")).is_none())
            .unwrap_or(9)
            - 1;
        FrtNaming::standard(n).names
    };
    let n = (names.len() as f64).sqrt() as usize;
    if n == 0 || names.iter().any(|g| pres.generator(g).is_none()) {
        return Err(Failure::new("comodule", "host has no matrix generators"));
    }
    let field = pres.field().clone();
    let rho = (0..n)
        .map(|i| {
            (0..n)
                .map(|k| ((pres.gen_word(&names[i * n + k]), k), field.one()))
                .collect::<Coaction>()
        })
        .collect();
    let mut alpha = Matrix::identity(&field, n);
    for (i, l) in lambda.iter().enumerate().take(n) {
        alpha.set(i, i, field.parse(l)?);
    }
    Ok(Comodule::new(
        c,
        (1..=n).map(|i| format!("v{i}")).collect(),
        rho,
        alpha,
    )?)
}

fn hybe(ctx: &Ctx, target: &str, comodule: &str, emit: Option<&str>) -> Result<Outcome, Failure> {
    let degree = if comodule == "frt" { 1 } else { ctx.degree };
    let (v, b) = if comodule == "frt" {
        let (host, lambda) = if is_file(target) {
            let v = read_json(target)?;
            let lambda: Vec<String> = v
                .get("lambda")
                .and_then(Value::as_array)
                .map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect())
                .unwrap_or_default();
            let (_, c) = io::instance_from_json(&v)?;
            (
                Arc::new(c.ok_or_else(|| Failure::new("malformed_json", "instance has no `r` entry"))?),
                lambda,
            )
        } else {
            match catalog::build(target, &ctx.params, ctx.max_degree())? {
                Instance::Cobraided(c) => {
                    let l = ctx.params.get("lambda").cloned().unwrap_or_else(|| "1".into());
                    (c, vec![l, "1".into()])
                }
                _ => {
                    return Err(Failure::new(
                        "parameter_violation",
                        format!("`{target}` has no FRT comodule"),
                    ))
                }
            }
        };
        let v = matrix_comodule(host, &lambda)?;
        let b = b_alpha(&v);
        (v, b)
    } else {
        let kind = match comodule.strip_prefix("plane:") {
            Some("standard") => PlaneKind::Standard,
            Some("fermionic") => PlaneKind::Fermionic,
            Some("mixed") => PlaneKind::Mixed,
            _ => {
                return Err(Failure::new(
                    "parameter_violation",
                    format!("unknown comodule `{comodule}`"),
                ))
            }
        };
        let host_kind = planes::host_kind(kind).name();
        let plane_name = format!("plane_{}", kind.name());
        if target != host_kind && target != plane_name {
            return Err(Failure::new(
                "parameter_violation",
                format!("{comodule} lives over `{host_kind}`, not `{target}`"),
            ));
        }
        let Instance::Plane(p) = catalog::build(&plane_name, &ctx.params, ctx.max_degree())? else {
            unreachable!("plane names build planes")
        };
        let v = p.piece(ctx.degree)?;
        let b = b_alpha(&v);
        (v, b)
    };
    let rep = verify_hybe(&b, v.alpha());
    let passed = rep.passed();
    let mut value = json!({
        "instance": target,
        "comodule": comodule,
        "degree": degree,
        "basis": v.labels(),
        "passed": passed,
        "report": ctx.report(rep),
    });
    match emit {
        Some("-") => value["matrix"] = b.to_json(),
        Some(path) => write_json(Path::new(path), &b.to_json())?,
        None => {}
    }
    Ok(Outcome { value, passed })
}

fn finite(ctx: &Ctx, target: &str) -> Result<FinDimHomBialgebra, Failure> {
    if is_file(target) {
        let v = read_json(target)?;
        if v.get("mu").is_some() {
            return Ok(FinDimHomBialgebra::from_json(&v)?);
        }
        return match io::instance_from_json(&v)? {
            (_, Some(c)) => Ok(materialize_cobraided(&c)?),
            (_, None) => Err(Failure::new("malformed_json", "instance has no `r` entry")),
        };
    }
    match catalog::build(target, &ctx.params, ctx.max_degree())? {
        Instance::Braided(b) => Ok(materialize(&b.h, &b.r)?),
        Instance::Cobraided(c) => Ok(materialize_cobraided(&c)?),
        Instance::Plane(_) => Err(Failure::new(
            "parameter_violation",
            "quantum planes are infinite-dimensional",
        )),
    }
}

fn emit(ctx: &Ctx, target: &str) -> Result<Outcome, Failure> {
    let value = match catalog::build(target, &ctx.params, ctx.max_degree())? {
        Instance::Cobraided(c) => io::cobraided_to_json(&c),
        Instance::Braided(b) => materialize(&b.h, &b.r)?.to_json(),
        Instance::Plane(p) => {
            let mut v = p.to_json();
            v["host"] = io::cobraided_to_json(p.host());
            let pieces: Vec<Value> = (1..=ctx.degree)
                .map(|d| p.piece(d).map(|c| c.to_json()))
                .collect::<Result<_, _>>()?;
            v["pieces"] = Value::Array(pieces);
            v
        }
    };
    Ok(Outcome { value, passed: true })
}

fn print_json(v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn write_json(path: &Path, v: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).expect("serializable");
    std::fs::write(path, text + "\n").map_err(|e| Failure::new("io", format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let degree = match cli.degree {
        Some(d) => d,
        None => match std::env::var("HOMQ_DEFAULT_DEGREE") {
            Ok(s) => s.trim().parse().map_err(|_| {
                Failure::new(
                    "parameter_violation",
                    format!("HOMQ_DEFAULT_DEGREE=`{s}` is not a degree"),
                )
            })?,
            Err(_) => FALLBACK_DEGREE,
        },
    };
    let Format::Json = cli.format;
    let ctx = Ctx {
        degree,
        params: cli.params.into_iter().collect(),
        timings: cli.timings,
    };
    match &cli.cmd {
        Cmd::Verify { target } => verify(&ctx, target),
        Cmd::Frt {
            action: FrtCmd::Build { spec, lambda },
        } => frt_build(&ctx, spec, lambda.as_deref()),
        Cmd::Hybe {
            target,
            comodule,
            emit_matrix,
        } => hybe(&ctx, target, comodule, emit_matrix.as_deref()),
        Cmd::Dualize { target } => Ok(Outcome {
            value: finite(&ctx, target)?.dualize().to_json(),
            passed: true,
        }),
        Cmd::Emit { target } => emit(&ctx, target),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            print_json(&json!({"error": {"kind": "usage", "message": e.to_string().trim()}}));
            return ExitCode::from(2);
        }
    };
    let out = cli.out.clone();
    match run(cli) {
        Ok(o) => {
            let written = match &out {
                Some(p) => write_json(p, &o.value),
                None => {
                    print_json(&o.value);
                    Ok(())
                }
            };
            match written {
                Err(f) => fail(f),
                Ok(()) if o.passed => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
            }
        }
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    print_json(&json!({"error": {"kind": f.kind, "message": f.message}}));
    ExitCode::from(2)
}
