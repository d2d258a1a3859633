//! `canrel`: load JSON objects, run the calculus, drive the verification harness.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 type mismatch, 4 precondition failure.

use std::fmt;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use canrel::indexed::{
    deformation_family, icompose, indexed_reduce, lift_indexed, sabot_leq, IndexMode, IndexedCanonicalRelation,
    IndexedLagrangian,
};
use canrel::json::{indexed_relation_from_json, parse_scalar, value_to_string, Json};
use canrel::linalg::Subspace;
use canrel::path::{path_factorize_with, ww_normalize, Path, StepFactorization};
use canrel::relations::{compose, CanonicalRelation};
use canrel::symplectic::{chow_distance, reduce_lagrangian, reduction_data, ReductionData, SymplecticSpace};
use canrel::verify::{laws, replay, run_suite, Failure, VerifyConfig, VerifyReport};
use canrel::Error;

const DEFAULT_MAX_DIM: usize = 16;
const FACTOR_MAX_LEN: usize = 4;
const FACTOR_MAX_BASE_DIM: usize = 4;

#[derive(Parser)]
#[command(name = "canrel", version, about = "Exact linear canonical relations with excess bookkeeping")]
struct Cli {
    /// Master seed for the verification harness.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Admit negative indices.
    #[arg(long, global = true)]
    extended_indices: bool,
    /// Spaces per indentation level of the JSON output; 0 prints compact JSON.
    #[arg(long, global = true, default_value_t = 2)]
    json_indent: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Through X × R^{2κ}, κ the kernel dimension.
    Minimal,
    /// Through X × Ȳ × Y.
    Product,
}

#[derive(Subcommand)]
enum Command {
    /// Compose relations left to right (`-` reads stdin).
    Compose {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Treat inputs as indexed relations (optional "k", default 0).
        #[arg(long)]
        indexed: bool,
    },
    /// Shadow and excess of a path.
    Normalize { path: PathBuf },
    /// Factor a path into a reduction followed by a coreduction.
    Factor {
        path: PathBuf,
        /// Check that [A, B] has the shadow and excess of the path.
        #[arg(long)]
        recheck: bool,
        #[arg(long, value_enum, default_value = "minimal")]
        method: Method,
    },
    /// Indexed reduction (L, k) ↦ (L^C, k + E^C(L)).
    Reduce {
        /// Ambient space; standard if omitted.
        #[arg(long)]
        space: Option<PathBuf>,
        #[arg(long)]
        coisotropic: PathBuf,
        #[arg(long)]
        lagrangian: PathBuf,
        #[arg(long, default_value_t = 0)]
        k: i64,
    },
    /// Chow distance between two Lagrangians.
    Distance {
        #[arg(long)]
        space: Option<PathBuf>,
        l1: PathBuf,
        l2: PathBuf,
    },
    /// Decide a ≤ b for indexed Lagrangians.
    Order { a: PathBuf, b: PathBuf },
    /// A Lagrangian reducing to (Λ, k).
    Lift {
        #[arg(long)]
        space: Option<PathBuf>,
        #[arg(long)]
        coisotropic: PathBuf,
        #[arg(long)]
        lambda: PathBuf,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Evaluate the deformation family from L towards (Λ, E^C(L) − q) at t.
    Deform {
        #[arg(long)]
        space: Option<PathBuf>,
        #[arg(long)]
        coisotropic: PathBuf,
        #[arg(long)]
        lagrangian: PathBuf,
        #[arg(long)]
        lambda: PathBuf,
        #[arg(long)]
        q: usize,
        /// Rational parameter, e.g. `-3/2`.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        t: String,
    },
    /// Run the seeded property suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 20)]
        trials: u64,
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
        /// Re-run the failures recorded in a report or failure file.
        #[arg(long)]
        replay: Option<PathBuf>,
        /// List suites and laws.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug)]
struct CliError {
    code: u8,
    message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => 2,
            e if e.is_mismatch() => 3,
            _ => 4,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn parse_error(message: String) -> CliError {
    CliError { code: 2, message }
}

fn precondition(message: String) -> CliError {
    CliError { code: 4, message }
}

struct Ctx {
    seed: u64,
    mode: IndexMode,
    indent: usize,
    max_dim: usize,
}

impl Ctx {
    fn emit(&self, v: &Value) {
        let indent = (self.indent > 0).then_some(self.indent);
        // A closed pipe (`canrel ... | head`) is not an error worth a panic.
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, "{}", value_to_string(v, indent));
    }

    fn check_dim(&self, what: &str, dim: usize) -> CliResult<()> {
        if dim > self.max_dim {
            return Err(precondition(format!(
                "{what} has dimension {dim}, above CANREL_MAX_DIM = {}",
                self.max_dim
            )));
        }
        Ok(())
    }

    fn check_relation(&self, f: &CanonicalRelation) -> CliResult<()> {
        self.check_dim("target", f.target().dim())?;
        self.check_dim("source", f.source().dim())
    }
}

fn read_text(path: &FsPath) -> CliResult<String> {
    if path == FsPath::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| parse_error(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| parse_error(format!("{}: {e}", path.display())))
}

fn read_value(path: &FsPath) -> CliResult<Value> {
    serde_json::from_str(&read_text(path)?).map_err(|e| parse_error(format!("{}: {e}", path.display())))
}

fn load<T: Json>(path: &FsPath) -> CliResult<T> {
    T::from_json(&read_value(path)?).map_err(|e| match e {
        Error::Parse(m) => parse_error(format!("{}: {m}", path.display())),
        other => other.into(),
    })
}

/// The space given by `--space`, or the standard space of dimension `dim`.
fn space_or_standard(ctx: &Ctx, space: &Option<PathBuf>, dim: usize) -> CliResult<SymplecticSpace> {
    let x = match space {
        Some(p) => load::<SymplecticSpace>(p)?,
        None if dim % 2 == 0 => SymplecticSpace::standard(dim / 2),
        None => return Err(precondition(format!("odd ambient dimension {dim} has no standard form"))),
    };
    ctx.check_dim("space", x.dim())?;
    Ok(x)
}

fn reduction(ctx: &Ctx, space: &Option<PathBuf>, coisotropic: &FsPath) -> CliResult<ReductionData> {
    let c: Subspace = load(coisotropic)?;
    let x = space_or_standard(ctx, space, c.ambient())?;
    Ok(reduction_data(&x, &c)?)
}

fn load_path(ctx: &Ctx, file: &FsPath) -> CliResult<Path> {
    let p: Path = load(file)?;
    ctx.check_dim("path object", p.target().dim())?;
    for f in p.steps() {
        ctx.check_relation(f)?;
    }
    Ok(p)
}

fn normal_form_json(p: &Path) -> CliResult<Value> {
    let nf = ww_normalize(p)?;
    Ok(json!({"shadow": nf.shadow.to_json(), "excess": nf.excess}))
}

fn cmd_compose(ctx: &Ctx, files: &[PathBuf], indexed: bool) -> CliResult<Value> {
    if indexed {
        let mut acc: Option<IndexedCanonicalRelation> = None;
        for file in files {
            let v = read_value(file)?;
            let next = indexed_relation_from_json(&v, ctx.mode)
                .map_err(|e| parse_error(format!("{}: {e}", file.display())))?;
            ctx.check_relation(next.relation())?;
            acc = Some(match acc {
                None => next,
                Some(a) => icompose(&a, &next)?,
            });
        }
        return Ok(acc.expect("at least one file").to_json());
    }
    let mut acc: Option<CanonicalRelation> = None;
    for file in files {
        let next: CanonicalRelation = load(file)?;
        ctx.check_relation(&next)?;
        acc = Some(match acc {
            None => next,
            Some(a) => compose(&a, &next)?,
        });
    }
    Ok(acc.expect("at least one file").to_json())
}

fn cmd_factor(ctx: &Ctx, file: &FsPath, recheck: bool, method: Method) -> CliResult<Value> {
    let p = load_path(ctx, file)?;
    if p.len() > FACTOR_MAX_LEN {
        return Err(precondition(format!("factor takes paths of length ≤ {FACTOR_MAX_LEN}")));
    }
    for i in 0..=p.len() {
        if p.object_at(i).dim() > FACTOR_MAX_BASE_DIM {
            return Err(precondition(format!("factor takes spaces of dimension ≤ {FACTOR_MAX_BASE_DIM}")));
        }
    }
    let method = match method {
        Method::Minimal => StepFactorization::Minimal,
        Method::Product => StepFactorization::Product,
    };
    let fac = path_factorize_with(&p, method)?;
    let mut out = json!({
        "middle": fac.middle.to_json(),
        "reduction": fac.reduction.to_json(),
        "coreduction": fac.coreduction.to_json(),
    });
    if recheck {
        let ab = Path::new(vec![fac.reduction.clone(), fac.coreduction.clone()])?;
        let ok = fac.reduction.is_reduction()
            && fac.coreduction.is_coreduction()
            && ww_normalize(&ab)? == ww_normalize(&p)?;
        out["recheck"] = Value::Bool(ok);
        if !ok {
            ctx.emit(&out);
            return Err(CliError {
                code: 1,
                message: "recheck failed: [A, B] does not reproduce the path".into(),
            });
        }
    }
    Ok(out)
}

fn cmd_deform(
    ctx: &Ctx,
    space: &Option<PathBuf>,
    coisotropic: &FsPath,
    lagrangian: &FsPath,
    lambda: &FsPath,
    q: usize,
    t: &str,
) -> CliResult<Value> {
    let rd = reduction(ctx, space, coisotropic)?;
    let l: Subspace = load(lagrangian)?;
    let lambda: Subspace = load(lambda)?;
    let t = parse_scalar(t).map_err(|e| parse_error(e.to_string()))?;
    let fam = deformation_family(&rd, &l, &lambda, q)?;
    let lt = fam.eval(&t);
    let reduced = indexed_reduce(&rd, &IndexedLagrangian::new(rd.ambient.clone(), lt.clone(), 0)?)?;
    Ok(json!({
        "t": t.to_string(),
        "lagrangian": lt.to_json(),
        "reduced": reduced.to_json(),
        "k": fam.k,
        "q": fam.q,
        "r": fam.r,
        "printed_bound_holds": fam.satisfies_printed_bound(),
    }))
}

fn report_value(report: &VerifyReport) -> Value {
    serde_json::to_value(report).expect("reports serialize")
}

fn cmd_verify(
    ctx: &Ctx,
    suite: &str,
    trials: u64,
    max_dim: usize,
    replay_file: &Option<PathBuf>,
    list: bool,
) -> CliResult<(Value, bool)> {
    if list {
        let all: Vec<Value> = laws()
            .iter()
            .map(|l| json!({"suite": l.suite, "law": l.name, "dim_cap": l.dim_cap, "statement": l.statement}))
            .collect();
        return Ok((Value::Array(all), true));
    }
    if let Some(file) = replay_file {
        let v = read_value(file)?;
        let failures: Vec<Failure> = if let Some(fs) = v.get("failures") {
            serde_json::from_value(fs.clone())
        } else if v.is_array() {
            serde_json::from_value(v)
        } else {
            serde_json::from_value(v).map(|f| vec![f])
        }
        .map_err(|e| parse_error(format!("{}: {e}", file.display())))?;
        let mut still = vec![];
        for f in &failures {
            still.extend(replay(f)?);
        }
        let ok = still.is_empty();
        let out = json!({
            "replayed": failures.len(),
            "still_failing": serde_json::to_value(&still).expect("failures serialize"),
        });
        return Ok((out, ok));
    }
    let cfg = VerifyConfig {
        seed: ctx.seed,
        trials,
        max_dim: max_dim.min(ctx.max_dim),
        mode: ctx.mode,
    };
    let report = run_suite(suite, &cfg).map_err(|e| match e {
        Error::Precondition(m) => precondition(m),
        other => other.into(),
    })?;
    for l in &report.laws {
        eprintln!(
            "{} {}/{}: {}/{} trials passed",
            if l.failures == 0 { "PASS" } else { "FAIL" },
            l.suite,
            l.law,
            l.trials - l.failures,
            l.trials
        );
    }
    Ok((report_value(&report), report.passed()))
}

fn run(cli: Cli) -> CliResult<()> {
    let max_dim = match std::env::var("CANREL_MAX_DIM") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| parse_error(format!("CANREL_MAX_DIM must be a count, got {s:?}")))?,
        Err(_) => DEFAULT_MAX_DIM,
    };
    let ctx = Ctx {
        seed: cli.seed,
        mode: if cli.extended_indices {
            IndexMode::Extended
        } else {
            IndexMode::Standard
        },
        indent: cli.json_indent,
        max_dim,
    };
    let out = match &cli.command {
        Command::Compose { files, indexed } => cmd_compose(&ctx, files, *indexed)?,
        Command::Normalize { path } => normal_form_json(&load_path(&ctx, path)?)?,
        Command::Factor { path, recheck, method } => cmd_factor(&ctx, path, *recheck, *method)?,
        Command::Reduce {
            space,
            coisotropic,
            lagrangian,
            k,
        } => {
            let rd = reduction(&ctx, space, coisotropic)?;
            let l: Subspace = load(lagrangian)?;
            let a = IndexedLagrangian::new(rd.ambient.clone(), l, *k)?;
            indexed_reduce(&rd, &a)?.to_json()
        }
        Command::Distance { space, l1, l2 } => {
            let (a, b): (Subspace, Subspace) = (load(l1)?, load(l2)?);
            let x = space_or_standard(&ctx, space, a.ambient())?;
            json!({"distance": chow_distance(&x, &a, &b)?})
        }
        Command::Order { a, b } => {
            let (a, b): (IndexedLagrangian, IndexedLagrangian) = (load(a)?, load(b)?);
            ctx.check_dim("space", a.space().dim())?;
            let d = chow_distance(a.space(), a.lagrangian(), b.lagrangian())?;
            json!({"leq": sabot_leq(&a, &b)?, "distance": d, "index_gap": b.index() - a.index()})
        }
        Command::Lift {
            space,
            coisotropic,
            lambda,
            k,
        } => {
            let rd = reduction(&ctx, space, coisotropic)?;
            let lambda: Subspace = load(lambda)?;
            let l = lift_indexed(&rd, &lambda, *k)?;
            // Sanity: the lift must reduce back; anything else is a bug.
            let back = reduce_lagrangian(&rd, &l)?;
            debug_assert_eq!(back, lambda);
            IndexedLagrangian::new(rd.ambient.clone(), l, 0)?.to_json()
        }
        Command::Deform {
            space,
            coisotropic,
            lagrangian,
            lambda,
            q,
            t,
        } => cmd_deform(&ctx, space, coisotropic, lagrangian, lambda, *q, t)?,
        Command::Verify {
            suite,
            trials,
            max_dim,
            replay,
            list,
        } => {
            let (out, ok) = cmd_verify(&ctx, suite, *trials, *max_dim, replay, *list)?;
            ctx.emit(&out);
            if !ok {
                return Err(CliError {
                    code: 1,
                    message: "verification failures".into(),
                });
            }
            return Ok(());
        }
    };
    ctx.emit(&out);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("canrel: {e}");
            ExitCode::from(e.code)
        }
    }
}
