mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matroid_lrc::construct::{self, RepairSetSystem};
use matroid_lrc::gf::FieldSpec;
use matroid_lrc::linalg::MatrixJson;
use matroid_lrc::lrc::{self, bounds, Achieved, Scope};
use matroid_lrc::subset::Subset;
use matroid_lrc::zlattice::{cyclic_flats, matroid_from_z};
use matroid_lrc::{CyclicFlatLattice, Error, Field, LinearCode, Matrix, Matroid};

#[derive(Parser)]
#[command(name = "matroid-lrc", version, about = "Analyse and construct locally repairable codes through their matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, information sets, cyclic flats, locality and bounds of a code or matroid
    Analyze(AnalyzeArgs),
    /// Build a code from a repair-set system, as an evaluation code, or at random
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// The lattice of cyclic flats, as DOT by default
    Lattice(LatticeArgs),
    /// Singleton-type bounds for the given parameters
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Information,
    Systematic,
    All,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::Information => Scope::Information,
            ScopeArg::Systematic => Scope::Systematic,
            ScopeArg::All => Scope::All,
        }
    }
}

#[derive(Args)]
struct Output {
    /// Write here instead of stdout (a directory for `construct`)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Matrix, lattice, repair-set system or matroid JSON
    input: PathBuf,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, default_value_t = 2)]
    delta: u32,
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Treat skipped steps (size limits, degeneracy) as errors
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct LatticeArgs {
    input: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    k: i64,
    #[arg(long)]
    r: i64,
    #[arg(long, default_value_t = 2)]
    delta: i64,
    #[arg(long, default_value_t = 1)]
    t: i64,
    /// Achieved distance, for gaps and the optimality verdict
    #[arg(long)]
    d: Option<i64>,
    /// Alphabet size, adds the alphabet-aware bound on k (needs --d)
    #[arg(long)]
    q: Option<i64>,
    #[arg(long, value_enum, default_value = "all")]
    scope: ScopeArg,
    #[command(flatten)]
    output: Output,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Cyclic-flat construction from a repair-set system, represented over --field
    CyclicFlats {
        system: PathBuf,
        /// p or p,m
        #[arg(long, default_value = "4099")]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        attempts: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluation code over GF(q) with an additive subgroup of size r+delta-1
    TamoBarg {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 2)]
        delta: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Random LRC with locality sets of size r+delta-1
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 2)]
        delta: u32,
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    /// The command ran but what it produced did not verify.
    Unverified(String),
    Strict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Parse(_) | Error::Json(_)) | Failure::Io(..) => 4,
            Failure::Lib(Error::SearchBudgetExceeded(_) | Error::RepresentationNotFound { .. }) => 3,
            Failure::Unverified(_) => 3,
            Failure::Lib(_) | Failure::Strict(_) => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(p, e) => write!(f, "{}: {e}", p.display()),
            Failure::Unverified(s) => write!(f, "verification failed: {s}"),
            Failure::Strict(s) => write!(f, "{s} (--strict)"),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    if let Some(n) = std::env::var("MATROID_LRC_THREADS").ok().and_then(|v| v.parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Construct { kind } => construct(kind),
        Command::Lattice(a) => lattice(a),
        Command::Bounds(a) => bounds_cmd(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn read_json(path: &Path) -> Res<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    serde_json::from_str(&text).map_err(|e| Failure::Lib(Error::Parse(format!("{}: {e}", path.display()))))
}

fn parse_field(s: &str) -> Res<Field> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |v: &str| v.parse::<u32>().map_err(|_| Failure::Lib(Error::Parse(format!("bad --field {s:?}, expected p or p,m"))));
    let (p, m) = match parts.as_slice() {
        [p] => (num(p)?, 1),
        [p, m] => (num(p)?, num(m)?),
        _ => return Err(Failure::Lib(Error::Parse(format!("bad --field {s:?}, expected p or p,m")))),
    };
    let spec = FieldSpec::new(p, m, None).map_err(Error::from)?;
    Ok(Field::from_spec(&spec).map_err(Error::from)?)
}

enum Input {
    Code(LinearCode),
    Lattice(CyclicFlatLattice),
    Matroid(Matroid),
    System(RepairSetSystem),
}

impl Input {
    fn load(path: &Path) -> Res<Input> {
        let v = read_json(path)?;
        if v.get("entries").is_some() {
            let j: MatrixJson = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(Input::Code(LinearCode::new(Matrix::from_json(&j)?)))
        } else if v.get("flats").is_some() {
            Ok(Input::Lattice(CyclicFlatLattice::from_json(&v)?))
        } else if v.get("sets").is_some() {
            let sys: RepairSetSystem = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(Input::System(sys))
        } else if v.get("realization").is_some() {
            Ok(Input::Matroid(Matroid::from_json(&v)?))
        } else {
            Err(Error::Parse(format!("{}: not a matrix, lattice, repair-set system or matroid file", path.display())).into())
        }
    }

    fn matroid(&self) -> Res<Matroid> {
        Ok(match self {
            Input::Code(c) => c.matroid().clone(),
            Input::Lattice(z) => matroid_from_z(z)?,
            Input::Matroid(m) => m.clone(),
            Input::System(sys) => construct::construct_matroid(sys)?.matroid,
        })
    }
}

fn emit(output: &Output, default: Format, json: &Value, text: impl FnOnce() -> String, dot: Option<String>) -> Res<()> {
    let body = match output.format.unwrap_or(default) {
        Format::Json => serde_json::to_string_pretty(json).expect("reports serialize") + "\n",
        Format::Text => text(),
        Format::Dot => dot.ok_or_else(|| Error::BadParams("no DOT rendering for this command".into()))?,
    };
    match &output.out {
        Some(p) => std::fs::write(p, body).map_err(|e| Failure::Io(p.clone(), e)),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn labels(m: &Matroid, s: Subset) -> Value {
    json!(m.ground().labels_of(s))
}

fn analyze(a: AnalyzeArgs) -> Res<()> {
    let input = Input::load(&a.input)?;
    let m = input.matroid()?;
    let mut diagnostics: Vec<String> = Vec::new();
    let mut skip = |what: String| -> Res<()> {
        if a.strict {
            return Err(Failure::Strict(what));
        }
        diagnostics.push(what);
        Ok(())
    };
    let p = m.local_params(m.full());
    let non_degenerate = m.is_non_degenerate();
    let mut report = json!({
        "input": a.input.display().to_string(),
        "n": p.n,
        "k": p.k,
        "d": p.d,
        "non_degenerate": non_degenerate,
    });

    report["information_sets"] = match &input {
        Input::Code(c) => match c.information_sets() {
            Ok(sets) => json!(sets.iter().map(|&s| labels(&m, s)).collect::<Vec<_>>()),
            Err(e @ Error::GroundTooLarge { .. }) => {
                skip(format!("information sets skipped: {e}"))?;
                Value::Null
            }
            Err(e) => return Err(e.into()),
        },
        _ => match m.bases() {
            Ok(sets) => json!(sets.iter().map(|&s| labels(&m, s)).collect::<Vec<_>>()),
            Err(e) => {
                skip(format!("information sets skipped: {e}"))?;
                Value::Null
            }
        },
    };

    report["lattice"] = match cyclic_flats(&m) {
        Ok(z) => z.to_json(),
        Err(e @ Error::GroundTooLarge { .. }) => {
            skip(format!("lattice skipped: {e}"))?;
            Value::Null
        }
        Err(e) => return Err(e.into()),
    };

    if !non_degenerate {
        skip("matroid is degenerate (it has loops or coloops); locality analysis stops here".into())?;
    } else if let Some(r) = a.r {
        let loc = lrc::analyze_locality(&m, r, a.delta, a.t)?;
        report["locality"] = json!(loc);
        match (loc.scope, p.d) {
            (Some(scope), Some(d)) if r <= p.k => {
                let v = bounds::classify_optimality(
                    Achieved { n: p.n as i64, k: p.k as i64, d: d as i64, r: r as i64, delta: a.delta as i64, t: a.t as i64 },
                    scope,
                );
                report["verdict"] = json!(v);
            }
            (None, _) => diagnostics.push(format!("no ({r},{})-locality with t={} found", a.delta, a.t)),
            _ => diagnostics.push(format!("bounds need r <= k, got r={r}, k={}", p.k)),
        }
    }
    report["diagnostics"] = json!(diagnostics);
    emit(&a.output, Format::Json, &report, || render::analyze(&report), None)
}

fn lattice(a: LatticeArgs) -> Res<()> {
    let z = match Input::load(&a.input)? {
        Input::Lattice(z) => z,
        other => cyclic_flats(&other.matroid()?)?,
    };
    let json = z.to_json();
    emit(&a.output, Format::Dot, &json, || render::lattice(&json), Some(z.to_dot()))
}

fn bounds_cmd(a: BoundsArgs) -> Res<()> {
    // validates r <= k and the rest of the shape up front
    bounds::prakash(a.n, a.k, a.r, a.delta)?;
    let scope: Scope = a.scope.into();
    let mut report = match a.d {
        Some(d) => {
            let v = bounds::classify_optimality(Achieved { n: a.n, k: a.k, d, r: a.r, delta: a.delta, t: a.t }, scope);
            json!(v)
        }
        None => json!({
            "params": {"n": a.n, "k": a.k, "r": a.r, "delta": a.delta, "t": a.t},
            "scope": scope,
            "in_p": bounds::in_p(a.n, a.k, a.r, a.delta),
            "bounds": bounds::bound_rows(a.n, a.k, a.r, a.delta, a.t, scope),
        }),
    };
    if let Some(q) = a.q {
        let d = a.d.ok_or_else(|| Error::BadParams("--q needs --d".into()))?;
        report["cadambe"] = json!(bounds::cadambe(a.n, a.k, d, a.r, q)?);
    }
    if bounds::in_p(a.n, a.k, a.r, a.delta) {
        report["d_max_lower_bound"] = json!(bounds::d_max_lower_bound(a.n, a.k, a.r, a.delta)?);
    }
    emit(&a.output, Format::Text, &report, || render::bounds(&report), None)
}

/// With `--out DIR` each artifact goes to its own file; otherwise one JSON
/// bundle is printed.
fn write_artifacts(output: &Output, bundle: &Value, files: &[(&str, String)]) -> Res<()> {
    match &output.out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| Failure::Io(dir.clone(), e))?;
            for (name, body) in files {
                let p = dir.join(name);
                std::fs::write(&p, body).map_err(|e| Failure::Io(p, e))?;
            }
            Ok(())
        }
        None => emit(&Output { out: None, format: output.format }, Format::Json, bundle, || render::construct(bundle), None),
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("artifacts serialize") + "\n"
}

fn construct(kind: ConstructKind) -> Res<()> {
    match kind {
        ConstructKind::CyclicFlats { system, field, seed, attempts, output } => {
            let v = read_json(&system)?;
            let sys: RepairSetSystem = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
            let field = parse_field(&field)?;
            let c = construct::construct_matroid(&sys)?;
            let gg = construct::gammoid_graph(&sys)?;
            let rep = construct::represent(&sys, &field, seed, attempts)?;
            let code = LinearCode::new(rep.generator.clone());
            let m = code.matroid();
            let locality = (0..m.len())
                .map(|x| {
                    let i = (0..sys.m()).find(|&i| sys.sets()[i].contains(x)).expect("coverage was validated");
                    lrc::verify_locality(m, x, &[sys.sets()[i]], c.params.r, c.params.delta, 1)
                })
                .collect::<Result<Vec<_>, _>>()?;
            let bundle = json!({
                "seed": seed,
                "attempt": rep.attempt,
                "params": c.params,
                "matrix": rep.generator.to_json(),
                "locality": locality,
                "lattice": c.lattice.to_json(),
            });
            write_artifacts(
                &output,
                &bundle,
                &[
                    ("matrix.json", pretty(&rep.generator.to_json())),
                    ("locality.json", pretty(&json!({"seed": seed, "attempt": rep.attempt, "params": c.params, "locality": locality}))),
                    ("lattice.dot", c.lattice.to_dot()),
                    ("gammoid.dot", gg.to_dot()),
                ],
            )?;
            if !locality.iter().all(|l| l.holds) {
                return Err(Failure::Unverified("repair sets do not give the claimed locality".into()));
            }
            Ok(())
        }
        ConstructKind::TamoBarg { q, r, delta, k, output } => {
            let tb = construct::tamo_barg(q, r, delta, k)?;
            let matrix = tb.code.generator().to_json();
            let bundle = json!({"matrix": matrix, "report": tb.report});
            write_artifacts(&output, &bundle, &[("matrix.json", pretty(&matrix)), ("locality.json", pretty(&tb.report))])?;
            if tb.report.params.d as i64 != tb.report.bound || !tb.report.locality.iter().all(|l| l.holds) {
                return Err(Failure::Unverified(format!("d = {}, bound {}", tb.report.params.d, tb.report.bound)));
            }
            Ok(())
        }
        ConstructKind::Random { n, k, r, delta, field, seed, output } => {
            let field = parse_field(&field)?;
            let rl = construct::random_lrc(n, k, r, delta, &field, seed)?;
            let matrix = rl.code.generator().to_json();
            let bundle = json!({"matrix": matrix, "report": rl.report});
            write_artifacts(&output, &bundle, &[("matrix.json", pretty(&matrix)), ("locality.json", pretty(&rl.report))])?;
            if !rl.report.success {
                return Err(Failure::Unverified(format!(
                    "events A_i = {:?}, B = {}; try another --seed or a larger field",
                    rl.report.events_a, rl.report.event_b
                )));
            }
            Ok(())
        }
    }
}
