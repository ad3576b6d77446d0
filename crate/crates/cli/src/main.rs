use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypercut::oracle::{Oracle, DEFAULT_MAX_DIMENSION, HARD_MAX_DIMENSION};
use hypercut::{build_cycle_cut, build_path_cut, validate_cut, Cube, CutFamily, CutMode, Error, OracleValue, SearchBudget, StructureKind, Vertex};
use serde::Serialize;
use serde_json::json;

mod dot;
mod properties;
mod report;
mod verify;

use report::{emit, to_json, FamilyJson, OracleJson, RunReport, SCHEMA_VERSION};
use verify::Scope;

#[derive(Parser)]
#[command(name = "hypercut", version, about = "Structure and substructure cuts of hypercubes")]
struct Cli {
    /// Oracle dimension ceiling (at most 5).
    #[arg(long, global = true, env = "HYPERCUT_MAX_DIM", default_value_t = DEFAULT_MAX_DIMENSION,
          value_parser = clap::value_parser!(u32).range(1..=HARD_MAX_DIMENSION as i64))]
    max_dim: u32,

    /// Worker threads for independent rows (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the explicit cut family isolating 0...0.
    Construct(ConstructArgs),
    /// Compare the closed forms with the oracle and the constructions.
    Verify(VerifyArgs),
    /// Exhaustive minimum cut search.
    Oracle(OracleArgs),
    /// DOT drawing of Q_n with a vertex set removed.
    ExportDot(DotArgs),
    /// Seeded randomized checks of the neighbour-count bounds.
    PropertyTest(PropertyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Path,
    Cycle,
    Star,
    Vertex,
    Edge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Structure,
    Substructure,
}

impl From<Mode> for CutMode {
    fn from(m: Mode) -> CutMode {
        match m {
            Mode::Structure => CutMode::Structure,
            Mode::Substructure => CutMode::Substructure,
        }
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    k: u32,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    scope: Scope,
    #[arg(long)]
    nmax: Option<u32>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum)]
    kind: Kind,
    /// Path/cycle length or star size; ignored for vertex and edge.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value = "structure")]
    mode: Mode,
    #[arg(long, default_value_t = 4)]
    max_size: usize,
    /// Exit with status 3 unless the value is proven exact.
    #[arg(long)]
    exact: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct DotArgs {
    #[arg(long)]
    n: u32,
    /// Comma-separated bit strings to delete.
    #[arg(long, value_delimiter = ',')]
    remove: Vec<String>,
    /// Delete the vertices of a constructed cut instead.
    #[arg(long, value_enum, requires = "k", conflicts_with = "remove")]
    kind: Option<Kind>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PropertyArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    trials: usize,
    /// Cube dimension for the sampled pairs.
    #[arg(long, default_value_t = 6)]
    n: u32,
    /// Largest dimension for the exhaustive common-neighbour check.
    #[arg(long, default_value_t = 10)]
    nmax: u32,
    #[command(flatten)]
    output: Output,
}

enum Failure {
    Usage(String),
    Mismatch,
    Budget(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Budget(msg) => Failure::Budget(msg),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn structure_kind(kind: Kind, k: Option<u32>) -> Result<StructureKind, Failure> {
    let need = || k.ok_or_else(|| Failure::Usage(format!("--kind {kind:?} needs --k").to_lowercase()));
    let kind = match kind {
        Kind::Vertex => StructureKind::Vertex,
        Kind::Edge => StructureKind::Edge,
        Kind::Star => StructureKind::Star(need()?),
        Kind::Path => StructureKind::Path(need()?),
        Kind::Cycle => StructureKind::Cycle(need()?),
    };
    Ok(kind.validate()?)
}

fn construct(kind: Kind, n: u32, k: u32) -> Result<CutFamily, Failure> {
    match kind {
        Kind::Path => Ok(build_path_cut(n, k)?),
        Kind::Cycle => Ok(build_cycle_cut(n, k)?),
        other => Err(Failure::Usage(format!("no construction for {other:?}; use path or cycle"))),
    }
}

#[derive(Serialize)]
struct ConstructJson {
    schema_version: u32,
    command: &'static str,
    k: u32,
    isolated_vertex: String,
    verdict: String,
    family: FamilyJson,
}

fn cmd_construct(a: ConstructArgs) -> Outcome {
    let f = construct(a.kind, a.n, a.k)?;
    let verdict = validate_cut(&f);
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&ConstructJson {
            schema_version: SCHEMA_VERSION,
            command: "construct",
            k: a.k,
            isolated_vertex: Vertex::ZERO.render(a.n),
            verdict: format!("{verdict:?}"),
            family: FamilyJson::from(&f),
        }),
        Format::Csv => {
            let mut s = String::from("element,position,vertex\n");
            for (i, el) in f.elements.iter().enumerate() {
                for (j, v) in el.vertices().iter().enumerate() {
                    s.push_str(&format!("{i},{j},{}\n", v.render(a.n)));
                }
            }
            s
        }
        Format::Dot => dot::render(a.n, &f.vertex_set())?,
    };
    emit(&text, a.output.out.as_deref())?;
    Ok(())
}

fn report_out(report: &RunReport, output: &Output) -> Outcome {
    let text = match output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(report),
        Format::Csv => report.to_csv(),
        Format::Dot => return Err(Failure::Usage("reports are json or csv".into())),
    };
    emit(&text, output.out.as_deref())?;
    if report.summary.failed > 0 {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

fn cmd_verify(a: VerifyArgs, ceiling: u32) -> Outcome {
    if let Some(n) = a.nmax {
        if n > 64 {
            return Err(Failure::Usage(format!("--nmax must be at most 64, got {n}")));
        }
    }
    let start = std::time::Instant::now();
    let rows = verify::run(a.scope, a.nmax, ceiling);
    eprintln!("verify: {} rows in {:.2?}", rows.len(), start.elapsed());
    let params = json!({
        "scope": a.scope.to_possible_value().map(|v| v.get_name().to_string()),
        "nmax": a.nmax,
        "max_dim": ceiling,
    });
    report_out(&RunReport::new("verify", params, rows), &a.output)
}

fn cmd_oracle(a: OracleArgs, ceiling: u32) -> Outcome {
    let kind = structure_kind(a.kind, a.k)?;
    Cube::new(a.n)?;
    let budget = SearchBudget::default().with_max_family_size(a.max_size).with_max_dimension(ceiling)?;
    let oracle = Oracle::new(a.n, kind, a.mode.into(), &budget)?;
    let result = oracle.min_cut(a.max_size);
    let out = OracleJson::new(a.n, a.max_size, kind.to_string(), CutMode::from(a.mode).to_string(), &result);
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&out),
        Format::Csv => format!(
            "n,kind,mode,status,value,exhaustive,copies,orbits\n{},{},{},{},{},{},{},{}\n",
            out.n, out.kind, out.mode, out.value.status, out.value.value, out.exhaustive, out.copies, out.orbits
        ),
        Format::Dot => match &result.witness {
            Some(w) => dot::render(a.n, &w.vertex_set())?,
            None => dot::render(a.n, &[])?,
        },
    };
    emit(&text, a.output.out.as_deref())?;
    if a.exact && !matches!(result.value, OracleValue::Exact(_)) {
        return Err(Failure::Budget(out.message));
    }
    Ok(())
}

fn cmd_export_dot(a: DotArgs) -> Outcome {
    if a.n > 8 {
        return Err(Failure::Usage(format!("export-dot draws n <= 8, got {}", a.n)));
    }
    let cube = Cube::new(a.n)?;
    let removed = match a.kind {
        Some(kind) => construct(kind, a.n, a.k.expect("clap requires --k"))?.vertex_set(),
        None => a.remove.iter().map(|s| cube.parse(s)).collect::<Result<Vec<_>, _>>()?,
    };
    emit(&dot::render(a.n, &removed)?, a.out.as_deref())?;
    Ok(())
}

fn cmd_property_test(a: PropertyArgs) -> Outcome {
    if !(3..=10).contains(&a.n) || a.nmax > 12 {
        return Err(Failure::Usage("property-test needs 3 <= n <= 10 and nmax <= 12".into()));
    }
    let rows = properties::run(a.seed, a.trials, a.n, a.nmax);
    let params = json!({ "seed": a.seed, "trials": a.trials, "n": a.n, "nmax": a.nmax });
    report_out(&RunReport::new("property-test", params, rows), &a.output)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().ok();
    }
    let outcome = match cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a, cli.max_dim),
        Command::Oracle(a) => cmd_oracle(a, cli.max_dim),
        Command::ExportDot(a) => cmd_export_dot(a),
        Command::PropertyTest(a) => cmd_property_test(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => {
            eprintln!("error: verification mismatch");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exhausted: {msg}");
            ExitCode::from(3)
        }
    }
}
