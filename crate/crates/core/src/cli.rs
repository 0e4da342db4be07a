//! Command-line front end. Artifacts go to files; stdout carries summaries.
//!
//! Exit codes: 0 success, 1 a construction or verification failed, 2 bad
//! usage or unreadable input.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{ag_cycle, pg_cycle};
use crate::error::{Error, Result};
use crate::gf::{arith, certificate_record, Field};
use crate::graphs::{build_graph, Embedding, GraphSpec, PlaneModel, PlaneRef};
use crate::oracle::{exists_embedding, OraclePlane, Verdict, DEFAULT_BUDGET};
use crate::plane::{ag_from_field, check_plane_axioms, pg_from_field, GenericPlane};
use crate::wheelgear::{gear, gear_generic, wheel, wheel_generic};

#[derive(Parser, Debug)]
#[command(name = "planegraph", version, about = "Cycles, wheels and gears in finite planes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Field parameters and modulus.
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Export or check plane files.
    Plane {
        #[command(subcommand)]
        cmd: PlaneCmd,
    },
    /// A k-cycle, or every k with `sweep`.
    #[command(args_conflicts_with_subcommands = true)]
    Cycle {
        #[command(subcommand)]
        sweep: Option<CycleSweepCmd>,
        #[command(flatten)]
        args: CycleArgs,
    },
    /// The wheel W_n.
    Wheel(WheelArgs),
    /// The gear G_n, or a coverage matrix with `sweep`.
    #[command(args_conflicts_with_subcommands = true)]
    Gear {
        #[command(subcommand)]
        sweep: Option<GearSweepCmd>,
        #[command(flatten)]
        args: GearArgs,
    },
    /// Exhaustive search for an embedding.
    Oracle(OracleArgs),
    /// Check an embedding file.
    Verify {
        file: PathBuf,
        /// Plane file, required for GENERIC embeddings.
        #[arg(long)]
        plane: Option<PathBuf>,
    },
    /// Hypothesis J certificates.
    Hypj {
        #[command(subcommand)]
        cmd: HypjCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum FieldCmd {
    Info {
        #[arg(long)]
        q: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Pg,
    Ag,
}

#[derive(Subcommand, Debug)]
pub enum PlaneCmd {
    Export {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "pg")]
        model: Model,
        #[arg(long)]
        out: PathBuf,
    },
    Check {
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct CycleArgs {
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long, value_enum, default_value = "pg")]
    plane: Model,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CycleSweepCmd {
    /// One embedding file per k plus a summary table.
    Sweep {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "pg")]
        plane: Model,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Args, Debug)]
pub struct WheelArgs {
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    n: u64,
    /// Build on a loaded plane instead of PG(2,q).
    #[arg(long)]
    plane_file: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GearArgs {
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    plane_file: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum GearSweepCmd {
    /// Route per (q, n) for every prime power q ≤ q_max.
    Sweep {
        #[arg(long, default_value_t = 16)]
        q_max: u64,
        #[arg(long, default_value_t = 5)]
        q_min: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    /// `cycle:k`, `wheel:n` or `gear:n`.
    #[arg(long)]
    graph: GraphSpec,
    /// `pg:q`, `ag:q` or a plane file.
    #[arg(long)]
    plane: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum HypjCmd {
    /// Certificate for one q.
    Show {
        #[arg(long)]
        q: u64,
    },
    /// One JSONL certificate per prime power in [min, max], sorted by q.
    Sweep {
        #[arg(long, default_value_t = 3)]
        min: u64,
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        primes_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ConstructionFailed(_) | Error::NoCertificate(_) | Error::HypothesisJNotFound(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, message: msg.into() }
}

fn failed(msg: impl Into<String>) -> Failure {
    Failure { code: 1, message: msg.into() }
}

type CliResult = std::result::Result<String, Failure>;

fn pool(jobs: usize) -> std::result::Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| usage(e.to_string()))
}

fn write_out(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn save_embedding(e: &Embedding, out: Option<&Path>) -> std::result::Result<(), Failure> {
    if let Some(p) = out {
        write_out(p, &e.to_json()?)?;
    }
    Ok(())
}

fn require(v: Option<u64>, name: &str) -> std::result::Result<u64, Failure> {
    v.ok_or_else(|| usage(format!("--{name} is required")))
}

fn load_plane(path: &Path) -> std::result::Result<GenericPlane, Failure> {
    let plane = GenericPlane::load(path)?;
    let report = check_plane_axioms(&plane);
    if !report.passed() {
        return Err(usage(format!("{} is not a plane: {}", path.display(), report.violations[0])));
    }
    Ok(plane)
}

fn summary_line(e: &Embedding, route: impl std::fmt::Debug) -> String {
    format!("{} in {}: route {:?}, verified\n", e.graph, e.plane, route)
}

fn field_info(q: u64) -> CliResult {
    #[derive(Serialize)]
    struct Info<'a> {
        p: u64,
        a: u32,
        q: u64,
        modulus: &'a [u64],
        first_primitive: u64,
    }
    let f = Field::with_order(q)?;
    let s = f.spec();
    let info = Info { p: s.p, a: s.a, q: s.q, modulus: &s.modulus, first_primitive: f.first_primitive().enc() };
    Ok(serde_json::to_string(&info).map_err(Error::from)? + "\n")
}

fn plane_cmd(cmd: PlaneCmd) -> CliResult {
    match cmd {
        PlaneCmd::Export { q, model, out } => {
            let plane = match model {
                Model::Pg => pg_from_field(q)?,
                Model::Ag => ag_from_field(q)?.to_generic(),
            };
            write_out(&out, &plane.to_json())?;
            Ok(format!("{} points, {} lines -> {}\n", plane.points, plane.lines.len(), out.display()))
        }
        PlaneCmd::Check { file } => {
            let plane = GenericPlane::load(&file)?;
            let report = check_plane_axioms(&plane);
            let mut s = String::new();
            for v in &report.violations {
                writeln!(s, "violation: {v}").unwrap();
            }
            match report.kind {
                Some(kind) if report.passed() => {
                    writeln!(s, "{kind:?} plane of order {}: {} points, {} lines", plane.q, report.points, report.lines).unwrap();
                    Ok(s)
                }
                _ => Err(failed(s + "not a plane")),
            }
        }
    }
}

fn one_cycle(q: u64, k: u64, model: Model) -> Result<crate::cycles::CycleChain> {
    match model {
        Model::Pg => pg_cycle(q, k),
        Model::Ag => ag_cycle(q, k),
    }
}

fn model_name(m: Model) -> &'static str {
    match m {
        Model::Pg => "pg",
        Model::Ag => "ag",
    }
}

/// Length, route and embedding JSON, or the error text.
type SweepRow = std::result::Result<(usize, String, String), String>;

fn cycle_sweep(q: u64, model: Model, out_dir: &Path, jobs: usize) -> CliResult {
    let max = match model {
        Model::Pg => q * q + q + 1,
        Model::Ag => q * q,
    };
    Field::with_order(q)?;
    let rows: Vec<(u64, SweepRow)> = pool(jobs)?.install(|| {
        (3..=max)
            .into_par_iter()
            .map(|k| {
                let r = one_cycle(q, k, model).and_then(|c| {
                    let json = c.to_embedding().to_json()?;
                    Ok((c.len(), format!("{:?}", c.route), json))
                });
                (k, r.map_err(|e| e.to_string()))
            })
            .collect()
    });
    let mut table = format!("{:>5} {:>7} {:>9} route\n", "k", "length", "verified");
    let mut bad = 0;
    for (k, r) in rows {
        match r {
            Ok((len, route, json)) => {
                write_out(&out_dir.join(format!("cycle_{}{q}_k{k}.json", model_name(model))), &json)?;
                writeln!(table, "{k:>5} {len:>7} {:>9} {route}", "yes").unwrap();
            }
            Err(e) => {
                bad += 1;
                writeln!(table, "{k:>5} {:>7} {:>9} {e}", "-", "no").unwrap();
            }
        }
    }
    writeln!(table, "{} of {} lengths verified", max - 2 - bad, max - 2).unwrap();
    if bad == 0 {
        Ok(table)
    } else {
        Err(failed(table))
    }
}

fn wheel_cmd(a: WheelArgs) -> CliResult {
    if let Some(path) = &a.plane_file {
        let plane = load_plane(path)?;
        let t = plane.to_table()?;
        let e = wheel_generic(&t, PlaneRef::generic(plane.q), a.n)?;
        save_embedding(&e, a.out.as_deref())?;
        return Ok(summary_line(&e, "Explicit"));
    }
    let plan = wheel(require(a.q, "q")?, a.n)?;
    save_embedding(&plan.embedding, a.out.as_deref())?;
    Ok(summary_line(&plan.embedding, plan.route))
}

fn gear_cmd(a: GearArgs) -> CliResult {
    let n = require(a.n, "n")?;
    let plan = if let Some(path) = &a.plane_file {
        let plane = load_plane(path)?;
        gear_generic(&plane.to_table()?, PlaneRef::generic(plane.q), n)?
    } else {
        gear(require(a.q, "q")?, n)?
    };
    save_embedding(&plan.embedding, a.out.as_deref())?;
    Ok(summary_line(&plan.embedding, plan.route))
}

fn gear_sweep(q_min: u64, q_max: u64, out: Option<&Path>, jobs: usize) -> CliResult {
    let qs = arith::prime_powers_between(q_min.max(2), q_max, false);
    let cols = q_max + 2;
    let cells: Vec<(u64, u64, String)> = pool(jobs)?.install(|| {
        qs.par_iter()
            .flat_map(|&q| (3..=cols).into_par_iter().map(move |n| (q, n)))
            .map(|(q, n)| {
                let cell = match gear(q, n) {
                    Ok(p) => serde_json::to_value(p.route).expect("enum").as_str().unwrap_or("?").to_string(),
                    Err(Error::ImpossibleDegree { .. }) => "IMPOSSIBLE".to_string(),
                    Err(_) => "FAILED".to_string(),
                };
                (q, n, cell)
            })
            .collect()
    });
    let mut table = String::from("q\\n");
    for n in 3..=cols {
        write!(table, " {n:>11}").unwrap();
    }
    let mut failures = 0;
    for &q in &qs {
        write!(table, "\n{q:>3}").unwrap();
        for (_, _, cell) in cells.iter().filter(|c| c.0 == q) {
            failures += usize::from(cell == "FAILED");
            write!(table, " {cell:>11}").unwrap();
        }
    }
    table.push('\n');
    if let Some(p) = out {
        let rows: Vec<serde_json::Value> =
            cells.iter().map(|(q, n, r)| serde_json::json!({"q": q, "n": n, "route": r})).collect();
        let mut s = String::new();
        for r in rows {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        write_out(p, &s)?;
    }
    if failures == 0 {
        Ok(table)
    } else {
        Err(failed(table))
    }
}

fn oracle_plane(spec: &str) -> std::result::Result<OraclePlane, Failure> {
    let parse = |s: &str| s.parse::<u64>().map_err(|_| usage(format!("bad plane order in {spec:?}")));
    if let Some(q) = spec.strip_prefix("pg:") {
        return Ok(OraclePlane::pg(parse(q)?)?);
    }
    if let Some(q) = spec.strip_prefix("ag:") {
        return Ok(OraclePlane::ag(parse(q)?)?);
    }
    Ok(OraclePlane::from_generic(&load_plane(Path::new(spec))?)?)
}

fn oracle_cmd(a: OracleArgs) -> CliResult {
    a.graph.validate()?;
    let plane = oracle_plane(&a.plane)?;
    let g = build_graph(&a.graph)?;
    let out = exists_embedding(&g, &plane, a.budget);
    if let Some(e) = &out.embedding {
        save_embedding(e, a.out.as_deref())?;
    }
    let verdict = serde_json::to_value(out.verdict).expect("enum");
    let line = serde_json::json!({"graph": a.graph.to_string(), "plane": plane.plane_ref.to_string(), "verdict": verdict, "nodes": out.nodes});
    let s = line.to_string() + "\n";
    match out.verdict {
        Verdict::BudgetExceeded => Err(failed(s)),
        _ => Ok(s),
    }
}

fn verify_cmd(file: &Path, plane: Option<&Path>) -> CliResult {
    let text = fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let e = Embedding::from_json(&text)?;
    let checked = match (e.plane.model, plane) {
        (_, Some(p)) => e.verify(&load_plane(p)?.to_table()?),
        (PlaneModel::Generic, None) => return Err(usage("GENERIC embeddings need --plane")),
        _ => e.verify(&e.plane.coordinatized()?),
    };
    let report = match checked {
        Err(Error::PointNotInPlane(p)) => return Err(failed(format!("violation: point {p} is not in {}\nFAIL\n", e.plane))),
        r => r?,
    };
    let mut s = String::new();
    for v in &report.violations {
        writeln!(s, "violation: {v}").unwrap();
    }
    writeln!(
        s,
        "vertices_injective={} edges_well_defined={} edges_injective={} degree_bound_ok={}",
        report.vertices_injective, report.edges_well_defined, report.edges_injective, report.degree_bound_ok
    )
    .unwrap();
    if report.passed() {
        Ok(s + "PASS\n")
    } else {
        Err(failed(s + "FAIL\n"))
    }
}

/// Certificate stream for every prime power in `[min, max]`, one JSON line
/// each, sorted by q.
pub fn hypj_sweep(min: u64, max: u64, primes_only: bool, jobs: usize) -> Result<Vec<String>> {
    let qs = arith::prime_powers_between(min.max(3), max, primes_only);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Error::InvalidArgument(e.to_string()))?;
    pool.install(|| qs.par_iter().map(|&q| certificate_record(q).map(|r| r.to_json_line())).collect())
}

fn hypj_cmd(cmd: HypjCmd) -> CliResult {
    match cmd {
        HypjCmd::Show { q } => Ok(certificate_record(q)?.to_json_line() + "\n"),
        HypjCmd::Sweep { min, max, jobs, primes_only, out } => {
            if min < 3 {
                return Err(usage("--min must be at least 3"));
            }
            let lines = hypj_sweep(min, max, primes_only, jobs)?;
            let missing = lines.iter().filter(|l| l.contains("NOT_FOUND")).count();
            let mut body = String::new();
            for l in &lines {
                body.push_str(l);
                body.push('\n');
            }
            match out {
                Some(p) => write_out(&p, &body)?,
                None => print!("{body}"),
            }
            Ok(format!("{} prime powers, {} certificates, {missing} not found\n", lines.len(), lines.len() - missing))
        }
    }
}

/// Runs one parsed command, returning its stdout text.
pub fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Field { cmd: FieldCmd::Info { q } } => field_info(q),
        Command::Plane { cmd } => plane_cmd(cmd),
        Command::Cycle { sweep: Some(CycleSweepCmd::Sweep { q, plane, out_dir, jobs }), .. } => {
            cycle_sweep(q, plane, &out_dir, jobs)
        }
        Command::Cycle { sweep: None, args } => {
            let c = one_cycle(require(args.q, "q")?, require(args.k, "k")?, args.plane)?;
            let e = c.to_embedding();
            save_embedding(&e, args.out.as_deref())?;
            Ok(summary_line(&e, c.route))
        }
        Command::Wheel(a) => wheel_cmd(a),
        Command::Gear { sweep: Some(GearSweepCmd::Sweep { q_max, q_min, out, jobs }), .. } => {
            gear_sweep(q_min, q_max, out.as_deref(), jobs)
        }
        Command::Gear { sweep: None, args } => gear_cmd(args),
        Command::Oracle(a) => oracle_cmd(a),
        Command::Verify { file, plane } => verify_cmd(&file, plane.as_deref()),
        Command::Hypj { cmd } => hypj_cmd(cmd),
    }
}

/// Parses `args`, runs, prints, and returns the exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(s) => {
            print!("{s}");
            0
        }
        Err(f) => {
            eprint!("{}", f.message);
            if !f.message.ends_with('\n') {
                eprintln!();
            }
            f.code
        }
    }
}

pub fn main() -> ! {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    std::process::exit(run_from(std::env::args_os()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(args: &[&str]) -> i32 {
        run_from(std::iter::once("planegraph").chain(args.iter().copied()))
    }

    #[test]
    fn exit_codes() {
        assert_eq!(code(&["field", "info", "--q", "9"]), 0);
        assert_eq!(code(&["field", "info", "--q", "6"]), 2);
        assert_eq!(code(&["wheel", "--q", "5", "--n", "7"]), 2);
        assert_eq!(code(&["nonsense"]), 2);
        assert_eq!(code(&["wheel", "--q", "3", "--n", "4"]), 1);
    }

    #[test]
    fn sweep_is_sorted_and_job_independent() {
        let a = hypj_sweep(3, 100, false, 1).unwrap();
        let b = hypj_sweep(3, 100, false, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 34);
        assert_eq!(a.iter().filter(|l| l.contains("NOT_FOUND")).count(), 1);
        assert!(a[0].starts_with("{\"q\":3,"));
        assert!(hypj_sweep(20, 22, false, 1).unwrap().is_empty());
    }

    #[test]
    fn four_is_golomb() {
        let a = hypj_sweep(4, 4, false, 1).unwrap();
        assert_eq!(a.len(), 1);
        assert!(a[0].contains("EVEN_GOLOMB"));
    }
}
