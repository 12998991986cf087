//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::codec::{exhaustive_min_distance, BchCode, MinDistance, Subfield, DEFAULT_BUDGET};
use crate::cyclotomic::CosetIndex;
use crate::error::Error;
use crate::formulas::{params_ding151, FormulaKind, TheoremId};
use crate::params::{detect_family, BchParams, Family};
use crate::verifier::{dimension_points, Ledger, Runner, SuiteConfig, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bchdim", version, about = "BCH code dimensions, coset leaders and formula verification")]
pub struct Cli {
    /// Output format; `verify` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Zero the runtime field so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub reproducible: bool,
    /// Codewords the exhaustive distance search may enumerate.
    #[arg(long, global = true, value_name = "N")]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List q-cyclotomic cosets modulo n.
    Cosets(CosetsArgs),
    /// Build a BCH code and summarize it.
    Code(CodeArgs),
    /// Tabulate a dimension theorem against the oracle.
    Table(TableArgs),
    /// Run a verification suite and compare with the known findings.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct LengthArgs {
    #[arg(long)]
    pub family: Option<Family>,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub n: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CosetsArgs {
    #[command(flatten)]
    pub len: LengthArgs,
    /// Show only the coset of this residue.
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<i64>,
    /// One row per residue instead of one per coset.
    #[arg(long)]
    pub residues: bool,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[command(flatten)]
    pub len: LengthArgs,
    #[arg(long)]
    pub delta: u64,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub b: i64,
    /// Also compute the exact minimum distance by enumeration.
    #[arg(long)]
    pub mindist: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub theorem: TheoremId,
    #[command(flatten)]
    pub len: LengthArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `default`, `none`, or a path to a JSON suite.
    #[arg(long, default_value = "default")]
    pub suite: String,
    /// Keep only this check.
    #[arg(long)]
    pub theorem: Option<String>,
    /// Known-findings file; the built-in ledger when omitted.
    #[arg(long, value_name = "PATH")]
    pub ledger: Option<PathBuf>,
    /// Also write the run's mismatches as a ledger file.
    #[arg(long, value_name = "PATH")]
    pub emit_ledger: Option<PathBuf>,
}

/// A failed command: exit code and message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeExceeded { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: msg.into(),
    }
}

/// Parses and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// Output produced by a command, plus the exit code it asks for.
struct Rendered {
    body: String,
    code: i32,
}

pub fn run(cli: &Cli) -> Result<i32, Failure> {
    let rendered = match &cli.command {
        Command::Cosets(a) => cosets(cli, a)?,
        Command::Code(a) => code(cli, a)?,
        Command::Table(a) => table(cli, a)?,
        Command::Verify(a) => verify(cli, a)?,
    };
    match &cli.out {
        Some(path) => std::fs::write(path, &rendered.body)
            .map_err(|e| usage(format!("writing {}: {e}", path.display())))?,
        None => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(rendered.body.as_bytes());
        }
    }
    Ok(rendered.code)
}

/// Resolves `(family, m, n)`; `--n` and `(--family, --m)` must agree.
fn resolve_length(len: &LengthArgs) -> Result<(Family, u32, u64), Failure> {
    match (len.family, len.m, len.n) {
        (Some(f), Some(m), n) => {
            let computed = f.length(len.q, m)?;
            if let Some(n) = n {
                if n != computed {
                    return Err(usage(format!(
                        "--n {n} disagrees with {f} q={} m={m}, which has length {computed}",
                        len.q
                    )));
                }
            }
            Ok((f, m, computed))
        }
        (f, m, Some(n)) => {
            let (family, dm) = detect_family(len.q, n)?;
            if f.is_some_and(|f| f != family) || m.is_some_and(|m| m != dm) {
                return Err(usage(format!(
                    "--n {n} is the {family} length with m={dm} for q={}",
                    len.q
                )));
            }
            Ok((family, dm, n))
        }
        _ => Err(usage("give --n, or --family with --m")),
    }
}

fn format_of(cli: &Cli, default: Format) -> Format {
    cli.format.unwrap_or(default)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Renders rows of flat JSON objects as CSV with the given columns.
fn csv(columns: &[&str], rows: &[Value]) -> String {
    let mut s = columns.join(",");
    s.push('\n');
    for row in rows {
        let cells: Vec<String> = columns.iter().map(|c| cell(&row[*c])).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// Aligned plain-text table.
fn text_table(columns: &[&str], rows: &[Value]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|c| match &r[*c] {
                    Value::Null => "-".to_string(),
                    v => cell(v),
                })
                .collect()
        })
        .collect();
    let widths: Vec<usize> = (0..columns.len())
        .map(|i| {
            cells
                .iter()
                .map(|r| r[i].len())
                .chain([columns[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut s = String::new();
    let line = |s: &mut String, items: Vec<&str>| {
        let parts: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(x, w)| format!("{x:>w$}"))
            .collect();
        s.push_str(parts.join("  ").trim_end());
        s.push('\n');
    };
    line(&mut s, columns.to_vec());
    for r in &cells {
        line(&mut s, r.iter().map(String::as_str).collect());
    }
    s
}

fn cosets(cli: &Cli, args: &CosetsArgs) -> Result<Rendered, Failure> {
    let q = args.len.q;
    crate::field::PrimePower::new(q)?;
    let n = match (args.len.n, args.len.family, args.len.m) {
        (Some(n), None, None) => n,
        _ => resolve_length(&args.len)?.2,
    };
    let idx = CosetIndex::build(n, q)?;
    let row = |a: u64| {
        json!({
            "a": a,
            "leader": idx.leader(a as i64),
            "size": idx.coset_size(a as i64),
            "is_leader": idx.is_leader(a as i64),
        })
    };
    let rows: Vec<Value> = match (args.a, args.residues) {
        (Some(a), _) => vec![row(crate::arith::residue(a, n))],
        (None, true) => (0..n).map(row).collect(),
        (None, false) => idx.cosets().map(|(l, _)| row(l)).collect(),
    };
    let cols = ["a", "leader", "size", "is_leader"];
    let body = match format_of(cli, Format::Text) {
        Format::Json => to_json(&json!({ "q": q, "n": n, "rows": rows })),
        Format::Csv => csv(&cols, &rows),
        Format::Text => {
            let mut s = format!("q={q} n={n} cosets={}\n", idx.coset_count());
            s.push_str(&text_table(&cols, &rows));
            s
        }
    };
    Ok(Rendered { body, code: EXIT_OK })
}

fn code(cli: &Cli, args: &CodeArgs) -> Result<Rendered, Failure> {
    let (family, m, _) = resolve_length(&args.len)?;
    let params = BchParams::new(family, args.len.q, m, args.delta, args.b)?;
    let (ctx, code) = BchCode::build(&params)?;
    let labels = Subfield::new(&ctx).labels(&code.generator);
    let mut exit = EXIT_OK;
    let distance = if args.mindist {
        let d = exhaustive_min_distance(&ctx, &code, cli.budget.unwrap_or(DEFAULT_BUDGET));
        if matches!(d, MinDistance::Unknown { .. }) {
            exit = EXIT_RESOURCE;
        }
        Some(d)
    } else {
        None
    };
    let distance_value = match distance {
        None => Value::Null,
        Some(MinDistance::Exact(d)) => json!(d),
        Some(MinDistance::ZeroCode) => json!("zero-code"),
        Some(MinDistance::Unknown { .. }) => json!("unknown"),
    };
    let summary = json!({
        "family": family.id(),
        "q": params.q(),
        "m": m,
        "n": params.n,
        "b": params.b,
        "delta": params.delta,
        "defining_range": [params.b, params.last()],
        "defining_set": code.defining_set,
        "k": code.dimension,
        "bch_bound": code.bch_bound,
        "generator": labels,
        "reversible": code.is_reversible(&ctx),
        "min_distance": distance_value,
    });
    let body = match format_of(cli, Format::Text) {
        Format::Json => to_json(&summary),
        Format::Csv => csv(
            &[
                "family", "q", "m", "n", "b", "delta", "k", "bch_bound", "reversible",
                "min_distance", "defining_set", "generator",
            ],
            &[summary],
        ),
        Format::Text => {
            let mut s = String::new();
            let name = match distance {
                Some(MinDistance::Exact(d)) => format!("[{},{},{d}]", params.n, code.dimension),
                _ => format!("[{},{}]", params.n, code.dimension),
            };
            let _ = writeln!(s, "code       {name} over GF({}), {family}, m={m}", params.q());
            let _ = writeln!(s, "range      b={} .. {} (delta={})", params.b, params.last(), params.delta);
            let _ = writeln!(s, "defining   {}", cell(&summary["defining_set"]));
            let _ = writeln!(s, "generator  {}", cell(&summary["generator"]));
            let _ = writeln!(s, "bch bound  {}", code.bch_bound);
            let _ = writeln!(s, "reversible {}", summary["reversible"]);
            if let Some(d) = distance {
                let _ = writeln!(s, "distance   {d}");
            }
            s
        }
    };
    if exit == EXIT_RESOURCE {
        eprintln!("error: exhaustive distance search exceeds the budget");
    }
    Ok(Rendered { body, code: exit })
}

fn verdict_id(v: &Verdict) -> &'static str {
    match v {
        Verdict::Match => "match",
        Verdict::Mismatch { .. } => "mismatch",
        Verdict::OutOfRange(_) => "out-of-range",
        Verdict::Skipped(_) => "skipped",
    }
}

fn table(cli: &Cli, args: &TableArgs) -> Result<Rendered, Failure> {
    let q = args.len.q;
    crate::field::PrimePower::new(q)?;
    let (family, m) = match (args.len.family, args.len.m, args.len.n) {
        (None, Some(m), None) => (None, m),
        _ => {
            let (f, m, _) = resolve_length(&args.len)?;
            (Some(f), m)
        }
    };
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    let mut runner = Runner::new(budget);
    let ding = args.theorem == TheoremId::Ding151;
    let mut rows = Vec::new();
    for p in dimension_points(args.theorem, q, m) {
        if family.is_some_and(|f| f != p.family) {
            continue;
        }
        let row = runner.dimension_row(args.theorem, &p);
        let formula = match row.formula {
            FormulaKind::Dimension(v) => json!(v),
            FormulaKind::OutOfRange(_) => Value::Null,
        };
        let mut verdict = verdict_id(&row.verdict);
        let mut obj = json!({
            "family": p.family.id(),
            "q": q,
            "m": p.m,
            "n": p.n,
            "b": p.b,
            "delta": p.delta,
            "dim_formula": formula,
            "dim_oracle": row.oracle,
            "verdict": verdict,
        });
        if ding {
            let k = p.delta / (crate::params::qpow(q, p.m / 2) + 1);
            let claimed = params_ding151(q, p.m, k).ok().map(|t| t.distance);
            let (ctx, code) = BchCode::build(&p)?;
            let actual = exhaustive_min_distance(&ctx, &code, budget).exact();
            if verdict == "match" && actual.is_some() && actual != claimed {
                verdict = "mismatch";
            }
            obj["distance_formula"] = json!(claimed);
            obj["distance_oracle"] = json!(actual);
            obj["verdict"] = json!(verdict);
        }
        rows.push(obj);
    }
    let mut cols = vec![
        "family", "q", "m", "n", "b", "delta", "dim_formula", "dim_oracle", "verdict",
    ];
    if ding {
        cols.splice(8..8, ["distance_formula", "distance_oracle"]);
    }
    let body = match format_of(cli, Format::Text) {
        Format::Json => to_json(&json!({ "theorem_id": args.theorem.id(), "rows": rows })),
        Format::Csv => csv(&cols, &rows),
        Format::Text => {
            let mut s = format!("{} q={q} m={m}\n", args.theorem);
            s.push_str(&text_table(&cols, &rows));
            s
        }
    };
    Ok(Rendered { body, code: EXIT_OK })
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<Rendered, Failure> {
    let mut cfg = SuiteConfig::resolve(&args.suite)?;
    if let Some(t) = &args.theorem {
        cfg.restrict(t)?;
    }
    if let Some(b) = cli.budget {
        cfg.budget = b;
    }
    let ledger = match &args.ledger {
        Some(path) => Ledger::load(path)?,
        None => Ledger::builtin(),
    };
    let run = crate::verifier::run_suite(&cfg, cli.reproducible)?;
    if let Some(path) = &args.emit_ledger {
        std::fs::write(path, Ledger::from_cases(&run.report.mismatches).to_json())
            .map_err(|e| usage(format!("writing {}: {e}", path.display())))?;
    }
    let diff = ledger.compare(&run.report.mismatches, &run.evaluated);
    for f in &diff.unexpected {
        eprintln!("unexpected mismatch: {} {}", f.theorem_id, f.params);
    }
    for f in &diff.resolved {
        eprintln!("ledger entry not reproduced: {} {}", f.theorem_id, f.params);
    }
    let code = if diff.is_clean() { EXIT_OK } else { EXIT_MISMATCH };
    let r = &run.report;
    let body = match format_of(cli, Format::Json) {
        Format::Json => r.to_json(),
        Format::Csv => {
            let rows: Vec<Value> = r
                .grid
                .iter()
                .map(|g| {
                    json!({
                        "theorem_id": g.theorem_id,
                        "q": g.q,
                        "m": g.m,
                        "points": g.points,
                        "match": g.counts.matched,
                        "mismatch": g.counts.mismatch,
                        "out_of_range": g.counts.out_of_range,
                        "skipped": g.counts.skipped,
                    })
                })
                .collect();
            csv(
                &["theorem_id", "q", "m", "points", "match", "mismatch", "out_of_range", "skipped"],
                &rows,
            )
        }
        Format::Text => {
            let mut s = format!("suite {}\n", r.suite);
            for g in &r.grid {
                let _ = writeln!(
                    s,
                    "{:<34} q={:?} m={:?}: {} points, {} match, {} mismatch, {} out of range, {} skipped",
                    g.theorem_id, g.q, g.m, g.points, g.counts.matched, g.counts.mismatch,
                    g.counts.out_of_range, g.counts.skipped
                );
            }
            let c = r.counts;
            let _ = writeln!(
                s,
                "total: {} match, {} mismatch, {} out of range, {} skipped; {} unexpected, {} not reproduced",
                c.matched, c.mismatch, c.out_of_range, c.skipped,
                diff.unexpected.len(), diff.resolved.len()
            );
            s
        }
    };
    Ok(Rendered { body, code })
}
