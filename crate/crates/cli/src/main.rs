use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use g2color::algebra::{
    self, build_basis, render_table, structure_constants_with, BasisName, TableFormat, TableJson,
    BASIS_NAMES,
};
use g2color::fano::FanoPlane;
use g2color::fixtures::{fixture_text, FIXTURE_NAMES};
use g2color::grading::{congruence_classes, enumerate_sign_factors, GradeLabel, SignFactor};
use g2color::search::{search_with, ColoringSolution, SearchOptions};
use g2color::verify::{run_suite, SUITES};
use g2color::{configure_threads, Execution};

const THREADS_ENV: &str = "G2COLOR_THREADS";

#[derive(Parser)]
#[command(
    name = "g2color",
    version,
    about = "Exact G2 bracket tables, verification suites and coloring search"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads (default: all cores, or $G2COLOR_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Suppress progress messages on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print a bracket table computed from the matrices, or an embedded fixture.
    Table(TableArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Search sign changes of a base basis for colorings.
    Search(SearchArgs),
    /// Classify all sign factors on Z2^n up to congruence.
    Classify(ClassifyArgs),
    /// Print the octonion multiplication table of the oriented Fano plane.
    Octonions,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_parser = BASIS_NAMES, default_value = "g2")]
    basis: String,
    /// Preset (zero, case1, case2, case3, z2z2, identity) or upper-triangle bits.
    #[arg(long)]
    sign_factor: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Include self-brackets.
    #[arg(long)]
    diagonal: bool,
    /// Print an embedded fixture instead.
    #[arg(long, value_parser = FIXTURE_NAMES)]
    fixture: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = SUITES, default_value = "all")]
    suite: String,
    #[arg(long, value_parser = BASIS_NAMES)]
    basis: Option<String>,
    #[arg(long)]
    sign_factor: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    sign_factor: String,
    #[arg(long, value_parser = ["g2", "g2-7x7"], default_value = "g2")]
    base: String,
    #[arg(long)]
    max_solutions: Option<usize>,
    /// Report every sign pattern instead of one per gauge class.
    #[arg(long)]
    no_gauge_fix: bool,
    /// Exit with status 1 unless exactly N solutions are found.
    #[arg(long, value_name = "N")]
    expect_count: Option<usize>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=4))]
    n: u8,
}

struct Outcome {
    text: String,
    ok: bool,
}

fn parse_factor(spec: &str, n: usize) -> Result<SignFactor> {
    let sf = SignFactor::parse(spec, n).with_context(|| format!("bad --sign-factor {spec:?}"))?;
    if sf.n() != n {
        bail!(
            "sign factor {spec:?} acts on Z2^{}, expected Z2^{n}",
            sf.n()
        );
    }
    Ok(sf)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn table(args: &TableArgs, json: bool, exec: Execution) -> Result<Outcome> {
    if let Some(name) = &args.fixture {
        return Ok(Outcome {
            text: fixture_text(name)?.to_string(),
            ok: true,
        });
    }
    let name: BasisName = args.basis.parse()?;
    let sf = match &args.sign_factor {
        Some(s) => parse_factor(s, name.group_dim())?,
        None => name.natural_sign_factor(),
    };
    let basis = build_basis(&args.basis)?;
    let t = structure_constants_with(&basis, &sf, args.diagonal, exec)?;
    let format = match (json, args.format) {
        (true, _) | (_, Format::Json) => TableFormat::Json,
        (_, Format::Text) => TableFormat::Text,
        (_, Format::Latex) => TableFormat::Latex,
    };
    Ok(Outcome {
        text: render_table(&t, format),
        ok: true,
    })
}

fn verify(
    args: &VerifyArgs,
    json: bool,
    exec: Execution,
    progress: &dyn Fn(&str),
) -> Result<Outcome> {
    let sf = match &args.sign_factor {
        Some(s) => {
            let n = args
                .basis
                .as_deref()
                .map_or(Ok(3), |b| b.parse::<BasisName>().map(BasisName::group_dim))?;
            Some(parse_factor(s, n)?)
        }
        None => None,
    };
    progress(&format!("running suite {}", args.suite));
    let reports = run_suite(&args.suite, args.basis.as_deref(), sf.as_ref(), exec)?;
    let ok = reports.iter().all(|r| r.passed());
    let checks: usize = reports.iter().map(|r| r.checks_run).sum();
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    let text = if json {
        pretty(&json!({
            "passed": ok,
            "checks_run": checks,
            "failures": failures,
            "reports": reports,
        }))
    } else {
        let mut s = String::new();
        for r in &reports {
            s.push_str(&r.summary());
            s.push('\n');
            for f in &r.failures {
                s.push_str(&format!(
                    "  {}: expected {}, got {}\n",
                    f.context, f.expected, f.actual
                ));
                if let Some(res) = &f.residual {
                    s.push_str(&format!("    residual {res}\n"));
                }
            }
        }
        s.push_str(&format!(
            "total: {} suites, {checks} checks, {failures} failures [{}]\n",
            reports.len(),
            if ok { "PASS" } else { "FAIL" }
        ));
        s
    };
    Ok(Outcome { text, ok })
}

fn epsilon_json(sol: &ColoringSolution) -> Value {
    let labels = &sol.table.labels;
    Value::Array(
        sol.epsilon
            .iter()
            .map(|(&(i, j, k), &e)| json!({"left": labels[i], "right": labels[j], "target": labels[k], "sign": e}))
            .collect(),
    )
}

fn search(
    args: &SearchArgs,
    json: bool,
    exec: Execution,
    progress: &dyn Fn(&str),
) -> Result<Outcome> {
    let name: BasisName = args.base.parse()?;
    let sf = parse_factor(&args.sign_factor, name.group_dim())?;
    let base = build_basis(&args.base)?;
    let opts = SearchOptions {
        gauge_fix: !args.no_gauge_fix,
        max_solutions: args.max_solutions,
        free: None,
        execution: exec,
    };
    progress(&format!("searching colorings of {} for {}", base.name, sf));
    let (solutions, stats) = search_with(&sf, &base, &opts)?;
    let ok = args.expect_count.is_none_or(|n| n == solutions.len());
    let text = if json {
        pretty(&json!({
            "base": base.name,
            "sign_factor": sf.spec(),
            "gauge_fixed": opts.gauge_fix,
            "count": solutions.len(),
            "nodes": stats.nodes,
            "solutions": solutions.iter().map(|s| json!({
                "flips": s.assignment.flips,
                "table": TableJson::from(&s.table),
                "epsilon": epsilon_json(s),
            })).collect::<Vec<_>>(),
        }))
    } else {
        let mut s = format!(
            "base {}, sign factor {}: {} solutions ({} nodes)\n",
            base.name,
            sf.spec(),
            solutions.len(),
            stats.nodes
        );
        let width = base
            .elements
            .iter()
            .map(|e| e.label.len())
            .max()
            .unwrap_or(0);
        for (k, sol) in solutions.iter().enumerate() {
            s.push_str(&format!("\nsolution {}\n", k + 1));
            for (e, row) in base.elements.iter().zip(sol.assignment.to_string().lines()) {
                s.push_str(&format!("  {:width$}  {row}\n", e.label));
            }
            s.push_str(&render_table(&sol.table, TableFormat::Text));
        }
        s
    };
    Ok(Outcome { text, ok })
}

fn classify(args: &ClassifyArgs, json: bool) -> Result<Outcome> {
    let n = args.n as usize;
    let total = enumerate_sign_factors(n).len();
    let (classes, consistent) = congruence_classes(n);
    let text = if json {
        pretty(&json!({
            "n": n,
            "factors": total,
            "classes": classes,
            "invariants_match_orbits": consistent,
        }))
    } else {
        let mut s = format!(
            "{total} sign factors on Z2^{n}, {} congruence classes\n",
            classes.len()
        );
        for c in &classes {
            s.push_str(&format!(
                "{:4} rank {} {:15} {:3} factors, representative {}\n",
                c.class.class_name.as_deref().unwrap_or("-"),
                c.class.rank,
                if c.class.alternating {
                    "alternating"
                } else {
                    "non-alternating"
                },
                c.size,
                c.representative
            ));
        }
        s.push_str(&format!(
            "(rank, alternating) invariant {} the orbits\n",
            if consistent {
                "separates"
            } else {
                "does NOT separate"
            }
        ));
        s
    };
    Ok(Outcome {
        text,
        ok: consistent,
    })
}

fn octonions(json: bool) -> Result<Outcome> {
    let plane = FanoPlane::standard();
    let pts = GradeLabel::nonzero(3)?;
    let table = plane.octonion_table();
    let text = if json {
        let rows: Vec<Value> = table
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|c| match c {
                            Some((s, g)) => json!({"sign": s, "label": g.to_string()}),
                            None => Value::Null,
                        })
                        .collect(),
                )
            })
            .collect();
        pretty(&json!({
            "labels": pts.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "lines": plane.lines(),
            "products": rows,
        }))
    } else {
        let mut s = String::from("  ·  ");
        for p in &pts {
            s.push_str(&format!("  e{p}"));
        }
        s.push('\n');
        for (p, row) in pts.iter().zip(&table) {
            s.push_str(&format!("e{p}"));
            for cell in row {
                match cell {
                    Some((sign, g)) => {
                        s.push_str(&format!(" {}e{g}", if *sign == 1 { '+' } else { '-' }))
                    }
                    None => s.push_str("     *"),
                }
            }
            s.push('\n');
        }
        s
    };
    Ok(Outcome { text, ok: true })
}

fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => Ok(Some(
            v.trim()
                .parse()
                .with_context(|| format!("bad {THREADS_ENV}={v:?}"))?,
        )),
        Err(_) => Ok(None),
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let g = &cli.global;
    if let Some(t) = g.threads.or(threads_from_env()?) {
        if t == 0 {
            bail!("thread count must be positive");
        }
        configure_threads(t);
    }
    let exec = if g.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let quiet = g.quiet;
    let progress = move |msg: &str| {
        if !quiet {
            eprintln!("{msg}");
        }
    };
    match &cli.command {
        Command::Table(a) => table(a, g.json, exec),
        Command::Verify(a) => verify(a, g.json, exec, &progress),
        Command::Search(a) => search(a, g.json, exec, &progress),
        Command::Classify(a) => classify(a, g.json),
        Command::Octonions => octonions(g.json),
    }
}

fn is_usage_error(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<g2color::grading::GradingError>().is_some()
            || matches!(
                c.downcast_ref::<algebra::AlgebraError>(),
                Some(
                    algebra::AlgebraError::UnknownBasis(_)
                        | algebra::AlgebraError::GroupMismatch(..)
                )
            )
            || matches!(
                c.downcast_ref::<g2color::verify::VerifyError>(),
                Some(
                    g2color::verify::VerifyError::UnknownSuite(_)
                        | g2color::verify::VerifyError::LieType(_)
                )
            )
    }) || e.to_string().contains("sign factor")
        || e.to_string().contains("thread")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.global.out.clone();
    match run(cli) {
        Ok(outcome) => {
            let written = match &out {
                Some(path) => fs::write(path, &outcome.text)
                    .with_context(|| format!("writing {}", path.display())),
                None => io::stdout()
                    .write_all(outcome.text.as_bytes())
                    .map_err(Into::into),
            };
            if let Err(e) = written {
                if e.downcast_ref::<io::Error>()
                    .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
                {
                    return ExitCode::SUCCESS;
                }
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}
