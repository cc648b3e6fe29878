//! The `schurpos` command line.
//!
//! [`run`] takes the full argument vector and returns the exit code with the
//! text for stdout and stderr, so the binary is a thin wrapper and tests can
//! drive every subcommand in-process.

pub mod shape;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use schurpos::poset::ribbon_diagrams;
use schurpos::verify::{self, Report};
use schurpos::{
    build_poset, compare_vectors, enumerate_basic_skew_bounded, expand_bounded, mf, PosetModel,
    RectLabel, SchurVector, SkewDiagram, Strategy,
};
use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::shape::{parse_label_in, parse_shape, ParseError, ShapeSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

pub const MAX_SIZE_VAR: &str = "SCHURPOS_MAX_SIZE";
pub const DEFAULT_EXPANSION_GUARD: usize = 14;
pub const DEFAULT_ENUMERATION_GUARD: usize = 7;

#[derive(Debug, Parser)]
#[command(name = "schurpos", version, about = "Schur positivity of skew and ribbon diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Schur expansion of a shape, as JSON.
    Expand { shape: String },
    /// Compare s_A with s_B: equal, greater, less or incomparable.
    Compare {
        a: String,
        b: String,
        /// Also print the Schur positive difference as JSON.
        #[arg(long)]
        show_difference: bool,
    },
    /// The Schur positivity poset on diagrams with N cells.
    Poset {
        #[arg(long)]
        n: usize,
        /// Only ribbons.
        #[arg(long)]
        ribbons: bool,
        /// Only ribbons with this many rows.
        #[arg(long, requires = "ribbons")]
        rows: Option<usize>,
        /// Only multiplicity-free ribbons.
        #[arg(long)]
        mf: bool,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum, default_value = "comp")]
        label_style: LabelStyle,
    },
    /// Closed-form queries in the lattice of multiplicity-free ribbons.
    Mf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rows: usize,
        #[command(subcommand)]
        query: MfQuery,
    },
    /// Cross-check closed forms against full expansions.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LabelStyle {
    Comp,
    Rect,
}

#[derive(Debug, Subcommand)]
enum MfQuery {
    List,
    Covers,
    Meet { a: String, b: String },
    Join { a: String, b: String },
    Leq { a: String, b: String },
    Schubert { a: String },
}

#[derive(Debug, Subcommand)]
enum Check {
    Fourcovers {
        #[arg(long)]
        max_size: usize,
    },
    Onlycovers {
        #[arg(long)]
        max_size: usize,
    },
    Bigdiff {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rows: usize,
    },
    Convexity {
        #[arg(long)]
        n: usize,
    },
    Trim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rows: usize,
    },
    Mflemma {
        #[arg(long)]
        max_size: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] schurpos::Error),
    #[error("size {size} exceeds the limit {limit}; set {MAX_SIZE_VAR} to raise it")]
    Guard { size: usize, limit: usize },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) | CliError::Guard { .. } => EXIT_DOMAIN,
        }
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn guard(default: usize) -> Result<usize, CliError> {
    match std::env::var(MAX_SIZE_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_SIZE_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(default),
    }
}

fn check_size(size: usize, default: usize) -> Result<(), CliError> {
    let limit = guard(default)?;
    if size > limit {
        return Err(CliError::Guard { size, limit });
    }
    Ok(())
}

fn diagram(text: &str) -> Result<SkewDiagram, CliError> {
    let d = parse_shape(text)?.to_diagram()?;
    check_size(d.size(), DEFAULT_EXPANSION_GUARD)?;
    Ok(d)
}

fn expansion(d: &SkewDiagram) -> Result<SchurVector, CliError> {
    Ok(expand_bounded(d, usize::MAX)?)
}

/// `{"3":1,"2,1":2,...}`, largest partition first.
fn expansion_json(v: &SchurVector) -> Map<String, Value> {
    v.iter()
        .rev()
        .map(|(p, c)| (p.to_string(), Value::from(c)))
        .collect()
}

type Output = Result<(i32, String), CliError>;

fn ok(text: String) -> Output {
    Ok((EXIT_OK, text))
}

fn execute(command: Command) -> Output {
    match command {
        Command::Expand { shape } => {
            let v = expansion(&diagram(&shape)?)?;
            ok(format!("{}\n", Value::Object(expansion_json(&v))))
        }
        Command::Compare { a, b, show_difference } => {
            let (a, b) = (diagram(&a)?, diagram(&b)?);
            let result = compare_vectors(&expansion(&a)?, &expansion(&b)?);
            let mut out = format!("{}\n", result.tag());
            if show_difference {
                if let Some(d) = result.difference() {
                    writeln!(out, "{}", Value::Object(expansion_json(d))).unwrap();
                }
            }
            ok(out)
        }
        Command::Poset { n, ribbons, rows, mf, format, label_style } => {
            poset(n, ribbons || mf, rows, mf, format, label_style)
        }
        Command::Mf { n, rows, query } => mf_query(n, rows, query),
        Command::Verify { check } => run_check(check),
    }
}

#[derive(Serialize)]
struct ClassJson {
    id: usize,
    members: Vec<String>,
    expansion: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize)]
struct PosetJson {
    classes: Vec<ClassJson>,
    hasse: Vec<[usize; 2]>,
}

fn poset(
    n: usize,
    ribbons: bool,
    rows: Option<usize>,
    mf_only: bool,
    format: Format,
    label_style: LabelStyle,
) -> Output {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let diagrams = if ribbons {
        check_size(n, DEFAULT_EXPANSION_GUARD)?;
        let row_range = match rows {
            Some(r) => r..=r,
            None => 1..=n,
        };
        let mut all = Vec::new();
        for r in row_range {
            all.extend(ribbon_diagrams(n, r, mf_only)?);
        }
        all
    } else {
        let limit = guard(DEFAULT_ENUMERATION_GUARD)?;
        check_size(n, limit)?;
        enumerate_basic_skew_bounded(n, limit)?
    };
    if diagrams.is_empty() {
        return Err(CliError::Usage(format!("no diagrams match (N = {n})")));
    }
    let p = build_poset(&diagrams)?;
    let labels = match label_style {
        LabelStyle::Comp => None,
        LabelStyle::Rect => {
            let rows = rows.filter(|_| mf_only).ok_or_else(|| {
                CliError::Usage("--label-style rect needs --mf and --rows".into())
            })?;
            mf::MfContext::new(n, rows)?;
            Some(rect_labels(&p)?)
        }
    };
    let text = match format {
        Format::Json => poset_json(&p, labels.as_deref()),
        Format::Dot => poset_dot(&p, labels.as_deref()),
    };
    ok(text)
}

fn rect_labels(p: &PosetModel) -> Result<Vec<String>, CliError> {
    p.classes
        .iter()
        .map(|c| Ok(mf::label_of_ribbon(&c.ribbons()[0])?.to_string()))
        .collect()
}

fn member_names(p: &PosetModel, i: usize) -> Vec<String> {
    p.classes[i]
        .members
        .iter()
        .map(|d| ShapeSpec::of_diagram(d).to_string())
        .collect()
}

fn poset_json(p: &PosetModel, labels: Option<&[String]>) -> String {
    let doc = PosetJson {
        classes: (0..p.len())
            .map(|i| ClassJson {
                id: i,
                members: member_names(p, i),
                expansion: expansion_json(&p.classes[i].expansion),
                label: labels.map(|l| l[i].clone()),
            })
            .collect(),
        hasse: p.hasse().iter().map(|&(a, b)| [a, b]).collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

fn poset_dot(p: &PosetModel, labels: Option<&[String]>) -> String {
    let mut out = String::from("digraph schurpos {\n  rankdir=BT;\n  node [shape=box];\n");
    for i in 0..p.len() {
        let label = match labels {
            Some(l) => l[i].clone(),
            None => member_names(p, i)
                .into_iter()
                .map(|m| m.trim_start_matches("r:").to_string())
                .collect::<Vec<_>>()
                .join(" = "),
        };
        writeln!(out, "  {i} [label=\"{label}\"];").unwrap();
    }
    for &(a, b) in p.hasse() {
        writeln!(out, "  {a} -> {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn label_arg(text: &str, n: usize, rows: usize) -> Result<RectLabel, CliError> {
    let label = parse_label_in(text, n, rows)?.to_label()?;
    if (label.ctx.n, label.ctx.rows) != (n, rows) {
        return Err(schurpos::Error::ContextMismatch(label.ctx.n, label.ctx.rows, n, rows).into());
    }
    Ok(label)
}

fn parts(p: &schurpos::Partition) -> Value {
    Value::from(p.parts().to_vec())
}

fn mf_query(n: usize, rows: usize, query: MfQuery) -> Output {
    let label = |t: &str| label_arg(t, n, rows);
    let text = match query {
        MfQuery::List => {
            let mut out = String::new();
            for l in mf::elements(n, rows)? {
                writeln!(out, "{l} r:{}", l.ribbon()).unwrap();
            }
            out
        }
        MfQuery::Covers => {
            let mut out = String::new();
            for (x, y) in mf::covers(n, rows)? {
                writeln!(out, "{x} -> {y}").unwrap();
            }
            out
        }
        MfQuery::Meet { a, b } => format!("{}\n", mf::meet(&label(&a)?, &label(&b)?)?),
        MfQuery::Join { a, b } => format!("{}\n", mf::join(&label(&a)?, &label(&b)?)?),
        MfQuery::Leq { a, b } => format!("{}\n", mf::leq_s_closed(&label(&a)?, &label(&b)?)?),
        MfQuery::Schubert { a } => {
            let (first, second) = mf::schubert_pair(&label(&a)?);
            format!("{}\n", Value::Array(vec![parts(&first), parts(&second)]))
        }
    };
    ok(text)
}

fn run_check(check: Check) -> Output {
    let strategy = Strategy::default();
    let expansion_guard = |size: usize| check_size(size, DEFAULT_EXPANSION_GUARD);
    let mut prefix = String::new();
    let report: Report = match check {
        Check::Fourcovers { max_size } => {
            expansion_guard(max_size)?;
            verify::verify_fourcovers(max_size, strategy)?
        }
        Check::Onlycovers { max_size } => {
            expansion_guard(max_size)?;
            verify::verify_onlycovers(max_size, strategy)?
        }
        Check::Bigdiff { n, rows } => {
            expansion_guard(n)?;
            let mut r = verify::verify_bigdiff(n, rows, strategy)?;
            let mj = verify::verify_meet_join(n, rows, strategy)?;
            r.checked += mj.checked;
            r.disagreements.extend(mj.disagreements);
            r
        }
        Check::Convexity { n } => {
            let limit = guard(DEFAULT_ENUMERATION_GUARD)?;
            check_size(n, limit)?;
            verify::verify_convexity(n, limit, strategy)?
        }
        Check::Trim { n, rows } => {
            let t = verify::trim_report(n, rows)?;
            writeln!(
                prefix,
                "join-irreducibles {}, meet-irreducibles {}, longest chain {}, left modular chain {}, \
                 spine left modular {}, spine distributive sublattice {}",
                t.join_irreducibles,
                t.meet_irreducibles,
                t.longest_chain_elems,
                t.left_modular_max_chain,
                t.all_spine_left_modular,
                t.spine_distributive_sublattice
            )
            .unwrap();
            verify::verify_trim(n, rows)?
        }
        Check::Mflemma { max_size } => {
            expansion_guard(max_size)?;
            verify::verify_mflemma(max_size, strategy)?
        }
    };
    let code = if report.is_ok() { EXIT_OK } else { EXIT_DISAGREEMENT };
    let mut text = prefix;
    text.push_str(&report.to_string());
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok((code, text))
}
