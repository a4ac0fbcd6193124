use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clawdeg_core::cuts;
use clawdeg_core::formulas;
use clawdeg_core::geometry::fmt_rat;
use clawdeg_core::group::GroupId;
use clawdeg_core::lemmas::{LemmaId, Verdict};
use clawdeg_core::volume::{self, TriangulateOptions};
use clawdeg_core::{claw, Error};
use serde::Serialize;

use crate::io;
use crate::verify::{self, LemmaRecord, Method, Oracles};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "clawdeg", version, about = "Exact volumes and degrees of claw-tree group-based model polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Lift the size limits on triangulation and table ranges.
    #[arg(long, global = true, env = "CLAWDEG_ALLOW_LARGE")]
    pub allow_large: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices of P(G, n).
    Vertices(ShapeArgs),
    /// Facet inequalities of P(G, n).
    Facets(ShapeArgs),
    /// Normalized volume of P(G, n) in its vertex lattice.
    Volume(ComputeArgs),
    /// Degree of the toric variety, by default from the closed form.
    Degree(ComputeArgs),
    /// Inclusion-exclusion breakdown of the volume.
    Assemble(ShapeArgs),
    /// Compare the closed form against the other computations.
    Verify(VerifyArgs),
    /// Check lemma instances exhaustively.
    Lemma(LemmaArgs),
    /// Degree table over a range of n.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Ext,
    Ine,
}

/// `3` or the inclusive range `2..5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    fn single(self) -> Result<usize, CliError> {
        if self.lo == self.hi {
            Ok(self.lo)
        } else {
            Err(CliError::usage("this command takes a single --n"))
        }
    }

    fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad leaf count {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(NRange { lo, hi })
    }
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    #[arg(long, value_parser = parse_group)]
    pub group: GroupId,
    #[arg(long)]
    pub n: NRange,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long, value_parser = parse_group)]
    pub group: GroupId,
    #[arg(long)]
    pub n: NRange,
    /// Defaults to triangulation for `volume`, formula for `degree`.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_group)]
    pub group: GroupId,
    #[arg(long)]
    pub n: NRange,
    #[arg(long, value_enum, default_value = "all")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    /// A lemma name, or `all`.
    #[arg(long, default_value = "all")]
    pub name: String,
    /// Restrict to lemmas about one group.
    #[arg(long, value_parser = parse_group)]
    pub group: Option<GroupId>,
    /// Leaf counts; without it, n = 2, 3 and n = 4 for the Z2 lemmas.
    #[arg(long)]
    pub n: Option<NRange>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_group)]
    pub group: GroupId,
    #[arg(long)]
    pub n: NRange,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn parse_group(s: &str) -> Result<GroupId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            kind: "usage",
            message: msg.into(),
        }
    }

    /// `error: <kind>: <message>` on one line.
    pub fn line(&self) -> String {
        format!("error: {}: {}", self.kind, self.message.replace('\n', " "))
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::GuardRail(_) => (EXIT_GUARD, "guard-rail"),
            Error::NonIntegral(_) => (EXIT_VERIFY, "verification"),
            _ => (EXIT_USAGE, "usage"),
        };
        CliError {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

/// What a command produced: the artifact text and whether a check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn want(f: Format, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&f) {
        Ok(())
    } else {
        Err(CliError::usage(format!("format {f:?} is not available for this command").to_lowercase()))
    }
}

fn opts(cli: &Cli) -> TriangulateOptions {
    TriangulateOptions {
        allow_large: cli.allow_large,
    }
}

pub fn execute(cli: &Cli, o: &Oracles) -> Result<Output, CliError> {
    match &cli.command {
        Command::Vertices(a) => {
            want(a.format, &[Format::Text, Format::Json, Format::Ext])?;
            let v = claw::vertices(a.group, a.n.single()?)?;
            Ok(Output::ok(match a.format {
                Format::Json => io::v_to_json(&v),
                Format::Ext => io::to_ext(&v),
                _ => v
                    .vertices()
                    .iter()
                    .map(|p| p.coords().iter().map(fmt_rat).collect::<Vec<_>>().join(" ") + "\n")
                    .collect(),
            }))
        }
        Command::Facets(a) => {
            want(a.format, &[Format::Text, Format::Json, Format::Ine])?;
            let h = claw::facets(a.group, a.n.single()?)?;
            Ok(Output::ok(match a.format {
                Format::Json => io::h_to_json(&h),
                Format::Ine => io::to_ine(&h),
                _ => h
                    .halfspaces()
                    .iter()
                    .map(|hs| {
                        let a: Vec<String> = hs.normal().iter().map(|x| x.to_string()).collect();
                        format!("{} <= {}\n", a.join(" "), hs.offset())
                    })
                    .collect(),
            }))
        }
        Command::Volume(a) => volume_cmd(cli, a, o, Method::Triangulation),
        Command::Degree(a) => volume_cmd(cli, a, o, Method::Formula),
        Command::Assemble(a) => {
            want(a.format, &[Format::Text, Format::Json])?;
            let b = cuts::assemble_breakdown(a.group, a.n.single()?)?;
            Ok(Output::ok(assembly_text(&b, a.format)))
        }
        Command::Verify(a) => {
            want(a.format, &[Format::Text, Format::Json])?;
            let mut checks = Vec::new();
            for n in a.n.iter() {
                checks.push(verify::cross_check(o, a.method, a.group, n, opts(cli))?);
            }
            let failed = checks.iter().any(|c| !c.agree);
            let text = match a.format {
                Format::Json => io::json(&checks),
                _ => checks.iter().map(check_line).collect(),
            };
            Ok(Output { text, failed })
        }
        Command::Lemma(a) => lemma_cmd(a),
        Command::Table(a) => {
            want(a.format, &[Format::Text, Format::Json, Format::Csv])?;
            let rows = formulas::degree_table_with(a.group, a.n.lo, a.n.hi, cli.allow_large)?;
            Ok(Output::ok(match a.format {
                Format::Csv => io::table_to_csv(a.group.name(), &rows),
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        group: &'static str,
                        n: usize,
                        degree: String,
                    }
                    let rows: Vec<Row> = rows
                        .iter()
                        .map(|(n, d)| Row {
                            group: a.group.name(),
                            n: *n,
                            degree: d.to_string(),
                        })
                        .collect();
                    io::json(&rows)
                }
                _ => rows.iter().map(|(n, d)| format!("{n} {d}\n")).collect(),
            }))
        }
    }
}

fn volume_cmd(cli: &Cli, a: &ComputeArgs, o: &Oracles, default: Method) -> Result<Output, CliError> {
    want(a.format, &[Format::Text, Format::Json])?;
    let n = a.n.single()?;
    let method = a.method.unwrap_or(default);
    if method == Method::All {
        return Err(CliError::usage("use `verify` to run every method"));
    }
    let v = o.compute(method, a.group, n, opts(cli))?;
    let is_degree = matches!(cli.command, Command::Degree(_));
    if is_degree && !v.is_integer() {
        return Err(CliError {
            code: EXIT_VERIFY,
            kind: "verification",
            message: format!("degree {} is not an integer", fmt_rat(&v)),
        });
    }
    Ok(Output::ok(match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                group: &'static str,
                n: usize,
                method: String,
                value: String,
                #[serde(skip_serializing_if = "Option::is_none")]
                triangulation: Option<io::TriangulationDoc>,
            }
            let triangulation = if method == Method::Triangulation {
                let p = claw::vertices(a.group, n)?;
                Some(io::triangulation_doc(&volume::triangulate_with(&p, opts(cli))?))
            } else {
                None
            };
            io::json(&Doc {
                group: a.group.name(),
                n,
                method: method_name(method).into(),
                value: fmt_rat(&v),
                triangulation,
            })
        }
        _ => format!("{}\n", fmt_rat(&v)),
    }))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Formula => "formula",
        Method::InclusionExclusion => "inclusion-exclusion",
        Method::Triangulation => "triangulation",
        Method::All => "all",
    }
}

fn check_line(c: &verify::CrossCheck) -> String {
    let mut s = format!("{} n={}", c.group, c.n);
    for (name, v) in [
        ("formula", &c.formula),
        ("inclusion-exclusion", &c.inclusion_exclusion),
        ("triangulation", &c.triangulation),
    ] {
        if let Some(v) = v {
            write!(s, " {name}={v}").unwrap();
        }
    }
    s.push_str(if c.agree { " ok\n" } else { " MISMATCH\n" });
    s
}

fn assembly_text(b: &cuts::Assembly, f: Format) -> String {
    #[derive(Serialize)]
    struct Term {
        label: String,
        sign: i8,
        count: String,
        volume: String,
    }
    #[derive(Serialize)]
    struct Doc {
        group: &'static str,
        n: usize,
        terms: Vec<Term>,
        ambient_total: String,
        index: String,
        degree: String,
    }
    let doc = Doc {
        group: b.group.name(),
        n: b.n,
        terms: b
            .terms
            .iter()
            .map(|t| Term {
                label: t.label.clone(),
                sign: t.sign,
                count: t.count.to_string(),
                volume: fmt_rat(&t.volume),
            })
            .collect(),
        ambient_total: fmt_rat(&b.ambient_total),
        index: b.index.to_string(),
        degree: fmt_rat(&b.result),
    };
    if f == Format::Json {
        return io::json(&doc);
    }
    let mut s = String::new();
    for t in &doc.terms {
        let sign = if t.sign < 0 { '-' } else { '+' };
        writeln!(s, "{sign} {} x {}  ({})", t.count, t.volume, t.label).unwrap();
    }
    writeln!(s, "= {} / {} = {}", doc.ambient_total, doc.index, doc.degree).unwrap();
    s
}

fn lemma_cmd(a: &LemmaArgs) -> Result<Output, CliError> {
    want(a.format, &[Format::Text, Format::Json])?;
    let selected: Vec<LemmaId> = if a.name == "all" {
        LemmaId::ALL.to_vec()
    } else {
        vec![a.name.parse::<LemmaId>()?]
    };
    let selected: Vec<LemmaId> = selected
        .into_iter()
        .filter(|l| a.group.is_none_or(|g| l.group() == g))
        .collect();
    let jobs: Vec<(LemmaId, usize)> = match a.n {
        Some(r) => selected.iter().flat_map(|&l| r.iter().map(move |n| (l, n))).collect(),
        None => verify::standard_jobs()
            .into_iter()
            .filter(|(l, _)| selected.contains(l))
            .collect(),
    };
    let outcomes = verify::check_lemmas(&jobs)?;
    let failed = outcomes.iter().any(|o| !o.verdict.is_confirmed());
    let text = if a.format == Format::Json {
        io::json(&outcomes.iter().map(LemmaRecord::from).collect::<Vec<_>>())
    } else {
        let mut s = String::new();
        for &(l, n) in &jobs {
            let mine = outcomes.iter().filter(|o| o.lemma == l && o.n == n);
            let total = mine.clone().count();
            let refuted: Vec<_> = mine.filter(|o| !o.verdict.is_confirmed()).collect();
            writeln!(s, "{l} n={n} instances={total} refuted={}", refuted.len()).unwrap();
            for o in refuted {
                if let Verdict::Refuted(why) = &o.verdict {
                    writeln!(s, "  {}: {why}", o.hypothesis).unwrap();
                }
            }
        }
        s
    };
    Ok(Output { text, failed })
}

/// Parses `args`, runs the command, and writes the artifact (to `--output`
/// or `stdout`). Returns the process exit status.
pub fn run<I, T>(args: I, o: &Oracles, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            let _ = writeln!(stderr, "{}", CliError::usage(first).line());
            return EXIT_USAGE;
        }
    };
    let out = match execute(&cli, o) {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.line());
            return e.code;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &out.text),
        None => stdout.write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: io: {e}");
        return EXIT_USAGE;
    }
    if out.failed {
        let _ = writeln!(stderr, "error: verification: a cross-check or lemma check failed");
        return EXIT_VERIFY;
    }
    EXIT_OK
}
