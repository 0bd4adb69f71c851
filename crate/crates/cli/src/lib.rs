//! Command-line front end: Schubert calculus, Bott cohomology, universal
//! Chern classes, quadric pencils and the verification suite.

mod expr;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symmetroid_core::algebra::ring::rational_to_string;
use symmetroid_core::algebra::{NumberField, Ring};
use symmetroid_core::bott::{bott_cohomology, twist_by_hyperplane, BottInput, BottOutcome};
use symmetroid_core::chow::{class_to_json, grassmann_ring, integrate, RingRef};
use symmetroid_core::pencil::{
    base_locus_count, curve_genus_report, kernel_in_line, plane_px, rank3_on_plane_count, rank_at, rational_vector,
    restrict_to_plane, singular_points, symmetroid, Pencil, EXAMPLE_W, EXAMPLE_Z,
};
use symmetroid_core::symfunc::{chern_sym2, chern_tensor, chern_wedge2, segre_from_chern, ChernSeries};
use symmetroid_core::verify::{run_all, Status, VerifyError, VerifyOptions};

pub use expr::{parse_class_expr, ExprError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "symmetroid",
    version,
    about = "Exact checks for Reye congruences and quintic symmetroids"
)]
struct Cli {
    /// Emit a single JSON document instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Schubert calculus on a Grassmannian.
    Schubert(SchubertArgs),
    /// Cohomology of an irreducible homogeneous bundle on G(r, n).
    Bott(BottArgs),
    /// Universal Chern and Segre classes.
    Chern(ChernArgs),
    /// Quadric pencil computations.
    Pencil(PencilArgs),
    /// Run the verification checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("action").required(true).args(["multiply", "integrate"])))]
struct SchubertArgs {
    /// Ring, written g(K,N).
    #[arg(long)]
    ring: String,
    /// Multiply two class expressions.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    multiply: Option<Vec<String>>,
    /// Degree of a top-dimensional class expression.
    #[arg(long, value_name = "EXPR")]
    integrate: Option<String>,
}

#[derive(Args, Debug)]
struct BottArgs {
    /// Ambient dimension of V.
    #[arg(long, required_unless_present = "input")]
    n: Option<usize>,
    /// Rank of the quotient of the Grassmannian.
    #[arg(long, required_unless_present = "input")]
    r: Option<usize>,
    /// Weight on S (r entries, nonincreasing).
    #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
    beta: Option<String>,
    /// Weight on Q* (n - r entries, nonincreasing).
    #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
    gamma: Option<String>,
    /// Twist by O(T).
    #[arg(long, allow_hyphen_values = true)]
    twist: Option<i64>,
    /// Read {"n", "r", "beta", "gamma"} from a JSON file.
    #[arg(long, conflicts_with_all = ["n", "r", "beta", "gamma"])]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChernOp {
    Sym2,
    Wedge2,
    Tensor,
    Segre,
}

#[derive(Args, Debug)]
struct ChernArgs {
    #[arg(long, value_enum)]
    op: ChernOp,
    #[arg(long)]
    rank: usize,
    /// Rank of the second factor for `tensor` (defaults to --rank).
    #[arg(long)]
    other_rank: Option<usize>,
    /// Highest degree shown.
    #[arg(long)]
    degree: Option<u32>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("action").args(["symmetroid", "nodes", "scan_base", "scan_rank3"])))]
struct PencilArgs {
    /// Pencil JSON; the shipped example when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Expand the determinant.
    #[arg(long)]
    symmetroid: bool,
    /// Singular points of the symmetroid restricted to the plane of the line z w.
    #[arg(long)]
    nodes: bool,
    /// Count base points of the pencil over F_P.
    #[arg(long, requires = "prime")]
    scan_base: bool,
    /// Count points of rank at most 3 on the plane of the line z w over F_P.
    #[arg(long, requires = "prime")]
    scan_rank3: bool,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    #[arg(long)]
    prime: Option<u64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run every check (the default).
    #[arg(long, conflicts_with = "check")]
    all: bool,
    /// Run only the named checks.
    #[arg(long, num_args = 1.., value_name = "NAME")]
    check: Vec<String>,
    /// Pencil JSON used by the pencil checks.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Input(String),
}

impl CliError {
    fn input(e: impl std::fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }

    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) => EXIT_INPUT,
        }
    }
}

/// A successful command: its JSON document, the human rendering and
/// whether any check failed.
struct Output {
    json: Value,
    human: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, human: String) -> Self {
        Self {
            json,
            human,
            failed: false,
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let json_mode = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            if json_mode {
                let msg = e.kind().to_string();
                emit_error(out, "usage", &msg);
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Schubert(a) => schubert(a),
        Command::Bott(a) => bott(a),
        Command::Chern(a) => chern(a),
        Command::Pencil(a) => pencil(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(o) => {
            if cli.json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("serializable"));
            } else {
                let _ = write!(out, "{}", o.human);
            }
            if o.failed {
                EXIT_FAIL
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let (kind, msg) = match &e {
                CliError::Usage(m) => ("usage", m),
                CliError::Input(m) => ("input", m),
            };
            if cli.json {
                emit_error(out, kind, msg);
            }
            let _ = writeln!(err, "error: {msg}");
            e.code()
        }
    }
}

fn emit_error(out: &mut dyn Write, kind: &str, message: &str) {
    let doc = json!({"error": {"kind": kind, "message": message}});
    let _ = writeln!(out, "{doc}");
}

fn parse_ring(text: &str) -> Result<RingRef, CliError> {
    let t: String = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_lowercase();
    let bad = || CliError::Input(format!("ring {text:?} is not of the form g(K,N)"));
    let inner = t.strip_prefix("g(").and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
    let (k, n) = inner.split_once(',').ok_or_else(bad)?;
    let k: usize = k.parse().map_err(|_| bad())?;
    let n: usize = n.parse().map_err(|_| bad())?;
    grassmann_ring(k, n).map_err(CliError::input)
}

fn parse_csv<T: std::str::FromStr>(flag: &str, text: &str) -> Result<Vec<T>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Input(format!("--{flag}: cannot parse {:?}", s.trim())))
        })
        .collect()
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn schubert(a: &SchubertArgs) -> Result<Output, CliError> {
    let ring = parse_ring(&a.ring)?;
    if let Some(pair) = &a.multiply {
        let x = parse_class_expr(&ring, &pair[0]).map_err(CliError::input)?;
        let y = parse_class_expr(&ring, &pair[1]).map_err(CliError::input)?;
        let prod = x.multiply(&y).map_err(CliError::input)?;
        let human = format!("{}\n", prod.to_expr());
        return Ok(Output::ok(
            json!({"product": class_to_json(&prod), "expr": prod.to_expr()}),
            human,
        ));
    }
    let text = a.integrate.as_deref().expect("clap enforces one action");
    let class = parse_class_expr(&ring, text).map_err(CliError::input)?;
    let value = integrate(&class).map_err(CliError::input)?;
    let s = rational_to_string(&value);
    Ok(Output::ok(json!({"integral": s}), format!("{s}\n")))
}

fn bott(a: &BottArgs) -> Result<Output, CliError> {
    let mut input = match &a.input {
        Some(path) => serde_json::from_str::<BottInput>(&read_file(path)?).map_err(CliError::input)?,
        None => BottInput {
            n: a.n.expect("clap enforces"),
            r: a.r.expect("clap enforces"),
            beta: parse_csv("beta", a.beta.as_deref().unwrap_or(""))?,
            gamma: parse_csv("gamma", a.gamma.as_deref().unwrap_or(""))?,
        },
    };
    input.validate().map_err(CliError::input)?;
    if let Some(t) = a.twist {
        input = twist_by_hyperplane(&input, t);
    }
    let outcome = bott_cohomology(&input).map_err(CliError::input)?;
    let human = match &outcome {
        BottOutcome::AllVanish => "all cohomology vanishes\n".to_string(),
        BottOutcome::Cohomology {
            degree,
            weight,
            dimension,
        } => format!("H^{degree} has dimension {dimension} (weight {weight:?})\n"),
    };
    Ok(Output::ok(serde_json::to_value(&outcome).expect("serializable"), human))
}

fn chern(a: &ChernArgs) -> Result<Output, CliError> {
    if a.rank == 0 {
        return Err(CliError::Input("--rank must be positive".into()));
    }
    let series: ChernSeries = match a.op {
        ChernOp::Sym2 => chern_sym2(a.rank),
        ChernOp::Wedge2 => chern_wedge2(a.rank),
        ChernOp::Tensor => chern_tensor(a.rank, a.other_rank.unwrap_or(a.rank)),
        ChernOp::Segre => {
            let d = a.degree.unwrap_or(a.rank as u32);
            segre_from_chern(&ChernSeries::generic(a.rank, d), d).map_err(CliError::input)?
        }
    };
    let top = a.degree.unwrap_or(series.truncation()).min(series.truncation());
    let prefix = if matches!(a.op, ChernOp::Segre) { "s" } else { "c" };
    let mut classes = serde_json::Map::new();
    let mut human = String::new();
    for k in 1..=top {
        let text = series.display_component(k);
        let _ = writeln!(human, "{prefix}{k:<3} {text}");
        classes.insert(format!("{prefix}{k}"), Value::String(text));
    }
    let op = format!("{:?}", a.op).to_lowercase();
    Ok(Output::ok(
        json!({"op": op, "rank": a.rank, "degree": top, "classes": classes}),
        human,
    ))
}

fn nf_string(k: &NumberField, x: &symmetroid_core::algebra::NfElem) -> String {
    k.format_elem(x)
}

fn pencil(a: &PencilArgs) -> Result<Output, CliError> {
    let p = match &a.input {
        Some(path) => Pencil::from_json_str(&read_file(path)?).map_err(CliError::input)?,
        None => Pencil::example(),
    };
    let vector = |flag: &str, text: &Option<String>, default: &[i64]| match text {
        Some(t) => {
            let v: Vec<String> = parse_csv(flag, t)?;
            v.iter()
                .map(|s| {
                    symmetroid_core::algebra::ring::parse_rational(s)
                        .ok_or_else(|| CliError::Input(format!("--{flag}: bad rational {s:?}")))
                })
                .collect::<Result<Vec<_>, _>>()
        }
        None => Ok(rational_vector(default)),
    };
    let z = vector("z", &a.z, &EXAMPLE_Z)?;
    let w = vector("w", &a.w, &EXAMPLE_W)?;
    if a.scan_base {
        let q = a.prime.expect("clap enforces");
        let n = base_locus_count(&p, q).map_err(CliError::input)?;
        return Ok(Output::ok(
            json!({"scan": "base_locus", "prime": q, "count": n}),
            format!("base points over F_{q}: {n}\n"),
        ));
    }
    if a.scan_rank3 {
        let q = a.prime.expect("clap enforces");
        let plane = plane_px(&p, &z, &w).map_err(CliError::input)?;
        let n = rank3_on_plane_count(&p, &plane, q).map_err(CliError::input)?;
        return Ok(Output::ok(
            json!({"scan": "rank3_on_plane", "prime": q, "count": n}),
            format!("rank <= 3 points on the plane over F_{q}: {n}\n"),
        ));
    }
    let det = symmetroid(&p).map_err(CliError::input)?;
    let names: Vec<String> = (1..=p.n()).map(|i| format!("l{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    if !a.nodes {
        let degree = det.total_degree().unwrap_or(0);
        let terms = det.terms().count();
        let poly = det.display_with(&refs);
        return Ok(Output::ok(
            json!({"degree": degree, "terms": terms, "polynomial": poly}),
            format!("degree {degree}, {terms} terms\n{poly}\n"),
        ));
    }
    let plane = plane_px(&p, &z, &w).map_err(CliError::input)?;
    let curve = restrict_to_plane(&det, &plane).map_err(CliError::input)?;
    let points = singular_points(&curve).map_err(CliError::input)?;
    let genus = curve_genus_report(&curve, &points).map_err(CliError::input)?;
    let forms: Vec<Vec<String>> = plane
        .forms
        .iter()
        .map(|f| f.iter().map(rational_to_string).collect())
        .collect();
    let mut human = String::new();
    let _ = writeln!(human, "plane forms   {:?}", forms);
    let _ = writeln!(human, "quintic       {}", curve.display_with(&["x", "y", "u"]));
    let mut pts = Vec::new();
    for pt in &points {
        let k = &pt.field;
        let lam = pt.ambient_lambda(&plane);
        let rank = rank_at(&p, k, &lam);
        let kernel = kernel_in_line(&p, k, &lam, &z, &w);
        let modulus = k.modulus().display_with("a");
        let coords: Vec<String> = lam.iter().map(|x| nf_string(k, x)).collect();
        let _ = writeln!(
            human,
            "orbit         {} point(s) over Q[a]/({modulus}), multiplicity {}, node {}, rank {rank}, kernel on line {kernel}",
            pt.degree(),
            pt.classification.multiplicity,
            pt.classification.node,
        );
        let _ = writeln!(human, "  lambda      [{}]", coords.join(", "));
        pts.push(json!({
            "field": modulus,
            "points": pt.degree(),
            "lambda": coords,
            "multiplicity": pt.classification.multiplicity,
            "node": pt.classification.node,
            "rank": rank,
            "kernel_in_line": kernel,
        }));
    }
    let _ = writeln!(
        human,
        "genus         degree {}, arithmetic {}, geometric {}",
        genus.degree, genus.arithmetic_genus, genus.geometric_genus
    );
    Ok(Output::ok(
        json!({
            "plane_forms": forms,
            "quintic": curve.display_with(&["x", "y", "u"]),
            "singular_points": pts,
            "genus": genus,
        }),
        human,
    ))
}

fn verify(a: &VerifyArgs) -> Result<Output, CliError> {
    let options = match &a.input {
        Some(path) => VerifyOptions::with_input(path).map_err(CliError::input)?,
        None => VerifyOptions::default(),
    };
    let selection = (!a.check.is_empty()).then_some(a.check.as_slice());
    let report = run_all(selection, &options).map_err(|e| match e {
        VerifyError::UnknownCheckName(_) => CliError::Usage(e.to_string()),
        other => CliError::input(other),
    })?;
    let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut human = String::new();
    for c in &report.checks {
        let status = serde_json::to_value(c.status).expect("serializable");
        let prov = serde_json::to_value(c.provenance).expect("serializable");
        let _ = writeln!(
            human,
            "{:<width$}  {:<8}  {:<8}  {:>6} ms",
            c.name,
            status.as_str().unwrap_or(""),
            prov.as_str().unwrap_or(""),
            c.ms,
        );
        for item in c.items.iter().filter(|i| i.status == Status::Fail) {
            let _ = writeln!(
                human,
                "    {}: expected {}, computed {}",
                item.label, item.expected, item.computed
            );
        }
    }
    let s = &report.summary;
    let _ = writeln!(human, "pass {}, evidence {}, fail {}", s.pass, s.evidence, s.fail);
    Ok(Output {
        json: report.to_json(),
        human,
        failed: report.has_failures(),
    })
}
