//! Command-line surface: spectra of standard graphs and joins, the
//! verification suites, and cospectral family generation, with JSON, CSV,
//! and plain output.
//!
//! Exit codes: 0 success, 1 verification or computation failure, 2 usage or
//! parse error. Identical invocations produce byte-identical output; floats
//! print with 12 significant digits.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::alpha::{
    alpha_matrix, closed_form_spectrum, direct_join_spectrum, exact_closed_form_charpoly,
    exact_join_charpoly, spectra_equal, AlphaParam, G2Class, JoinSpec,
};
use crate::cospectral::{
    coronal_equal_exact, default_alpha_grid, generate_family, generate_family_coronal,
    seed_by_name, FamilyEntry, SeedPair, DEFAULT_COSPECTRAL_TOL,
};
use crate::eigen::{sym_eigenvalues, Spectrum};
use crate::error::{Error, Result};
use crate::exact::parse_rational;
use crate::graph::{build_family, petersen, Family, Graph, JoinKind};
use crate::verify::{run_corollary_grid, run_examples, run_lemma_suite, run_theorem_suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "aalpha",
    about = "Alpha-matrix spectra of Q/T vertex and edge joins of graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum of the alpha matrix of a graph or a join of two graphs.
    Spectrum(SpectrumArgs),
    /// Run a verification suite: lemmas, theorems, corollaries, examples.
    Verify(VerifyArgs),
    /// Certify cospectral pairs and generate cospectral families.
    Cospectral(CospectralArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    /// Graph descriptor, e.g. complete:4, path:3, cycle:5, cbipartite:2,3,
    /// empty:3, petersen, or @file for an edge list.
    #[arg(long, conflicts_with_all = ["join", "g1", "g2"])]
    family: Option<String>,

    /// Edge-list file for the graph.
    #[arg(long, conflicts_with_all = ["family", "join", "g1", "g2"])]
    file: Option<PathBuf>,

    /// Join kind: qvertex, qedge, tvertex, tedge.
    #[arg(long, requires = "g1", requires = "g2")]
    join: Option<JoinKindArg>,

    /// First factor (regular) of the join.
    #[arg(long)]
    g1: Option<String>,

    /// Second factor of the join.
    #[arg(long)]
    g2: Option<String>,

    /// Alpha value or comma-separated grid, each in [0, 1].
    #[arg(long, default_value = "0.5")]
    alpha: String,

    /// How to compute a join spectrum.
    #[arg(long, value_enum, default_value_t = Method::Direct)]
    method: Method,

    /// Eigenvalue clustering tolerance override.
    #[arg(long)]
    cluster_tol: Option<f64>,

    /// Agreement tolerance for --method both.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,

    /// Exact mode: rational alpha, exact characteristic polynomials.
    #[arg(long)]
    exact: bool,

    /// Include the assembled alpha matrix in JSON output.
    #[arg(long)]
    emit_matrix: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Closed,
    Both,
}

#[derive(Clone, Copy)]
struct JoinKindArg(JoinKind);

impl FromStr for JoinKindArg {
    type Err = Error;
    fn from_str(s: &str) -> Result<JoinKindArg> {
        Ok(JoinKindArg(s.parse()?))
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: lemmas, theorems, corollaries, examples.
    suite: String,

    /// Randomized trials (lemmas, default 100) or configurations
    /// (theorems, default 30).
    #[arg(long)]
    trials: Option<usize>,

    /// Evaluation points per configuration (theorems).
    #[arg(long, default_value_t = 20)]
    points: usize,

    /// Seed for the deterministic random generator.
    #[arg(long, default_value_t = 20260808)]
    seed: u64,

    /// Second-factor class for the theorem suite (only `arbitrary` exists).
    #[arg(long, default_value = "arbitrary")]
    g2: String,
}

#[derive(Args)]
struct CospectralArgs {
    /// Named seed pair from the catalog, e.g. shrikhande-rook.
    #[arg(long, conflicts_with = "seed_files")]
    seed: Option<String>,

    /// Two edge-list files forming the seed pair.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    seed_files: Vec<PathBuf>,

    /// Graph joined with both seed members.
    #[arg(long, required_unless_present_any = ["h1", "h2"])]
    h: Option<String>,

    /// Fixed regular factor for the coronal variant (with --h1/--h2).
    #[arg(long, requires = "h1", requires = "h2", conflicts_with_all = ["seed", "seed_files", "h"])]
    g: Option<String>,

    /// First of the cospectral equal-coronal pair (coronal variant).
    #[arg(long)]
    h1: Option<String>,

    /// Second of the cospectral equal-coronal pair (coronal variant).
    #[arg(long)]
    h2: Option<String>,

    /// Join kinds: `all` or a comma-separated subset.
    #[arg(long, default_value = "all")]
    kinds: String,

    /// Comma-separated alpha grid; defaults to {0, 1/4, 1/2, 3/4, 1} plus
    /// three deterministic random draws.
    #[arg(long)]
    alpha_grid: Option<String>,

    /// Certification tolerance.
    #[arg(long, default_value_t = DEFAULT_COSPECTRAL_TOL)]
    tol: f64,

    /// Seed for the random alpha draws of the default grid.
    #[arg(long, default_value_t = 20260808)]
    seed_rng: u64,

    /// Additionally verify coronal equality exactly (rational alphas only).
    #[arg(long)]
    exact_coronal: bool,
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version through this path too
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut sink = OutputSink {
        target: cli.out,
        buffer: String::new(),
    };
    let outcome = match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args, cli.format, &mut sink),
        Command::Verify(args) => cmd_verify(args, cli.format, &mut sink),
        Command::Cospectral(args) => cmd_cospectral(args, cli.format, &mut sink),
    };
    let code = match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    if let Err(e) = sink.finish() {
        eprintln!("error: {e}");
        return EXIT_FAILURE;
    }
    code
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidParameter(_) | Error::InvalidInput(_) | Error::Io(_) => {
            EXIT_USAGE
        }
        _ => EXIT_FAILURE,
    }
}

struct OutputSink {
    target: Option<PathBuf>,
    buffer: String,
}

impl OutputSink {
    fn emit(&mut self, text: &str) {
        self.buffer.push_str(text);
        if !text.ends_with('\n') {
            self.buffer.push('\n');
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.buffer.is_empty() {
            return Ok(());
        }
        match &self.target {
            Some(path) => fs::write(path, &self.buffer)?,
            None => print!("{}", self.buffer),
        }
        Ok(())
    }
}

/// Rounds to 12 significant decimal digits so repeated runs print
/// identically.
fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(11 - magnitude);
    (x * factor).round() / factor
}

/// Formats with at most 12 significant digits, choosing positional or
/// scientific notation by magnitude. String-level digit handling, so the
/// printed form never exceeds the promised precision.
fn fmt_value(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.11e}", x.abs());
    let (mantissa, exp_str) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp_str.parse().expect("exponent parses");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let sign = if x < 0.0 { "-" } else { "" };
    let body = if (0..=11).contains(&exp) {
        let point = exp as usize + 1;
        if point >= digits.len() {
            format!("{digits}{}", "0".repeat(point - digits.len()))
        } else {
            format!("{}.{}", &digits[..point], &digits[point..])
        }
    } else if (-4..0).contains(&exp) {
        format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
    } else if digits.len() == 1 {
        format!("{digits}e{exp}")
    } else {
        format!("{}.{}e{exp}", &digits[..1], &digits[1..])
    };
    format!("{sign}{body}")
}

/// Parses a graph descriptor: a family, a named graph, or `@path` /
/// bare path for an edge-list file.
fn parse_graph(desc: &str) -> Result<Graph> {
    if let Some(path) = desc.strip_prefix('@') {
        return Graph::from_edge_list(&fs::read_to_string(path)?);
    }
    if desc == "petersen" {
        return Ok(petersen());
    }
    if desc == "shrikhande" {
        return Ok(crate::cospectral::shrikhande());
    }
    if desc == "rook4" {
        return Ok(crate::cospectral::rook_4x4());
    }
    build_family(desc.parse::<Family>()?)
}

/// The bipartite class is inferred from the descriptor so that Example-2
/// style invocations route through the complete-bipartite branch.
fn g2_class_for(desc: &str, g2: &Graph) -> G2Class {
    if let Ok(Family::CompleteBipartite(a, b)) = desc.parse::<Family>() {
        return G2Class::CompleteBipartite { a, b };
    }
    match g2.regularity() {
        Some(t2) => G2Class::Regular { t2 },
        None => G2Class::Arbitrary,
    }
}

fn parse_alphas(spec: &str) -> Result<Vec<f64>> {
    spec.split(',')
        .map(|s| {
            let v: f64 = s
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad alpha `{s}`: {e}")))?;
            AlphaParam::new(v)?;
            Ok(v)
        })
        .collect()
}

#[derive(Serialize)]
struct SpectrumOutput {
    graph: String,
    alpha: f64,
    method: &'static str,
    spectrum: Spectrum,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<serde_json::Value>,
}

fn rounded_spectrum(s: &Spectrum) -> Spectrum {
    Spectrum {
        eigenvalues: s
            .eigenvalues
            .iter()
            .map(|e| crate::eigen::SpectrumEntry {
                value: round_sig(e.value),
                multiplicity: e.multiplicity,
                clause: e.clause.clone(),
            })
            .collect(),
    }
}

fn cmd_spectrum(args: SpectrumArgs, format: Format, sink: &mut OutputSink) -> Result<bool> {
    // exact mode parses alpha as a rational, so defer the float parse
    let alphas = if args.exact {
        Vec::new()
    } else {
        parse_alphas(&args.alpha)?
    };
    let mut outputs: Vec<SpectrumOutput> = Vec::new();
    let mut all_agree = true;

    if let Some(kind) = args.join {
        let g1_desc = args.g1.as_deref().expect("clap enforces --g1");
        let g2_desc = args.g2.as_deref().expect("clap enforces --g2");
        let g1 = parse_graph(g1_desc)?;
        let g2 = parse_graph(g2_desc)?;
        let class = g2_class_for(g2_desc, &g2);
        let spec = JoinSpec::new(kind.0, g1, g2, class)?;
        let label = format!("{} join of {} and {}", kind.0, g1_desc, g2_desc);

        if args.exact {
            return cmd_spectrum_exact_join(&args, &spec, &label, format, sink);
        }

        for &al in &alphas {
            let alpha = AlphaParam::new(al)?;
            let (method, spectrum, agreement) = match args.method {
                Method::Direct => (
                    "direct",
                    direct_join_spectrum(&spec, alpha, args.cluster_tol)?,
                    None,
                ),
                Method::Closed => (
                    "closed-form",
                    closed_form_spectrum(&spec, alpha)?.flatten(args.cluster_tol)?,
                    None,
                ),
                Method::Both => {
                    let direct = direct_join_spectrum(&spec, alpha, args.cluster_tol)?;
                    let closed =
                        closed_form_spectrum(&spec, alpha)?.flatten(args.cluster_tol)?;
                    let cmp = spectra_equal(&closed, &direct, args.tol);
                    all_agree &= cmp.equal;
                    let agreement = json!({
                        "equal": cmp.equal,
                        "max_deviation": round_sig(cmp.max_deviation),
                        "tolerance": args.tol,
                    });
                    ("both", closed, Some(agreement))
                }
            };
            let matrix = emit_matrix_json(&args, &spec, alpha)?;
            outputs.push(SpectrumOutput {
                graph: label.clone(),
                alpha: al,
                method,
                spectrum: rounded_spectrum(&spectrum),
                agreement,
                matrix,
            });
        }
    } else {
        let (graph, label) = if let Some(path) = &args.file {
            (
                Graph::from_edge_list(&fs::read_to_string(path)?)?,
                path.display().to_string(),
            )
        } else {
            let desc = args.family.as_deref().ok_or_else(|| {
                Error::Parse("one of --family, --file, or --join is required".into())
            })?;
            (parse_graph(desc)?, desc.to_string())
        };
        if args.exact {
            return cmd_spectrum_exact_graph(&args, &graph, &label, format, sink);
        }
        for &al in &alphas {
            let alpha = AlphaParam::new(al)?;
            let m = alpha_matrix(&graph, alpha);
            let spectrum = sym_eigenvalues(&m, args.cluster_tol)?;
            let matrix = if args.emit_matrix {
                Some(serde_json::to_value(&m).expect("matrix serializes"))
            } else {
                None
            };
            outputs.push(SpectrumOutput {
                graph: label.clone(),
                alpha: al,
                method: "direct",
                spectrum: rounded_spectrum(&spectrum),
                agreement: None,
                matrix,
            });
        }
    }

    render_spectra(&outputs, format, sink)?;
    Ok(all_agree)
}

fn emit_matrix_json(
    args: &SpectrumArgs,
    spec: &JoinSpec,
    alpha: AlphaParam,
) -> Result<Option<serde_json::Value>> {
    if !args.emit_matrix {
        return Ok(None);
    }
    let m = alpha_matrix(&spec.join_graph()?, alpha);
    Ok(Some(serde_json::to_value(&m).expect("matrix serializes")))
}

fn render_spectra(outputs: &[SpectrumOutput], format: Format, sink: &mut OutputSink) -> Result<()> {
    match format {
        Format::Json => {
            let value = if outputs.len() == 1 {
                serde_json::to_string_pretty(&outputs[0])
            } else {
                serde_json::to_string_pretty(&outputs)
            }
            .expect("spectra serialize");
            sink.emit(&value);
        }
        Format::Csv => {
            let mut text = String::from("graph,alpha,method,index,value,multiplicity,clause\n");
            for o in outputs {
                for (i, v) in o.spectrum.flatten().iter().enumerate() {
                    let clause = o
                        .spectrum
                        .entries()
                        .iter()
                        .scan(0usize, |acc, e| {
                            *acc += e.multiplicity;
                            Some((*acc, e.clause.clone()))
                        })
                        .find(|(cum, _)| i < *cum)
                        .and_then(|(_, c)| c)
                        .unwrap_or_default();
                    writeln!(
                        text,
                        "{},{},{},{},{},1,{}",
                        o.graph,
                        fmt_value(o.alpha),
                        o.method,
                        i,
                        fmt_value(*v),
                        clause
                    )
                    .expect("write to string");
                }
            }
            sink.emit(&text);
        }
        Format::Plain => {
            let mut text = String::new();
            for o in outputs {
                let entries: Vec<String> = o
                    .spectrum
                    .entries()
                    .iter()
                    .map(|e| {
                        if e.multiplicity == 1 {
                            fmt_value(e.value)
                        } else {
                            format!("[{}]^{}", fmt_value(e.value), e.multiplicity)
                        }
                    })
                    .collect();
                writeln!(
                    text,
                    "{} @ alpha={}: {{{}}}",
                    o.graph,
                    fmt_value(o.alpha),
                    entries.join(", ")
                )
                .expect("write to string");
                if let Some(agreement) = &o.agreement {
                    writeln!(text, "  agreement: {agreement}").expect("write to string");
                }
            }
            sink.emit(&text);
        }
    }
    Ok(())
}

fn rational_poly_json(p: &crate::exact::RationalPolynomial) -> serde_json::Value {
    json!(p
        .coefficients()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>())
}

fn cmd_spectrum_exact_graph(
    args: &SpectrumArgs,
    graph: &Graph,
    label: &str,
    format: Format,
    sink: &mut OutputSink,
) -> Result<bool> {
    let alpha = parse_rational(&args.alpha)?;
    let m = crate::exact::RationalMatrix::alpha_matrix(graph, &alpha);
    let charpoly = crate::exact::charpoly_exact(&m);
    let out = json!({
        "graph": label,
        "alpha": alpha.to_string(),
        "charpoly_ascending": rational_poly_json(&charpoly),
    });
    emit_json_or_plain(&out, format, sink);
    Ok(true)
}

fn cmd_spectrum_exact_join(
    args: &SpectrumArgs,
    spec: &JoinSpec,
    label: &str,
    format: Format,
    sink: &mut OutputSink,
) -> Result<bool> {
    let alpha = parse_rational(&args.alpha)?;
    let assembled = exact_join_charpoly(spec, &alpha)?;
    let mut out = json!({
        "graph": label,
        "alpha": alpha.to_string(),
        "charpoly_ascending": rational_poly_json(&assembled),
    });
    let mut ok = true;
    if args.method == Method::Both || args.method == Method::Closed {
        let factored = exact_closed_form_charpoly(spec, &alpha)?;
        let equal = assembled == factored;
        ok = equal;
        out["factored_charpoly_ascending"] = rational_poly_json(&factored);
        out["coefficientwise_equal"] = json!(equal);
    }
    emit_json_or_plain(&out, format, sink);
    Ok(ok)
}

fn emit_json_or_plain(value: &serde_json::Value, format: Format, sink: &mut OutputSink) {
    match format {
        Format::Json | Format::Csv => {
            sink.emit(&serde_json::to_string_pretty(value).expect("json serializes"))
        }
        Format::Plain => {
            let mut text = String::new();
            if let Some(map) = value.as_object() {
                for (k, v) in map {
                    writeln!(text, "{k}: {v}").expect("write to string");
                }
            }
            sink.emit(&text);
        }
    }
}

fn cmd_verify(args: VerifyArgs, format: Format, sink: &mut OutputSink) -> Result<bool> {
    let report = match args.suite.as_str() {
        "lemmas" => run_lemma_suite(args.trials.unwrap_or(100), args.seed)?,
        "theorems" => {
            if args.g2 != "arbitrary" {
                return Err(Error::Parse(format!(
                    "unknown --g2 class `{}` (only `arbitrary`)",
                    args.g2
                )));
            }
            run_theorem_suite(args.trials.unwrap_or(30), args.points, args.seed)?
        }
        "corollaries" => run_corollary_grid()?,
        "examples" => run_examples()?,
        other => {
            return Err(Error::Parse(format!(
                "unknown suite `{other}`; expected lemmas, theorems, corollaries, or examples"
            )))
        }
    };

    match format {
        Format::Json | Format::Csv => {
            let mut value = serde_json::to_value(&report).expect("report serializes");
            round_deviations(&mut value);
            sink.emit(&serde_json::to_string_pretty(&value).expect("json serializes"));
        }
        Format::Plain => {
            let mut text = format!(
                "suite {}: {}\n",
                report.suite,
                if report.passed { "PASS" } else { "FAIL" }
            );
            for c in &report.checks {
                writeln!(
                    text,
                    "  {:<40} cases {:>5}  failures {:>3}  worst {:>12}  tol {}",
                    c.name,
                    c.cases,
                    c.failures,
                    fmt_value(c.max_deviation),
                    fmt_value(c.tolerance)
                )
                .expect("write to string");
            }
            sink.emit(&text);
        }
    }
    Ok(report.passed)
}

fn round_deviations(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map.iter_mut() {
                if k == "max_deviation" {
                    if let Some(x) = v.as_f64() {
                        *v = json!(round_sig(x));
                    }
                } else {
                    round_deviations(v);
                }
            }
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(round_deviations),
        _ => {}
    }
}

fn load_seed(args: &CospectralArgs) -> Result<SeedPair> {
    if let Some(name) = &args.seed {
        return seed_by_name(name);
    }
    if args.seed_files.len() == 2 {
        let a = Graph::from_edge_list(&fs::read_to_string(&args.seed_files[0])?)?;
        let b = Graph::from_edge_list(&fs::read_to_string(&args.seed_files[1])?)?;
        return SeedPair::new(
            format!(
                "{}+{}",
                args.seed_files[0].display(),
                args.seed_files[1].display()
            ),
            a,
            b,
        );
    }
    Err(Error::Parse(
        "provide --seed <name> or --seed-files <a> <b> (or the --g/--h1/--h2 variant)".into(),
    ))
}

fn parse_kinds(spec: &str) -> Result<Vec<JoinKind>> {
    if spec == "all" {
        return Ok(JoinKind::ALL.to_vec());
    }
    spec.split(',').map(|s| s.trim().parse()).collect()
}

fn cmd_cospectral(args: CospectralArgs, format: Format, sink: &mut OutputSink) -> Result<bool> {
    let kinds = parse_kinds(&args.kinds)?;
    let grid = match &args.alpha_grid {
        Some(spec) => parse_alphas(spec)?,
        None => default_alpha_grid(args.seed_rng),
    };

    let entries: Vec<FamilyEntry> = if let Some(g_desc) = &args.g {
        let g = parse_graph(g_desc)?;
        let h1 = parse_graph(args.h1.as_deref().expect("clap enforces --h1"))?;
        let h2 = parse_graph(args.h2.as_deref().expect("clap enforces --h2"))?;
        if args.exact_coronal {
            verify_exact_coronals(&h1, &h2, &args.alpha_grid)?;
        }
        generate_family_coronal(&g, &h1, &h2, &kinds, &grid, args.tol)?
    } else {
        let seed = load_seed(&args)?;
        if args.exact_coronal {
            verify_exact_coronals(&seed.g_a, &seed.g_b, &args.alpha_grid)?;
        }
        let h = parse_graph(args.h.as_deref().ok_or_else(|| {
            Error::Parse("--h is required when generating from a seed pair".into())
        })?)?;
        generate_family(&seed, &h, &kinds, &grid, args.tol)?
    };

    let all_pass = entries.iter().all(|e| e.certificate.is_cospectral);

    match format {
        Format::Json | Format::Csv => {
            let mut value = serde_json::to_value(&entries).expect("entries serialize");
            round_deviations(&mut value);
            sink.emit(&serde_json::to_string_pretty(&value).expect("json serializes"));
        }
        Format::Plain => {
            let mut text = String::new();
            for e in &entries {
                writeln!(
                    text,
                    "{}: {} on {} vertices, max deviation {} over {} alphas ({:?})",
                    e.kind,
                    if e.certificate.is_cospectral {
                        "cospectral"
                    } else {
                        "NOT cospectral"
                    },
                    e.join_a.n(),
                    fmt_value(e.certificate.max_deviation),
                    e.certificate.alphas_checked.len(),
                    e.certificate.nonisomorphic_evidence,
                )
                .expect("write to string");
            }
            sink.emit(&text);
        }
    }
    Ok(all_pass)
}

/// Exact coronal equality check. Alphas come from the explicit
/// `--alpha-grid` argument re-parsed as exact rationals (finite decimals
/// and `p/q` both work); without an explicit grid the five canonical
/// quarter points are used.
fn verify_exact_coronals(a: &Graph, b: &Graph, grid_arg: &Option<String>) -> Result<()> {
    let alphas: Vec<crate::exact::Rational> = match grid_arg {
        Some(spec) => spec
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?,
        None => (0..=4).map(|k| crate::exact::rat(k, 4)).collect(),
    };
    for alpha in &alphas {
        if !coronal_equal_exact(a, b, alpha)? {
            return Err(Error::Precondition(format!(
                "exact coronals differ at alpha = {alpha}"
            )));
        }
    }
    Ok(())
}
