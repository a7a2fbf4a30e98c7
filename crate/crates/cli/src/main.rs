use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use acyclo::input::{load_spec, CliError, Loaded, Source};
use acyclo::output;
use acyclo::parse::matrix::parse_matrix;
use acyclo::presets::PRESET_SUMMARY;
use acyclo::verify;
use acyclo_core::perm;
use acyclo_core::pi1;
use acyclo_core::presentation::display_word;
use acyclo_core::{analyze_complex, analyze_presentation, AcyclicityReport, ChainComplex};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Exact-arithmetic homology and acyclicity toolkit.
///
/// Inputs are simplicial complex files (one maximal simplex per line, or a
/// JSON array of arrays) and group presentations like
/// `< a, b | a^5 = b^3, b^3 = (a b)^2 >`; most subcommands also accept a
/// preset name in place of a file.
#[derive(Parser)]
#[command(name = "acyclo", version, after_help = format!("presets: {PRESET_SUMMARY}"))]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced homology of a complex (or of a presentation's 2-complex)
    Homology(AnalyzeArgs),
    /// Integral cohomology via the dual complex
    Cohomology(AnalyzeArgs),
    /// Abelianization of a presented group
    Abelianize(InputArgs),
    /// Check whether a presented group is perfect (exit 1 if not)
    Perfect(InputArgs),
    /// Acyclicity report: per-degree homology and the max-k verdict
    Acyclicity(AcyclicityArgs),
    /// Edge-path fundamental group presentation and its abelianization
    Pi1(Pi1Args),
    /// Smith normal form of an integer matrix (JSON rows)
    Snf(InputArgs),
    /// Suspension of a complex (emits a complex file)
    Suspend(InputArgs),
    /// Cone on a complex (emits a complex file)
    Cone(InputArgs),
    /// Join of two complexes (emits a complex file)
    Join(PairArgs),
    /// One-point union of two pointed complexes (emits a complex file)
    Wedge(WedgeArgs),
    /// Evaluate a presentation in a permutation group (exit 1 on failure)
    Permcheck(PermcheckArgs),
    /// Run the built-in verification suite (exit 1 if any row fails)
    VerifyPaper(FormatArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HIndexing {
    /// Suspension-connectivity ladder: 0-acyclic = nonempty, 1-acyclic = connected
    Section3,
    /// Literal "reduced homology vanishes up to k" predicate (off by one)
    Section5,
}

#[derive(Args)]
struct InputArgs {
    /// A file path, a preset name, or '-' for stdin
    input: Option<String>,
    /// Use a built-in preset
    #[arg(long)]
    preset: Option<String>,
    /// Read from a file
    #[arg(long)]
    file: Option<PathBuf>,
    /// Inline input text
    #[arg(long)]
    text: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

impl InputArgs {
    fn source(&self) -> Source {
        Source {
            positional: self.input.clone(),
            preset: self.preset.clone(),
            file: self.file.clone(),
            text: self.text.clone(),
        }
    }

    fn raw_text(&self) -> Result<String, CliError> {
        if let Some(t) = &self.text {
            return Ok(t.clone());
        }
        if let Some(f) = &self.file {
            return acyclo::input::read_file(f);
        }
        match self.input.as_deref() {
            Some("-") | None => acyclo::input::read_stdin(),
            Some(path) => acyclo::input::read_file(std::path::Path::new(path)),
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Highest degree to report (defaults to the top degree of the complex)
    #[arg(long)]
    max_degree: Option<i64>,
}

#[derive(Args)]
struct AcyclicityArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "section3")]
    h_indexing: HIndexing,
}

#[derive(Args)]
struct Pi1Args {
    #[command(flatten)]
    input: InputArgs,
    /// Basepoint vertex label (defaults to the first vertex)
    #[arg(long)]
    basepoint: Option<String>,
}

#[derive(Args)]
struct PairArgs {
    /// Left input: file, preset, or '-'
    a: String,
    /// Right input: file, preset, or '-'
    b: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct WedgeArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Basepoint label in the left complex (defaults to its first vertex)
    #[arg(long)]
    at_a: Option<String>,
    /// Basepoint label in the right complex (defaults to its first vertex)
    #[arg(long)]
    at_b: Option<String>,
}

#[derive(Args)]
struct PermcheckArgs {
    /// Built-in scenario; `hatcher-a5` is the bundled example
    #[arg(long)]
    preset: Option<String>,
    /// Presentation text, e.g. '< a, b | a^5 = b^3 >'
    #[arg(long)]
    presentation: Option<String>,
    /// Generator assignment `name=(cycles)`, repeatable
    #[arg(long = "assign")]
    assignments: Vec<String>,
    /// Degree of the permutations (defaults to the largest mentioned point)
    #[arg(long)]
    degree: Option<usize>,
    /// Check surjectivity onto `alternatingN`
    #[arg(long)]
    target: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct FormatArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Homology(args) => analyze_homology(args, false),
        Command::Cohomology(args) => analyze_homology(args, true),
        Command::Abelianize(args) => abelianize(args),
        Command::Perfect(args) => perfect(args),
        Command::Acyclicity(args) => acyclicity(args),
        Command::Pi1(args) => pi1_command(args),
        Command::Snf(args) => snf(args),
        Command::Suspend(args) => emit_unary(args, |k| k.suspension()),
        Command::Cone(args) => emit_unary(args, |k| k.cone()),
        Command::Join(args) => join(args),
        Command::Wedge(args) => wedge(args),
        Command::Permcheck(args) => permcheck(args),
        Command::VerifyPaper(args) => verify_paper(args),
    }
}

fn chain_of(loaded: Loaded) -> ChainComplex {
    match loaded {
        Loaded::Complex(k) => k.chain_complex(),
        Loaded::Presentation(p) => p.presentation_complex_chain(),
    }
}

fn analyze_homology(args: AnalyzeArgs, dual: bool) -> Result<u8, CliError> {
    let chain = chain_of(args.input.source().load()?);
    let top = args
        .max_degree
        .unwrap_or_else(|| chain.top_degree().unwrap_or(0));
    let table: BTreeMap<i64, _> = (-1..=top)
        .map(|d| {
            let group = if dual {
                chain.cohomology(d)
            } else {
                chain.homology(d)
            };
            (d, group)
        })
        .collect();
    match args.input.format {
        Format::Text => print!("{}", output::homology_table_text(&table)),
        Format::Json => println!("{}", output::homology_table_json(&table)),
    }
    Ok(0)
}

fn abelianize(args: InputArgs) -> Result<u8, CliError> {
    let p = args.source().load()?.require_presentation("abelianize")?;
    let ab = p.abelianization();
    match args.format {
        Format::Text => {
            println!("abelianization: {ab}");
            println!("free rank: {}", ab.free_rank);
            let torsion: Vec<String> = ab.torsion.iter().map(|t| t.to_string()).collect();
            println!("torsion: [{}]", torsion.join(", "));
        }
        Format::Json => println!("{}", serde_json::to_string(&ab).expect("serializable")),
    }
    Ok(0)
}

fn perfect(args: InputArgs) -> Result<u8, CliError> {
    let p = args.source().load()?.require_presentation("perfect")?;
    let verdict = p.is_perfect();
    match args.format {
        Format::Text => println!("perfect: {verdict}"),
        Format::Json => println!("{}", json!({ "perfect": verdict })),
    }
    Ok(if verdict { 0 } else { 1 })
}

fn report_of(loaded: Loaded) -> AcyclicityReport {
    match loaded {
        Loaded::Complex(k) => analyze_complex(&k),
        Loaded::Presentation(p) => analyze_presentation(&p),
    }
}

fn acyclicity(args: AcyclicityArgs) -> Result<u8, CliError> {
    let report = report_of(args.input.source().load()?);
    let max_k_value = match args.h_indexing {
        HIndexing::Section3 => json!(report.max_k),
        HIndexing::Section5 => match report.max_k_h_indexed() {
            Some(k) => json!(k),
            None => serde_json::Value::Null,
        },
    };
    match args.input.format {
        Format::Text => {
            println!("nonempty: {}", report.nonempty);
            println!("connected: {}", report.connected);
            println!("reduced homology:");
            for (degree, group) in &report.reduced_homology {
                println!("  degree {degree}: {group}");
            }
            let label = match args.h_indexing {
                HIndexing::Section3 => String::new(),
                HIndexing::Section5 => " (section5 indexing)".to_string(),
            };
            match &max_k_value {
                serde_json::Value::Null => println!("max_k: none{label}"),
                v => println!(
                    "max_k: {}{label}",
                    v.as_str()
                        .map(str::to_string)
                        .unwrap_or_else(|| v.to_string())
                ),
            }
            println!("caveat: {}", report.caveat);
        }
        Format::Json => {
            let mut value = serde_json::to_value(&report).expect("serializable");
            value["max_k"] = max_k_value;
            println!("{value}");
        }
    }
    Ok(0)
}

fn pi1_command(args: Pi1Args) -> Result<u8, CliError> {
    let k = args.input.source().load()?.require_complex("pi1")?;
    let components = k.connected_components();
    if components != 1 {
        return Err(CliError(format!(
            "complex is disconnected ({components} components); analyze one component at a time"
        )));
    }
    let basepoint = match &args.basepoint {
        Some(label) => label.clone(),
        None => k
            .labels()
            .first()
            .cloned()
            .ok_or_else(|| CliError("empty complex has no basepoint".into()))?,
    };
    let pi = pi1::edge_path_presentation(&k, &basepoint)?;
    let ab = pi.presentation.abelianization();
    match args.input.format {
        Format::Text => {
            println!("basepoint: {basepoint}");
            println!("spanning tree edges: {}", pi.tree_edges.len());
            for (name, (u, v)) in pi
                .presentation
                .generator_names()
                .iter()
                .zip(&pi.generator_edges)
            {
                println!(
                    "generator {name}: edge ({}, {})",
                    k.label_of(*u),
                    k.label_of(*v)
                );
            }
            println!("presentation: {}", pi.presentation);
            println!("abelianized: {ab}");
        }
        Format::Json => {
            let generators: Vec<_> = pi
                .generator_edges
                .iter()
                .map(|&(u, v)| json!([k.label_of(u), k.label_of(v)]))
                .collect();
            let relators: Vec<String> = pi
                .presentation
                .relators()
                .iter()
                .map(|w| display_word(w, pi.presentation.generator_names()))
                .collect();
            println!(
                "{}",
                json!({
                    "basepoint": basepoint,
                    "generators": generators,
                    "relators": relators,
                    "presentation": pi.presentation.to_string(),
                    "abelianization": serde_json::to_value(&ab).expect("serializable"),
                })
            );
        }
    }
    Ok(0)
}

fn snf(args: InputArgs) -> Result<u8, CliError> {
    let m = parse_matrix(&args.raw_text()?)?;
    let snf = m.snf();
    match args.format {
        Format::Text => print!("{}", output::snf_text(&snf)),
        Format::Json => println!("{}", output::snf_json(&snf)),
    }
    Ok(0)
}

fn emit_complex(k: &acyclo_core::SimplicialComplex, format: Format) -> Result<u8, CliError> {
    match format {
        Format::Text => print!("{}", acyclo::parse::complex::complex_to_text(k)),
        Format::Json => println!("{}", acyclo::parse::complex::complex_to_json(k)),
    }
    Ok(0)
}

fn emit_unary(
    args: InputArgs,
    op: impl Fn(&acyclo_core::SimplicialComplex) -> acyclo_core::SimplicialComplex,
) -> Result<u8, CliError> {
    let k = args.source().load()?.require_complex("this construction")?;
    emit_complex(&op(&k), args.format)
}

fn join(args: PairArgs) -> Result<u8, CliError> {
    let a = load_spec(&args.a)?.require_complex("join")?;
    let b = load_spec(&args.b)?.require_complex("join")?;
    emit_complex(&a.join(&b), args.format)
}

fn wedge(args: WedgeArgs) -> Result<u8, CliError> {
    let a = load_spec(&args.pair.a)?.require_complex("wedge")?;
    let b = load_spec(&args.pair.b)?.require_complex("wedge")?;
    let first_label = |k: &acyclo_core::SimplicialComplex| -> Result<String, CliError> {
        k.labels()
            .first()
            .cloned()
            .ok_or_else(|| CliError("wedge needs nonempty complexes".into()))
    };
    let at_a = match &args.at_a {
        Some(l) => l.clone(),
        None => first_label(&a)?,
    };
    let at_b = match &args.at_b {
        Some(l) => l.clone(),
        None => first_label(&b)?,
    };
    emit_complex(&a.wedge(&at_a, &b, &at_b)?, args.pair.format)
}

fn permcheck(args: PermcheckArgs) -> Result<u8, CliError> {
    let (presentation, assignment, target) = if let Some(name) = &args.preset {
        if name != "hatcher-a5" {
            return Err(CliError(format!(
                "unknown permcheck preset `{name}` (available: hatcher-a5)"
            )));
        }
        let a = perm::Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]])?;
        let b = perm::Permutation::from_cycles(5, &[vec![2, 5, 4]])?;
        (
            acyclo_core::presentation::hatcher(),
            vec![a, b],
            Some(perm::alternating(5)?),
        )
    } else {
        let text = args
            .presentation
            .as_deref()
            .ok_or_else(|| CliError("permcheck needs --preset or --presentation".into()))?;
        let p = acyclo::parse::presentation::parse_presentation(text)?.presentation;
        let mut by_name: BTreeMap<String, String> = BTreeMap::new();
        for spec in &args.assignments {
            let (name, cycles) = spec
                .split_once('=')
                .ok_or_else(|| CliError(format!("--assign expects name=(cycles), got `{spec}`")))?;
            by_name.insert(name.trim().to_string(), cycles.trim().to_string());
        }
        let degree = args.degree.unwrap_or_else(|| {
            by_name
                .values()
                .flat_map(|text| {
                    text.split(|c: char| !c.is_ascii_digit())
                        .filter_map(|t| t.parse::<usize>().ok())
                })
                .max()
                .unwrap_or(1)
        });
        let mut assignment = Vec::with_capacity(p.n_generators());
        for name in p.generator_names() {
            let cycles = by_name
                .get(name)
                .ok_or_else(|| CliError(format!("no --assign for generator `{name}`")))?;
            assignment.push(perm::parse_permutation(cycles, Some(degree))?);
        }
        let target = match &args.target {
            None => None,
            Some(spec) => {
                let n: usize = spec
                    .strip_prefix("alternating")
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| {
                        CliError(format!("--target expects alternatingN, got `{spec}`"))
                    })?;
                Some(perm::alternating(n)?)
            }
        };
        (p, assignment, target)
    };

    let holds = perm::satisfies(&presentation, &assignment)?;
    let degree = assignment.first().map(|p| p.degree()).unwrap_or(0);
    let image = perm::generate(degree, &assignment)?;
    let surjective = target.as_ref().map(|t| image == *t);

    match args.format {
        Format::Text => {
            println!("relations hold: {holds}");
            println!("image order: {}", image.order());
            if let Some(t) = &target {
                println!("target order: {}", t.order());
                println!("surjective onto target: {}", surjective.unwrap_or(false));
            }
        }
        Format::Json => {
            println!(
                "{}",
                json!({
                    "relations_hold": holds,
                    "image_order": image.order(),
                    "target_order": target.as_ref().map(|t| t.order()),
                    "surjective": surjective,
                })
            );
        }
    }
    Ok(if holds && surjective.unwrap_or(true) {
        0
    } else {
        1
    })
}

fn verify_paper(args: FormatArgs) -> Result<u8, CliError> {
    let rows = verify::run_all();
    let failed = rows.iter().filter(|r| !r.pass).count();
    match args.format {
        Format::Text => {
            for row in &rows {
                let status = if row.pass { "PASS" } else { "FAIL" };
                println!(
                    "{status}  [{}] {:<28} {}",
                    row.criterion, row.id, row.detail
                );
            }
            println!(
                "{} of {} rows passed{}",
                rows.len() - failed,
                rows.len(),
                if failed == 0 {
                    ""
                } else {
                    " -- FAILURES ABOVE"
                }
            );
        }
        Format::Json => {
            let value: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "criterion": r.criterion,
                        "pass": r.pass,
                        "detail": r.detail,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(value));
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
