//! Command-line front end: parse graph documents, run each analysis, and
//! emit deterministic canonical text output.
//!
//! Exit codes: 0 success, 2 document/statement parse error, 3 semantic or
//! graph-class error, 4 resource limit.

mod doc;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gmodels::{
    gaussian_ring_from_graph, global_markov_with_cap, local_markov, markov_ring, pairwise_markov,
    CIStatement, Error, Ideal, IdealRelation, Limits, MixedGraph, GLOBAL_MARKOV_DEFAULT_CAP,
    TREK_DEFAULT_CAP,
};

#[derive(Parser)]
#[command(
    name = "gmodels",
    version,
    about = "Algebra of graphical models: Markov statements, conditional independence ideals, vanishing ideals, trek ideals, and parameter identifiability",
    max_term_width = 100
)]
struct Cli {
    /// Cap on the number of basis elements in Groebner computations
    #[arg(long, global = true)]
    max_basis: Option<usize>,

    /// Cap on the term count of intermediate polynomials
    #[arg(long, global = true)]
    max_terms: Option<usize>,

    /// Wall-clock limit for a single command
    #[arg(long, global = true)]
    timeout_seconds: Option<u64>,

    /// Override the vertex-count caps of the exponential enumerations
    /// (global Markov statements, trek subset pairs)
    #[arg(long, global = true)]
    max_vertices: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Markov statements of a graph, one per line
    Statements {
        graph_file: PathBuf,
        #[arg(long, value_enum)]
        family: Family,
    },
    /// Print the generators of a model ideal, one per line
    Ideal {
        graph_file: PathBuf,
        /// Which ideal to compute
        #[arg(long, value_enum)]
        which: Which,
        #[command(flatten)]
        stmts: StatementSource,
        /// Print the sorted degree multiset instead of the generators
        #[arg(long)]
        degrees: bool,
    },
    /// Report generic identifiability of every parameter of a mixed-graph
    /// model
    Identify { graph_file: PathBuf },
    /// Compare two model ideals in one ring
    Compare {
        graph_file: PathBuf,
        /// First ideal: ci-pairwise, ci-local, ci-global, vanishing, trek,
        /// or ci:FILE with one statement per line
        #[arg(long)]
        a: String,
        /// Second ideal, same syntax
        #[arg(long)]
        b: String,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct StatementSource {
    /// Markov statement family feeding a conditional independence ideal
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// File with one `{A} _||_ {B} | {C}` statement per line
    #[arg(long)]
    statements: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Pairwise,
    Local,
    Global,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Ci,
    Vanishing,
    Trek,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut limits = Limits::default();
    if let Some(b) = cli.max_basis {
        limits.max_basis = b;
    }
    if let Some(t) = cli.max_terms {
        limits.max_terms = t;
    }
    if let Some(s) = cli.timeout_seconds {
        limits.deadline = Some(std::time::Instant::now() + std::time::Duration::from_secs(s));
    }
    let caps = Caps {
        global_markov: cli.max_vertices.unwrap_or(GLOBAL_MARKOV_DEFAULT_CAP),
        trek: cli.max_vertices.unwrap_or(TREK_DEFAULT_CAP),
    };
    match run(&cli.command, &limits, &caps) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Vertex-count caps of the exponential enumerations, overridable with
/// --max-vertices.
struct Caps {
    global_markov: usize,
    trek: usize,
}

enum CliError {
    Parse(String),
    Semantic(String),
    Resource(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Semantic(m) | CliError::Resource(m) => write!(f, "{m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Semantic(_) => 3,
            CliError::Resource(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::ResourceLimit { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<(MixedGraph, Option<Vec<u32>>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let doc = doc::parse_graph_document(&text).map_err(|e| CliError::Parse(e.to_string()))?;
    let graph = MixedGraph::new(
        doc.vertices.clone(),
        doc.directed.clone(),
        doc.bidirected.clone(),
        doc.undirected.clone(),
    )
    .map_err(CliError::from)?;
    let levels = doc::levels_by_position(&doc, graph.labels());
    Ok((graph, levels))
}

fn family_statements(
    g: &MixedGraph,
    family: Family,
    caps: &Caps,
) -> Result<Vec<CIStatement>, CliError> {
    let stmts = match family {
        Family::Pairwise => pairwise_markov(g)?,
        Family::Local => local_markov(g)?,
        Family::Global => global_markov_with_cap(g, caps.global_markov)?,
    };
    Ok(stmts)
}

fn statements_from_file(path: &PathBuf, g: &MixedGraph) -> Result<Vec<CIStatement>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let mut stmts = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        stmts.push(
            CIStatement::parse(line, g.labels()).map_err(|e| CliError::Parse(e.to_string()))?,
        );
    }
    Ok(stmts)
}

fn print_ideal(ideal: &Ideal, degrees: bool) -> Result<(), CliError> {
    if degrees {
        let mg = ideal.min_gens_degrees()?;
        let ds: Vec<String> = mg.degrees.iter().map(|d| d.to_string()).collect();
        if !ds.is_empty() {
            println!("{}", ds.join(" "));
        }
        if !mg.homogeneous {
            eprintln!("warning: inhomogeneous generators; degrees are of an interreduced set");
        }
    } else {
        for g in ideal.generators() {
            println!("{g}");
        }
    }
    Ok(())
}

fn run(cmd: &Command, limits: &Limits, caps: &Caps) -> Result<(), CliError> {
    match cmd {
        Command::Statements { graph_file, family } => {
            let (graph, _levels) = load_graph(graph_file)?;
            for s in family_statements(&graph, *family, caps)? {
                println!("{}", s.display(graph.labels()));
            }
            Ok(())
        }
        Command::Ideal {
            graph_file,
            which,
            stmts,
            degrees,
        } => {
            let (graph, levels) = load_graph(graph_file)?;
            let ideal = compute_ideal(&graph, &levels, *which, stmts, limits, caps)?;
            print_ideal(&ideal, *degrees)
        }
        Command::Identify { graph_file } => {
            let (graph, levels) = load_graph(graph_file)?;
            if levels.is_some() {
                return Err(CliError::Semantic(
                    "identifiability is defined for Gaussian mixed-graph models; remove 'levels'"
                        .into(),
                ));
            }
            let ring = gaussian_ring_from_graph(&graph)?;
            let result = ring.identify_parameters_with(limits)?;
            for p in &result.params {
                match &p.witness {
                    Some(w) => println!("{} {} {}", ring.ring().var_name(p.var), p.class, w),
                    None => println!("{} {}", ring.ring().var_name(p.var), p.class),
                }
            }
            Ok(())
        }
        Command::Compare { graph_file, a, b } => {
            let (graph, levels) = load_graph(graph_file)?;
            let ia = ideal_by_spec(&graph, &levels, a, limits, caps)?;
            let ib = ideal_by_spec(&graph, &levels, b, limits, caps)?;
            let word = match ia.compare_with(&ib, limits)? {
                IdealRelation::Equal => "equal",
                IdealRelation::Subset => "A⊆B",
                IdealRelation::Superset => "B⊆A",
                IdealRelation::Incomparable => "incomparable",
            };
            println!("{word}");
            Ok(())
        }
    }
}

fn compute_ideal(
    graph: &MixedGraph,
    levels: &Option<Vec<u32>>,
    which: Which,
    source: &StatementSource,
    limits: &Limits,
    caps: &Caps,
) -> Result<Ideal, CliError> {
    let statements = |needed: bool| -> Result<Option<Vec<CIStatement>>, CliError> {
        match (&source.family, &source.statements) {
            (Some(f), None) => Ok(Some(family_statements(graph, *f, caps)?)),
            (None, Some(path)) => Ok(Some(statements_from_file(path, graph)?)),
            (None, None) => {
                if needed {
                    Err(CliError::Semantic(
                        "a ci ideal needs --family or --statements".into(),
                    ))
                } else {
                    Ok(None)
                }
            }
            (Some(_), Some(_)) => unreachable!("clap group forbids both"),
        }
    };
    match levels {
        Some(levels) => {
            let ring = markov_ring(levels)?;
            match which {
                Which::Ci => Ok(ring.ci_ideal(&statements(true)?.unwrap())?),
                Which::Vanishing => Ok(ring.vanishing_ideal_with(graph, limits)?),
                Which::Trek => Err(CliError::Semantic(
                    "trek ideals are defined for Gaussian models; remove 'levels'".into(),
                )),
            }
        }
        None => {
            let ring = gaussian_ring_from_graph(graph)?;
            match which {
                Which::Ci => Ok(ring.ci_ideal(&statements(true)?.unwrap())?),
                Which::Vanishing => Ok(ring.vanishing_ideal_with(limits)?),
                Which::Trek => Ok(ring.trek_ideal_with_cap(caps.trek)?),
            }
        }
    }
}

fn ideal_by_spec(
    graph: &MixedGraph,
    levels: &Option<Vec<u32>>,
    spec: &str,
    limits: &Limits,
    caps: &Caps,
) -> Result<Ideal, CliError> {
    let (which, source) = match spec {
        "ci-pairwise" => (Which::Ci, StatementSource { family: Some(Family::Pairwise), statements: None }),
        "ci-local" => (Which::Ci, StatementSource { family: Some(Family::Local), statements: None }),
        "ci-global" => (Which::Ci, StatementSource { family: Some(Family::Global), statements: None }),
        "vanishing" => (Which::Vanishing, StatementSource { family: None, statements: None }),
        "trek" => (Which::Trek, StatementSource { family: None, statements: None }),
        other => match other.strip_prefix("ci:") {
            Some(path) => (
                Which::Ci,
                StatementSource { family: None, statements: Some(PathBuf::from(path)) },
            ),
            None => {
                return Err(CliError::Semantic(format!(
                    "unknown ideal spec '{other}': use ci-pairwise, ci-local, ci-global, ci:FILE, vanishing, or trek"
                )))
            }
        },
    };
    compute_ideal(graph, levels, which, &source, limits, caps)
}
