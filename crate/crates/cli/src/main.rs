mod output;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use chromapoly::datasets::{self, Dataset};
use chromapoly::engine::TraceSummary;
use chromapoly::{
    chromatic, parse_edge_list, verify_structure, EngineConfig, EngineError, Graph, Polynomial,
    Strategy,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use output::{OutputDocument, Verification};

const EXIT_FAILED_CHECK: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const THREADS_VAR: &str = "CHROMAPOLY_THREADS";

#[derive(Parser)]
#[command(name = "chromapoly", version, about = "Exact chromatic polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the chromatic polynomial.
    Poly {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Evaluate at t; repeatable.
        #[arg(long = "eval", value_name = "T", allow_negative_numbers = true)]
        eval: Vec<i64>,
        /// Include node counts per reduction kind.
        #[arg(long)]
        trace: bool,
    },
    /// Print the number of proper colorings with k colors.
    Count {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(short = 'k', value_name = "T")]
        k: u64,
    },
    /// Check the computed polynomial against structural properties.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Add 1 to the constant term before checking.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// List embedded datasets.
    Datasets,
    /// Write an embedded dataset in the .edges format.
    Export {
        name: String,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Edge-list file.
    path: Option<PathBuf>,
    /// Embedded dataset name.
    #[arg(long)]
    dataset: Option<String>,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    /// Abort after visiting this many subproblems.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Naive,
    #[value(name = "memo_only")]
    MemoOnly,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Naive => Strategy::Naive,
            StrategyArg::MemoOnly => Strategy::MemoOnly,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

struct Loaded {
    source: String,
    graph: Graph,
    dataset: Option<Dataset>,
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    if let Some(name) = &input.dataset {
        let d = datasets::dataset(name).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
        return Ok(Loaded {
            source: d.name.to_string(),
            graph: d.graph.clone(),
            dataset: Some(d),
        });
    }
    let path = input.path.as_ref().expect("clap requires one input");
    let text = fs::read_to_string(path)
        .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    let graph =
        parse_edge_list(&text).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    Ok(Loaded {
        source: path.display().to_string(),
        graph,
        dataset: None,
    })
}

fn threads() -> Result<usize, Failure> {
    match std::env::var(THREADS_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            fail(
                EXIT_INPUT,
                format!("{THREADS_VAR}={v:?} is not a thread count"),
            )
        }),
        Err(_) => Ok(0),
    }
}

struct Computed {
    polynomial: Polynomial,
    trace: Option<TraceSummary>,
    seconds: f64,
}

fn compute(g: &Graph, args: &EngineArgs, trace: bool) -> Result<Computed, Failure> {
    let cfg = EngineConfig {
        strategy: args.strategy.into(),
        trace_enabled: trace,
        node_budget: args.budget,
        threads: threads()?,
        ..EngineConfig::default()
    };
    let start = Instant::now();
    match chromatic(g, &cfg) {
        Ok(out) => Ok(Computed {
            polynomial: out.polynomial,
            trace: out.trace.map(|t| t.summary()),
            seconds: start.elapsed().as_secs_f64(),
        }),
        Err(EngineError::BudgetExceeded { budget, partial }) => {
            let mut message = format!("node budget of {budget} exhausted");
            if let Some(s) = partial.map(|t| t.summary()) {
                message.push_str(&format!(
                    "; partial trace: {} nodes, {} deletion-contractions, {} clique splits, {} memo hits",
                    s.total(),
                    s.delete_contracts,
                    s.clique_splits,
                    s.memo_hits
                ));
            }
            Err(fail(EXIT_BUDGET, message))
        }
        Err(e) => Err(fail(EXIT_FAILED_CHECK, e.to_string())),
    }
}

fn document(
    loaded: &Loaded,
    args: &EngineArgs,
    computed: &Computed,
    polynomial: &Polynomial,
    points: &[i64],
) -> OutputDocument {
    let report = verify_structure(&loaded.graph, polynomial);
    OutputDocument {
        graph: output::GraphInfo::new(loaded.source.clone(), &loaded.graph),
        strategy: Strategy::from(args.strategy).name(),
        polynomial: output::poly_info(polynomial),
        evaluations: output::evaluations(polynomial, points),
        verification: Verification {
            passed: report.passed(),
            report,
        },
        trace: computed.trace,
        reference: output::reference(loaded.dataset.as_ref(), polynomial),
        published_claims: output::claims(loaded.dataset.as_ref(), polynomial),
        timing: output::Timing {
            compute_seconds: computed.seconds,
        },
    }
}

fn emit(doc: &OutputDocument, format: Format) -> Result<(), Failure> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc)
                .map_err(|e| fail(EXIT_FAILED_CHECK, e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Text => output::render_text(doc),
    };
    write_stdout(&text)
}

fn write_stdout(text: &str) -> Result<(), Failure> {
    io::stdout()
        .lock()
        .write_all(text.as_bytes())
        .map_err(|e| fail(EXIT_FAILED_CHECK, e.to_string()))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Poly {
            input,
            engine,
            format,
            eval,
            trace,
        } => {
            let loaded = load(&input)?;
            let computed = compute(&loaded.graph, &engine, trace)?;
            let doc = document(&loaded, &engine, &computed, &computed.polynomial, &eval);
            emit(&doc, format)?;
            Ok(0)
        }
        Command::Count { input, engine, k } => {
            let loaded = load(&input)?;
            let computed = compute(&loaded.graph, &engine, false)?;
            write_stdout(&format!("{}\n", computed.polynomial.eval(&BigInt::from(k))))?;
            Ok(0)
        }
        Command::Verify {
            input,
            engine,
            format,
            inject_fault,
        } => {
            let loaded = load(&input)?;
            let computed = compute(&loaded.graph, &engine, false)?;
            let mut p = computed.polynomial.clone();
            if inject_fault {
                p = &p + &Polynomial::one();
            }
            let doc = document(&loaded, &engine, &computed, &p, &[]);
            match format {
                Format::Json => emit(&doc, format)?,
                Format::Text => {
                    let mut text = doc.verification.report.to_string();
                    text.push_str(if doc.verification.passed {
                        "all applicable checks pass\n"
                    } else {
                        "verification FAILED\n"
                    });
                    write_stdout(&text)?;
                }
            }
            Ok(if doc.verification.passed {
                0
            } else {
                EXIT_FAILED_CHECK
            })
        }
        Command::Datasets => {
            let mut text = String::new();
            for d in datasets::all() {
                text.push_str(&format!(
                    "{:<10} {:>3} vertices {:>4} edges  {}\n",
                    d.name,
                    d.graph.n(),
                    d.graph.edge_count(),
                    d.description
                ));
            }
            write_stdout(&text)?;
            Ok(0)
        }
        Command::Export { name, output } => {
            let d = datasets::dataset(&name).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
            match output {
                Some(path) => fs::write(&path, d.source)
                    .map_err(|e| fail(EXIT_FAILED_CHECK, format!("{}: {e}", path.display())))?,
                None => write_stdout(d.source)?,
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
