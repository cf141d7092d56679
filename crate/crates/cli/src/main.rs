use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use uirred::blocking::{designated_provenance, enumerate};
use uirred::fixtures::{self, Fixture};
use uirred::irredundance::{domination_chain, report};
use uirred::tar::{build_tar, export_dot, TarKind};
use uirred::verify::{default_max_n, run_suite, suite_names, SuiteResult};
use uirred::{parse_graph6, Budget, ClosureRule, FamilySpec, Graph, Provenance, VertexSet};

/// Irredundance and blocking-set parameters of small graphs.
#[derive(Parser)]
#[command(name = "uirred", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The four numbers xir, X, upper X and XIR for one parameter.
    Compute {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        param: ClosureRule,
        #[command(flatten)]
        opts: Common,
    },
    /// Every member of a blocking family, sorted.
    Forts {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        param: ClosureRule,
        /// Defaults to the family the irredundance numbers use.
        #[arg(long)]
        provenance: Option<Provenance>,
        #[command(flatten)]
        opts: Common,
    },
    /// A token-addition-removal reconfiguration graph.
    Tar {
        #[command(flatten)]
        graph: GraphSource,
        /// Not needed for `independent_sets`.
        #[arg(long)]
        param: Option<ClosureRule>,
        /// x_sets, xir_sets or independent_sets.
        #[arg(long, default_value = "xir_sets")]
        kind: TarKind,
        #[command(flatten)]
        opts: Common,
    },
    /// The extended domination chain and tau.
    Chain {
        #[command(flatten)]
        graph: GraphSource,
        #[command(flatten)]
        opts: Common,
    },
    /// Runs a verification suite, or `all` of them at their default orders.
    Verify {
        #[arg(long)]
        suite: String,
        /// Defaults to the suite's own default.
        #[arg(long)]
        max_n: Option<usize>,
        /// Failures listed in text output.
        #[arg(long, default_value_t = 20)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    #[arg(long)]
    g6: Option<String>,
    /// For example `path:7`, `cbip:2,3` or `join(path:3,empty:2)`.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    fixture: Option<String>,
    /// Reads one graph6 line from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Largest order for which all 2^n subsets are scanned.
    #[arg(long, default_value_t = Budget::DEFAULT_MAX_ORDER)]
    budget_n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
    Dot,
}

enum Failure {
    Usage(String),
    Suite,
}

impl From<uirred::Error> for Failure {
    fn from(e: uirred::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

struct Input {
    graph: Graph,
    fixture: Option<Fixture>,
}

impl Input {
    fn format(&self, s: VertexSet) -> String {
        match &self.fixture {
            Some(f) => f.format_set(s),
            None => s.to_string(),
        }
    }
}

fn load(src: &GraphSource) -> Result<Input, Failure> {
    if let Some(g6) = &src.g6 {
        return Ok(Input {
            graph: parse_graph6(g6)?,
            fixture: None,
        });
    }
    if let Some(spec) = &src.family {
        return Ok(Input {
            graph: FamilySpec::parse(spec)?.build()?,
            fixture: None,
        });
    }
    if let Some(name) = &src.fixture {
        let f = fixtures::get(name).map_err(|_| {
            Failure::Usage(format!("unknown fixture `{name}`; known: {}", fixtures::names().join(", ")))
        })?;
        return Ok(Input {
            graph: f.graph.clone(),
            fixture: Some(f),
        });
    }
    let mut line = String::new();
    std::io::stdin()
        .read_to_string(&mut line)
        .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
    let g6 = line.lines().find(|l| !l.trim().is_empty()).unwrap_or("").trim();
    Ok(Input {
        graph: parse_graph6(g6)?,
        fixture: None,
    })
}

fn no_dot(output: Output) -> Result<(), Failure> {
    if output == Output::Dot {
        return Err(Failure::Usage("--output dot is only valid for tar".into()));
    }
    Ok(())
}

fn json(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Compute { graph, param, opts } => {
            no_dot(opts.output)?;
            let input = load(&graph)?;
            let r = report(&input.graph, param, Budget::new(opts.budget_n))?;
            Ok(match opts.output {
                Output::Json => json(&r.to_json()),
                _ => {
                    let rows = [("xir", r.xir), ("X", r.x), ("upper X", r.x_upper), ("XIR", r.xir_upper)];
                    let mut out = format!("{param} on {}\n", r.graph_g6);
                    for (name, w) in rows {
                        out += &format!("{name:<8} {:>2}  {}\n", w.value, input.format(w.witness));
                    }
                    out
                }
            })
        }
        Command::Forts {
            graph,
            param,
            provenance,
            opts,
        } => {
            no_dot(opts.output)?;
            let input = load(&graph)?;
            let provenance = provenance.unwrap_or_else(|| designated_provenance(param));
            let family = enumerate(param, provenance, &input.graph, Budget::new(opts.budget_n))?;
            Ok(match opts.output {
                Output::Json => json(&family.to_json()),
                _ => {
                    let mut out = format!("{} {provenance} sets: {}\n", param, family.len());
                    for s in family.iter() {
                        out += &input.format(s);
                        out.push('\n');
                    }
                    out
                }
            })
        }
        Command::Tar {
            graph,
            param,
            kind,
            opts,
        } => {
            if kind != TarKind::IndependentSets && param.is_none() {
                return Err(Failure::Usage(format!("--param is required for {kind:?}")));
            }
            let input = load(&graph)?;
            let t = build_tar(&input.graph, kind, param, Budget::new(opts.budget_n))?;
            Ok(match opts.output {
                Output::Json => json(&serde_json::to_value(&t).expect("tar serializes")),
                Output::Dot => export_dot(&t),
                Output::Text => {
                    let mut out = format!("{} nodes, {} edges\n", t.node_count(), t.edge_count());
                    for (a, b) in t.edge_sets() {
                        out += &format!("{} -- {}\n", input.format(a), input.format(b));
                    }
                    out
                }
            })
        }
        Command::Chain { graph, opts } => {
            no_dot(opts.output)?;
            let input = load(&graph)?;
            let c = domination_chain(&input.graph, Budget::new(opts.budget_n))?;
            Ok(match opts.output {
                Output::Json => json(&c.to_json()),
                _ => {
                    let [dir, gamma, lower_alpha, alpha, gamma_upper, dir_upper, vcir] = c.chain();
                    let mut out = format!(
                        "dir {dir} <= gamma {gamma} <= i {lower_alpha} <= alpha {alpha} <= Gamma {gamma_upper} <= DIR {dir_upper} <= VCIR {vcir}\ntau {}\n",
                        c.tau.value
                    );
                    if c.has_isolated_vertices {
                        out += "note: isolated vertices present, the chain need not hold\n";
                    }
                    out
                }
            })
        }
        Command::Verify {
            suite,
            max_n,
            limit,
            output,
        } => {
            no_dot(output)?;
            let results: Vec<SuiteResult> = if suite == "all" {
                if max_n.is_some() {
                    return Err(Failure::Usage("--max-n cannot be combined with --suite all".into()));
                }
                suite_names()
                    .into_iter()
                    .map(|s| run_suite(s, default_max_n(s)?))
                    .collect::<uirred::Result<_>>()?
            } else {
                let n = match max_n {
                    Some(n) => n,
                    None => default_max_n(&suite).map_err(|_| {
                        Failure::Usage(format!("unknown suite `{suite}`; known: all, {}", suite_names().join(", ")))
                    })?,
                };
                vec![run_suite(&suite, n)?]
            };
            let passed = results.iter().all(SuiteResult::passed);
            let text = match output {
                Output::Json if results.len() == 1 => json(&results[0].to_json()),
                Output::Json => json(&serde_json::Value::Array(results.iter().map(SuiteResult::to_json).collect())),
                _ => results.iter().map(|r| r.to_text(limit)).collect(),
            };
            if passed {
                Ok(text)
            } else {
                print!("{}", with_newline(text));
                Err(Failure::Suite)
            }
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", with_newline(out));
            ExitCode::SUCCESS
        }
        Err(Failure::Suite) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
