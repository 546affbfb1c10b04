use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use tuttekit::combinatorics::{parse_rational, SetPartition};
use tuttekit::graphs::Multigraph;
use tuttekit::invariants;
use tuttekit::json::{
    partition_from_json, partition_json, rational_json, CombinationJson, DigraphJson, FriendlinessJson,
    GraphJson, QFuncJson, ReductionJson, SymFuncJson,
};
use tuttekit::kernel::{self, Friendliness, GraphCombination};
use tuttekit::quasi;
use tuttekit::selfcheck;
use tuttekit::symfun::{Basis, SymFunc};

#[derive(Parser)]
#[command(
    name = "tuttekit",
    version,
    about = "Chromatic and Tutte symmetric functions of vertex-weighted multigraphs"
)]
struct Cli {
    /// Print JSON instead of the readable summary.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON result to this file.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic symmetric function X of a graph.
    X {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = XRoute::Def)]
        route: XRoute,
        #[arg(long, value_enum, default_value_t = BasisArg::Mtilde)]
        basis: BasisArg,
    },
    /// Tutte symmetric function XB of a graph.
    Xb {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = XbRoute::Def)]
        route: XbRoute,
        #[arg(long, value_enum, default_value_t = BasisArg::Mtilde)]
        basis: BasisArg,
        /// Evaluate t at this rational, e.g. -1 or 1/2.
        #[arg(long, value_name = "R", allow_hyphen_values = true)]
        t_eval: Option<String>,
    },
    /// Sum of the e-coefficients of length l in [(1+t)^k] XB, by the sink
    /// formula and by direct expansion.
    Sigma {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Test a combination for Tutte-friendliness.
    Friendly { combination: PathBuf },
    /// Test a combination for X-friendliness.
    Xfriendly { combination: PathBuf },
    /// Build and check the cloud witness for a non-friendly combination.
    Witness {
        combination: PathBuf,
        /// Partition as blocks of 1-based vertices, e.g. "1,3|2". Defaults to
        /// the first violating partition.
        #[arg(long)]
        pi: Option<String>,
        /// Exponent of (1+t). Defaults to the least valid one.
        #[arg(long)]
        a: Option<usize>,
    },
    /// Reduce a combination to canonical star forests with a certificate.
    Reduce { combination: PathBuf },
    /// Decide membership in the kernel of XB.
    Member { combination: PathBuf },
    /// Print a kernel relation, optionally extended by a host graph.
    Relation(RelationArgs),
    /// Friendly complement pairs on four vertices.
    #[command(name = "classify-n4")]
    ClassifyN4,
    /// Quasisymmetric XQ or TQ of a digraph.
    Quasi {
        #[arg(value_enum)]
        which: QuasiKind,
        digraph: PathBuf,
        /// Number of variables; defaults to the total weight.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum, default_value_t = QuasiRoute::Def)]
        route: QuasiRoute,
    },
    /// Run the acceptance suites.
    Selfcheck {
        /// Only these suite numbers.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Args)]
struct RelationArgs {
    #[arg(value_enum)]
    kind: RelationKind,
    /// Graph carrying the cycle or two-edge-connected relation.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Cycle vertices, 1-based and comma separated.
    #[arg(long, value_delimiter = ',')]
    cycle: Vec<usize>,
    /// 1-based index of e_i.
    #[arg(long)]
    i: Option<usize>,
    /// 1-based index of e_j.
    #[arg(long)]
    j: Option<usize>,
    /// Broom handle length.
    #[arg(long)]
    n: Option<usize>,
    /// Broom bristle count.
    #[arg(long)]
    k: Option<usize>,
    /// Extend the relation by this host graph.
    #[arg(long)]
    host: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum XRoute {
    Def,
    Delcon,
}

#[derive(Clone, Copy, ValueEnum)]
enum XbRoute {
    Def,
    Delcon,
    Contract,
    Connparts,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Mtilde,
    M,
    P,
    E,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Mtilde => Basis::MTilde,
            BasisArg::M => Basis::M,
            BasisArg::P => Basis::P,
            BasisArg::E => Basis::E,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationKind {
    OsPlus,
    Tri,
    Multi,
    Loop,
    Os,
    Cycle,
    TwoEdgeConnected,
    Broom,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuasiKind {
    Xq,
    Tq,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuasiRoute {
    Def,
    Connparts,
    Subsets,
}

/// A finished command: readable text, its JSON form, and whether it
/// succeeded (selfcheck can finish with failures).
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn new(text: String, json: impl Serialize) -> anyhow::Result<Outcome> {
        Ok(Outcome {
            text,
            json: serde_json::to_value(json)?,
            ok: true,
        })
    }
}

/// A malformed command line that clap cannot detect; exits with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    serde_json::from_str(&read_input(path)?).with_context(|| format!("invalid JSON in {}", path.display()))
}

fn read_graph(path: &Path) -> anyhow::Result<Multigraph> {
    Ok(read_json::<GraphJson>(path)?.to_graph()?)
}

/// A combination file, or a single graph read as the combination 1·G.
fn read_combination(path: &Path) -> anyhow::Result<GraphCombination> {
    let value: serde_json::Value = read_json(path)?;
    if value.get("terms").is_some() {
        Ok(serde_json::from_value::<CombinationJson>(value)?.to_combination()?)
    } else {
        let g = serde_json::from_value::<GraphJson>(value)?.to_graph()?;
        Ok(GraphCombination::single(g))
    }
}

fn parse_pi(n: usize, s: &str) -> anyhow::Result<SetPartition> {
    let blocks = s
        .split('|')
        .map(|b| {
            b.split(',')
                .map(|v| v.trim().parse::<usize>().map_err(|_| anyhow!("bad vertex {v:?} in partition")))
                .collect::<anyhow::Result<Vec<_>>>()
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(partition_from_json(n, &blocks)?)
}

fn symfunc_outcome(f: &SymFunc) -> anyhow::Result<Outcome> {
    Outcome::new(f.to_string(), SymFuncJson::from_symfunc(f))
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::X { graph, route, basis } => {
            let g = read_graph(graph)?;
            let f = match route {
                XRoute::Def => invariants::chromatic_sym(&g)?,
                XRoute::Delcon => invariants::chromatic_sym_delcon(&g)?,
            };
            symfunc_outcome(&f.to_basis((*basis).into())?)
        }
        Command::Xb {
            graph,
            route,
            basis,
            t_eval,
        } => {
            let g = read_graph(graph)?;
            let mut f = match route {
                XbRoute::Def => invariants::tutte_sym(&g)?,
                XbRoute::Delcon => invariants::tutte_sym_delcon(&g)?,
                XbRoute::Contract => invariants::tutte_from_contractions(&g)?,
                XbRoute::Connparts => invariants::tutte_from_connected_partitions(&g)?,
            };
            if let Some(r) = t_eval {
                f = f.specialize_t(&parse_rational(r)?);
            }
            symfunc_outcome(&f.to_basis((*basis).into())?)
        }
        Command::Sigma { graph, k, l } => {
            let g = read_graph(graph)?;
            let formula = invariants::sigma_l_formula(&g, *k, *l)?;
            let direct = invariants::sigma_l_direct(&g, *k, *l)?;
            let text = format!(
                "sigma_{l}([(1+t)^{k}] XB) = {formula}\ne-expansion gives {direct} ({})",
                if formula == direct { "agrees" } else { "MISMATCH" }
            );
            Outcome::new(
                text,
                json!({"k": k, "l": l, "formula": rational_json(&formula), "direct": rational_json(&direct)}),
            )
        }
        Command::Friendly { combination } => {
            let l = read_combination(combination)?;
            let f = l.is_tutte_friendly()?;
            let text = match &f {
                Friendliness::Friendly => "Tutte-friendly".to_string(),
                Friendliness::Violation { pi, a, value } => {
                    format!("not Tutte-friendly: B(L; {pi}) = {value}, first nonzero (1+t)^{a}")
                }
            };
            Outcome::new(text, FriendlinessJson::from_tutte(&f))
        }
        Command::Xfriendly { combination } => {
            let l = read_combination(combination)?;
            let f = l.is_x_friendly()?;
            let text = match &f {
                kernel::XFriendliness::Friendly => "X-friendly".to_string(),
                kernel::XFriendliness::Violation { pi, value } => {
                    format!("not X-friendly: C(L; {pi}) = {}", value)
                }
            };
            Outcome::new(text, FriendlinessJson::from_x(&f))
        }
        Command::Witness { combination, pi, a } => {
            let l = read_combination(combination)?;
            let (pi, least_a) = match pi {
                Some(p) => {
                    let pi = parse_pi(l.n(), p)?;
                    let powers = l.b_value(&pi)?.to_one_plus_t_powers();
                    let least = powers.iter().position(|c| !c.is_zero());
                    (pi, least)
                }
                None => match l.is_tutte_friendly()? {
                    Friendliness::Violation { pi, a, .. } => (pi, Some(a)),
                    Friendliness::Friendly => return Err(tuttekit::Error::NotFriendly.into()),
                },
            };
            let a = match (*a, least_a) {
                (Some(a), _) | (None, Some(a)) => a,
                (None, None) => bail!("B(L; {pi}) is zero"),
            };
            let g = kernel::witness_graph(&l, &pi, a)?;
            let check = kernel::verify_witness(&l, &pi, a, &g)?;
            let text = format!(
                "witness on [{}] with {} edges\n[(1+t)^{a} m~{}] XB(Ext(L; G)) = {} (expected {}): {}",
                g.n(),
                g.num_edges(),
                check.lambda_star,
                check.coefficient,
                check.expected,
                if check.is_certified() { "certified" } else { "NOT certified" }
            );
            Outcome::new(
                text,
                json!({
                    "pi": partition_json(&pi),
                    "a": a,
                    "graph": GraphJson::from_graph(&g),
                    "lambda_star": check.lambda_star.parts(),
                    "coefficient": rational_json(&check.coefficient),
                    "expected": rational_json(&check.expected),
                    "certified": check.is_certified(),
                }),
            )
        }
        Command::Reduce { combination } => {
            let l = read_combination(combination)?;
            let red = kernel::reduce_to_star_forests(&l)?;
            let mut text = String::new();
            if red.terms.is_empty() {
                text.push_str("0 (L is in the kernel)\n");
            }
            for t in &red.terms {
                text.push_str(&format!("{} (1+t)^{} R{}\n", t.c, t.k, t.lambda));
            }
            text.push_str(&format!("certificate: {} steps", red.certificate.len()));
            Outcome::new(text, ReductionJson::from_reduction(&red))
        }
        Command::Member { combination } => {
            let l = read_combination(combination)?;
            let member = kernel::kernel_membership(&l)?;
            let text = if member { "in Ker(XB)" } else { "not in Ker(XB)" };
            Outcome::new(text.to_string(), json!({ "member": member }))
        }
        Command::Relation(args) => relation(args),
        Command::ClassifyN4 => {
            let families = kernel::classify_n4()?;
            let text = families
                .iter()
                .map(|f| f.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("\n  "))
                .map(|f| format!("family:\n  {f}"))
                .collect::<Vec<_>>()
                .join("\n");
            let json: Vec<Vec<GraphJson>> = families
                .iter()
                .map(|f| f.iter().map(GraphJson::from_graph).collect())
                .collect();
            Outcome::new(text, json!({ "families": json }))
        }
        Command::Quasi {
            which,
            digraph,
            vars,
            route,
        } => {
            let d = read_json::<DigraphJson>(digraph)?.to_digraph()?;
            let vars = vars.unwrap_or(d.total_weight() as usize);
            let f = match (which, route) {
                (QuasiKind::Xq, QuasiRoute::Def) => quasi::xq(&d, vars)?,
                (QuasiKind::Xq, _) => return Err(usage("xq has only the def route")),
                (QuasiKind::Tq, QuasiRoute::Def) => quasi::tq(&d, vars)?,
                (QuasiKind::Tq, QuasiRoute::Connparts) => quasi::tq_from_connected_partitions(&d, vars)?,
                (QuasiKind::Tq, QuasiRoute::Subsets) => quasi::tq_from_arc_subsets(&d, vars)?,
            };
            Outcome::new(f.to_string(), QFuncJson::from_qfunc(&f))
        }
        Command::Selfcheck { only } => {
            let ids: Vec<u8> = selfcheck::suites().iter().map(|s| s.0).collect();
            if let Some(bad) = only.iter().find(|i| !ids.contains(i)) {
                return Err(usage(format!("no suite {bad}; suites are 1..={}", ids.len())));
            }
            let mut lines = Vec::new();
            let mut reports = Vec::new();
            let mut ok = true;
            for (id, _, suite) in selfcheck::suites() {
                if !only.is_empty() && !only.contains(&id) {
                    continue;
                }
                let r = suite();
                ok &= r.passed();
                lines.push(r.line());
                reports.push(json!({
                    "id": r.id,
                    "name": r.name,
                    "passed": r.passed(),
                    "checked": r.checked,
                    "failed": r.failed,
                    "failures": r.failures,
                    "elapsed_ms": r.elapsed.as_millis() as u64,
                }));
            }
            Ok(Outcome {
                text: lines.join("\n"),
                json: json!({ "passed": ok, "suites": reports }),
                ok,
            })
        }
    }
}

fn relation(args: &RelationArgs) -> anyhow::Result<Outcome> {
    let one_based = |name: &str, v: Option<usize>| -> anyhow::Result<usize> {
        match v {
            Some(v) if v >= 1 => Ok(v - 1),
            Some(_) => Err(usage(format!("--{name} is 1-based"))),
            None => Err(usage(format!("--{name} is required"))),
        }
    };
    let l = match args.kind {
        RelationKind::OsPlus => kernel::ell_os_plus(),
        RelationKind::Tri => kernel::ell_tri(),
        RelationKind::Multi => kernel::ell_multi(),
        RelationKind::Loop => kernel::ell_loop(),
        RelationKind::Os => kernel::ell_os(),
        RelationKind::Cycle => {
            let g = read_graph(args.graph.as_deref().ok_or_else(|| usage("--graph is required"))?)?;
            let cycle = args
                .cycle
                .iter()
                .map(|&v| v.checked_sub(1).ok_or_else(|| usage("--cycle is 1-based")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            kernel::cycle_relation(&g, &cycle, one_based("i", args.i)?, one_based("j", args.j)?)?
        }
        RelationKind::TwoEdgeConnected => {
            let g = read_graph(args.graph.as_deref().ok_or_else(|| usage("--graph is required"))?)?;
            kernel::two_edge_connected_relation(&g, one_based("i", args.i)?, one_based("j", args.j)?)?
        }
        RelationKind::Broom => {
            let n = args.n.ok_or_else(|| usage("--n is required"))?;
            let k = args.k.ok_or_else(|| usage("--k is required"))?;
            kernel::broom_relation(n, k)?
        }
    };
    let l = match &args.host {
        Some(host) => l.extend(&read_graph(host)?)?,
        None => l,
    };
    Outcome::new(l.to_string(), CombinationJson::from_combination(&l))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let pretty = serde_json::to_string_pretty(&outcome.json).expect("values serialize");
            if let Some(path) = &cli.output {
                if let Err(e) = fs::write(path, format!("{pretty}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            let shown = if cli.json { pretty } else { outcome.text };
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{shown}") {
                // A closed pipe (e.g. `| head`) is not an error worth reporting.
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
