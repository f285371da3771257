use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyperca::constructors::{
    construct_acyclic, construct_auto, construct_cycle3, construct_loose_cycle, Builder,
};
use hyperca::error::Error;
use hyperca::format::{emit_array, emit_hypergraph, parse_array, parse_hypergraph};
use hyperca::model::{VertexId, WeightedHypergraph};
use hyperca::ops::{apply_sequence, parse_steps};
use hyperca::oracle::{min_array, DEFAULT_ORACLE_BUDGET};
use hyperca::structure::{
    complete_uniform, gyo_reduce, is_conformal, recognize_five_vertex_cycle, recognize_loose_cycle,
};
use hyperca::verify::verify_covering_array;

/// Optimal mixed covering arrays of strength 3 on weighted hypergraphs.
#[derive(Parser)]
#[command(name = "hyperca", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an array of size PW(H) and print it.
    Build {
        model: PathBuf,
        #[command(flatten)]
        route: Route,
        /// Shuffle columns with this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Re-verify the result, including row balance, before printing.
        #[arg(long)]
        balanced_check: bool,
    },
    /// Check that an array covers every hyperedge of a model.
    Verify {
        model: PathBuf,
        array: PathBuf,
        /// Also require every row to be balanced.
        #[arg(long)]
        balanced: bool,
    },
    /// Report structural properties and the applicable construction.
    Classify { model: PathBuf },
    /// Search for the smallest array size by exhaustive search.
    Oracle {
        model: PathBuf,
        /// Give up above this size.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u64,
    },
    /// Print a model from a built-in family.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Apply a file of hook steps to an array and print the result.
    Script {
        model: PathBuf,
        steps: PathBuf,
        /// Starting array; built automatically from the model if omitted.
        #[arg(long)]
        array: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct Route {
    #[arg(long)]
    auto: bool,
    #[arg(long)]
    acyclic: bool,
    #[arg(long)]
    loose_cycle: bool,
    #[arg(long)]
    cycle3: bool,
}

#[derive(Subcommand)]
enum Family {
    /// Complete 3-uniform hypergraph on vertices 1..=k.
    Complete {
        k: usize,
        /// Comma-separated weights, one per vertex, or a single weight for all.
        #[arg(long, default_value = "2")]
        weights: String,
    },
    /// Loose cycle of length k: shared vertices 1..=k, private k+1..=2k.
    LooseCycle {
        k: usize,
        #[arg(long, default_value = "2")]
        weights: String,
    },
    /// The acyclic six-vertex example.
    H1 {
        #[arg(long, default_value = "2")]
        weights: String,
    },
    /// The cyclic six-vertex example.
    H2 {
        #[arg(long, default_value = "2")]
        weights: String,
    },
    /// Three hyperedges on five vertices with weights 10, 8, 5, 2, 18.
    Fig4,
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unsupported(_) => 3,
            Error::BudgetExceeded(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_model(path: &Path) -> Result<WeightedHypergraph, Failure> {
    parse_hypergraph(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn weights(spec: &str, count: usize) -> Result<Vec<u32>, Failure> {
    let parsed: Vec<u32> = spec
        .split(',')
        .map(|w| w.trim().parse().ok().filter(|&w| w > 0))
        .collect::<Option<_>>()
        .ok_or_else(|| input_error(format!("bad weight list `{spec}`")))?;
    match parsed.len() {
        1 => Ok(vec![parsed[0]; count]),
        n if n == count => Ok(parsed),
        n => Err(input_error(format!(
            "expected 1 or {count} weights, got {n}"
        ))),
    }
}

fn from_edges(
    ws: &[u32],
    first: VertexId,
    edges: &[&[VertexId]],
) -> Result<WeightedHypergraph, Failure> {
    let vertices = ws
        .iter()
        .enumerate()
        .map(|(i, &w)| (first + i as VertexId, w));
    Ok(WeightedHypergraph::new(
        vertices,
        edges.iter().map(|e| e.to_vec()),
    )?)
}

fn generate(family: &Family) -> Result<WeightedHypergraph, Failure> {
    match family {
        Family::Complete { k, weights: w } => Ok(complete_uniform(*k, 3, &weights(w, *k)?)?),
        Family::LooseCycle { k, weights: w } => {
            let k = *k as VertexId;
            if k < 3 {
                return Err(input_error("a loose cycle needs k >= 3".into()));
            }
            let ws = weights(w, 2 * k as usize)?;
            let edges: Vec<Vec<VertexId>> = (1..=k).map(|i| vec![i, k + i, i % k + 1]).collect();
            let refs: Vec<&[VertexId]> = edges.iter().map(Vec::as_slice).collect();
            from_edges(&ws, 1, &refs)
        }
        Family::H1 { weights: w } => from_edges(
            &weights(w, 6)?,
            1,
            &[&[1, 2, 3], &[1, 3, 4], &[1, 2, 6], &[2, 3, 5]],
        ),
        Family::H2 { weights: w } => from_edges(
            &weights(w, 6)?,
            1,
            &[&[1, 2, 3], &[1, 3, 4], &[2, 4, 5], &[4, 5, 6]],
        ),
        Family::Fig4 => from_edges(&[10, 8, 5, 2, 18], 0, &[&[0, 1, 2], &[1, 2, 3], &[3, 4, 0]]),
    }
}

fn classify(h: &WeightedHypergraph) -> String {
    let mut out = String::new();
    let pw = h.max_edge_product();
    writeln!(out, "vertices {}", h.vertex_count()).unwrap();
    writeln!(out, "edges {}", h.edges().len()).unwrap();
    writeln!(out, "three-uniform {}", h.is_three_uniform()).unwrap();
    match pw {
        Some(pw) => writeln!(out, "pw {pw}").unwrap(),
        None => writeln!(out, "pw none").unwrap(),
    }
    let trace = gyo_reduce(h);
    writeln!(out, "alpha-acyclic {}", trace.is_empty_residual()).unwrap();
    if !trace.is_empty_residual() {
        let residual: Vec<String> = trace
            .residual()
            .iter()
            .map(|(i, _)| i.to_string())
            .collect();
        writeln!(out, "gyo-residual-edges {}", residual.join(" ")).unwrap();
    }
    match is_conformal(h) {
        Ok(c) => writeln!(out, "conformal {c}").unwrap(),
        Err(e) => writeln!(out, "conformal unknown ({e})").unwrap(),
    }
    match recognize_loose_cycle(h) {
        Some(c) => writeln!(out, "loose-cycle {}", c.len()).unwrap(),
        None => writeln!(out, "loose-cycle false").unwrap(),
    }
    match recognize_five_vertex_cycle(h) {
        Some(c) => {
            let v: Vec<String> = c.v.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "cycle3 {} seed-attains-pw={} divisible={} bounded={}",
                v.join(","),
                c.conditions.seed_attains_pw,
                c.conditions.divisible,
                c.conditions.bounded
            )
            .unwrap();
        }
        None => writeln!(out, "cycle3 false").unwrap(),
    }
    let builders: [(&str, Builder); 3] = [
        ("acyclic", construct_acyclic),
        ("loose-cycle", construct_loose_cycle),
        ("cycle3", construct_cycle3),
    ];
    let route = builders
        .iter()
        .find(|(_, build)| build(h, None).is_ok())
        .map_or("none", |(name, _)| name);
    writeln!(out, "construction {route}").unwrap();
    out
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Build {
            model,
            route,
            seed,
            balanced_check,
        } => {
            let h = load_model(&model)?;
            let build: Builder = if route.acyclic {
                construct_acyclic
            } else if route.loose_cycle {
                construct_loose_cycle
            } else if route.cycle3 {
                construct_cycle3
            } else {
                construct_auto
            };
            let ca = build(&h, seed)?;
            if balanced_check {
                let report = verify_covering_array(&ca, true);
                if !report.ok() {
                    return Err(Failure {
                        code: 1,
                        message: format!("built array failed verification: {report:?}"),
                    });
                }
                eprintln!("verified: balanced, n={}", ca.size());
            }
            Ok(emit_array(&ca))
        }
        Command::Verify {
            model,
            array,
            balanced,
        } => {
            let h = load_model(&model)?;
            let ca = parse_array(&read(&array)?, &h)
                .map_err(|e| input_error(format!("{}: {e}", array.display())))?;
            let report = verify_covering_array(&ca, balanced);
            if report.ok() {
                Ok(format!("ok n={} k={}\n", ca.size(), ca.row_count()))
            } else {
                Err(Failure {
                    code: 1,
                    message: format!("verification failed: {report:?}"),
                })
            }
        }
        Command::Classify { model } => Ok(classify(&load_model(&model)?)),
        Command::Oracle {
            model,
            max_n,
            budget,
        } => {
            let h = load_model(&model)?;
            let pw = h.max_edge_product().ok_or(Error::Edgeless)?;
            match min_array(&h, max_n, budget)? {
                Some(ca) => Ok(format!(
                    "# min_can {} pw {pw}\n{}",
                    ca.size(),
                    emit_array(&ca)
                )),
                None => Err(Failure {
                    code: 1,
                    message: format!("no array with {pw} <= n <= {}", max_n.unwrap_or(0)),
                }),
            }
        }
        Command::Gen { family } => Ok(emit_hypergraph(&generate(&family)?)),
        Command::Script {
            model,
            steps,
            array,
        } => {
            let h = load_model(&model)?;
            let ca = match array {
                Some(path) => parse_array(&read(&path)?, &h)
                    .map_err(|e| input_error(format!("{}: {e}", path.display())))?,
                None => construct_auto(&h, None)?,
            };
            let steps = parse_steps(&read(&steps)?)
                .map_err(|e| input_error(format!("{}: {e}", steps.display())))?;
            Ok(emit_array(&apply_sequence(&ca, &steps)?))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
