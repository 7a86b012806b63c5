use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use altpower::bounds::{
    connectivity_condition, diam8_condition, diameter_bounds, lower_bound_witness, verify_witness,
};
use altpower::graph::{
    estimate_index_bytes, Direction, Distance, GraphError, PowerGraph, DEFAULT_BFS_CUTOFF,
};
use altpower::notation::parse_cycles;
use altpower::perm::Permutation;
use altpower::sample::even_pairs;
use altpower::synth::{path_any_with, shortcut, PathOptions, PathWitness, SynthError, MIN_DEGREE};

#[derive(Parser)]
#[command(
    name = "altpower",
    version,
    about = "Certified paths in proper power graphs of alternating groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize and validate a path between two elements of A_n
    Path {
        n: usize,
        from: String,
        to: String,
        /// Replace detours by direct edges where possible
        #[arg(long)]
        shortcut: bool,
        /// Attempt degrees outside the proven range
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact distances, diameter or components by breadth-first search
    Exact {
        n: usize,
        from: Option<String>,
        to: Option<String>,
        #[arg(long)]
        diameter: bool,
        #[arg(long)]
        components: bool,
        /// Largest degree the index may be built for
        #[arg(long, default_value_t = DEFAULT_BFS_CUTOFF)]
        cutoff: usize,
        #[arg(long)]
        json: bool,
    },
    /// Diameter bounds, optionally with the lower-bound witness pair
    Bounds {
        n: usize,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Synthesize and validate paths for seeded random pairs
    Audit {
        n: usize,
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
}

const EXIT_INPUT: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;
const EXIT_BOUND: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

/// What a command prints on success, plus its exit code.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

/// Runs the command line `args` (program name first) without touching the process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code() as u8;
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    let json = match &cli.command {
        Command::Path { json, .. }
        | Command::Exact { json, .. }
        | Command::Bounds { json, .. }
        | Command::Audit { json, .. } => *json,
    };
    let mut stderr = String::new();
    let result = match cli.command {
        Command::Path {
            n,
            from,
            to,
            shortcut,
            force,
            ..
        } => cmd_path(n, &from, &to, shortcut, force),
        Command::Exact {
            n,
            from,
            to,
            diameter,
            components,
            cutoff,
            ..
        } => cmd_exact(
            n,
            from.as_deref(),
            to.as_deref(),
            diameter,
            components,
            cutoff,
            &mut stderr,
        ),
        Command::Bounds { n, witness, .. } => Ok(cmd_bounds(n, witness)),
        Command::Audit {
            n,
            pairs,
            seed,
            force,
            ..
        } => cmd_audit(n, pairs, seed, force),
    };
    match result {
        Ok(out) => {
            let stdout = if json {
                serde_json::to_string_pretty(&out.json).expect("json") + "\n"
            } else {
                out.text
            };
            Outcome {
                stdout,
                stderr,
                code: out.code,
            }
        }
        Err(f) => {
            if json {
                let stdout = json!({ "error": f.message, "exit_code": f.code }).to_string() + "\n";
                Outcome {
                    stdout,
                    stderr,
                    code: f.code,
                }
            } else {
                stderr.push_str(&format!("error: {}\n", f.message));
                Outcome {
                    stdout: String::new(),
                    stderr,
                    code: f.code,
                }
            }
        }
    }
}

fn parse(text: &str, n: usize) -> Result<Permutation, Failure> {
    parse_cycles(text, n).map_err(|e| Failure::new(EXIT_INPUT, format!("{text:?}: {e}")))
}

fn synth_failure(e: SynthError, proven: bool) -> Failure {
    let code = match &e {
        SynthError::Identity | SynthError::Odd(_) | SynthError::Perm(_) => EXIT_INPUT,
        SynthError::Hypothesis { .. } | SynthError::DegreeTooSmall { .. } => EXIT_HYPOTHESIS,
        _ if !proven => EXIT_HYPOTHESIS,
        _ => EXIT_BOUND,
    };
    Failure::new(code, e)
}

fn proven(n: usize) -> bool {
    n >= MIN_DEGREE && connectivity_condition(n)
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n < 3 {
        return Err(Failure::new(
            EXIT_INPUT,
            format!("degree must be at least 3, got {n}"),
        ));
    }
    Ok(())
}

fn edge_note(w: &PathWitness, i: usize) -> String {
    let c = &w.certificates[i];
    match c.direction {
        Direction::SecondIsPowerOfFirst => format!("v{} = v{}^{}", i + 1, i, c.exponent),
        Direction::FirstIsPowerOfSecond => format!("v{} = v{}^{}", i, i + 1, c.exponent),
    }
}

fn cmd_path(n: usize, from: &str, to: &str, short: bool, force: bool) -> Result<Output, Failure> {
    check_n(n)?;
    let (x, y) = (parse(from, n)?, parse(to, n)?);
    let proven = proven(n);
    let mut w =
        path_any_with(&x, &y, n, &PathOptions { force }).map_err(|e| synth_failure(e, proven))?;
    if short {
        w = shortcut(&w).map_err(|e| synth_failure(e, proven))?;
    }
    w.validate().map_err(|e| Failure::new(EXIT_BOUND, e))?;
    let mut text = String::new();
    writeln!(text, "n: {n}").unwrap();
    writeln!(text, "length: {}", w.len()).unwrap();
    writeln!(text, "bound: {} ({:?})", w.declared_bound, w.lemma_tag).unwrap();
    writeln!(text, "case: {}", w.case).unwrap();
    if w.best_effort {
        writeln!(text, "best effort: degree outside the proven range").unwrap();
    }
    for (i, v) in w.vertices.iter().enumerate() {
        writeln!(text, "v{i}  {v}").unwrap();
        if i < w.len() {
            writeln!(text, "      {}", edge_note(&w, i)).unwrap();
        }
    }
    let mut json = w.to_json();
    json["case"] = w.case.clone().into();
    Ok(Output {
        text,
        json,
        code: 0,
    })
}

fn graph_failure(e: GraphError) -> Failure {
    match e {
        GraphError::CutoffExceeded { .. } => Failure::new(EXIT_HYPOTHESIS, e),
        _ => Failure::new(EXIT_INPUT, e),
    }
}

fn cmd_exact(
    n: usize,
    from: Option<&str>,
    to: Option<&str>,
    diameter: bool,
    components: bool,
    cutoff: usize,
    stderr: &mut String,
) -> Result<Output, Failure> {
    check_n(n)?;
    let pair = match (from, to) {
        (Some(a), Some(b)) => Some((parse(a, n)?, parse(b, n)?)),
        (None, None) => None,
        _ => return Err(Failure::new(EXIT_INPUT, "give both endpoints or neither")),
    };
    if pair.is_none() && !diameter && !components {
        return Err(Failure::new(
            EXIT_INPUT,
            "nothing to do: give endpoints, --diameter or --components",
        ));
    }
    if n <= cutoff {
        let mib = estimate_index_bytes(n) as f64 / (1 << 20) as f64;
        writeln!(stderr, "index estimate: {mib:.1} MiB").unwrap();
    }
    let g = PowerGraph::build_with_cutoff(n, cutoff).map_err(graph_failure)?;
    let mut text = String::new();
    let mut json = json!({ "n": n });
    if let Some((x, y)) = pair {
        let d = g.bfs_distance(&x, &y).map_err(graph_failure)?;
        match &d.distance {
            Distance::Finite(k) => {
                writeln!(text, "distance: {k}").unwrap();
                json["distance"] = (*k).into();
            }
            Distance::Unreachable => {
                writeln!(text, "distance: unreachable").unwrap();
                json["distance"] = Value::Null;
            }
        }
        let path: Vec<String> = d.path.iter().flatten().map(ToString::to_string).collect();
        for (i, v) in path.iter().enumerate() {
            writeln!(text, "v{i}  {v}").unwrap();
        }
        json["from"] = x.to_string().into();
        json["to"] = y.to_string().into();
        json["path"] = path.into();
    }
    if diameter || components {
        let report = g.components();
        let connected = report.components.len() == 1;
        let max_diam = report
            .components
            .iter()
            .map(|c| c.diameter)
            .max()
            .unwrap_or(0);
        if diameter {
            if connected {
                writeln!(text, "diameter: {max_diam}").unwrap();
            } else {
                writeln!(
                    text,
                    "diameter: infinite ({} components, largest component diameter {max_diam})",
                    report.components.len()
                )
                .unwrap();
            }
            json["connected"] = connected.into();
            json["diameter"] = if connected {
                max_diam.into()
            } else {
                Value::Null
            };
            json["max_component_diameter"] = max_diam.into();
        }
        if components {
            writeln!(text, "vertices: {}", report.vertices).unwrap();
            writeln!(text, "components: {}", report.components.len()).unwrap();
            writeln!(text, "{:>10}  {:>8}  representative", "size", "diameter").unwrap();
            for c in &report.components {
                writeln!(
                    text,
                    "{:>10}  {:>8}  {}",
                    c.size, c.diameter, c.representative
                )
                .unwrap();
            }
            json["components"] = serde_json::to_value(&report).expect("json");
        }
    }
    Ok(Output {
        text,
        json,
        code: 0,
    })
}

fn cmd_bounds(n: usize, witness: bool) -> Output {
    let mut report = diameter_bounds(n);
    let mut text = String::new();
    writeln!(text, "n: {n}").unwrap();
    writeln!(
        text,
        "connectivity hypothesis: {}",
        report.connected_hypothesis
    )
    .unwrap();
    match report.p_prime {
        Some(p) => writeln!(
            text,
            "diam-8 hypothesis: {} (p' = {p})",
            report.diam8_hypothesis
        )
        .unwrap(),
        None => writeln!(text, "diam-8 hypothesis: {}", report.diam8_hypothesis).unwrap(),
    }
    match (report.lower, report.upper) {
        (Some(lo), Some(hi)) => writeln!(text, "bounds: {lo} <= diam <= {hi}").unwrap(),
        _ => writeln!(text, "bounds: none").unwrap(),
    }
    if let Some(note) = &report.note {
        writeln!(text, "note: {note}").unwrap();
    }
    let mut checks = None;
    if witness {
        if let Ok((x, y)) = lower_bound_witness(n) {
            let c = verify_witness(&x, &y, n).expect("same degree");
            writeln!(text, "witness x: {x}").unwrap();
            writeln!(text, "witness y: {y}").unwrap();
            writeln!(text, "supports overlap: {}", c.supports_overlap).unwrap();
            writeln!(text, "commute: {}", c.commute).unwrap();
            writeln!(
                text,
                "common fixed points empty: {}",
                c.common_fixed_points_empty
            )
            .unwrap();
            writeln!(text, "same cyclic subgroup: {}", c.same_cyclic_subgroup).unwrap();
            writeln!(text, "prime order equal: {}", c.prime_order_equal).unwrap();
            writeln!(text, "distance >= 6: {}", c.conclusion_d_ge_6).unwrap();
            report.witness_pair = Some((x.to_string(), y.to_string()));
            checks = Some(c);
        } else {
            writeln!(text, "witness: unavailable").unwrap();
        }
    }
    let mut json = serde_json::to_value(&report).expect("json");
    if let Some(c) = checks {
        json["witness_checks"] = serde_json::to_value(c).expect("json");
    }
    Output {
        text,
        json,
        code: 0,
    }
}

fn cmd_audit(n: usize, pairs: usize, seed: u64, force: bool) -> Result<Output, Failure> {
    check_n(n)?;
    let proven = proven(n);
    if !proven && !force {
        let e = if n < MIN_DEGREE {
            SynthError::DegreeTooSmall { n, min: MIN_DEGREE }
        } else {
            SynthError::Hypothesis { n }
        };
        return Err(Failure::new(EXIT_HYPOTHESIS, e));
    }
    let cap = if n >= 5 && diam8_condition(n) { 8 } else { 11 };
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    for (i, (x, y)) in even_pairs(n, pairs, seed).into_iter().enumerate() {
        let outcome =
            path_any_with(&x, &y, n, &PathOptions { force }).and_then(|w| w.validate().map(|()| w));
        match outcome {
            Ok(w) if w.len() <= cap => *histogram.entry(w.len()).or_default() += 1,
            Ok(w) => failures.push((i, format!("length {} exceeds {cap}", w.len()))),
            Err(e) => failures.push((i, e.to_string())),
        }
    }
    let max = histogram.keys().next_back().copied();
    let mut text = String::new();
    writeln!(text, "n: {n}  pairs: {pairs}  seed: {seed}").unwrap();
    writeln!(text, "bound: {cap}").unwrap();
    if !proven {
        writeln!(text, "best effort: degree outside the proven range").unwrap();
    }
    writeln!(text, "length  count").unwrap();
    for (len, count) in &histogram {
        writeln!(text, "{len:>6}  {count}").unwrap();
    }
    match max {
        Some(m) => writeln!(text, "max: {m}").unwrap(),
        None => writeln!(text, "max: none").unwrap(),
    }
    writeln!(text, "failures: {}", failures.len()).unwrap();
    for (i, msg) in &failures {
        writeln!(text, "  pair {i}: {msg}").unwrap();
    }
    let json = json!({
        "n": n,
        "pairs": pairs,
        "seed": seed,
        "bound": cap,
        "best_effort": !proven,
        "histogram": histogram.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>(),
        "max": max,
        "failures": failures.iter().map(|(i, m)| json!({ "pair": i, "error": m })).collect::<Vec<_>>(),
    });
    let code = match (failures.is_empty(), proven) {
        (true, _) => 0,
        (false, true) => EXIT_BOUND,
        (false, false) => EXIT_HYPOTHESIS,
    };
    Ok(Output { text, json, code })
}
