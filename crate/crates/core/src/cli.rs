//! Command-line front end. [`run`] parses arguments, dispatches and returns
//! the process exit code: 0 on success, 1 on input or usage errors and 2 when
//! a mathematical verification fails.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::census::{check_optimality_theorems, enumerate_solutions_capped, CheckOutcome, TheoremOptions, DEFAULT_CENSUS_CAP};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::{Graph, VertexSet};
use crate::ics::{build_ics, evaluate_ics, validity_crossover};
use crate::io::{read_graph, read_vector};
use crate::lcp::{is_stationary_point, potential, verify_ics, verify_solution, LcpInstance, Verdict, DEFAULT_TOL};
use crate::thresholds::{gamma, ThresholdReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

/// A δ argument: a positive decimal or a token resolved against the graph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DeltaArg {
    Value(f64),
    /// `(√5 − 1) / 2`
    Golden,
    Gamma,
    Eta,
}

impl FromStr for DeltaArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "golden" => Ok(DeltaArg::Golden),
            "gamma" => Ok(DeltaArg::Gamma),
            "eta" => Ok(DeltaArg::Eta),
            t => match t.parse::<f64>() {
                Ok(v) if v > 0.0 && v.is_finite() => Ok(DeltaArg::Value(v)),
                _ => Err(format!("expected a positive number, 'golden', 'gamma' or 'eta', got '{t}'")),
            },
        }
    }
}

impl DeltaArg {
    pub fn resolve(self, g: &Graph) -> Result<f64> {
        match self {
            DeltaArg::Value(v) => Ok(v),
            DeltaArg::Golden => Ok((5f64.sqrt() - 1.0) / 2.0),
            DeltaArg::Gamma => gamma(g),
            DeltaArg::Eta => ThresholdReport::compute(g)?.eta.ok_or(Error::NoEdges),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "graph-lcp", version, about = "Perturbed graph LCP toolkit")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,
    /// Verification tolerance
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

/// Every `GRAPH` argument is a file path (edge list or JSON) or
/// `fixture:NAME` for a built-in graph such as `fixture:P4`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print α, ω, γ, κ, η and the uniqueness threshold
    Thresholds { graph: String },
    /// Build the independent clique solution and verify it
    Ics {
        graph: String,
        #[arg(long)]
        delta: DeltaArg,
        /// Maximum independent set to anchor on, e.g. "1,3"
        #[arg(long)]
        mis: Option<String>,
    },
    /// Enumerate every solution
    Census {
        graph: String,
        #[arg(long)]
        delta: DeltaArg,
        /// File with one weight per line
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CENSUS_CAP)]
        cap: usize,
    },
    /// Check a vector against the LCP conditions
    Verify {
        graph: String,
        /// File with one coordinate per line
        vector: PathBuf,
        #[arg(long)]
        delta: DeltaArg,
    },
    /// Evaluate the potential and stationarity of a vector
    Potential {
        graph: String,
        vector: PathBuf,
        #[arg(long)]
        delta: DeltaArg,
    },
    /// Reproduce the worked tightness examples
    PaperExamples,
    /// Check the optimality theorems on seeded random graphs
    RandomCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random graphs
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Edge probability
        #[arg(long, default_value_t = 0.4)]
        p: f64,
        #[arg(long, default_value_t = DEFAULT_CENSUS_CAP)]
        cap: usize,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let msg = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(msg.as_bytes()) } else { err.write_all(msg.as_bytes()) };
            return code;
        }
    };
    match execute(&config) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Loads `fixture:NAME` from the built-in set, otherwise reads a file.
pub fn load_graph(arg: &str) -> Result<Graph> {
    match arg.strip_prefix("fixture:") {
        Some(name) => fixtures::standard()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, g)| g)
            .ok_or_else(|| Error::Precondition(format!("unknown fixture '{name}'"))),
        None => read_graph(arg),
    }
}

fn parse_mis(s: &str) -> Result<VertexSet> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse { line: 1, msg: format!("bad vertex '{t}' in --mis") })
        })
        .collect()
}

fn instance(g: Graph, delta: DeltaArg, tol: f64) -> Result<LcpInstance> {
    let d = delta.resolve(&g)?;
    LcpInstance::new(g, d)?.with_tol(tol)
}

fn fmt_real(v: f64) -> String {
    if v == f64::INFINITY {
        "+inf".into()
    } else if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{v:.12}")
    }
}

fn fmt_vec(x: &[f64]) -> String {
    let parts: Vec<String> = x.iter().map(|v| format!("{v:.9}")).collect();
    format!("({})", parts.join(", "))
}

fn render_verdict(v: &Verdict) -> String {
    if v.is_valid() {
        return "verdict: valid\n".into();
    }
    let mut s = String::from("verdict: INVALID\n");
    for viol in &v.violations {
        let _ = writeln!(s, "  vertex {:>3}  {:<16} residual {:.3e}", viol.vertex, viol.condition.describe(), viol.residual);
    }
    s
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("JSON value is serializable") + "\n"
}

fn execute(cfg: &RunConfig) -> Result<(String, i32)> {
    let tol = cfg.tol;
    let json = cfg.format == Format::Json;
    match &cfg.command {
        Command::Thresholds { graph } => {
            let r = ThresholdReport::compute(&load_graph(graph)?)?;
            if json {
                return Ok((pretty(serde_json::to_value(&r)?), EXIT_OK));
            }
            let undefined = "undefined (omega <= 1)".to_string();
            let mut s = String::new();
            let _ = writeln!(s, "alpha                 {}", r.alpha);
            let _ = writeln!(s, "omega                 {}", r.omega);
            let _ = writeln!(s, "gamma                 {}", r.gamma.map_or(undefined.clone(), fmt_real));
            let _ = writeln!(s, "kappa                 {}", fmt_real(r.kappa));
            let _ = writeln!(s, "eta                   {}", r.eta.map_or(undefined, fmt_real));
            let _ = writeln!(s, "uniqueness threshold  {}", fmt_real(r.uniqueness_threshold));
            Ok((s, EXIT_OK))
        }
        Command::Ics { graph, delta, mis } => {
            let inst = instance(load_graph(graph)?, *delta, tol)?;
            let mis = mis.as_deref().map(parse_mis).transpose()?;
            let (cover, trace) = build_ics(inst.graph(), mis.as_ref())?;
            let sol = evaluate_ics(&cover, &inst)?;
            let verdict = verify_solution(&inst, sol.x())?;
            let valid = verify_ics(&inst, sol.x())?;
            let code = if valid { EXIT_OK } else { EXIT_VERIFY };
            if json {
                let v = json!({
                    "delta": inst.delta(),
                    "trace": trace,
                    "cover": cover,
                    "solution": sol.record(),
                    "verdict": verdict,
                    "valid": valid,
                });
                return Ok((pretty(v), code));
            }
            let mut s = trace.render();
            let cliques: Vec<String> = cover.cliques().iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "delta  {}", fmt_real(inst.delta()));
            let _ = writeln!(s, "cover  {}", cliques.join(" "));
            let _ = writeln!(s, "x      {}", fmt_vec(sol.x()));
            let _ = writeln!(s, "l1     {:.9}", sol.l1());
            s.push_str(&render_verdict(&verdict));
            Ok((s, code))
        }
        Command::Census { graph, delta, weights, cap } => {
            let inst = instance(load_graph(graph)?, *delta, tol)?;
            let w = weights.as_ref().map(read_vector).transpose()?;
            let census = enumerate_solutions_capped(&inst, w.as_deref(), *cap)?;
            if json {
                return Ok((census.to_json_pretty() + "\n", EXIT_OK));
            }
            let d = census.diagnostics();
            let mut s = String::new();
            let _ = writeln!(s, "delta {}  n {}  supports: {} nonsingular, {} singular faces, {} infeasible",
                fmt_real(inst.delta()), inst.n(), d.nonsingular, d.singular_face, d.infeasible);
            let _ = writeln!(s, "{:>4}  {:<24} {:>12} {:>12}  ics", "#", "support", "l1", "weighted");
            for (k, sv) in census.solutions().iter().enumerate() {
                let ics = verify_ics(&inst, sv.x())?;
                let _ = writeln!(s, "{:>4}  {:<24} {:>12.9} {:>12.9}  {}", k, sv.support().to_string(), sv.l1(),
                    sv.weighted_value(census.weights()), if ics { "yes" } else { "no" });
            }
            for (label, m) in [("maxSOL", census.max_sol()), ("maxICS", census.max_ics())] {
                match m {
                    Some(m) => {
                        let _ = writeln!(s, "{label}  {:.9}  witness #{} {}", m.value, m.witness, fmt_vec(census.solutions()[m.witness].x()));
                    }
                    None => {
                        let _ = writeln!(s, "{label}  none");
                    }
                }
            }
            let ints: Vec<String> = census.integer_solutions().iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "integer solutions  {}", if ints.is_empty() { "none".into() } else { ints.join(" ") });
            for f in census.singular_faces() {
                let _ = writeln!(s, "singular face  {f}  (every point is a solution; vertices listed above)");
            }
            Ok((s, EXIT_OK))
        }
        Command::Verify { graph, vector, delta } => {
            let inst = instance(load_graph(graph)?, *delta, tol)?;
            let x = read_vector(vector)?;
            let verdict = verify_solution(&inst, &x)?;
            let code = if verdict.is_valid() { EXIT_OK } else { EXIT_VERIFY };
            if json {
                return Ok((pretty(json!({ "delta": inst.delta(), "valid": verdict.is_valid(), "verdict": verdict })), code));
            }
            Ok((render_verdict(&verdict), code))
        }
        Command::Potential { graph, vector, delta } => {
            let inst = instance(load_graph(graph)?, *delta, tol)?;
            let x = read_vector(vector)?;
            let phi = potential(&inst, &x)?;
            let stationary = is_stationary_point(&inst, &x)?;
            if json {
                return Ok((pretty(json!({ "delta": inst.delta(), "potential": phi, "stationary": stationary })), EXIT_OK));
            }
            Ok((format!("potential   {phi:.12}\nstationary  {}\n", if stationary { "yes" } else { "no" }), EXIT_OK))
        }
        Command::PaperExamples => {
            let rows = paper_examples()?;
            let ok = rows.iter().all(|r| r.pass);
            let code = if ok { EXIT_OK } else { EXIT_VERIFY };
            if json {
                let v: Vec<_> = rows.iter().map(|r| json!({"check": r.check, "expected": r.expected, "observed": r.observed, "pass": r.pass})).collect();
                return Ok((pretty(json!(v)), code));
            }
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(s, "[{}] {:<44} expected {:<28} observed {}", if r.pass { "PASS" } else { "FAIL" }, r.check, r.expected, r.observed);
            }
            Ok((s, code))
        }
        Command::RandomCheck { seed, trials, max_n, p, cap } => random_check(*seed, *trials, *max_n, *p, *cap, tol, json),
    }
}

/// One line of the worked-examples table.
#[derive(Clone, Debug)]
pub struct ExampleRow {
    pub check: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

fn row(check: impl Into<String>, expected: impl Into<String>, observed: impl Into<String>, pass: bool) -> ExampleRow {
    ExampleRow { check: check.into(), expected: expected.into(), observed: observed.into(), pass }
}

/// Runs the tightness demonstrations on the path and the 11-vertex tree.
pub fn paper_examples() -> Result<Vec<ExampleRow>> {
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    let mut rows = Vec::new();

    let p4 = fixtures::tight_gamma();
    let (cover, _) = build_ics(&p4, None)?;
    for d in [0.3, 0.5, 0.61, 0.62, 0.7, 0.9, 0.99] {
        let inst = LcpInstance::new(p4.clone(), d)?;
        let sol = evaluate_ics(&cover, &inst)?;
        let bad = verify_solution(&inst, sol.x())?.violating_vertices();
        let expect_ok = d > golden;
        let pass = if expect_ok { bad.is_empty() } else { bad == VertexSet::from([2]) };
        let observed = if bad.is_empty() { "valid".to_string() } else { format!("violations at {bad}") };
        let expected = if expect_ok { "valid" } else { "violation at {2}" };
        rows.push(row(format!("P4 ICS at delta = {d}"), expected, observed, pass));
    }
    let cross = validity_crossover(&p4, &cover, 0.3, 0.99)?;
    rows.push(row("P4 ICS crossover", format!("{golden:.10}"), format!("{cross:.10}"), (cross - golden).abs() <= 1e-9));
    let gp = gamma(&p4)?;
    rows.push(row("gamma(P4) is the golden ratio", format!("{golden:.12}"), format!("{gp:.12}"), (gp - golden).abs() <= 1e-12));

    let tree = fixtures::tight_eta();
    let r = ThresholdReport::compute(&tree)?;
    let g11 = r.gamma.unwrap_or(f64::NAN);
    let e11 = r.eta.unwrap_or(f64::NAN);
    rows.push(row("11-vertex alpha, omega", "6, 2", format!("{}, {}", r.alpha, r.omega), r.alpha == 6 && r.omega == 2));
    rows.push(row("11-vertex gamma", format!("{golden:.12}"), format!("{g11:.12}"), (g11 - golden).abs() <= 1e-12));
    rows.push(row("11-vertex kappa = eta", format!("{:.12}", 2.0 / 3.0), format!("{:.12} / {e11:.12}", r.kappa),
        (r.kappa - 2.0 / 3.0).abs() <= 1e-12 && (e11 - 2.0 / 3.0).abs() <= 1e-12));
    for (d, want) in [(0.6, 10.0 / 1.6), (0.7, 6.0)] {
        let census = enumerate_solutions_capped(&LcpInstance::new(tree.clone(), d)?, None, DEFAULT_CENSUS_CAP)?;
        let best = census.max_sol().map_or(f64::NAN, |m| m.value);
        rows.push(row(format!("11-vertex maxSOL at delta = {d}"), format!("{want:.9}"), format!("{best:.9}"), (best - want).abs() <= 1e-7));
    }
    let pairs = fixtures::tight_eta_pair_cover();
    for d in [0.6, 2.0 / 3.0, 0.7] {
        let l1 = evaluate_ics(&pairs, &LcpInstance::new(tree.clone(), d)?)?.l1();
        let want = 10.0 / (1.0 + d);
        let side = if d < 2.0 / 3.0 - 1e-12 { "> 6" } else if d > 2.0 / 3.0 + 1e-12 { "< 6" } else { "= 6" };
        let pass = (l1 - want).abs() <= 1e-9
            && match side {
                "> 6" => l1 > 6.0,
                "< 6" => l1 < 6.0,
                _ => (l1 - 6.0).abs() <= 1e-9,
            };
        rows.push(row(format!("pair-cover l1 at delta = {d:.4}"), format!("10/(1+delta) {side}"), format!("{l1:.9}"), pass));
    }
    Ok(rows)
}

fn random_check(seed: u64, trials: usize, max_n: usize, p: f64, cap: usize, tol: f64, json: bool) -> Result<(String, i32)> {
    if !(2..=cap).contains(&max_n) {
        return Err(Error::Precondition(format!("--max-n must lie in [2, {cap}]")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!("edge probability {p} is outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = TheoremOptions { trials: 2, seed, tol, cap, ..TheoremOptions::default() };
    let mut lines = Vec::new();
    let mut failed = false;
    for t in 0..trials {
        let n = rng.gen_range(2..=max_n);
        let g = fixtures::erdos_renyi(n, p, &mut rng);
        let r = ThresholdReport::compute(&g)?;
        let mut grid = vec![1.0, 1.5];
        if let Some(eta) = r.eta.filter(|&e| e < 0.99) {
            grid.insert(0, rng.gen_range(eta + 0.01..=0.99_f64.max(eta + 0.01)));
        }
        let report = check_optimality_theorems(&g, &grid, &opts)?;
        let count = |f: fn(&CheckOutcome) -> bool| report.rows.iter().filter(|r| f(&r.outcome)).count();
        let pass = count(|o| matches!(o, CheckOutcome::Pass));
        let skip = count(|o| matches!(o, CheckOutcome::Skipped(_)));
        let fails: Vec<String> = report
            .failures()
            .map(|r| format!("{} at {}: {:?}", r.check.label(), r.delta, r.outcome))
            .collect();
        failed |= !fails.is_empty();
        lines.push(json!({
            "trial": t, "n": n, "edges": g.edge_count(), "pass": pass, "skipped": skip, "failures": fails,
        }));
    }
    let code = if failed { EXIT_VERIFY } else { EXIT_OK };
    if json {
        return Ok((pretty(json!(lines)), code));
    }
    let mut s = String::new();
    for l in &lines {
        let _ = writeln!(s, "graph {:>3}  n {:>2}  m {:>3}  pass {:>2}  skipped {:>2}  fail {}",
            l["trial"], l["n"], l["edges"], l["pass"], l["skipped"], l["failures"].as_array().map_or(0, Vec::len));
        for f in l["failures"].as_array().into_iter().flatten() {
            let _ = writeln!(s, "    {}", f.as_str().unwrap_or_default());
        }
    }
    let _ = writeln!(s, "{}", if failed { "FAILED" } else { "all checks passed" });
    Ok((s, code))
}
