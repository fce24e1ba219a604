use std::path::PathBuf;

use clap::{ArgGroup, Args};
use expander_core::format::{round_sig, sig};
use expander_core::groups::{build_cayley, girth_tower_report, Recipe, TowerOptions, DEFAULT_ORDER_CAP};
use expander_core::metrics::{ball_expansion_profile, measure, MeasureOptions, Rational, DEFAULT_EXACT_LIMIT};
use expander_core::percolation::{component_summary, condition_check, percolate, percolation_sweep};
use expander_core::probe::{conjecture_probe, ProbeFamily, ProbeOptions, ProbeReport};
use expander_core::search::{search_spanning_subexpander, trim_to_girth, GirthTarget, SearchOptions, SearchResult, Strategy};
use expander_core::{FamilySpec, Girth, Graph};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::session::Session;

const DIGITS: usize = 9;

fn real(x: f64) -> String {
    sig(x, DIGITS)
}

fn jreal(x: f64) -> Value {
    if x.is_finite() {
        json!(round_sig(x, DIGITS))
    } else {
        Value::Null
    }
}

fn jrational(r: Option<Rational>) -> Value {
    r.map_or(Value::Null, |r| json!(r.to_string()))
}

fn jgirth(g: Girth) -> Value {
    match g {
        Girth::Finite(x) => json!(x),
        Girth::Unbounded => json!("unbounded"),
    }
}

fn opt_rational(r: Option<Rational>) -> String {
    r.map_or_else(String::new, |r| r.to_string())
}

fn json_bytes(v: &Value) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s.into_bytes()
}

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> CliResult<Vec<u8>> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let internal = |e: csv::Error| CliError::Internal(format!("csv: {e}"));
    w.write_record(header).map_err(internal)?;
    for row in rows {
        w.write_record(&row).map_err(internal)?;
    }
    w.into_inner().map_err(|e| CliError::Internal(format!("csv: {e}")))
}

fn parse_strategy(s: &str) -> CliResult<Strategy> {
    Ok(s.parse::<Strategy>()?)
}

fn edge_list_bytes(g: &Graph) -> Vec<u8> {
    g.to_edge_list().to_text().into_bytes()
}

#[derive(Debug, Args, Serialize)]
pub struct GenArgs {
    /// Family spec, e.g. `random-regular:n=10,d=3,seed=1`.
    pub spec: String,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

pub fn gen(args: &GenArgs, s: &mut Session) -> CliResult<()> {
    let spec: FamilySpec = args.spec.parse()?;
    if let (FamilySpec::Cayley { recipe, .. }, Some(q)) = (&spec, spec.cayley_modulus()) {
        let c = build_cayley(*recipe, q, DEFAULT_ORDER_CAP)?;
        s.emit("graph", args.out.as_deref(), &edge_list_bytes(c.graph()))?;
        if let Some(out) = &args.out {
            let labels = PathBuf::from(format!("{}.labels", out.display()));
            s.emit("labels", Some(&labels), c.label_text().as_bytes())?;
        }
        return Ok(());
    }
    let g = spec.build()?;
    s.emit("graph", args.out.as_deref(), &edge_list_bytes(&g))
}

#[derive(Debug, Args, Serialize)]
pub struct MeasureArgs {
    pub graph: PathBuf,
    /// Largest n for exact expansion and conductance.
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    pub exact_max: usize,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

pub fn measure_cmd(args: &MeasureArgs, s: &mut Session) -> CliResult<()> {
    let g = s.read_graph(&args.graph)?;
    let opts = MeasureOptions {
        exact_limit: args.exact_max,
        ..MeasureOptions::default()
    };
    let report = measure(&g, &opts)?;
    let v = serde_json::to_value(report.to_json()).expect("report serializes");
    s.emit("report", args.out.as_deref(), &json_bytes(&v))
}

#[derive(Debug, Args, Serialize)]
pub struct PercolateArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Append `condition_value,condition_ok` (rho_star · max_degree · p < 1).
    #[arg(long)]
    pub check_condition: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Also write the retained edges as an edge list.
    #[arg(long)]
    pub edges_out: Option<PathBuf>,
}

pub fn percolate_cmd(args: &PercolateArgs, s: &mut Session) -> CliResult<()> {
    let g = s.read_graph(&args.graph)?;
    let sample = percolate(&g, args.p, args.seed)?;
    let summary = component_summary(&g, &sample)?;
    let mut header = vec!["p", "seed", "retained", "components", "giant_fraction"];
    let mut row = vec![
        real(args.p),
        args.seed.to_string(),
        sample.retained_count().to_string(),
        summary.count.to_string(),
        real(summary.giant_fraction),
    ];
    if args.check_condition {
        let c = condition_check(&g, args.p)?;
        header.extend(["condition_value", "condition_ok"]);
        row.extend([real(c.value), c.satisfied.to_string()]);
    }
    s.emit("table", args.out.as_deref(), &csv_bytes(&header, [row])?)?;
    if let Some(path) = &args.edges_out {
        s.emit("retained", Some(path), &edge_list_bytes(&sample.subgraph(&g)?))?;
    }
    Ok(())
}

#[derive(Debug, Args, Serialize)]
pub struct SweepArgs {
    pub graph: PathBuf,
    /// Comma-separated retention probabilities.
    #[arg(long, value_delimiter = ',', required = true)]
    pub grid: Vec<f64>,
    /// Samples per grid point; seed `i` is derived from `--seed` and `i`.
    #[arg(long, default_value_t = 10)]
    pub seeds: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fill the condition columns (left empty otherwise).
    #[arg(long)]
    pub check_condition: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

pub const SWEEP_HEADER: [&str; 6] = ["p", "seed_count", "giant_mean", "giant_std", "condition_value", "condition_ok"];

pub fn sweep(args: &SweepArgs, s: &mut Session) -> CliResult<()> {
    let g = s.read_graph(&args.graph)?;
    let rows = percolation_sweep(&g, &args.grid, args.seeds, args.seed, args.check_condition)?;
    let rows = rows.into_iter().map(|r| {
        vec![
            real(r.p),
            r.seed_count.to_string(),
            real(r.giant_mean),
            real(r.giant_std),
            r.condition.map_or_else(String::new, |c| real(c.value)),
            r.condition.map_or_else(String::new, |c| c.satisfied.to_string()),
        ]
    });
    s.emit("table", args.out.as_deref(), &csv_bytes(&SWEEP_HEADER, rows)?)
}

#[derive(Debug, Args, Serialize)]
pub struct TrimArgs {
    pub graph: PathBuf,
    /// Girth target.
    #[arg(long)]
    pub girth: usize,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

pub fn trim(args: &TrimArgs, s: &mut Session) -> CliResult<()> {
    let g = s.read_graph(&args.graph)?;
    s.emit("graph", args.out.as_deref(), &edge_list_bytes(&trim_to_girth(&g, args.girth)))
}

#[derive(Debug, Args, Serialize)]
#[command(group(ArgGroup::new("target").required(true).args(["ratio", "girth"])))]
pub struct SearchArgs {
    pub graph: PathBuf,
    /// Girth target as a fraction of the host diameter, in (0, 1].
    #[arg(long)]
    pub ratio: Option<f64>,
    /// Absolute girth target.
    #[arg(long)]
    pub girth: Option<usize>,
    /// One of `trim`, `percolate-repair`, `anneal`.
    #[arg(long, default_value = "trim")]
    pub strategy: String,
    #[arg(long, default_value_t = 1000)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Retention probability for `percolate-repair`.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    pub exact_max: usize,
    /// Kept edges as an edge list.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// JSON summary; printed to stdout when neither this nor `--out` is set.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

fn search_json(r: &SearchResult) -> Value {
    json!({
        "strategy": r.strategy.name(),
        "seed": r.seed,
        "n": r.n,
        "m": r.kept.len(),
        "target": r.target,
        "girth": jgirth(r.girth),
        "gap": jreal(r.gap),
        "h_exact": jrational(r.h_exact),
        "connected": r.connected,
        "meets_target": r.meets_target(),
        "iterations_used": r.iterations_used,
    })
}

pub fn search(args: &SearchArgs, s: &mut Session) -> CliResult<()> {
    let g = s.read_graph(&args.graph)?;
    let target = match (args.ratio, args.girth) {
        (Some(c), _) => GirthTarget::Ratio(c),
        (None, Some(t)) => GirthTarget::Absolute(t),
        (None, None) => return Err(CliError::Usage("one of --ratio or --girth is required".into())),
    };
    let opts = SearchOptions {
        budget: args.budget,
        seed: args.seed,
        percolation_p: args.p,
        exact_limit: args.exact_max,
        ..SearchOptions::default()
    };
    let result = search_spanning_subexpander(&g, target, parse_strategy(&args.strategy)?, &opts)?;
    if let Some(out) = &args.out {
        s.emit("graph", Some(out), &edge_list_bytes(&result.graph()))?;
    }
    if args.report.is_some() || args.out.is_none() {
        s.emit("report", args.report.as_deref(), &json_bytes(&search_json(&result)))?;
    }
    Ok(())
}

#[derive(Debug, Args, Serialize)]
pub struct ProbeArgs {
    /// Family spec; `|` separates alternative values. Repeatable.
    #[arg(long = "family", required = true)]
    pub families: Vec<String>,
    /// Girth-to-diameter ratios.
    #[arg(long = "ratio", value_delimiter = ',', default_value = "0.1,0.25,0.5")]
    pub ratios: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "anneal,percolate-repair,trim")]
    pub strategies: Vec<String>,
    #[arg(long, default_value_t = 1000)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    pub exact_max: usize,
    /// CSV table of records.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// JSON report; defaults to the CSV path with a `.json` extension.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

pub const PROBE_HEADER: [&str; 18] = [
    "family",
    "instance",
    "n",
    "m",
    "d",
    "host_gap",
    "host_h_exact",
    "diameter",
    "c",
    "girth_target",
    "strategy",
    "best_girth",
    "best_gap",
    "best_h_exact",
    "ratio_achieved",
    "success",
    "degenerate_diameter",
    "seed",
];

fn probe_json(args: &ProbeArgs, report: &ProbeReport) -> Value {
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            json!({
                "family": r.family,
                "instance": r.instance,
                "group": r.group,
                "n": r.n,
                "m": r.m,
                "d": r.d,
                "host_gap": jreal(r.host_gap),
                "host_h_exact": jrational(r.host_h_exact),
                "diameter": r.diameter,
                "c": jreal(r.c),
                "girth_target": r.girth_target,
                "strategy": r.strategy.name(),
                "best_girth": jgirth(r.best_girth),
                "best_gap": jreal(r.best_gap),
                "best_h_exact": jrational(r.best_h_exact),
                "ratio_achieved": if r.ratio_achieved.is_finite() { jreal(r.ratio_achieved) } else { json!("inf") },
                "success": r.success,
                "degenerate_diameter": r.degenerate_diameter,
                "seed": r.seed,
                "candidates": r.candidates.iter().map(|c| json!({
                    "strategy": c.strategy.name(),
                    "girth": jgirth(c.girth),
                    "gap": jreal(c.gap),
                    "valid": c.valid,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let summaries: Vec<Value> = report
        .summaries
        .iter()
        .map(|f| {
            json!({
                "family": f.family,
                "ratios": f.ratios.iter().map(|r| json!({
                    "c": jreal(r.c),
                    "f_estimate": jreal(r.f_estimate),
                    "successes": r.successes,
                    "instances": r.instances,
                    "girth_by_n": r.girth_by_n.iter().map(|(n, g)| json!({"n": n, "girth": jgirth(*g)})).collect::<Vec<_>>(),
                    "girth_grew": r.girth_grew,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "ratios": args.ratios.iter().map(|&c| jreal(c)).collect::<Vec<_>>(),
        "strategies": args.strategies,
        "budget": args.budget,
        "seed": args.seed,
        "records": records,
        "summaries": summaries,
    })
}

pub fn probe(args: &ProbeArgs, s: &mut Session) -> CliResult<()> {
    let families = args
        .families
        .iter()
        .map(|f| ProbeFamily::parse(f))
        .collect::<Result<Vec<_>, _>>()?;
    let strategies = args
        .strategies
        .iter()
        .map(|x| parse_strategy(x))
        .collect::<CliResult<Vec<_>>>()?;
    let opts = ProbeOptions {
        ratios: args.ratios.clone(),
        strategies,
        search: SearchOptions {
            budget: args.budget,
            seed: args.seed,
            exact_limit: args.exact_max,
            ..SearchOptions::default()
        },
    };
    let report = conjecture_probe(&families, &opts)?;
    let rows = report.records.iter().map(|r| {
        vec![
            r.family.clone(),
            r.instance.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.d.to_string(),
            real(r.host_gap),
            opt_rational(r.host_h_exact),
            r.diameter.to_string(),
            real(r.c),
            r.girth_target.to_string(),
            r.strategy.name().to_string(),
            r.best_girth.to_string(),
            real(r.best_gap),
            opt_rational(r.best_h_exact),
            real(r.ratio_achieved),
            r.success.to_string(),
            r.degenerate_diameter.to_string(),
            r.seed.to_string(),
        ]
    });
    s.emit("table", args.out.as_deref(), &csv_bytes(&PROBE_HEADER, rows)?)?;
    let json_path = args.json.clone().or_else(|| args.out.as_ref().map(|o| o.with_extension("json")));
    if let Some(path) = json_path {
        s.emit("report", Some(&path), &json_bytes(&probe_json(args, &report)))?;
    }
    Ok(())
}

#[derive(Debug, Args, Serialize)]
pub struct BallsArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub radius: usize,
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    pub exact_max: usize,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

pub fn balls(args: &BallsArgs, s: &mut Session) -> CliResult<()> {
    let g = s.read_graph(&args.graph)?;
    let p = ball_expansion_profile(&g, args.radius, args.exact_max)?;
    let opt = |x: Option<f64>| x.map_or(Value::Null, jreal);
    let v = json!({
        "radius": p.radius,
        "n": g.n(),
        "summary": {
            "min_gap": opt(p.summary.min_gap),
            "median_gap": opt(p.summary.median_gap),
            "min_h_exact": jrational(p.summary.min_h_exact),
        },
        "rows": p.rows.iter().map(|r| json!({
            "vertex": r.vertex,
            "size": r.size,
            "edges": r.edges,
            "gap": opt(r.gap),
            "h_exact": jrational(r.h_exact),
        })).collect::<Vec<_>>(),
    });
    s.emit("report", args.out.as_deref(), &json_bytes(&v))
}

#[derive(Debug, Args, Serialize)]
pub struct TowerArgs {
    /// Primes, comma-separated or repeated.
    #[arg(long = "p", value_delimiter = ',', required = true)]
    pub primes: Vec<u64>,
    /// Levels 1..=n of the tower mod p^level.
    #[arg(long, default_value_t = 1)]
    pub levels: u32,
    /// `sanov`, `elementary`, `elementary-power[:k]`, `product[:pairing[:base]]`.
    #[arg(long, default_value = "sanov")]
    pub recipe: String,
    /// Skip the spectral gap above this many vertices.
    #[arg(long)]
    pub gap_max_vertices: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

pub const TOWER_HEADER: [&str; 10] = [
    "recipe",
    "p",
    "level",
    "modulus",
    "vertices",
    "full_order",
    "generates_full",
    "girth",
    "gap",
    "girth_monotone",
];

pub fn tower(args: &TowerArgs, s: &mut Session) -> CliResult<()> {
    let recipe: Recipe = args.recipe.parse()?;
    let opts = TowerOptions {
        order_cap: args.order_cap,
        gap_vertex_limit: args.gap_max_vertices,
        ..TowerOptions::default()
    };
    let mut rows = Vec::new();
    for &p in &args.primes {
        let rep = girth_tower_report(p, args.levels, recipe, &opts)?;
        let monotone = rep.girth_monotone();
        for r in rep.rows {
            rows.push(vec![
                recipe.to_string(),
                r.p.to_string(),
                r.level.to_string(),
                r.modulus.to_string(),
                r.vertices.to_string(),
                r.full_order.map_or_else(String::new, |o| o.to_string()),
                r.full_order.is_some_and(|o| o == r.vertices as u64).to_string(),
                r.girth.to_string(),
                r.gap.map_or_else(String::new, real),
                monotone.to_string(),
            ]);
        }
    }
    s.emit("table", args.out.as_deref(), &csv_bytes(&TOWER_HEADER, rows)?)
}
