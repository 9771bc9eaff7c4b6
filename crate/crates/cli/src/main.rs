use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperburn::bounds::{
    bounds_report_with, disconnected_composition_check_with, probe_sequence_lazy_subset_with,
    subhypergraph_monotonicity_check_with,
};
use hyperburn::families::{FamilyId, FamilyParams, FamilySpec};
use hyperburn::{
    burning_number_exact_with, is_lazy_burning_set, lazy_burning_number_exact_with,
    parse_hypergraph, run_schedule, serialize_hypergraph, Hypergraph, Schedule, SolverConfig,
    Verdict, VertexSet,
};
use serde_json::json;

/// Exact burning and lazy burning of hypergraphs.
#[derive(Debug, Parser)]
#[command(name = "burn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact burning number with an optimal source sequence.
    Solve(Common),
    /// Exact lazy burning number with a minimum lazy burning set.
    Lazy(Common),
    /// Play a source sequence round by round.
    Simulate {
        #[command(flatten)]
        common: Common,
        /// Comma-separated source labels, in round order.
        #[arg(long, value_delimiter = ',', required = true)]
        sources: Vec<String>,
    },
    /// Print a family member in the instance file format.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the standard bounds on an instance.
    Bounds {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = BoundsCheck::Report)]
        check: BoundsCheck,
        /// Vertex labels inducing the subhypergraphs for `--check subhypergraph`.
        #[arg(long, value_delimiter = ',')]
        within: Option<Vec<String>>,
    },
    /// List connected components.
    Components(Common),
    /// Check a claimed value and witness without trusting the solver.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        kind: Kind,
        /// The claimed burning or lazy burning number.
        #[arg(long)]
        value: usize,
        /// The witness: a source sequence, or the members of a lazy set.
        #[arg(long, value_delimiter = ',', required = true)]
        sources: Vec<String>,
        /// Also re-solve to confirm that no smaller witness exists.
        #[arg(long)]
        optimal: bool,
    },
}

#[derive(Debug, Args)]
struct Common {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Override every solver's vertex-count guard.
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Longest source sequence the burning search may try.
    #[arg(long)]
    max_depth: Option<usize>,
}

#[derive(Debug, Args)]
struct Input {
    /// Instance file in the `v`/`e` line format.
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// One of tight-path, loose-path, single-edge, disjoint-edges, star,
    /// nested, strwk, graph-path.
    #[arg(long)]
    family: Option<String>,
    /// Edge size (uniform families)
    #[arg(long)]
    k: Option<usize>,
    /// Vertex count
    #[arg(long)]
    n: Option<usize>,
    /// Edge count (loose-path, disjoint-edges)
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated edge sizes (loose-path, disjoint-edges)
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundsCheck {
    Report,
    Composition,
    Subhypergraph,
    Probe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Burning,
    Lazy,
}

/// A mistake in how the command was invoked, as opposed to a problem with
/// the instance. Exits with status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn family_hypergraph(args: &FamilyArgs) -> anyhow::Result<Hypergraph> {
    let Some(name) = &args.family else {
        return Err(usage("pass --file or --family"));
    };
    let id: FamilyId = name.parse().map_err(|e| usage(format!("{e}")))?;
    let params = FamilyParams {
        k: args.k,
        n: args.n,
        m: args.m,
        sizes: args.sizes.clone(),
    };
    let spec = FamilySpec::from_parts(id, &params).map_err(|e| usage(format!("{e}")))?;
    spec.generate().map_err(|e| usage(format!("{e}")))
}

fn load(input: &Input) -> anyhow::Result<Hypergraph> {
    match &input.file {
        Some(path) => {
            let f = &input.family;
            if f.k.is_some() || f.n.is_some() || f.m.is_some() || f.sizes.is_some() {
                return Err(usage("family parameters need --family, not --file"));
            }
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            parse_hypergraph(&text).with_context(|| format!("invalid instance {}", path.display()))
        }
        None => family_hypergraph(&input.family),
    }
}

fn config(common: &Common) -> anyhow::Result<SolverConfig> {
    let mut cfg = SolverConfig::default();
    if let Some(n) = common.max_vertices {
        cfg = cfg.with_max_vertices(n);
    }
    cfg = cfg.with_max_depth(common.max_depth);
    if let Ok(raw) = std::env::var("BURN_THREADS") {
        let threads: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| usage(format!("BURN_THREADS must be a positive integer, got `{raw}`")))?;
        cfg = cfg.with_threads(Some(threads));
    }
    Ok(cfg)
}

fn labels(h: &Hypergraph, vertices: impl IntoIterator<Item = usize>) -> Vec<String> {
    vertices.into_iter().map(|v| h.label(v).to_string()).collect()
}

fn resolve(h: &Hypergraph, names: &[String]) -> anyhow::Result<Vec<usize>> {
    Ok(h.resolve_labels(names)?)
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json renders");
    s.push('\n');
    s
}

fn solve(common: &Common) -> anyhow::Result<String> {
    let h = load(&common.input)?;
    let r = burning_number_exact_with(&h, &config(common)?)?;
    let seq = labels(&h, r.witness.sources.iter().copied());
    Ok(match common.format {
        Format::Text => format!(
            "b = {}\nsequence = ({})\nbounds = [{}, {}]\nnodes = {}\n",
            r.value,
            seq.join(", "),
            r.bounds.0,
            r.bounds.1,
            r.nodes_explored
        ),
        Format::Json => pretty(&json!({
            "b": r.value,
            "sequence": seq,
            "lower_bound": r.bounds.0,
            "upper_bound": r.bounds.1,
            "nodes_explored": r.nodes_explored,
        })),
    })
}

fn lazy(common: &Common) -> anyhow::Result<String> {
    let h = load(&common.input)?;
    let r = lazy_burning_number_exact_with(&h, &config(common)?)?;
    let set = labels(&h, r.witness.iter());
    Ok(match common.format {
        Format::Text => format!(
            "b_L = {}\nset = {{{}}}\nbounds = [{}, {}]\nnodes = {}\n",
            r.value,
            set.join(", "),
            r.bounds.0,
            r.bounds.1,
            r.nodes_explored
        ),
        Format::Json => pretty(&json!({
            "b_lazy": r.value,
            "set": set,
            "lower_bound": r.bounds.0,
            "upper_bound": r.bounds.1,
            "nodes_explored": r.nodes_explored,
        })),
    })
}

fn verdict_text(v: Verdict) -> String {
    match v {
        Verdict::Complete { round } => format!("complete at round {round}"),
        Verdict::Incomplete => "incomplete".to_string(),
        Verdict::NonValid { round } => format!("not valid: source of round {round} already burned"),
    }
}

fn trace(h: &Hypergraph, s: &Schedule, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::from("round  source  redundant  spread  burned\n");
            for st in &s.trace {
                let spread = labels(h, st.spread.iter());
                let _ = writeln!(
                    out,
                    "{:<5}  {:<6}  {:<9}  {:<6}  {}/{}",
                    st.round,
                    h.label(st.source),
                    if st.redundant() { "yes" } else { "no" },
                    if spread.is_empty() { "-".to_string() } else { spread.join(",") },
                    st.burned.len(),
                    h.vertex_count()
                );
            }
            let _ = writeln!(out, "verdict: {}", verdict_text(s.verdict));
            out
        }
        Format::Json => {
            let rounds: Vec<_> = s
                .trace
                .iter()
                .map(|st| {
                    json!({
                        "round": st.round,
                        "source": h.label(st.source),
                        "redundant": st.redundant(),
                        "spread": labels(h, st.spread.iter()),
                        "burned": labels(h, st.burned.iter()),
                    })
                })
                .collect();
            pretty(&json!({
                "sources": labels(h, s.sources.iter().copied()),
                "rounds": rounds,
                "verdict": s.verdict,
            }))
        }
    }
}

fn simulate(common: &Common, sources: &[String]) -> anyhow::Result<String> {
    let h = load(&common.input)?;
    let seq = resolve(&h, sources)?;
    let s = run_schedule(&h, &seq)?;
    Ok(trace(&h, &s, common.format))
}

fn generate(family: &FamilyArgs, format: Format) -> anyhow::Result<String> {
    let h = family_hypergraph(family)?;
    Ok(match format {
        Format::Text => serialize_hypergraph(&h),
        Format::Json => pretty(&json!({
            "vertices": h.labels(),
            "edges": h.edges().iter().map(|e| labels(&h, e.iter().copied())).collect::<Vec<_>>(),
        })),
    })
}

fn bounds(common: &Common, check: BoundsCheck, within: Option<&[String]>) -> anyhow::Result<String> {
    let h = load(&common.input)?;
    let cfg = config(common)?;
    if within.is_some() != (check == BoundsCheck::Subhypergraph) {
        return Err(usage("--within goes with --check subhypergraph, and only with it"));
    }
    let json = common.format == Format::Json;
    Ok(match check {
        BoundsCheck::Report => {
            let r = bounds_report_with(&h, &cfg)?;
            if json { r.to_json() + "\n" } else { r.to_text() }
        }
        BoundsCheck::Composition => {
            let r = disconnected_composition_check_with(&h, &cfg)?;
            if json { r.to_json() + "\n" } else { r.to_text() }
        }
        BoundsCheck::Subhypergraph => {
            let names = within.expect("checked above");
            let w = VertexSet::from_members(h.vertex_count(), resolve(&h, names)?);
            let r = subhypergraph_monotonicity_check_with(&h, &w, &cfg)?;
            if json { r.to_json() + "\n" } else { r.to_text() }
        }
        BoundsCheck::Probe => {
            let r = probe_sequence_lazy_subset_with(&h, &cfg)?;
            if json {
                pretty(&serde_json::to_value(&r)?)
            } else {
                r.to_text()
            }
        }
    })
}

fn components(common: &Common) -> anyhow::Result<String> {
    let h = load(&common.input)?;
    let parts = h.connected_components();
    Ok(match common.format {
        Format::Text => {
            let mut out = format!("components = {}\n", parts.len());
            for (i, g) in parts.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{}: vertices {{{}}}, {} edges",
                    i + 1,
                    g.labels().join(", "),
                    g.edge_count()
                );
            }
            out
        }
        Format::Json => pretty(&json!(parts
            .iter()
            .map(|g| json!({
                "vertices": g.labels(),
                "edges": g.edges().iter().map(|e| labels(g, e.iter().copied())).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>())),
    })
}

fn verify(
    common: &Common,
    kind: Kind,
    value: usize,
    witness: &[String],
    optimal: bool,
) -> anyhow::Result<String> {
    let h = load(&common.input)?;
    let vertices = resolve(&h, witness)?;
    if vertices.len() != value {
        bail!("witness has {} entries but the claimed value is {value}", vertices.len());
    }
    match kind {
        Kind::Burning => {
            let s = run_schedule(&h, &vertices)?;
            if !s.is_complete() {
                bail!("sequence does not burn the hypergraph: {}", verdict_text(s.verdict));
            }
        }
        Kind::Lazy => {
            let mut sorted = vertices.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != vertices.len() {
                bail!("lazy set lists a vertex twice");
            }
            if !is_lazy_burning_set(&h, &VertexSet::from_members(h.vertex_count(), vertices)) {
                bail!("set does not lazily burn the hypergraph");
            }
        }
    }
    let name = match kind {
        Kind::Burning => "b",
        Kind::Lazy => "b_L",
    };
    if optimal {
        let cfg = config(common)?;
        let best = match kind {
            Kind::Burning => burning_number_exact_with(&h, &cfg)?.value,
            Kind::Lazy => lazy_burning_number_exact_with(&h, &cfg)?.value,
        };
        if best != value {
            bail!("witness is valid but not optimal: {name} = {best}");
        }
    }
    let scope = if optimal { "optimal" } else { "upper bound" };
    Ok(match common.format {
        Format::Text => format!("verified: {name} {} {value} ({scope})\n", if optimal { "=" } else { "<=" }),
        Format::Json => pretty(&json!({
            "verified": true,
            "kind": name,
            "value": value,
            "optimal": optimal,
        })),
    })
}

fn run(cli: Cli) -> anyhow::Result<String> {
    match &cli.command {
        Command::Solve(c) => solve(c),
        Command::Lazy(c) => lazy(c),
        Command::Simulate { common, sources } => simulate(common, sources),
        Command::Generate { family, format } => generate(family, *format),
        Command::Bounds {
            common,
            check,
            within,
        } => bounds(common, *check, within.as_deref()),
        Command::Components(c) => components(c),
        Command::Verify {
            common,
            kind,
            value,
            sources,
            optimal,
        } => verify(common, *kind, *value, sources, *optimal),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
