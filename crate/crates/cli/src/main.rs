//! `rignac`: rigidity, stable cuts and NAC-colourings from the command line.
//!
//! Every subcommand reads one graph (stdin or `--file`) unless it builds
//! one itself, and writes JSON to stdout. Exit codes: 0 success or "yes",
//! 1 a clean "no", 2 bad usage or input, 3 a violated precondition.

mod selftest;

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rignac::catalog::{
    check_conjecture_61, enumerate_minimally_rigid_with, write_catalog_jsonl, CatalogOptions, NnacHistogram,
    CATALOG_DEFAULT_MAX_N,
};
use rignac::colouring::{
    construct_nac_minimally_rigid, count_nac_with, enumerate_nac, enumerate_nac_with, is_nap, nap_from_separation,
    EdgeColouring, EdgeOrder, NacConstruction, NacMethod, NacOptions,
};
use rignac::constructions::{self, fixture, fixtures};
use rignac::graph::{
    blocks, connected_components, emit_edgelist, emit_graph6, is_connected, parse_edgelist, parse_graph,
    parse_graph6, Graph, Separation, VertexSet,
};
use rignac::rigidity::{is_2tree, recognize_gsc, rigidity_report, GscOutcome, NotMember, RigidityReport};
use rignac::stable_cut::{
    algorithm1_stable_cut, exhaustive_stable_cut, stable_cut_avoiding, CutConstraints, StableCutResult,
    EXHAUSTIVE_MAX_N,
};
use rignac::Error;

#[derive(Parser)]
#[command(name = "rignac", version, about = "Exact 2D rigidity, stable cuts and NAC-colourings")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Read the graph from this file instead of stdin.
    #[arg(long, global = true)]
    file: Option<String>,
    /// Input format; detected from the content when omitted. Also selects
    /// the output format of `construct`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Worker threads for enumeration (0 = all cores).
    #[arg(long, global = true, env = "RIGNAC_THREADS", default_value_t = 0)]
    threads: usize,
    /// Print counts as a bare decimal.
    #[arg(long, global = true)]
    raw: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Summary of rigidity, structure and stable cuts.
    Analyze {
        /// Also count NAC-colourings (exponential time).
        #[arg(long)]
        count: bool,
    },
    /// NAC-colourings.
    Nac {
        #[command(subcommand)]
        action: NacAction,
    },
    /// NAP-colourings.
    Nap {
        #[command(subcommand)]
        action: NapAction,
    },
    /// A stable cut.
    StableCut {
        /// The cut must separate these two vertices.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        separate: Option<Vec<u64>>,
        /// The cut must not contain this vertex (graph must be 2-connected
        /// unless --exhaustive).
        #[arg(long, value_name = "V")]
        avoid: Option<u64>,
        /// Use the exhaustive minimum search instead of the polynomial one.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Rank of the generic rigidity matroid.
    Rank,
    /// Rigid components.
    Components,
    /// Build a graph from a family.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Minimally rigid graphs up to isomorphism.
    Catalog {
        #[arg(long)]
        n: usize,
        /// Print the histogram of NAC-colouring counts.
        #[arg(long)]
        histogram: bool,
        /// Check the unique-NAC-colouring characterisation.
        #[arg(long)]
        check_conjecture: bool,
        /// Allow n up to 10.
        #[arg(long)]
        allow_large: bool,
    },
    /// Check the known counts and print a pass/fail table.
    Selftest,
}

#[derive(Subcommand)]
enum NacAction {
    /// Number of NAC-colourings up to swapping colours.
    Count {
        /// Process edges so that cycles close early.
        #[arg(long)]
        close_cycles_early: bool,
    },
    /// One JSON line per NAC-colouring (edge 0 always blue).
    List {
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Whether a NAC-colouring exists.
    Exists,
    /// A NAC-colouring of a minimally rigid graph built without search, or
    /// a certificate that it has none.
    Construct,
}

#[derive(Subcommand)]
enum NapAction {
    /// All NAP-colourings up to swapping colours.
    List,
    /// Whether a NAP-colouring exists.
    Exists,
}

#[derive(Subcommand)]
enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Bipartite { n1: usize, n2: usize },
    Prism,
    Wheel { rim: usize },
    /// Random 2-tree from a seed.
    TwoTree { seed: u64, n: usize },
    /// The ladder with two apexes on its first rung.
    Gk { k: usize },
    Ladder { k: usize },
    /// Glue triangles and prisms by script, e.g. "prism@0-1 tri@3-4".
    Gsc { script: String },
    /// `k` copies of a named fixture glued along edge `edge`.
    Glue { name: String, edge: usize, k: usize },
    /// A named fixture; `list` prints the names.
    Fixture { name: String },
}

/// What a command produced.
enum Outcome {
    Yes,
    No,
}

/// The input graph with its original vertex labels.
struct Input {
    g: Graph,
    labels: Vec<u64>,
}

impl Input {
    fn index(&self, label: u64) -> Result<usize, Error> {
        self.labels.iter().position(|&l| l == label).ok_or_else(|| {
            Error::InvalidArgument(format!("no vertex labelled {label}"))
        })
    }

    fn label_set(&self, s: &VertexSet) -> Vec<u64> {
        s.iter().map(|v| self.labels[v]).collect()
    }

    fn edges_json(&self) -> Value {
        json!(self.g.edges().iter().map(|&(a, b)| [self.labels[a], self.labels[b]]).collect::<Vec<_>>())
    }
}

fn read_input(global: &Global) -> Result<Input, Error> {
    let text = match &global.file {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let parsed = match global.format {
        None => parse_graph(&text)?,
        Some(Format::Edgelist) => parse_edgelist(&text)?,
        Some(Format::Graph6) => {
            let g = parse_graph6(&text)?;
            let labels = (0..g.n() as u64).collect();
            return Ok(Input { g, labels });
        }
    };
    Ok(Input {
        g: parsed.graph,
        labels: parsed.labels,
    })
}

fn writer(global: &Global) -> Result<Box<dyn Write>, Error> {
    Ok(match &global.out {
        Some(path) => Box::new(BufWriter::new(fs::File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<(), Error> {
    writeln!(out, "{v}")?;
    Ok(())
}

fn colouring_json(c: &EdgeColouring) -> Value {
    c.to_json()
}

fn cut_json(input: &Input, r: &StableCutResult, method: &str) -> Value {
    let mut v = json!({
        "stable_cut": input.label_set(&r.cut),
        "components_after_removal": r.components_after_removal(&input.g),
        "method": method,
    });
    if let Some((u, w)) = r.separates {
        v["separates"] = json!([input.labels[u], input.labels[w]]);
    }
    if let Some(a) = r.avoids {
        v["avoids"] = json!(input.labels[a]);
    }
    v
}

/// Any stable cut: the polynomial search for connected flexible graphs,
/// the trivial empty cut for disconnected ones, otherwise exhaustive search.
fn any_stable_cut(g: &Graph, report: &RigidityReport) -> Result<Option<(StableCutResult, &'static str)>, Error> {
    if g.n() >= 2 && !is_connected(g) {
        let r = StableCutResult {
            cut: VertexSet::new(g.n()),
            separates: None,
            avoids: None,
        };
        return Ok(Some((r, "disconnected")));
    }
    if report.is_flexible() {
        let pair = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .find(|&(u, v)| !report.share_component(u, v));
        if let Some((u, v)) = pair {
            return Ok(Some((algorithm1_stable_cut(g, u, v)?, "algorithm1")));
        }
    }
    if g.n() <= EXHAUSTIVE_MAX_N {
        return Ok(exhaustive_stable_cut(g, &CutConstraints::default())?.map(|r| (r, "exhaustive")));
    }
    Ok(None)
}

fn nac_options(global: &Global) -> NacOptions {
    NacOptions {
        threads: global.threads,
        ..Default::default()
    }
}

fn analyze(global: &Global, count: bool) -> Result<Outcome, Error> {
    let input = read_input(global)?;
    let g = &input.g;
    let report = rigidity_report(g)?;
    let connected = is_connected(g);
    let mut v = json!({
        "n": g.n(),
        "m": g.m(),
        "connected": connected,
        "blocks": if g.m() > 0 { blocks(g)?.len() } else { 0 },
        "rank": report.rank,
        "rigid": report.is_rigid,
        "flexible": report.is_flexible(),
        "minimally_rigid": report.is_minimally_rigid,
        "rigid_components": report.component_count(),
        "two_tree": is_2tree(g),
        "edges": input.edges_json(),
    });
    v["gsc"] = if connected && g.n() >= 2 {
        match recognize_gsc(g)? {
            GscOutcome::Member(d) => json!({"member": true, "prisms": d.prisms()}),
            GscOutcome::NotMember(NotMember::EdgeCount { .. }) => json!({"member": false, "reason": "edge count"}),
            GscOutcome::NotMember(NotMember::StableCut(_)) => json!({"member": false, "reason": "stable cut"}),
        }
    } else {
        Value::Null
    };
    match any_stable_cut(g, &report)? {
        Some((r, method)) => {
            v["stable_cut"] = json!(input.label_set(&r.cut));
            v["stable_cut_method"] = json!(method);
        }
        None => {
            v["stable_cut"] = Value::Null;
            v["stable_cut_method"] = json!(if g.n() > EXHAUSTIVE_MAX_N { "skipped" } else { "none" });
        }
    }
    if count {
        v["nnac"] = if g.m() == 0 {
            json!("0")
        } else {
            json!(count_nac_with(g, &nac_options(global))?.to_string())
        };
    }
    emit(&mut *writer(global)?, &v)?;
    Ok(Outcome::Yes)
}

fn nac(global: &Global, action: &NacAction) -> Result<Outcome, Error> {
    let input = read_input(global)?;
    let g = &input.g;
    let mut out = writer(global)?;
    match action {
        NacAction::Count { close_cycles_early } => {
            let opts = NacOptions {
                order: if *close_cycles_early { EdgeOrder::CloseCyclesEarly } else { EdgeOrder::Canonical },
                ..nac_options(global)
            };
            let start = Instant::now();
            let search = enumerate_nac(g, &opts)?;
            let millis = start.elapsed().as_millis() as u64;
            if global.raw {
                writeln!(out, "{}", search.count)?;
            } else {
                emit(&mut *out, &json!({"nnac": search.count.to_string(), "nodes": search.nodes, "millis": millis}))?;
            }
            Ok(Outcome::Yes)
        }
        NacAction::List { limit } => {
            // keep the emission order fixed when listing
            let opts = NacOptions::default();
            let limit = limit.unwrap_or(usize::MAX);
            let mut lines = Vec::new();
            enumerate_nac_with(g, &opts, |c| {
                if lines.len() < limit {
                    lines.push(colouring_json(c));
                }
            })?;
            for l in &lines {
                emit(&mut *out, l)?;
            }
            Ok(Outcome::Yes)
        }
        NacAction::Exists => {
            let search = enumerate_nac(g, &NacOptions { first_only: true, ..nac_options(global) })?;
            let mut v = json!({"exists": search.first.is_some()});
            if let Some(c) = &search.first {
                v["colouring"] = colouring_json(c);
            }
            emit(&mut *out, &v)?;
            Ok(if search.first.is_some() { Outcome::Yes } else { Outcome::No })
        }
        NacAction::Construct => match construct_nac_minimally_rigid(g)? {
            NacConstruction::Colouring { colouring, method } => {
                let method = match method {
                    NacMethod::NeighbourhoodCut { vertex } => {
                        json!({"type": "neighbourhood_cut", "vertex": input.labels[vertex]})
                    }
                    NacMethod::ExhaustiveCut { cut } => json!({"type": "exhaustive_cut", "cut": input.label_set(&cut)}),
                    NacMethod::Decomposition { step } => json!({"type": "decomposition", "step": step}),
                };
                emit(&mut *out, &json!({"nac": true, "colouring": colouring_json(&colouring), "method": method}))?;
                Ok(Outcome::Yes)
            }
            NacConstruction::NoNac { peel_order } => {
                let order: Vec<u64> = peel_order.iter().map(|&v| input.labels[v]).collect();
                emit(&mut *out, &json!({"nac": false, "two_tree_peel_order": order}))?;
                Ok(Outcome::No)
            }
        },
    }
}

/// The NAP-colouring of a stable cut: red on the edges touching one
/// component of `g - cut`.
fn nap_from_cut(g: &Graph, cut: &VertexSet) -> Result<Option<EdgeColouring>, Error> {
    let rest: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| !cut.contains(a) && !cut.contains(b))
        .collect();
    let h = Graph::new(g.n(), rest)?;
    for comp in connected_components(&h).into_iter().filter(|c| !c.is_subset(cut)) {
        let (side1, side2): (Vec<usize>, Vec<usize>) =
            (0..g.m()).partition(|&e| comp.contains(g.edge(e).0) || comp.contains(g.edge(e).1));
        if side1.is_empty() || side2.is_empty() {
            continue;
        }
        let sep = Separation::new(g, side1, side2)?;
        let c = nap_from_separation(g, &sep)?;
        if is_nap(g, &c)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn nap(global: &Global, action: &NapAction) -> Result<Outcome, Error> {
    let input = read_input(global)?;
    let g = &input.g;
    let mut out = writer(global)?;
    match action {
        NapAction::List => {
            let mut naps = Vec::new();
            enumerate_nac_with(g, &NacOptions::default(), |c| {
                if is_nap(g, c).unwrap_or(false) {
                    naps.push(colouring_json(c));
                }
            })?;
            for v in &naps {
                emit(&mut *out, v)?;
            }
            Ok(Outcome::Yes)
        }
        NapAction::Exists => {
            if g.m() == 0 {
                return Err(Error::NoEdges { op: "nap exists" });
            }
            let report = rigidity_report(g)?;
            let mut found = None;
            if let Some((r, _)) = any_stable_cut(g, &report)? {
                found = nap_from_cut(g, &r.cut)?;
            }
            if found.is_none() && g.n() > EXHAUSTIVE_MAX_N {
                // too big to rule out a cut exhaustively; search the NACs
                enumerate_nac_with(g, &NacOptions::default(), |c| {
                    if found.is_none() && is_nap(g, c).unwrap_or(false) {
                        found = Some(c.clone());
                    }
                })?;
            }
            let mut v = json!({"exists": found.is_some()});
            if let Some(c) = &found {
                v["colouring"] = colouring_json(c);
            }
            emit(&mut *out, &v)?;
            Ok(if found.is_some() { Outcome::Yes } else { Outcome::No })
        }
    }
}

fn stable_cut(global: &Global, separate: Option<&[u64]>, avoid: Option<u64>, exhaustive: bool) -> Result<Outcome, Error> {
    let input = read_input(global)?;
    let g = &input.g;
    let separate = match separate {
        Some([u, v]) => Some((input.index(*u)?, input.index(*v)?)),
        _ => None,
    };
    let avoid = avoid.map(|v| input.index(v)).transpose()?;
    let found = if exhaustive {
        let constraints = CutConstraints {
            separate,
            avoid,
            max_one_per_rigid_component: false,
        };
        exhaustive_stable_cut(g, &constraints)?.map(|r| (r, "exhaustive"))
    } else if separate.is_some() && avoid.is_some() {
        return Err(Error::InvalidArgument("--separate with --avoid needs --exhaustive".into()));
    } else if let Some((u, v)) = separate {
        Some((algorithm1_stable_cut(g, u, v)?, "algorithm1"))
    } else if let Some(v) = avoid {
        Some((stable_cut_avoiding(g, v)?, "algorithm1"))
    } else {
        any_stable_cut(g, &rigidity_report(g)?)?
    };
    let mut out = writer(global)?;
    match found {
        Some((r, method)) => {
            emit(&mut *out, &cut_json(&input, &r, method))?;
            Ok(Outcome::Yes)
        }
        None => {
            emit(&mut *out, &json!({"stable_cut": null}))?;
            Ok(Outcome::No)
        }
    }
}

fn rank(global: &Global) -> Result<Outcome, Error> {
    let input = read_input(global)?;
    let report = rigidity_report(&input.g)?;
    let mut out = writer(global)?;
    if global.raw {
        writeln!(out, "{}", report.rank)?;
    } else {
        emit(
            &mut *out,
            &json!({"n": report.n, "m": report.m, "rank": report.rank, "rigid": report.is_rigid,
                    "minimally_rigid": report.is_minimally_rigid}),
        )?;
    }
    Ok(Outcome::Yes)
}

fn components(global: &Global) -> Result<Outcome, Error> {
    let input = read_input(global)?;
    let report = rigidity_report(&input.g)?;
    let comps: Vec<Vec<u64>> = report.components.iter().map(|c| input.label_set(c)).collect();
    emit(&mut *writer(global)?, &json!({"rigid": report.is_rigid, "components": comps}))?;
    Ok(Outcome::Yes)
}

fn construct(global: &Global, family: &Family) -> Result<Outcome, Error> {
    let g = match family {
        Family::Path { n } => constructions::make_path(*n)?,
        Family::Cycle { n } => constructions::make_cycle(*n)?,
        Family::Complete { n } => constructions::make_complete(*n)?,
        Family::Bipartite { n1, n2 } => constructions::make_complete_bipartite(*n1, *n2)?,
        Family::Prism => constructions::make_prism(),
        Family::Wheel { rim } => constructions::make_wheel(*rim)?,
        Family::TwoTree { seed, n } => constructions::make_2tree(*seed, *n)?,
        Family::Gk { k } => constructions::make_gk(*k)?.0,
        Family::Ladder { k } => {
            if *k == 0 {
                return Err(Error::InvalidArgument("k must be at least 1".into()));
            }
            constructions::make_ladder(*k)
        }
        Family::Gsc { script } => constructions::make_gsc(script)?,
        Family::Glue { name, edge, k } => constructions::glue_along_edge(&named(name)?, *edge, *k)?,
        Family::Fixture { name } if name == "list" => {
            let names: Vec<&str> = fixtures().iter().map(|f| f.name).collect();
            emit(&mut *writer(global)?, &json!(names))?;
            return Ok(Outcome::Yes);
        }
        Family::Fixture { name } => named(name)?,
    };
    let text = match global.format {
        Some(Format::Graph6) => emit_graph6(&g)? + "\n",
        _ => emit_edgelist(&g),
    };
    writer(global)?.write_all(text.as_bytes())?;
    Ok(Outcome::Yes)
}

fn named(name: &str) -> Result<Graph, Error> {
    fixture(name)
        .map(|f| f.graph)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown fixture {name}; try `construct fixture list`")))
}

fn catalog(global: &Global, n: usize, histogram: bool, check: bool, allow_large: bool) -> Result<Outcome, Error> {
    let opts = CatalogOptions {
        allow_large,
        threads: global.threads,
    };
    if n > CATALOG_DEFAULT_MAX_N && !allow_large {
        eprintln!("n > {CATALOG_DEFAULT_MAX_N} needs --allow-large");
    }
    let start = Instant::now();
    let entries = enumerate_minimally_rigid_with(n, &opts)?;
    eprintln!("{} classes on {n} vertices in {:.2?}", entries.len(), start.elapsed());
    let mut out = writer(global)?;
    let mut outcome = Outcome::Yes;
    if histogram {
        let h = NnacHistogram::from_entries(&entries);
        let counts: serde_json::Map<String, Value> = h.counts.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        emit(
            &mut *out,
            &json!({"n": n, "total": h.total(), "histogram": counts, "max": h.max, "maximizers": h.maximizers}),
        )?;
    }
    if check {
        let r = check_conjecture_61(&entries);
        if !r.is_clean() {
            outcome = Outcome::No;
        }
        emit(
            &mut *out,
            &json!({
                "n": n,
                "checked": r.checked,
                "with_unique_nac": r.with_unique_nac,
                "prism_steps_violations": r.prism_steps_violations,
                "prism_subgraph_violations": r.prism_subgraph_violations,
                "clean": r.is_clean(),
            }),
        )?;
    }
    if !histogram && !check {
        out.write_all(write_catalog_jsonl(n, &entries).as_bytes())?;
    }
    Ok(outcome)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let global = &cli.global;
    match &cli.command {
        Command::Analyze { count } => analyze(global, *count),
        Command::Nac { action } => nac(global, action),
        Command::Nap { action } => nap(global, action),
        Command::StableCut {
            separate,
            avoid,
            exhaustive,
        } => stable_cut(global, separate.as_deref(), *avoid, *exhaustive),
        Command::Rank => rank(global),
        Command::Components => components(global),
        Command::Construct { family } => construct(global, family),
        Command::Catalog {
            n,
            histogram,
            check_conjecture,
            allow_large,
        } => catalog(global, *n, *histogram, *check_conjecture, *allow_large),
        Command::Selftest => selftest::run(&mut *writer(global)?, global.threads),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_precondition() { 3 } else { 2 })
        }
    }
}
