//! Minimally rigid graphs up to isomorphism, with NAC statistics.
//!
//! Generation starts at the triangle and applies 0-extensions (a new vertex
//! joined to two old ones) and 1-extensions (delete an edge `xy`, add a new
//! vertex joined to `x`, `y` and a third vertex). Both moves preserve
//! minimal rigidity and together reach every minimally rigid graph.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colouring::count_nac;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, parse_graph6, Graph};
use crate::rigidity::{is_2tree, rank, recognize_0extension_graph, recognize_gsc, GscOutcome};

/// Largest `n` generated without opting in.
pub const CATALOG_DEFAULT_MAX_N: usize = 8;
/// Largest `n` generated at all.
pub const CATALOG_MAX_N: usize = 10;
/// Largest `n` for [`minimally_rigid_by_filtering`].
pub const FILTER_MAX_N: usize = 7;

pub const CATALOG_FORMAT: &str = "rignac-catalog";
pub const CATALOG_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// graph6 of the canonically labelled graph; one per isomorphism class.
    pub graph6: String,
    pub nnac: u64,
    pub two_tree: bool,
    /// Prism steps of the decomposition, for members of the family built
    /// from an edge by gluing triangles and prisms.
    pub gsc_prisms: Option<usize>,
    pub zero_extension: bool,
    pub min_open_steps: Option<usize>,
    /// Number of subgraphs (not necessarily induced) isomorphic to the prism.
    pub prism_subgraphs: usize,
}

impl CatalogEntry {
    pub fn graph(&self) -> Graph {
        parse_graph6(&self.graph6).expect("catalog graph6 is valid")
    }

    pub fn is_gsc(&self) -> bool {
        self.gsc_prisms.is_some()
    }

    fn analyse(g: &Graph) -> Result<Self> {
        let graph6 = String::from_utf8(canonical_form(g)?).expect("graph6 is ASCII");
        let nnac = u64::try_from(count_nac(g)?).map_err(|_| Error::Internal("nnac overflow".into()))?;
        let gsc_prisms = match recognize_gsc(g)? {
            GscOutcome::Member(d) => Some(d.prisms()),
            GscOutcome::NotMember(_) => None,
        };
        let (zero_extension, min_open_steps) = recognize_0extension_graph(g)?;
        Ok(CatalogEntry {
            graph6,
            nnac,
            two_tree: is_2tree(g),
            gsc_prisms,
            zero_extension,
            min_open_steps,
            prism_subgraphs: count_prism_subgraphs(g),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CatalogOptions {
    /// Allow `n` up to [`CATALOG_MAX_N`] (slow).
    pub allow_large: bool,
    /// Worker threads; 0 means one per core.
    pub threads: usize,
}

/// Subgraphs isomorphic to the prism: pairs of disjoint triangles together
/// with a perfect matching between them.
pub fn count_prism_subgraphs(g: &Graph) -> usize {
    let mut triangles = Vec::new();
    for &(a, b) in g.edges() {
        for &c in g.neighbours(b) {
            if c > b && g.has_edge(a, c) {
                triangles.push([a, b, c]);
            }
        }
    }
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut count = 0;
    for (i, s) in triangles.iter().enumerate() {
        for t in &triangles[i + 1..] {
            if s.iter().any(|v| t.contains(v)) {
                continue;
            }
            count += PERMS
                .iter()
                .filter(|p| (0..3).all(|j| g.has_edge(s[j], t[p[j]])))
                .count();
        }
    }
    count
}

fn children(g: &Graph) -> Vec<Graph> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let edges = g.edges().iter().copied().chain([(u, n), (v, n)]);
            out.push(Graph::new(n + 1, edges).expect("0-extension of a simple graph is simple"));
        }
    }
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        for z in (0..n).filter(|&z| z != x && z != y) {
            let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
            edges.swap_remove(e);
            edges.extend([(x, n), (y, n), (z, n)]);
            out.push(Graph::new(n + 1, edges).expect("1-extension of a simple graph is simple"));
        }
    }
    out
}

fn pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

fn check_n(n: usize, opts: &CatalogOptions) -> Result<()> {
    let limit = if opts.allow_large { CATALOG_MAX_N } else { CATALOG_DEFAULT_MAX_N };
    if n < 3 {
        return Err(Error::TooFewVertices {
            op: "enumerate_minimally_rigid",
            need: 3,
            n,
        });
    }
    if n > limit {
        return Err(Error::SizeLimit {
            op: "enumerate_minimally_rigid",
            limit,
            n,
        });
    }
    Ok(())
}

/// One canonically labelled representative per isomorphism class of
/// minimally rigid graphs on `n` vertices, sorted by graph6.
pub fn minimally_rigid_classes(n: usize, opts: &CatalogOptions) -> Result<Vec<Graph>> {
    check_n(n, opts)?;
    pool(opts.threads)?.install(|| {
        let mut level = vec![Graph::new(3, [(0, 1), (1, 2), (0, 2)])?];
        for _ in 3..n {
            let found: Vec<(Vec<u8>, Graph)> = level
                .par_iter()
                .flat_map_iter(children)
                .map(|h| {
                    let key = canonical_form(&h)?;
                    Ok((key, h))
                })
                .collect::<Result<_>>()?;
            let mut classes: HashMap<Vec<u8>, Graph> = HashMap::new();
            for (key, h) in found {
                classes.entry(key).or_insert(h);
            }
            let mut keys: Vec<Vec<u8>> = classes.into_keys().collect();
            keys.sort();
            level = keys
                .iter()
                .map(|k| parse_graph6(std::str::from_utf8(k).expect("ascii")))
                .collect::<Result<_>>()?;
        }
        Ok(level)
    })
}

/// Catalog of minimally rigid graphs on `3 <= n <= 8` vertices.
pub fn enumerate_minimally_rigid(n: usize) -> Result<Vec<CatalogEntry>> {
    enumerate_minimally_rigid_with(n, &CatalogOptions::default())
}

pub fn enumerate_minimally_rigid_with(n: usize, opts: &CatalogOptions) -> Result<Vec<CatalogEntry>> {
    let classes = minimally_rigid_classes(n, opts)?;
    pool(opts.threads)?.install(|| classes.par_iter().map(CatalogEntry::analyse).collect())
}

/// Independent check of the generator: canonical forms of all rigid
/// `(2n-3)`-edge subgraphs of `K_n`, sorted.
pub fn minimally_rigid_by_filtering(n: usize) -> Result<Vec<String>> {
    if !(2..=FILTER_MAX_N).contains(&n) {
        return Err(Error::SizeLimit {
            op: "minimally_rigid_by_filtering",
            limit: FILTER_MAX_N,
            n,
        });
    }
    let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = 2 * n - 3;
    let mut chosen = Vec::with_capacity(m);
    let mut found = std::collections::BTreeSet::new();
    subsets(&all, m, 0, &mut chosen, &mut |edges| {
        let g = Graph::new(n, edges.iter().copied()).expect("subgraph of K_n");
        if rank(&g).expect("n >= 2") == m {
            found.insert(String::from_utf8(canonical_form(&g).expect("small")).expect("ascii"));
        }
    });
    Ok(found.into_iter().collect())
}

fn subsets<T: Copy>(items: &[T], k: usize, from: usize, chosen: &mut Vec<T>, visit: &mut dyn FnMut(&[T])) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    for i in from..=items.len() - (k - chosen.len()) {
        chosen.push(items[i]);
        subsets(items, k, i + 1, chosen, visit);
        chosen.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NnacHistogram {
    /// nnac value to number of classes.
    pub counts: BTreeMap<u64, usize>,
    /// `M_n`, the largest nnac.
    pub max: u64,
    pub maximizers: Vec<String>,
}

impl NnacHistogram {
    pub fn from_entries(entries: &[CatalogEntry]) -> Self {
        let mut counts = BTreeMap::new();
        for e in entries {
            *counts.entry(e.nnac).or_insert(0) += 1;
        }
        let max = counts.keys().next_back().copied().unwrap_or(0);
        let maximizers = entries.iter().filter(|e| e.nnac == max).map(|e| e.graph6.clone()).collect();
        NnacHistogram {
            counts,
            max,
            maximizers,
        }
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

pub fn nnac_histogram(n: usize) -> Result<NnacHistogram> {
    Ok(NnacHistogram::from_entries(&enumerate_minimally_rigid(n)?))
}

/// Violations of the characterisation "nnac = 1 iff the graph is in the
/// glued family with one prism, or is a 0-extension graph with one open
/// step", under two readings of "one prism".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjectureReport {
    pub checked: usize,
    pub with_unique_nac: usize,
    /// "One prism" read as one prism step in the decomposition.
    pub prism_steps_violations: Vec<String>,
    /// "One prism" read as exactly one prism subgraph.
    pub prism_subgraph_violations: Vec<String>,
}

impl ConjectureReport {
    pub fn is_clean(&self) -> bool {
        self.prism_steps_violations.is_empty() && self.prism_subgraph_violations.is_empty()
    }
}

pub fn check_conjecture_61(entries: &[CatalogEntry]) -> ConjectureReport {
    let mut r = ConjectureReport {
        checked: entries.len(),
        ..Default::default()
    };
    for e in entries {
        let unique = e.nnac == 1;
        r.with_unique_nac += usize::from(unique);
        let open_once = e.zero_extension && e.min_open_steps == Some(1);
        let by_steps = e.gsc_prisms == Some(1) || open_once;
        let by_subgraphs = (e.is_gsc() && e.prism_subgraphs == 1) || open_once;
        if unique != by_steps {
            r.prism_steps_violations.push(e.graph6.clone());
        }
        if unique != by_subgraphs {
            r.prism_subgraph_violations.push(e.graph6.clone());
        }
    }
    r
}

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    n: usize,
    count: usize,
}

/// JSON lines: a header, then one entry per line.
pub fn write_catalog_jsonl(n: usize, entries: &[CatalogEntry]) -> String {
    let header = Header {
        format: CATALOG_FORMAT.into(),
        version: CATALOG_VERSION,
        n,
        count: entries.len(),
    };
    let mut out = serde_json::to_string(&header).expect("serialisable");
    out.push('\n');
    for e in entries {
        out.push_str(&serde_json::to_string(e).expect("serialisable"));
        out.push('\n');
    }
    out
}

pub fn read_catalog_jsonl(text: &str) -> Result<(usize, Vec<CatalogEntry>)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let parse_err = |line: usize, l: &str, e: serde_json::Error| Error::Parse {
        line: line + 1,
        token: l.chars().take(40).collect(),
        reason: e.to_string(),
    };
    let (i, first) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        token: String::new(),
        reason: "empty catalog".into(),
    })?;
    let header: Header = serde_json::from_str(first).map_err(|e| parse_err(i, first, e))?;
    if header.format != CATALOG_FORMAT || header.version != CATALOG_VERSION {
        return Err(Error::Parse {
            line: 1,
            token: first.to_string(),
            reason: format!("expected {CATALOG_FORMAT} version {CATALOG_VERSION}"),
        });
    }
    let entries = lines
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| parse_err(i, l, e)))
        .collect::<Result<Vec<CatalogEntry>>>()?;
    if entries.len() != header.count {
        return Err(Error::Parse {
            line: 1,
            token: first.to_string(),
            reason: format!("header announces {} entries, found {}", header.count, entries.len()),
        });
    }
    Ok((header.n, entries))
}
