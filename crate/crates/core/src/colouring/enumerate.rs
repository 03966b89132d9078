//! Depth-first enumeration of NAC-colourings over partial colourings.
//!
//! Edges are coloured one at a time, red first. A partial colouring is kept
//! only while
//! - no edge joins two vertices of one component of the other colour, and
//! - neither colour's edges connect every component of the graph (a
//!   monochromatic spanning forest forces the other colour to close an
//!   almost-monochromatic cycle, or to be absent).
//!
//! Edge 0 is fixed blue, so every colour-swap class is reached exactly once
//! and the number of leaves is `nnac` itself.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::uf::RollbackUnionFind;
use super::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};

const BLUE: u8 = 1;
const RED: u8 = 2;

/// Incrementally maintained partial colouring with undo.
pub struct PartialNacState<'g> {
    g: &'g Graph,
    colour: Vec<u8>,
    /// Components of the blue edges (index 0) and of the red edges (1).
    uf: [RollbackUnionFind; 2],
    base_components: usize,
    /// Coloured edges in order, with whether the colouring merged components.
    trail: Vec<(usize, bool)>,
    incident: Vec<Vec<(usize, usize)>>,
}

impl<'g> PartialNacState<'g> {
    pub fn new(g: &'g Graph) -> Self {
        PartialNacState {
            g,
            colour: vec![0; g.m()],
            uf: [RollbackUnionFind::new(g.n()), RollbackUnionFind::new(g.n())],
            base_components: connected_components(g).len(),
            trail: Vec::with_capacity(g.m()),
            incident: g.vertices().map(|v| g.incident(v).collect()).collect(),
        }
    }

    pub fn colour_of(&self, e: usize) -> Option<bool> {
        match self.colour[e] {
            RED => Some(true),
            BLUE => Some(false),
            _ => None,
        }
    }

    /// Number of coloured edges.
    pub fn depth(&self) -> usize {
        self.trail.len()
    }

    /// Colours `e`, unless that breaks one of the invariants.
    pub fn try_colour(&mut self, e: usize, red: bool) -> bool {
        debug_assert_eq!(self.colour[e], 0, "edge {e} already coloured");
        let (a, b) = self.g.edge(e);
        let (mine, theirs, other_code) = if red { (1, 0, BLUE) } else { (0, 1, RED) };
        if self.uf[theirs].same(a, b) {
            return false;
        }
        let uf = &self.uf[mine];
        let (ra, rb) = (uf.find(a), uf.find(b));
        let merged = ra != rb;
        if merged {
            let (small, big) = if uf.size_of_root(ra) <= uf.size_of_root(rb) { (ra, rb) } else { (rb, ra) };
            for x in uf.members(small) {
                for &(y, f) in &self.incident[x] {
                    if self.colour[f] == other_code && uf.find(y) == big {
                        return false;
                    }
                }
            }
            let uf = &mut self.uf[mine];
            uf.union_roots(ra, rb);
            if uf.components() == self.base_components {
                uf.undo();
                return false;
            }
        }
        self.colour[e] = if red { RED } else { BLUE };
        self.trail.push((e, merged));
        true
    }

    /// Uncolours the most recently coloured edge.
    pub fn undo(&mut self) {
        let (e, merged) = self.trail.pop().expect("nothing to undo");
        if merged {
            let side = usize::from(self.colour[e] == RED);
            self.uf[side].undo();
        }
        self.colour[e] = 0;
    }

    /// The colouring, with uncoloured edges reported blue.
    pub fn colouring(&self) -> EdgeColouring {
        EdgeColouring::from_red_edges(self.colour.len(), (0..self.colour.len()).filter(|&e| self.colour[e] == RED))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeOrder {
    /// Canonical edge order.
    #[default]
    Canonical,
    /// Starting from edge 0, prefer edges whose endpoints are already
    /// touched, so cycles close (and prune) early.
    CloseCyclesEarly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NacOptions {
    /// Stop at the first NAC-colouring found (always single-threaded).
    pub first_only: bool,
    /// Worker threads; 0 means one per available core.
    pub threads: usize,
    pub order: EdgeOrder,
}

impl Default for NacOptions {
    fn default() -> Self {
        NacOptions {
            first_only: false,
            threads: 1,
            order: EdgeOrder::Canonical,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NacSearch {
    /// `nnac`, or 0/1 with `first_only`.
    pub count: BigUint,
    /// Search-tree nodes visited.
    pub nodes: u64,
    /// The first colouring found, when `first_only` was set.
    pub first: Option<EdgeColouring>,
}

fn edge_order(g: &Graph, order: EdgeOrder) -> Vec<usize> {
    match order {
        EdgeOrder::Canonical => (0..g.m()).collect(),
        EdgeOrder::CloseCyclesEarly => {
            let mut touched = vec![false; g.n()];
            let mut used = vec![false; g.m()];
            let mut out = Vec::with_capacity(g.m());
            let mut next = 0;
            for _ in 0..g.m() {
                let e = next;
                used[e] = true;
                out.push(e);
                let (a, b) = g.edge(e);
                touched[a] = true;
                touched[b] = true;
                let score = |f: usize| {
                    let (x, y) = g.edge(f);
                    usize::from(touched[x]) + usize::from(touched[y])
                };
                next = (0..g.m())
                    .filter(|&f| !used[f])
                    .max_by_key(|&f| (score(f), std::cmp::Reverse(f)))
                    .unwrap_or(0);
            }
            out
        }
    }
}

type Sink<'s> = Mutex<&'s mut (dyn FnMut(&EdgeColouring) + Send + 's)>;

struct Worker<'a, 's> {
    order: &'a [usize],
    first_only: bool,
    stop: &'a AtomicBool,
    sink: Option<&'a Sink<'s>>,
    count: u64,
    nodes: u64,
    first: Option<EdgeColouring>,
}

impl Worker<'_, '_> {
    fn dfs(&mut self, st: &mut PartialNacState, i: usize) {
        if self.stop.load(Ordering::Relaxed) {
            return;
        }
        self.nodes += 1;
        if i == self.order.len() {
            self.count += 1;
            if self.first_only || self.sink.is_some() {
                let c = st.colouring();
                if let Some(sink) = self.sink {
                    (sink.lock().expect("sink poisoned"))(&c);
                }
                if self.first_only {
                    self.first = Some(c);
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
            return;
        }
        let e = self.order[i];
        for red in [true, false] {
            if red && e == 0 {
                continue;
            }
            if st.try_colour(e, red) {
                self.dfs(st, i + 1);
                st.undo();
            }
        }
    }
}

/// Counts NAC-colourings up to colour swap, without emitting them.
pub fn enumerate_nac(g: &Graph, opts: &NacOptions) -> Result<NacSearch> {
    run(g, opts, None)
}

/// Like [`enumerate_nac`], passing every colouring (edge 0 blue) to `sink`.
/// Single-threaded runs emit in decreasing order of the colour string read
/// from edge 0 with red above blue; parallel runs in no fixed order.
pub fn enumerate_nac_with<F>(g: &Graph, opts: &NacOptions, mut sink: F) -> Result<NacSearch>
where
    F: FnMut(&EdgeColouring) + Send,
{
    let sink: Sink<'_> = Mutex::new(&mut sink);
    run(g, opts, Some(&sink))
}

fn run(
    g: &Graph,
    opts: &NacOptions,
    sink: Option<&Sink<'_>>,
) -> Result<NacSearch> {
    if g.m() == 0 {
        return Err(Error::NoEdges { op: "enumerate_nac" });
    }
    let order = edge_order(g, opts.order);
    let stop = AtomicBool::new(false);
    let threads = if opts.threads == 0 {
        rayon::current_num_threads()
    } else {
        opts.threads
    };
    if opts.first_only || threads <= 1 {
        let mut w = Worker {
            order: &order,
            first_only: opts.first_only,
            stop: &stop,
            sink,
            count: 0,
            nodes: 0,
            first: None,
        };
        w.dfs(&mut PartialNacState::new(g), 0);
        return Ok(NacSearch {
            count: BigUint::from(w.count),
            nodes: w.nodes,
            first: w.first,
        });
    }

    // Split the tree into prefixes, then search below each one in parallel.
    let target = 32 * threads;
    let mut frontier: Vec<Vec<bool>> = vec![Vec::new()];
    let mut prefix_nodes = 0u64;
    let mut depth = 0;
    while frontier.len() < target && depth < order.len() {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for prefix in &frontier {
            prefix_nodes += 1;
            let mut st = PartialNacState::new(g);
            replay(&mut st, &order, prefix);
            let e = order[depth];
            for red in [true, false] {
                if red && e == 0 {
                    continue;
                }
                if st.try_colour(e, red) {
                    let mut p = prefix.clone();
                    p.push(red);
                    next.push(p);
                    st.undo();
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let (count, nodes) = pool.install(|| {
        frontier
            .par_iter()
            .map(|prefix| {
                let mut st = PartialNacState::new(g);
                replay(&mut st, &order, prefix);
                let mut w = Worker {
                    order: &order,
                    first_only: false,
                    stop: &stop,
                    sink,
                    count: 0,
                    nodes: 0,
                    first: None,
                };
                w.dfs(&mut st, prefix.len());
                (BigUint::from(w.count), w.nodes)
            })
            .reduce(|| (BigUint::default(), 0), |a, b| (a.0 + b.0, a.1 + b.1))
    });
    Ok(NacSearch {
        count,
        nodes: nodes + prefix_nodes,
        first: None,
    })
}

fn replay(st: &mut PartialNacState, order: &[usize], prefix: &[bool]) {
    for (i, &red) in prefix.iter().enumerate() {
        let ok = st.try_colour(order[i], red);
        debug_assert!(ok, "prefixes are feasible");
    }
}
