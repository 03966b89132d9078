//! Generators for the standard graph families and the frozen fixtures.

mod fixtures;

pub use fixtures::{fixture, fixtures, Fixture};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rigidity::{GlueSite, GscDecomposition, GscStep};

fn need(op: &str, ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{op}: {what}")))
    }
}

pub fn make_path(n: usize) -> Result<Graph> {
    need("make_path", n >= 1, "n must be at least 1")?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    need("make_cycle", n >= 3, "n must be at least 3")?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    need("make_complete", n >= 1, "n must be at least 1")?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Sides `0..n1` and `n1..n1+n2`.
pub fn make_complete_bipartite(n1: usize, n2: usize) -> Result<Graph> {
    need("make_complete_bipartite", n1 >= 1 && n2 >= 1, "both sides need a vertex")?;
    Graph::new(n1 + n2, (0..n1).flat_map(|u| (n1..n1 + n2).map(move |v| (u, v))))
}

/// Triangles `0 1 2` and `3 4 5`, matching `03 14 25`.
pub fn make_prism() -> Graph {
    Graph::new(6, crate::rigidity::PRISM_EDGES).expect("prism")
}

/// Hub 0 joined to a cycle on `1..=rim`.
pub fn make_wheel(rim: usize) -> Result<Graph> {
    need("make_wheel", rim >= 3, "the rim needs at least 3 vertices")?;
    let spokes = (1..=rim).map(|i| (0, i));
    let cycle = (1..=rim).map(|i| (i, i % rim + 1));
    Graph::new(rim + 1, spokes.chain(cycle))
}

const LCG_A: u64 = 6364136223846793005;
const LCG_C: u64 = 1442695040888963407;

/// Pseudo-random 2-tree: vertex `v >= 2` is attached to the edge with index
/// `(s >> 33) % m` in insertion order, where `s` is the next state of the
/// LCG `s' = s * 6364136223846793005 + 1442695040888963407 (mod 2^64)`
/// started at `seed`.
pub fn make_2tree(seed: u64, n: usize) -> Result<Graph> {
    need("make_2tree", n >= 2, "n must be at least 2")?;
    let mut edges = vec![(0, 1)];
    let mut state = seed;
    for v in 2..n {
        state = state.wrapping_mul(LCG_A).wrapping_add(LCG_C);
        let (x, y) = edges[((state >> 33) % edges.len() as u64) as usize];
        edges.push((x, v));
        edges.push((y, v));
    }
    Graph::new(n, edges)
}

/// Vertex roles in `G_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkLabels {
    pub x: usize,
    pub y: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

/// `G_k`: the ladder on `a_i, b_i` (`x = 0, y = 1, a_i = 2i, b_i = 2i + 1`
/// for `i = 1..=k`) capped by the triangle pair on `x, y, a_1, b_1`.
pub fn make_gk(k: usize) -> Result<(Graph, GkLabels)> {
    need("make_gk", k >= 1, "k must be at least 1")?;
    let labels = GkLabels {
        x: 0,
        y: 1,
        a: (1..=k).map(|i| 2 * i).collect(),
        b: (1..=k).map(|i| 2 * i + 1).collect(),
    };
    let (x, y, a, b) = (labels.x, labels.y, &labels.a, &labels.b);
    let mut edges = vec![(x, y), (x, a[0]), (x, b[0]), (y, a[0]), (y, b[0])];
    edges.extend(ladder_edges(a, b));
    Ok((Graph::new(2 * k + 2, edges)?, labels))
}

fn ladder_edges(a: &[usize], b: &[usize]) -> Vec<(usize, usize)> {
    (0..a.len().saturating_sub(1))
        .flat_map(|i| [(a[i], a[i + 1]), (b[i], b[i + 1]), (a[i], b[i + 1]), (b[i], a[i + 1])])
        .collect()
}

/// `G_k` without `x` and `y`: `a_i = 2(i-1)`, `b_i = 2(i-1) + 1`.
pub fn make_ladder(k: usize) -> Graph {
    let a: Vec<usize> = (0..k).map(|i| 2 * i).collect();
    let b: Vec<usize> = (0..k).map(|i| 2 * i + 1).collect();
    Graph::new(2 * k, ladder_edges(&a, &b)).expect("ladder")
}

/// Parses a gluing script. Starting from the edge `0 1`, each token adds
/// a piece with fresh vertices numbered from the current vertex count:
///
/// - `tri@u-v`: a triangle on the edge `uv`;
/// - `prism@u-v`: a prism, `uv` being an edge of one of its triangles;
/// - `prism@u-v/m`: a prism, `uv` being a matching edge;
/// - `prism@u-v-w`: a prism on the triangle `uvw`.
///
/// Tokens are separated by whitespace, commas or semicolons.
pub fn parse_gsc_script(script: &str) -> Result<GscDecomposition> {
    let mut n = 2;
    let mut steps = Vec::new();
    let bad = |tok: &str, why: &str| Error::Parse {
        line: 1,
        token: tok.to_string(),
        reason: why.to_string(),
    };
    for tok in script.split(|c: char| c.is_whitespace() || c == ',' || c == ';').filter(|t| !t.is_empty()) {
        let (kind, site) = tok.split_once('@').ok_or_else(|| bad(tok, "expected piece@site"))?;
        let (site, matching) = match site.strip_suffix("/m") {
            Some(s) => (s, true),
            None => (site, false),
        };
        let vs = site
            .split('-')
            .map(|x| x.parse::<usize>().map_err(|_| bad(tok, "vertices must be integers")))
            .collect::<Result<Vec<_>>>()?;
        let step = match (kind, vs.as_slice(), matching) {
            ("tri", &[u, v], false) => {
                n += 1;
                GscStep::triangle(u, v, n - 1)
            }
            ("prism", &[u, v], false) => {
                n += 4;
                GscStep::prism(GlueSite::Edge(u, v), [u, v, n - 4, n - 3, n - 2, n - 1])
            }
            ("prism", &[u, v], true) => {
                n += 4;
                GscStep::prism(GlueSite::Edge(u, v), [u, n - 4, n - 3, v, n - 2, n - 1])
            }
            ("prism", &[u, v, w], false) => {
                n += 3;
                GscStep::prism(GlueSite::Triangle(u, v, w), [u, v, w, n - 3, n - 2, n - 1])
            }
            _ => return Err(bad(tok, "unknown piece or glue site")),
        };
        steps.push(step);
    }
    Ok(GscDecomposition {
        base_edge: (0, 1),
        steps,
    })
}

/// Builds the graph a gluing script describes; see [`parse_gsc_script`].
pub fn make_gsc(script: &str) -> Result<Graph> {
    parse_gsc_script(script)?.replay()
}

/// `k` copies of `h` sharing the edge `e`. Copy 0 keeps the labels of
/// `h`; copy `i` renumbers the other vertices from `n + (i-1)(n-2)`.
pub fn glue_along_edge(h: &Graph, e: usize, k: usize) -> Result<Graph> {
    need("glue_along_edge", k >= 1, "k must be at least 1")?;
    if e >= h.m() {
        return Err(Error::EdgeOutOfRange { index: e, m: h.m() });
    }
    let n = h.n();
    let (p, q) = h.edge(e);
    let mut edges = h.edges().to_vec();
    for i in 1..k {
        let base = n + (i - 1) * (n - 2);
        let map = |v: usize| {
            if v == p || v == q {
                v
            } else {
                // rank of v among the vertices other than p, q
                base + v - usize::from(v > p) - usize::from(v > q)
            }
        };
        edges.extend(h.edges().iter().filter(|&&ab| ab != (p, q)).map(|&(a, b)| (map(a), map(b))));
    }
    Graph::new(n + (k - 1) * (n - 2), edges)
}
