use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Connected components in order of their smallest vertex. Isolated
/// vertices are singleton components.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_avoiding(g, &VertexSet::new(g.n()))
}

/// Components of `g - removed`.
pub(crate) fn components_avoiding(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in g.vertices() {
        if comp[s] != usize::MAX || removed.contains(s) {
            continue;
        }
        let id = out.len();
        let mut set = VertexSet::new(g.n());
        comp[s] = id;
        stack.push(s);
        while let Some(v) = stack.pop() {
            set.insert(v);
            for &w in g.neighbours(v) {
                if comp[w] == usize::MAX && !removed.contains(w) {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        out.push(set);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Connected, at least three vertices and no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    if g.n() < 3 || !is_connected(g) {
        return false;
    }
    (0..g.n()).all(|v| components_avoiding(g, &VertexSet::from_vertices(g.n(), [v])).len() == 1)
}

pub fn is_stable_set(g: &Graph, s: &VertexSet) -> bool {
    g.edges().iter().all(|&(a, b)| !(s.contains(a) && s.contains(b)))
}

/// True iff `g - x` has at least two components.
pub fn is_cut(g: &Graph, x: &VertexSet) -> bool {
    components_avoiding(g, x).len() >= 2
}

/// Blocks (maximal 2-connected subgraphs and bridges) as sorted lists of
/// edge indices, ordered by their smallest edge index.
pub fn blocks(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if let Some(v) = g.isolated_vertices().next() {
        return Err(Error::IsolatedVertex(v));
    }
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    // Iterative DFS frame: (vertex, parent edge, next neighbour position).
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        frames.push((root, usize::MAX, 0));
        while let Some(top) = frames.len().checked_sub(1) {
            let (v, pe, pos) = frames[top];
            if pos < g.neighbours(v).len() {
                let w = g.neighbours(v)[pos];
                frames[top].2 += 1;
                let e = g.edge_index(v, w).expect("edge");
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(f) = edge_stack.pop() {
                            block.push(f);
                            if f == pe {
                                break;
                            }
                        }
                        block.sort_unstable();
                        out.push(block);
                    }
                }
            }
        }
    }
    out.sort_by_key(|b| b[0]);
    Ok(out)
}

/// Contracts edge `e`; see [`contract_edge_with_map`].
pub fn contract_edge(g: &Graph, e: usize) -> Result<(Graph, usize)> {
    let (h, merged, _) = contract_edge_with_map(g, e)?;
    Ok((h, merged))
}

/// Contracts edge `e = (a, b)`, `a < b`, merging parallel edges. The merged
/// vertex keeps id `a`; vertices above `b` shift down by one. Returns the
/// new graph, the merged vertex id and the old-to-new vertex map.
pub fn contract_edge_with_map(g: &Graph, e: usize) -> Result<(Graph, usize, Vec<usize>)> {
    g.check_edge_index(e)?;
    let (a, b) = g.edge(e);
    let map: Vec<usize> = (0..g.n())
        .map(|x| match x.cmp(&b) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => a,
            std::cmp::Ordering::Greater => x - 1,
        })
        .collect();
    let edges = g
        .edges()
        .iter()
        .map(|&(x, y)| (map[x], map[y]))
        .filter(|&(x, y)| x != y)
        .collect();
    Ok((Graph::from_edges_dedup(g.n() - 1, edges), a, map))
}

/// A separation `{G1, G2}`: two nonempty edge sets partitioning `E(G)`,
/// each side owning at least one vertex the other side does not touch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    side1: Vec<usize>,
    side2: Vec<usize>,
}

impl Separation {
    /// Validates the separation conditions (not stability).
    pub fn new(g: &Graph, mut side1: Vec<usize>, mut side2: Vec<usize>) -> Result<Self> {
        side1.sort_unstable();
        side2.sort_unstable();
        let bad = |msg: &str| Err(Error::InvalidSeparation(msg.to_string()));
        if side1.is_empty() || side2.is_empty() {
            return bad("both sides must contain an edge");
        }
        let mut seen = vec![0u8; g.m()];
        for &e in side1.iter().chain(&side2) {
            g.check_edge_index(e)?;
            seen[e] += 1;
        }
        if seen.iter().any(|&c| c != 1) {
            return bad("edge sets must partition the edge set");
        }
        let sep = Separation { side1, side2 };
        let (v1, v2) = (sep.vertices(g, 1), sep.vertices(g, 2));
        if v1.is_subset(&v2) || v2.is_subset(&v1) {
            return bad("each side needs a vertex not touched by the other");
        }
        Ok(sep)
    }

    pub fn side1(&self) -> &[usize] {
        &self.side1
    }

    pub fn side2(&self) -> &[usize] {
        &self.side2
    }

    fn vertices(&self, g: &Graph, side: u8) -> VertexSet {
        let edges = if side == 1 { &self.side1 } else { &self.side2 };
        let mut s = VertexSet::new(g.n());
        for &e in edges {
            let (a, b) = g.edge(e);
            s.insert(a);
            s.insert(b);
        }
        s
    }

    /// `V(G1) ∩ V(G2)`.
    pub fn shared_vertices(&self, g: &Graph) -> VertexSet {
        self.vertices(g, 1).intersection(&self.vertices(g, 2))
    }

    pub fn is_stable(&self, g: &Graph) -> bool {
        is_stable_set(g, &self.shared_vertices(g))
    }
}
