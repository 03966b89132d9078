use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Greedy peel of degree-2 vertices with adjacent neighbours. Returns the
/// removal order if the graph reduces to a single edge (the two survivors
/// are appended last), i.e. iff `g` is a 2-tree.
pub fn two_tree_peel_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 2 || g.m() != 2 * n - 3 {
        return None;
    }
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    let removable = |v: usize, alive: &[bool], deg: &[usize]| {
        if !alive[v] || deg[v] != 2 {
            return false;
        }
        let mut nb = g.neighbours(v).iter().copied().filter(|&w| alive[w]);
        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
        g.has_edge(a, b)
    };
    let mut stack: Vec<usize> = g.vertices().rev().filter(|&v| removable(v, &alive, &deg)).collect();
    while order.len() + 2 < n {
        let v = loop {
            let v = stack.pop()?;
            if removable(v, &alive, &deg) {
                break v;
            }
        };
        alive[v] = false;
        order.push(v);
        for &w in g.neighbours(v) {
            if alive[w] {
                deg[w] -= 1;
                if removable(w, &alive, &deg) {
                    stack.push(w);
                }
            }
        }
    }
    let rest: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
    if g.has_edge(rest[0], rest[1]) {
        order.extend(rest);
        Some(order)
    } else {
        None
    }
}

pub fn is_2tree(g: &Graph) -> bool {
    two_tree_peel_order(g).is_some()
}

/// Adds vertex `n` adjacent to `u` and `v`. The flag tells whether the
/// extension is open (`uv` not an edge).
pub fn zero_extend(g: &Graph, u: usize, v: usize) -> Result<(Graph, bool)> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidArgument("0-extension needs two distinct vertices".into()));
    }
    let w = g.n();
    let mut edges = g.edges().to_vec();
    edges.extend([(u, w), (v, w)]);
    Ok((Graph::new(w + 1, edges)?, !g.has_edge(u, v)))
}

/// Replaces `v` by adjacent `v1 = v` and `v2 = n` with neighbourhoods `n1`
/// and `n2`.
pub fn vertex_split(g: &Graph, v: usize, n1: &VertexSet, n2: &VertexSet) -> Result<Graph> {
    g.check_vertex(v)?;
    let nv = g.neighbourhood(v);
    let bad = |msg: String| Err(Error::InvalidSplit(msg));
    for (name, s) in [("N1", n1), ("N2", n2)] {
        if let Some(x) = s.iter().find(|&x| x >= g.n() || !nv.contains(x)) {
            return bad(format!("{name} contains {x}, which is not a neighbour of {v}"));
        }
    }
    if n1.union(n2) != nv {
        return bad(format!("N1 and N2 must cover the neighbourhood of {v}"));
    }
    let common = n1.intersection(n2).len();
    if common != 1 {
        return bad(format!("N1 and N2 must share exactly one vertex, they share {common}"));
    }
    let v2 = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(a, b)| a != v && b != v).collect();
    edges.extend(n1.iter().map(|x| (v, x)));
    edges.extend(n2.iter().map(|x| (v2, x)));
    edges.push((v, v2));
    Graph::new(v2 + 1, edges)
}

/// Decides whether `g` arises from `K_2` by 0-extensions, and if so the
/// minimum number of open steps over all construction orders.
///
/// Explores every order of degree-2 removals, memoised on the remaining
/// vertex set.
pub fn recognize_0extension_graph(g: &Graph) -> Result<(bool, Option<usize>)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices {
            op: "recognize_0extension_graph",
            need: 2,
            n,
        });
    }
    if g.m() != 2 * n - 3 {
        return Ok((false, None));
    }
    let mut memo = HashMap::new();
    let best = min_open(g, VertexSet::full(n), &mut memo);
    Ok((best.is_some(), best))
}

fn min_open(g: &Graph, alive: VertexSet, memo: &mut HashMap<VertexSet, Option<usize>>) -> Option<usize> {
    if alive.len() == 2 {
        let v: Vec<usize> = alive.to_vec();
        return g.has_edge(v[0], v[1]).then_some(0);
    }
    if let Some(&r) = memo.get(&alive) {
        return r;
    }
    let mut best: Option<usize> = None;
    for w in alive.iter() {
        let mut nb = g.neighbours(w).iter().copied().filter(|&x| alive.contains(x));
        let (Some(a), Some(b), None) = (nb.next(), nb.next(), nb.next()) else {
            continue;
        };
        let open = usize::from(!g.has_edge(a, b));
        if best.is_some_and(|b| b <= open) {
            continue;
        }
        let mut rest = alive.clone();
        rest.remove(w);
        if let Some(r) = min_open(g, rest, memo) {
            let total = r + open;
            best = Some(best.map_or(total, |b| b.min(total)));
        }
        if best == Some(0) {
            break;
        }
    }
    memo.insert(alive, best);
    best
}
