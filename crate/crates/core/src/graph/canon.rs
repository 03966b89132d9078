//! Canonical labelling for small graphs by colour refinement plus
//! individualisation, with twin pruning inside cells.

use super::{emit_graph6, Graph};
use crate::error::{Error, Result};

pub const CANONICAL_FORM_MAX_N: usize = 12;

/// Ordered partition: `cells[i]` lists the vertices of cell `i`.
type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.n();
    let mut colour = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                colour[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Partition = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; k];
                    for &w in g.neighbours(v) {
                        counts[colour[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        let changed = next.len() != cells.len();
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |x: usize, other: usize| g.neighbours(x).iter().copied().filter(move |&w| w != other);
    strip(u, v).eq(strip(v, u))
}

/// Upper-triangle adjacency bits of `g` under `order` (position -> vertex).
fn certificate(g: &Graph, order: &[usize]) -> Vec<bool> {
    let n = order.len();
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(order[i], order[j]));
        }
    }
    bits
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(Vec<bool>, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = certificate(g, &order);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, order));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&t| are_twins(g, t, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend(cells[..target].iter().cloned());
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend(cells[target + 1..].iter().cloned());
        search(g, next, best);
    }
}

/// `labelling[v]` = canonical position of vertex `v`.
pub fn canonical_labelling(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > CANONICAL_FORM_MAX_N {
        return Err(Error::SizeLimit {
            op: "canonical_form",
            limit: CANONICAL_FORM_MAX_N,
            n: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    // Start from the degree partition, ordered by degree.
    let max_deg = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
    let mut cells: Partition = vec![Vec::new(); max_deg + 1];
    for v in g.vertices() {
        cells[g.degree(v)].push(v);
    }
    cells.retain(|c| !c.is_empty());
    let mut best = None;
    search(g, cells, &mut best);
    let (_, order) = best.expect("search reaches at least one leaf");
    let mut labelling = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        labelling[v] = pos;
    }
    Ok(labelling)
}

/// Byte string equal for two graphs iff they are isomorphic: the graph6
/// encoding of the canonically relabelled graph.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let labelling = canonical_labelling(g)?;
    Ok(emit_graph6(&g.relabel(&labelling))?.into_bytes())
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
