use super::StableCutResult;
use crate::error::{Error, Result};
use crate::graph::{contract_edge_with_map, is_biconnected, is_connected, is_stable_set, Graph, VertexSet};
use crate::rigidity::{rigidity_report, RigidityReport};

/// Cost counters for one run of the polynomial stable-cut search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Algorithm1Stats {
    /// Recursion levels, including the final one.
    pub levels: usize,
    /// Sum over levels of `n^2 + m` for the working graph of that level,
    /// i.e. the cost of one neighbourhood-stability test plus one pass over
    /// the edges.
    pub work: u64,
}

/// A stable cut of the connected flexible graph `g` separating `u` and `v`,
/// which must not lie in a common rigid component.
pub fn algorithm1_stable_cut(g: &Graph, u: usize, v: usize) -> Result<StableCutResult> {
    algorithm1_with_stats(g, u, v).map(|(r, _)| r)
}

pub fn algorithm1_with_stats(g: &Graph, u: usize, v: usize) -> Result<(StableCutResult, Algorithm1Stats)> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidArgument("u and v must be distinct".into()));
    }
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let report = rigidity_report(g)?;
    if !report.is_flexible() {
        return Err(Error::NotFlexible);
    }
    if report.share_component(u, v) {
        return Err(Error::CommonRigidComponent(u, v));
    }
    let mut stats = Algorithm1Stats::default();
    let mut work = complete_components(g, &report);
    let mut orig: Vec<usize> = (0..g.n()).collect();
    let (mut u, mut v) = (u, v);
    loop {
        stats.levels += 1;
        let n = work.n() as u64;
        stats.work += n * n + work.m() as u64;
        let nu = work.neighbourhood(u);
        if is_stable_set(&work, &nu) {
            let cut = VertexSet::from_vertices(g.n(), nu.iter().map(|x| orig[x]));
            let result = StableCutResult {
                cut,
                separates: Some((orig[u], orig[v])),
                avoids: None,
            };
            result.validate(g)?;
            return Ok((result, stats));
        }
        let (x1, x2) = smallest_adjacent_pair(&work, u);
        let mut next = None;
        for x in [x1, x2] {
            let e = work.edge_index(u, x).expect("x is a neighbour of u");
            let (contracted, merged, map) = contract_edge_with_map(&work, e)?;
            let report = rigidity_report(&contracted)?;
            if !report.share_component(merged, map[v]) {
                next = Some((contracted, report, merged, map));
                break;
            }
        }
        let (contracted, report, merged, map) = next.ok_or_else(|| {
            Error::Internal("both contractions put u and v in a common rigid component".into())
        })?;
        let mut new_orig = vec![usize::MAX; contracted.n()];
        for (old, &new) in map.iter().enumerate() {
            if new != merged {
                new_orig[new] = orig[old];
            }
        }
        new_orig[merged] = orig[u];
        orig = new_orig;
        v = map[v];
        u = merged;
        work = complete_components(&contracted, &report);
    }
}

/// Adds every missing edge inside each rigid component.
fn complete_components(g: &Graph, report: &RigidityReport) -> Graph {
    let extra: Vec<(usize, usize)> = report
        .components
        .iter()
        .flat_map(|c| {
            let vs = c.to_vec();
            let mut pairs = Vec::new();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    if !g.has_edge(a, b) {
                        pairs.push((a, b));
                    }
                }
            }
            pairs
        })
        .collect();
    if extra.is_empty() {
        g.clone()
    } else {
        g.with_edges_added(extra)
    }
}

fn smallest_adjacent_pair(g: &Graph, u: usize) -> (usize, usize) {
    let nb = g.neighbours(u);
    for (i, &a) in nb.iter().enumerate() {
        if let Some(&b) = nb[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
            return (a, b);
        }
    }
    unreachable!("caller checked the neighbourhood is not stable")
}

/// A stable cut of the 2-connected flexible graph `g` not containing `v`.
pub fn stable_cut_avoiding(g: &Graph, v: usize) -> Result<StableCutResult> {
    g.check_vertex(v)?;
    if !is_biconnected(g) {
        return Err(Error::NotTwoConnected);
    }
    let report = rigidity_report(g)?;
    if !report.is_flexible() {
        return Err(Error::NotFlexible);
    }
    for u in g.vertices().filter(|&u| u != v && !report.share_component(u, v)) {
        let mut result = algorithm1_stable_cut(g, u, v)?;
        if !result.cut.contains(v) {
            result.avoids = Some(v);
            result.validate(g)?;
            return Ok(result);
        }
    }
    Err(Error::Internal(format!("no vertex avoids a rigid component with {v}")))
}
