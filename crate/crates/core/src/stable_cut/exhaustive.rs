use super::StableCutResult;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rigidity::rigidity_report;

pub const EXHAUSTIVE_MAX_N: usize = 24;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CutConstraints {
    /// The cut must separate these two vertices.
    pub separate: Option<(usize, usize)>,
    /// The cut must not contain this vertex.
    pub avoid: Option<usize>,
    /// No two cut vertices may share a rigid component.
    pub max_one_per_rigid_component: bool,
}

struct Search {
    n: usize,
    adj: Vec<u32>,
    /// `conflict[v]`: vertices that may not join a cut containing `v`.
    conflict: Vec<u32>,
    allowed: u32,
    separate: Option<(usize, usize)>,
}

impl Search {
    /// Whether removing `cut` disconnects the graph (and splits the pair).
    fn accepts(&self, cut: u32) -> bool {
        let full = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let rest = full & !cut;
        if rest.count_ones() < 2 {
            return false;
        }
        let start = match self.separate {
            Some((u, _)) => u,
            None => rest.trailing_zeros() as usize,
        };
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[x] & rest & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        match self.separate {
            Some((_, v)) => seen >> v & 1 == 0,
            None => seen != rest,
        }
    }

    /// Size-`k` stable subsets of `allowed` in lexicographic order.
    fn find(&self, k: usize, from: usize, chosen: u32, blocked: u32) -> Option<u32> {
        if k == 0 {
            return self.accepts(chosen).then_some(chosen);
        }
        for x in from..self.n {
            if (self.allowed & !blocked) >> x & 1 == 0 {
                continue;
            }
            if let Some(c) = self.find(k - 1, x + 1, chosen | 1 << x, blocked | self.conflict[x]) {
                return Some(c);
            }
        }
        None
    }
}

/// A minimum stable cut under the constraints, lexicographically smallest
/// among minimum ones.
pub fn exhaustive_stable_cut(g: &Graph, constraints: &CutConstraints) -> Result<Option<StableCutResult>> {
    let n = g.n();
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::SizeLimit {
            op: "exhaustive_stable_cut",
            limit: EXHAUSTIVE_MAX_N,
            n,
        });
    }
    let mut allowed: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    if let Some((u, v)) = constraints.separate {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument("cannot separate a vertex from itself".into()));
        }
        allowed &= !(1 << u | 1 << v);
    }
    if let Some(v) = constraints.avoid {
        g.check_vertex(v)?;
        allowed &= !(1 << v);
    }
    let adj: Vec<u32> = g.vertices().map(|v| g.neighbours(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    let mut conflict: Vec<u32> = g.vertices().map(|v| adj[v] | 1 << v).collect();
    if constraints.max_one_per_rigid_component && n > 0 {
        for c in rigidity_report(g)?.components {
            let mask = c.iter().fold(0u32, |m, v| m | 1 << v);
            for v in c.iter() {
                conflict[v] |= mask;
            }
        }
    }
    let search = Search {
        n,
        adj,
        conflict,
        allowed,
        separate: constraints.separate,
    };
    for k in 0..=n {
        if let Some(mask) = search.find(k, 0, 0, 0) {
            let cut = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            let result = StableCutResult {
                cut,
                separates: constraints.separate,
                avoids: constraints.avoid,
            };
            result.validate(g)?;
            return Ok(Some(result));
        }
    }
    Ok(None)
}
