//! Generic rigidity in the plane via (2,3)-sparsity, plus the structural
//! recognisers and moves built on top of it.

mod gsc;
mod moves;
mod pebble;

pub(crate) use gsc::PRISM_EDGES;
pub use gsc::{recognize_gsc, GlueSite, GscDecomposition, GscOutcome, GscStep, NotMember, Piece};
pub use moves::{is_2tree, recognize_0extension_graph, two_tree_peel_order, vertex_split, zero_extend};
pub use pebble::PebbleGame;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Size of a maximum (2,3)-sparse edge subset.
pub fn rank(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices {
            op: "rank",
            need: 2,
            n: g.n(),
        });
    }
    Ok(PebbleGame::from_graph(g).rank())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub n: usize,
    pub m: usize,
    pub rank: usize,
    /// Vertex sets of the rigid components, ordered by smallest edge index.
    /// Every edge lies in exactly one of them; isolated vertices in none.
    pub components: Vec<VertexSet>,
    pub is_rigid: bool,
    pub is_minimally_rigid: bool,
}

impl RigidityReport {
    pub fn is_flexible(&self) -> bool {
        !self.is_rigid
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// True iff some rigid component contains both `u` and `v`.
    pub fn share_component(&self, u: usize, v: usize) -> bool {
        self.components.iter().any(|c| c.contains(u) && c.contains(v))
    }

    /// `edge_component[e]` = index of the component containing edge `e`.
    pub fn edge_components(&self, g: &Graph) -> Vec<usize> {
        g.edges()
            .iter()
            .map(|&(a, b)| {
                self.components
                    .iter()
                    .position(|c| c.contains(a) && c.contains(b))
                    .expect("components cover the edges")
            })
            .collect()
    }
}

pub fn rigidity_report(g: &Graph) -> Result<RigidityReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::TooFewVertices {
            op: "rigidity_report",
            need: 1,
            n,
        });
    }
    let mut game = PebbleGame::from_graph(g);
    let rank = game.rank();
    let mut assigned = vec![false; g.m()];
    let mut components = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if assigned[e] {
            continue;
        }
        let comp = game.component_of(u, v);
        for x in comp.iter() {
            for (y, f) in g.incident(x) {
                if comp.contains(y) {
                    assigned[f] = true;
                }
            }
        }
        components.push(comp);
    }
    let is_rigid = n == 1 || rank == 2 * n - 3;
    Ok(RigidityReport {
        n,
        m: g.m(),
        rank,
        components,
        is_rigid,
        is_minimally_rigid: n >= 2 && is_rigid && g.m() == 2 * n - 3,
    })
}

/// Whether `u` and `v` lie in a common rigid component of `g`: they are
/// adjacent, or the edge `uv` would be dependent.
pub fn in_common_rigid_component(g: &Graph, u: usize, v: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidArgument("vertices must be distinct".into()));
    }
    if g.has_edge(u, v) {
        return Ok(true);
    }
    Ok(!PebbleGame::from_graph(g).is_independent(u, v))
}
