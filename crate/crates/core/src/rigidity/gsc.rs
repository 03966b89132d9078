//! Graphs built from `K_2` by gluing triangles and 3-prisms along an edge or
//! a 3-cycle, and a backtracking recogniser that either peels a graph back
//! to `K_2` or produces a stable cut.
//!
//! A prism is always recorded with a labelling `[p1, p2, p3, q1, q2, q3]`:
//! triangles `p1p2p3` and `q1q2q3`, matching `piqi`. Gluing along a
//! triangle edge and along a matching edge give different graphs, so the
//! labelling is part of the certificate.

use std::collections::HashSet;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph, VertexSet};
use crate::stable_cut::{algorithm1_stable_cut, exhaustive_stable_cut, CutConstraints, EXHAUSTIVE_MAX_N};

use super::rigidity_report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piece {
    Triangle,
    Prism,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlueSite {
    Edge(usize, usize),
    Triangle(usize, usize, usize),
}

impl GlueSite {
    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            GlueSite::Edge(a, b) => vec![a, b],
            GlueSite::Triangle(a, b, c) => vec![a, b, c],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GscStep {
    pub piece: Piece,
    pub glue: GlueSite,
    /// Vertices introduced by this step.
    pub new: Vec<usize>,
    /// Prism labelling, present iff `piece` is a prism.
    pub prism: Option<[usize; 6]>,
}

pub(crate) const PRISM_EDGES: [(usize, usize); 9] = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];

impl GscStep {
    pub fn triangle(a: usize, b: usize, w: usize) -> Self {
        GscStep {
            piece: Piece::Triangle,
            glue: GlueSite::Edge(a, b),
            new: vec![w],
            prism: None,
        }
    }

    pub fn prism(glue: GlueSite, labelling: [usize; 6]) -> Self {
        let glued = glue.vertices();
        GscStep {
            piece: Piece::Prism,
            glue,
            new: labelling.iter().copied().filter(|v| !glued.contains(v)).collect(),
            prism: Some(labelling),
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        match (self.piece, self.glue, self.prism) {
            (Piece::Triangle, GlueSite::Edge(a, b), _) => self.new.iter().flat_map(|&w| [(a, w), (b, w)]).collect(),
            (Piece::Triangle, GlueSite::Triangle(..), _) => Vec::new(),
            (Piece::Prism, _, Some(l)) => PRISM_EDGES.iter().map(|&(i, j)| (l[i], l[j])).collect(),
            (Piece::Prism, _, None) => Vec::new(),
        }
    }
}

/// Construction certificate for membership in the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GscDecomposition {
    pub base_edge: (usize, usize),
    pub steps: Vec<GscStep>,
}

impl GscDecomposition {
    pub fn prisms(&self) -> usize {
        self.steps.iter().filter(|s| s.piece == Piece::Prism).count()
    }

    /// Number of gluing steps; an upper bound on the shortest construction.
    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    /// Rebuilds the graph, checking every step is a legal gluing. Vertex ids
    /// must end up being exactly `0..n`.
    pub fn replay(&self) -> Result<Graph> {
        let bad = |msg: String| Err(Error::InvalidGlue(msg));
        let (a, b) = self.base_edge;
        if a == b {
            return bad("base edge needs two distinct vertices".into());
        }
        let mut present: HashSet<usize> = [a, b].into_iter().collect();
        let mut edges: HashSet<(usize, usize)> = [(a.min(b), a.max(b))].into_iter().collect();
        let has = |edges: &HashSet<(usize, usize)>, x: usize, y: usize| edges.contains(&(x.min(y), x.max(y)));
        for (i, step) in self.steps.iter().enumerate() {
            let glued = step.glue.vertices();
            let mut distinct = glued.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != glued.len() {
                return bad(format!("step {i}: glue site repeats a vertex"));
            }
            for (k, &x) in glued.iter().enumerate() {
                if !present.contains(&x) {
                    return bad(format!("step {i}: glue vertex {x} does not exist yet"));
                }
                for &y in &glued[k + 1..] {
                    if !has(&edges, x, y) {
                        return bad(format!("step {i}: glue site edge {x}-{y} is missing"));
                    }
                }
            }
            for &w in &step.new {
                if !present.insert(w) {
                    return bad(format!("step {i}: vertex {w} is not new"));
                }
            }
            match (step.piece, step.glue) {
                (Piece::Triangle, GlueSite::Edge(..)) if step.new.len() != 1 => {
                    return bad(format!("step {i}: a triangle glued along an edge adds one vertex"));
                }
                (Piece::Triangle, GlueSite::Triangle(..)) if !step.new.is_empty() => {
                    return bad(format!("step {i}: a triangle glued along a triangle adds nothing"));
                }
                (Piece::Prism, _) => {
                    let Some(l) = step.prism else {
                        return bad(format!("step {i}: prism step without labelling"));
                    };
                    let mut ids = l.to_vec();
                    ids.sort_unstable();
                    ids.dedup();
                    let mut expect: Vec<usize> = glued.iter().chain(&step.new).copied().collect();
                    expect.sort_unstable();
                    if ids.len() != 6 || ids != expect {
                        return bad(format!("step {i}: prism labelling must be the glue site plus the new vertices"));
                    }
                    let pos = |x: usize| l.iter().position(|&y| y == x).unwrap();
                    let fits = match step.glue {
                        GlueSite::Edge(x, y) => {
                            let (p, q) = (pos(x).min(pos(y)), pos(x).max(pos(y)));
                            PRISM_EDGES.contains(&(p, q))
                        }
                        GlueSite::Triangle(..) => {
                            let mut p: Vec<usize> = glued.iter().map(|&x| pos(x)).collect();
                            p.sort_unstable();
                            p == [0, 1, 2] || p == [3, 4, 5]
                        }
                    };
                    if !fits {
                        return bad(format!("step {i}: glue site is not an edge or triangle of the prism"));
                    }
                }
                _ => {}
            }
            for (x, y) in step.edges() {
                edges.insert((x.min(y), x.max(y)));
            }
        }
        let n = present.len();
        if let Some(&x) = present.iter().find(|&&x| x >= n) {
            return bad(format!("vertex ids must be 0..{n}, found {x}"));
        }
        Graph::new(n, edges)
    }

    pub fn to_json(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| {
                let glue = match s.glue {
                    GlueSite::Edge(a, b) => json!({"type": "edge", "at": [a, b]}),
                    GlueSite::Triangle(a, b, c) => json!({"type": "triangle", "at": [a, b, c]}),
                };
                let mut v = json!({
                    "piece": match s.piece { Piece::Triangle => "triangle", Piece::Prism => "prism" },
                    "glue": glue,
                    "new": s.new,
                });
                if let Some(l) = s.prism {
                    v["prism"] = json!(l);
                }
                v
            })
            .collect();
        json!({
            "base": "K2",
            "base_edge": [self.base_edge.0, self.base_edge.1],
            "steps": steps,
            "prisms": self.prisms(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidArgument(format!("decomposition JSON: {msg}"));
        let ids = |v: &Value| -> Result<Vec<usize>> {
            v.as_array()
                .ok_or_else(|| bad("expected an array of vertex ids"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("vertex ids are integers")))
                .collect()
        };
        if v.get("base").and_then(Value::as_str) != Some("K2") {
            return Err(bad("base must be \"K2\""));
        }
        let base = ids(v.get("base_edge").ok_or_else(|| bad("missing base_edge"))?)?;
        let [a, b] = base[..] else {
            return Err(bad("base_edge has two vertices"));
        };
        let mut steps = Vec::new();
        for s in v.get("steps").and_then(Value::as_array).ok_or_else(|| bad("missing steps"))? {
            let piece = match s.get("piece").and_then(Value::as_str) {
                Some("triangle") => Piece::Triangle,
                Some("prism") => Piece::Prism,
                _ => return Err(bad("piece is \"triangle\" or \"prism\"")),
            };
            let glue_v = s.get("glue").ok_or_else(|| bad("missing glue"))?;
            let at = ids(glue_v.get("at").ok_or_else(|| bad("missing glue.at"))?)?;
            let glue = match (glue_v.get("type").and_then(Value::as_str), &at[..]) {
                (Some("edge"), &[x, y]) => GlueSite::Edge(x, y),
                (Some("triangle"), &[x, y, z]) => GlueSite::Triangle(x, y, z),
                _ => return Err(bad("glue is an edge (2 ids) or a triangle (3 ids)")),
            };
            let new = ids(s.get("new").ok_or_else(|| bad("missing new"))?)?;
            let prism = match s.get("prism") {
                Some(p) => Some(<[usize; 6]>::try_from(ids(p)?).map_err(|_| bad("prism has six vertices"))?),
                None => None,
            };
            steps.push(GscStep { piece, glue, new, prism });
        }
        Ok(GscDecomposition { base_edge: (a, b), steps })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotMember {
    /// Wrong edge count: members have exactly `2n - 3` edges.
    EdgeCount { m: usize, expected: usize },
    /// A stable cut, which no member has.
    StableCut(VertexSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GscOutcome {
    Member(GscDecomposition),
    NotMember(NotMember),
}

impl GscOutcome {
    pub fn decomposition(&self) -> Option<&GscDecomposition> {
        match self {
            GscOutcome::Member(d) => Some(d),
            GscOutcome::NotMember(_) => None,
        }
    }
}

pub fn recognize_gsc(g: &Graph) -> Result<GscOutcome> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices {
            op: "recognize_gsc",
            need: 2,
            n,
        });
    }
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    if g.m() != 2 * n - 3 {
        return Ok(GscOutcome::NotMember(NotMember::EdgeCount {
            m: g.m(),
            expected: 2 * n - 3,
        }));
    }
    let mut peeler = Peeler {
        g,
        failed: HashSet::new(),
    };
    if let Some((base_edge, steps)) = peeler.peel(VertexSet::full(n)) {
        let d = GscDecomposition { base_edge, steps };
        debug_assert_eq!(d.replay().as_ref(), Ok(g));
        return Ok(GscOutcome::Member(d));
    }
    Ok(GscOutcome::NotMember(NotMember::StableCut(witness_cut(g)?)))
}

fn witness_cut(g: &Graph) -> Result<VertexSet> {
    let report = rigidity_report(g)?;
    if report.is_flexible() {
        let (u, v) = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .find(|&(u, v)| !report.share_component(u, v))
            .ok_or_else(|| Error::Internal("flexible graph with all pairs in one component".into()))?;
        return Ok(algorithm1_stable_cut(g, u, v)?.cut);
    }
    if g.n() > EXHAUSTIVE_MAX_N {
        return Err(Error::SizeLimit {
            op: "recognize_gsc stable-cut witness",
            limit: EXHAUSTIVE_MAX_N,
            n: g.n(),
        });
    }
    exhaustive_stable_cut(g, &CutConstraints::default())?
        .map(|r| r.cut)
        .ok_or_else(|| Error::Internal("peeling failed but no stable cut exists".into()))
}

struct Peeler<'a> {
    g: &'a Graph,
    failed: HashSet<VertexSet>,
}

impl Peeler<'_> {
    fn alive_neighbours<'b>(&'b self, alive: &'b VertexSet, v: usize) -> impl Iterator<Item = usize> + 'b {
        self.g.neighbours(v).iter().copied().filter(move |&w| alive.contains(w))
    }

    fn degree(&self, alive: &VertexSet, v: usize) -> usize {
        self.alive_neighbours(alive, v).count()
    }

    /// Returns the base edge and the steps in construction order.
    fn peel(&mut self, alive: VertexSet) -> Option<((usize, usize), Vec<GscStep>)> {
        if alive.len() == 2 {
            let v = alive.to_vec();
            return self.g.has_edge(v[0], v[1]).then(|| ((v[0], v[1]), Vec::new()));
        }
        if self.failed.contains(&alive) {
            return None;
        }
        for (removed, step) in self.candidates(&alive) {
            let rest = alive.difference(&removed);
            if let Some((base, mut steps)) = self.peel(rest) {
                steps.push(step);
                return Some((base, steps));
            }
        }
        self.failed.insert(alive);
        None
    }

    fn candidates(&self, alive: &VertexSet) -> Vec<(VertexSet, GscStep)> {
        let g = self.g;
        let universe = g.n();
        let mut out = Vec::new();
        let deg: Vec<usize> = (0..universe)
            .map(|v| if alive.contains(v) { self.degree(alive, v) } else { 0 })
            .collect();
        // triangle along an edge
        for w in alive.iter().filter(|&w| deg[w] == 2) {
            let nb: Vec<usize> = self.alive_neighbours(alive, w).collect();
            if g.has_edge(nb[0], nb[1]) {
                out.push((VertexSet::from_vertices(universe, [w]), GscStep::triangle(nb[0], nb[1], w)));
            }
        }
        // prism along a triangle: a triangle of degree-3 vertices matched to
        // another triangle
        for t1 in alive.iter().filter(|&v| deg[v] == 3) {
            for t2 in self.alive_neighbours(alive, t1).filter(|&v| v > t1 && deg[v] == 3) {
                for t3 in self.alive_neighbours(alive, t2).filter(|&v| v > t2 && deg[v] == 3) {
                    if !g.has_edge(t1, t3) {
                        continue;
                    }
                    let t = [t1, t2, t3];
                    let ext: Vec<usize> = t
                        .iter()
                        .map(|&x| self.alive_neighbours(alive, x).find(|y| !t.contains(y)).unwrap())
                        .collect();
                    let (x, y, z) = (ext[0], ext[1], ext[2]);
                    if x == y || y == z || x == z || !(g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z)) {
                        continue;
                    }
                    let mut p = [(x, t1), (y, t2), (z, t3)];
                    p.sort_unstable();
                    let labelling = [p[0].0, p[1].0, p[2].0, p[0].1, p[1].1, p[2].1];
                    out.push((
                        VertexSet::from_vertices(universe, t),
                        GscStep::prism(GlueSite::Triangle(p[0].0, p[1].0, p[2].0), labelling),
                    ));
                }
            }
        }
        // prism along an edge: four degree-3 vertices hanging off an edge
        let mut seen = HashSet::new();
        for (p, q) in g.edges().iter().copied().filter(|&(a, b)| alive.contains(a) && alive.contains(b)) {
            let starts: Vec<usize> = self
                .alive_neighbours(alive, p)
                .chain(self.alive_neighbours(alive, q))
                .filter(|&s| s != p && s != q && deg[s] == 3)
                .collect();
            for s in starts {
                let Some(w) = self.hanging_quad(alive, &deg, p, q, s) else {
                    continue;
                };
                if !seen.insert((p, q, w.clone())) {
                    continue;
                }
                if let Some(labelling) = prism_labelling(g, &w, p, q) {
                    out.push((w, GscStep::prism(GlueSite::Edge(p, q), labelling)));
                }
            }
        }
        // bigger pieces first keeps certificates short
        out.sort_by_key(|(w, _)| std::cmp::Reverse(w.len()));
        out
    }

    /// The component of `alive - {p, q}` containing `s`, if it consists of
    /// exactly four degree-3 vertices.
    fn hanging_quad(&self, alive: &VertexSet, deg: &[usize], p: usize, q: usize, s: usize) -> Option<VertexSet> {
        let mut w = VertexSet::new(self.g.n());
        w.insert(s);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in self.alive_neighbours(alive, x) {
                if y == p || y == q || w.contains(y) {
                    continue;
                }
                if deg[y] != 3 || w.len() == 4 {
                    return None;
                }
                w.insert(y);
                stack.push(y);
            }
        }
        (w.len() == 4).then_some(w)
    }
}

/// Labels the six vertices `w + {p, q}` as a prism if they induce one.
fn prism_labelling(g: &Graph, w: &VertexSet, p: usize, q: usize) -> Option<[usize; 6]> {
    let mut six = w.to_vec();
    six.extend([p, q]);
    six.sort_unstable();
    let inside = |x: usize| six.iter().filter(|&&y| g.has_edge(x, y)).count();
    if six.iter().any(|&x| inside(x) != 3) {
        return None;
    }
    // 3-regular on six vertices: the prism or K_{3,3}; only the prism has
    // triangles, exactly two of them.
    let mut triangles = Vec::new();
    for (i, &a) in six.iter().enumerate() {
        for (j, &b) in six.iter().enumerate().skip(i + 1) {
            for &c in &six[j + 1..] {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    triangles.push([a, b, c]);
                }
            }
        }
    }
    if triangles.len() != 2 {
        return None;
    }
    let (ta, tb) = if triangles[0].contains(&p) {
        (triangles[0], triangles[1])
    } else {
        (triangles[1], triangles[0])
    };
    let mut ps: Vec<usize> = vec![p];
    if ta.contains(&q) {
        ps.push(q);
    }
    ps.extend(ta.iter().copied().filter(|&x| x != p && x != q));
    let mate = |x: usize| *tb.iter().find(|&&y| g.has_edge(x, y)).unwrap();
    Some([ps[0], ps[1], ps[2], mate(ps[0]), mate(ps[1]), mate(ps[2])])
}
