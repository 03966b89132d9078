use super::{is_nac, nap_from_separation, EdgeColouring};
use crate::error::{Error, Result};
use crate::graph::{components_avoiding, is_stable_set, Graph, Separation, VertexSet};
use crate::rigidity::{PRISM_EDGES, recognize_gsc, rigidity_report, two_tree_peel_order, GlueSite, GscDecomposition, GscOutcome, NotMember, Piece};
use crate::stable_cut::{exhaustive_stable_cut, CutConstraints, EXHAUSTIVE_MAX_N};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NacMethod {
    /// The stable neighbourhood of this vertex is a cut.
    NeighbourhoodCut { vertex: usize },
    /// A minimum stable cut found by exhaustive search.
    ExhaustiveCut { cut: VertexSet },
    /// Decomposition into triangles and prisms; the prism of step `step`
    /// carries the two-triangle colouring and everything else is
    /// monochromatic per piece.
    Decomposition { step: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NacConstruction {
    Colouring { colouring: EdgeColouring, method: NacMethod },
    /// The graph is a 2-tree; the vertex removal order (each removed vertex
    /// has degree 2 with adjacent neighbours) certifies it.
    NoNac { peel_order: Vec<usize> },
}

/// A NAC-colouring of a minimally rigid graph, or a proof that it is a
/// 2-tree and has none.
pub fn construct_nac_minimally_rigid(g: &Graph) -> Result<NacConstruction> {
    if g.n() < 2 || !rigidity_report(g)?.is_minimally_rigid {
        return Err(Error::NotMinimallyRigid);
    }
    if let Some(peel_order) = two_tree_peel_order(g) {
        return Ok(NacConstruction::NoNac { peel_order });
    }
    let (colouring, method) = if let Some(v) = neighbourhood_cut(g) {
        (colouring_from_cut(g, &g.neighbourhood(v))?, NacMethod::NeighbourhoodCut { vertex: v })
    } else {
        let exhaustive = if g.n() <= EXHAUSTIVE_MAX_N {
            exhaustive_stable_cut(g, &CutConstraints::default())?
        } else {
            None
        };
        match exhaustive {
            Some(r) => (colouring_from_cut(g, &r.cut)?, NacMethod::ExhaustiveCut { cut: r.cut }),
            None => match recognize_gsc(g)? {
                GscOutcome::Member(d) => decomposition_colouring(g, &d)?,
                GscOutcome::NotMember(NotMember::StableCut(cut)) => {
                    (colouring_from_cut(g, &cut)?, NacMethod::ExhaustiveCut { cut })
                }
                GscOutcome::NotMember(NotMember::EdgeCount { .. }) => {
                    return Err(Error::Internal("minimally rigid graph with the wrong edge count".into()))
                }
            },
        }
    };
    if !is_nac(g, &colouring)? {
        return Err(Error::Internal(format!("constructed colouring {colouring:?} is not NAC")));
    }
    Ok(NacConstruction::Colouring { colouring, method })
}

/// Smallest vertex whose neighbourhood is a stable cut.
fn neighbourhood_cut(g: &Graph) -> Option<usize> {
    g.vertices().find(|&v| {
        let nv = g.neighbourhood(v);
        nv.len() + 1 < g.n() && is_stable_set(g, &nv)
    })
}

/// Edges touching the first component of `G - cut` against the rest.
fn colouring_from_cut(g: &Graph, cut: &VertexSet) -> Result<EdgeColouring> {
    let comps = components_avoiding(g, cut);
    let Some(first) = comps.first().filter(|_| comps.len() >= 2) else {
        return Err(Error::Internal("not a cut".into()));
    };
    let (side1, side2): (Vec<usize>, Vec<usize>) =
        (0..g.m()).partition(|&e| {
            let (a, b) = g.edge(e);
            first.contains(a) || first.contains(b)
        });
    nap_from_separation(g, &Separation::new(g, side1, side2)?)
}

fn decomposition_colouring(g: &Graph, d: &GscDecomposition) -> Result<(EdgeColouring, NacMethod)> {
    let Some(j) = d.steps.iter().position(|s| s.piece == Piece::Prism) else {
        return Err(Error::Internal("decomposition of a non-2-tree without prisms".into()));
    };
    let edge = |a: usize, b: usize| g.edge_index(a, b).ok_or_else(|| Error::Internal(format!("missing edge {a}-{b}")));
    // None: not yet coloured; Some(true): red.
    let mut colour: Vec<Option<bool>> = vec![None; g.m()];
    let l = d.steps[j].prism.expect("prism steps carry a labelling");
    // triangles blue, matching red
    for (x, y) in PRISM_EDGES {
        colour[edge(l[x], l[y])?] = Some(y - x == 3);
    }
    // Everything built before the prism shares the colour of its glue site.
    let site = d.steps[j].glue.vertices();
    let before = colour[edge(site[0], site[1])?].expect("site lies on the prism");
    for c in colour.iter_mut().filter(|c| c.is_none()) {
        *c = Some(before);
    }
    // Later pieces are monochromatic in the colour of their glue site; their
    // edges were provisionally coloured above, so recolour them in order.
    for step in &d.steps[j + 1..] {
        let site = step.glue.vertices();
        let c = colour[edge(site[0], site[1])?];
        let new: Vec<(usize, usize)> = match (step.piece, step.glue, step.prism) {
            (Piece::Triangle, GlueSite::Edge(a, b), _) => step.new.iter().flat_map(|&w| [(a, w), (b, w)]).collect(),
            (Piece::Prism, _, Some(l)) => PRISM_EDGES.iter().map(|&(x, y)| (l[x], l[y])).collect(),
            _ => Vec::new(),
        };
        for (a, b) in new {
            colour[edge(a, b)?] = c;
        }
    }
    let colouring = EdgeColouring::from_bools(&colour.into_iter().map(|c| c == Some(true)).collect::<Vec<_>>());
    Ok((colouring, NacMethod::Decomposition { step: j }))
}
