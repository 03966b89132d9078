//! Red/blue edge colourings: NAC and NAP validation, the branch-and-prune
//! enumerator, exact counting and constructions.
//!
//! A NAC-colouring is surjective and has no cycle with exactly one edge of
//! some colour; equivalently every monochromatic component is induced. A
//! NAP-colouring additionally has no alternating path on three edges and
//! only monochromatic triangles.

mod construct;
mod count;
mod enumerate;
mod local;
mod uf;

pub use construct::{construct_nac_minimally_rigid, NacConstruction, NacMethod};
pub use count::{count_nac, count_nac_with, count_nac_complete_bipartite, nnac_upper_bound};
pub use enumerate::{enumerate_nac, enumerate_nac_with, EdgeOrder, NacOptions, NacSearch, PartialNacState};
pub use local::locally_nac_check;
pub use uf::RollbackUnionFind;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Graph, Separation};

/// Colouring of the edges in canonical order; a set bit means red.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColouring {
    len: usize,
    bits: Vec<u64>,
}

impl EdgeColouring {
    /// All blue.
    pub fn new(len: usize) -> Self {
        EdgeColouring {
            len,
            bits: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_red_edges<I: IntoIterator<Item = usize>>(len: usize, red: I) -> Self {
        let mut c = Self::new(len);
        for e in red {
            c.set(e, true);
        }
        c
    }

    pub fn from_bools(red: &[bool]) -> Self {
        Self::from_red_edges(red.len(), red.iter().enumerate().filter(|(_, &r)| r).map(|(e, _)| e))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_red(&self, e: usize) -> bool {
        assert!(e < self.len);
        self.bits[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn set(&mut self, e: usize, red: bool) {
        assert!(e < self.len);
        if red {
            self.bits[e / 64] |= 1 << (e % 64);
        } else {
            self.bits[e / 64] &= !(1 << (e % 64));
        }
    }

    /// The colour-swapped colouring.
    pub fn complement(&self) -> Self {
        let mut c = self.clone();
        for w in &mut c.bits {
            *w = !*w;
        }
        if self.len % 64 != 0 {
            let last = c.bits.len() - 1;
            c.bits[last] &= (1u64 << (self.len % 64)) - 1;
        }
        c
    }

    pub fn red_edges(&self) -> Vec<usize> {
        (0..self.len).filter(|&e| self.is_red(e)).collect()
    }

    pub fn blue_edges(&self) -> Vec<usize> {
        (0..self.len).filter(|&e| !self.is_red(e)).collect()
    }

    /// Both colours occur.
    pub fn is_surjective(&self) -> bool {
        let reds = self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        reds > 0 && reds < self.len
    }

    pub fn to_json(&self) -> Value {
        json!({"red": self.red_edges(), "blue": self.blue_edges()})
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len != g.m() {
            return Err(Error::ColouringLength {
                expected: g.m(),
                got: self.len,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for EdgeColouring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: String = (0..self.len).map(|e| if self.is_red(e) { 'r' } else { 'b' }).collect();
        write!(f, "EdgeColouring({s})")
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// `true` iff no edge of one colour joins two vertices of a single
/// component of the other colour, restricted to the listed edges.
pub(crate) fn no_almost_monochromatic_cycle(g: &Graph, c: &EdgeColouring, edges: &[usize]) -> bool {
    let mut parent = [(0..g.n()).collect::<Vec<_>>(), (0..g.n()).collect::<Vec<_>>()];
    for &e in edges {
        let (a, b) = g.edge(e);
        let p = &mut parent[usize::from(c.is_red(e))];
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    }
    edges.iter().all(|&e| {
        let (a, b) = g.edge(e);
        let other = &mut parent[usize::from(!c.is_red(e))];
        find(other, a) != find(other, b)
    })
}

pub fn is_nac(g: &Graph, c: &EdgeColouring) -> Result<bool> {
    c.check_len(g)?;
    let all: Vec<usize> = (0..g.m()).collect();
    Ok(c.is_surjective() && no_almost_monochromatic_cycle(g, c, &all))
}

/// Surjective, and every edge has an endpoint all of whose edges share a
/// colour.
pub fn is_nap(g: &Graph, c: &EdgeColouring) -> Result<bool> {
    c.check_len(g)?;
    if !c.is_surjective() {
        return Ok(false);
    }
    let mono: Vec<bool> = g
        .vertices()
        .map(|v| {
            let mut cols = g.incident(v).map(|(_, e)| c.is_red(e));
            match cols.next() {
                Some(first) => cols.all(|x| x == first),
                None => true,
            }
        })
        .collect();
    Ok(g.edges().iter().all(|&(a, b)| mono[a] || mono[b]))
}

/// Colours the first side red and the second blue.
pub fn nap_from_separation(g: &Graph, sep: &Separation) -> Result<EdgeColouring> {
    if !sep.is_stable(g) {
        return Err(Error::InvalidSeparation("shared vertices are not a stable set".into()));
    }
    Ok(EdgeColouring::from_red_edges(g.m(), sep.side1().iter().copied()))
}

/// The red/blue edge partition of a NAP-colouring, red side first.
pub fn separation_from_nap(g: &Graph, c: &EdgeColouring) -> Result<Separation> {
    if let Some(v) = g.isolated_vertices().next() {
        return Err(Error::IsolatedVertex(v));
    }
    if !is_nap(g, c)? {
        return Err(Error::NotNap);
    }
    Separation::new(g, c.red_edges(), c.blue_edges())
}
