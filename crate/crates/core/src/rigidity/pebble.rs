//! The (2,3) pebble game.
//!
//! Every vertex starts with two pebbles. An accepted edge is covered by a
//! pebble of one endpoint and oriented away from it. A new edge `uv` is
//! independent iff four pebbles can be gathered on `u` and `v` by reversing
//! directed paths that end at free pebbles.

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug)]
pub struct PebbleGame {
    pebbles: Vec<u8>,
    /// `out[v]`: heads of accepted edges covered by a pebble of `v`.
    out: Vec<Vec<usize>>,
    accepted: Vec<(usize, usize)>,
    // scratch
    parent: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl PebbleGame {
    pub fn new(n: usize) -> Self {
        PebbleGame {
            pebbles: vec![2; n],
            out: vec![Vec::new(); n],
            accepted: Vec::new(),
            parent: vec![usize::MAX; n],
            stamp: vec![0; n],
            epoch: 0,
        }
    }

    /// Plays the game on every edge of `g` in canonical order.
    pub fn from_graph(g: &Graph) -> Self {
        let mut game = PebbleGame::new(g.n());
        for &(u, v) in g.edges() {
            game.add_edge(u, v);
        }
        game
    }

    pub fn n(&self) -> usize {
        self.pebbles.len()
    }

    /// Number of accepted edges, i.e. the rank of the edges offered so far.
    pub fn rank(&self) -> usize {
        self.accepted.len()
    }

    pub fn accepted(&self) -> &[(usize, usize)] {
        &self.accepted
    }

    pub fn free_pebbles(&self, v: usize) -> u8 {
        self.pebbles[v]
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        self.epoch
    }

    /// Moves one free pebble onto `start` along a directed path, never
    /// taking the pebbles of `held` (paths may pass through it). Returns
    /// false if no free pebble is reachable.
    fn fetch_pebble(&mut self, start: usize, held: usize) -> bool {
        let epoch = self.next_epoch();
        self.stamp[start] = epoch;
        let mut stack = vec![start];
        let mut found = None;
        'search: while let Some(x) = stack.pop() {
            for i in 0..self.out[x].len() {
                let y = self.out[x][i];
                if self.stamp[y] == epoch {
                    continue;
                }
                self.stamp[y] = epoch;
                self.parent[y] = x;
                if self.pebbles[y] > 0 && y != held {
                    found = Some(y);
                    break 'search;
                }
                stack.push(y);
            }
        }
        let Some(mut y) = found else {
            return false;
        };
        self.pebbles[y] -= 1;
        while y != start {
            let x = self.parent[y];
            let pos = self.out[x].iter().position(|&t| t == y).expect("edge on path");
            self.out[x].swap_remove(pos);
            self.out[y].push(x);
            y = x;
        }
        self.pebbles[start] += 1;
        true
    }

    /// Tries to hold `want_u` pebbles on `u` and `want_v` on `v`.
    fn gather(&mut self, u: usize, v: usize, want_u: u8, want_v: u8) -> bool {
        while self.pebbles[u] < want_u {
            if !self.fetch_pebble(u, v) {
                return false;
            }
        }
        while self.pebbles[v] < want_v {
            if !self.fetch_pebble(v, u) {
                return false;
            }
        }
        true
    }

    /// True iff adding `uv` to the accepted set keeps it (2,3)-sparse.
    /// Leaves the game in an equivalent state (pebbles may have moved).
    pub fn is_independent(&mut self, u: usize, v: usize) -> bool {
        assert_ne!(u, v, "loops are never independent");
        self.gather(u, v, 2, 2)
    }

    /// Offers edge `uv`; returns whether it was accepted.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.is_independent(u, v) {
            return false;
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        self.accepted.push((u.min(v), u.max(v)));
        true
    }

    /// The rigid component of the accepted edges containing `u` and `v`
    /// (which must lie in a common rigid component, e.g. be an offered
    /// edge). With three pebbles held on `u, v`, it consists of the vertices
    /// that cannot reach any other free pebble.
    pub fn component_of(&mut self, u: usize, v: usize) -> VertexSet {
        // The third pebble may only be reachable from one of the two.
        let ok = self.gather(u, v, 1, 1)
            && (self.pebbles[u] + self.pebbles[v] >= 3 || self.fetch_pebble(u, v) || self.fetch_pebble(v, u));
        assert!(ok, "three pebbles can always be gathered on two vertices");
        let n = self.n();
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            for &y in &self.out[x] {
                rev[y].push(x);
            }
        }
        let mut reaches = vec![false; n];
        let mut stack: Vec<usize> = (0..n)
            .filter(|&z| z != u && z != v && self.pebbles[z] > 0)
            .collect();
        for &z in &stack {
            reaches[z] = true;
        }
        while let Some(y) = stack.pop() {
            for &x in &rev[y] {
                if !reaches[x] {
                    reaches[x] = true;
                    stack.push(x);
                }
            }
        }
        VertexSet::from_vertices(n, (0..n).filter(|&x| !reaches[x]))
    }
}
