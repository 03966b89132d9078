//! Brute-force oracles and seeded corpora shared by the integration tests.
//! The oracles deliberately avoid the library's own algorithms.
#![allow(dead_code)]

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rignac::catalog::{minimally_rigid_classes, CatalogOptions};
use rignac::colouring::EdgeColouring;
use rignac::graph::{canonical_form, connected_components, Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).unwrap()
}

/// Vertex sets of the components of the subgraph formed by `edges`.
fn component_labels(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut label = vec![usize::MAX; n];
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if label[y] == usize::MAX {
                    label[y] = s;
                    q.push_back(y);
                }
            }
        }
    }
    label
}

pub fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let keep: Vec<usize> = g.vertices().filter(|v| !removed.contains(v)).collect();
    if keep.len() <= 1 {
        return true;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|(a, b)| !removed.contains(a) && !removed.contains(b))
        .collect();
    let label = component_labels(g.n(), &edges);
    keep.iter().all(|&v| label[v] == label[keep[0]])
}

/// NAC by definition: surjective and every monochromatic component (as a
/// vertex set) spans no edge of the other colour.
pub fn is_nac_oracle(g: &Graph, red: &[bool]) -> bool {
    if red.iter().all(|&r| r) || red.iter().all(|&r| !r) {
        return false;
    }
    for colour in [true, false] {
        let mono: Vec<(usize, usize)> = g.edges().iter().zip(red).filter(|(_, &r)| r == colour).map(|(&e, _)| e).collect();
        let label = component_labels(g.n(), &mono);
        for (&(a, b), &r) in g.edges().iter().zip(red) {
            if r != colour && label[a] == label[b] {
                return false;
            }
        }
    }
    true
}

/// All NAC-colourings over all `2^m` colourings.
pub fn brute_nac_count(g: &Graph) -> u64 {
    let m = g.m();
    assert!(m <= 24, "brute force limited to 24 edges");
    (0u64..1 << m)
        .filter(|mask| {
            let red: Vec<bool> = (0..m).map(|e| mask >> e & 1 == 1).collect();
            is_nac_oracle(g, &red)
        })
        .count() as u64
}

pub fn brute_nnac(g: &Graph) -> u64 {
    brute_nac_count(g) / 2
}

/// NAP by definition: surjective, monochromatic triangles, no alternating
/// path on three edges.
pub fn is_nap_oracle(g: &Graph, red: &[bool]) -> bool {
    if red.iter().all(|&r| r) || red.iter().all(|&r| !r) {
        return false;
    }
    let col = |a: usize, b: usize| red[g.edge_index(a, b).unwrap()];
    for &(a, b) in g.edges() {
        for &c in g.neighbours(b) {
            if c != a && g.has_edge(a, c) && (col(a, b) != col(b, c) || col(a, b) != col(a, c)) {
                return false;
            }
        }
    }
    for &(b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            for &a in g.neighbours(b) {
                for &d in g.neighbours(c) {
                    if a != c && d != b && a != d && col(a, b) != col(b, c) && col(b, c) != col(c, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Whether the edge set is (2,3)-sparse, checking every vertex subset.
pub fn is_sparse(n: usize, edges: &[(usize, usize)]) -> bool {
    for mask in 0u32..1 << n {
        let k = mask.count_ones() as usize;
        if k < 2 {
            continue;
        }
        let inside = edges.iter().filter(|&&(a, b)| mask >> a & 1 == 1 && mask >> b & 1 == 1).count();
        if inside > 2 * k - 3 {
            return false;
        }
    }
    true
}

/// Size of a largest (2,3)-sparse edge subset.
pub fn brute_rank(g: &Graph) -> usize {
    let m = g.m();
    let mut best = 0;
    for mask in 0u32..1 << m {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let sub: Vec<(usize, usize)> = (0..m).filter(|e| mask >> e & 1 == 1).map(|e| g.edge(e)).collect();
        if is_sparse(g.n(), &sub) {
            best = k;
        }
    }
    best
}

/// Whether some vertex permutation maps `a` onto `b`.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.edges().iter().all(|&(x, y)| b.has_edge(perm[x], perm[y])) {
            return true;
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Every stable cut, as sorted vertex lists.
pub fn brute_stable_cuts(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let s: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if s.iter().any(|&a| s.iter().any(|&b| g.has_edge(a, b))) {
            continue;
        }
        if n - s.len() >= 2 && !connected_without(g, &s) {
            out.push(s);
        }
    }
    out
}

pub fn separates(g: &Graph, cut: &[usize], u: usize, v: usize) -> bool {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|(a, b)| !cut.contains(a) && !cut.contains(b))
        .collect();
    let label = component_labels(g.n(), &edges);
    label[u] != label[v]
}

pub fn is_2connected_oracle(g: &Graph) -> bool {
    g.n() >= 3 && connected_without(g, &[]) && g.vertices().all(|v| connected_without(g, &[v]))
}

pub fn red_vec(c: &EdgeColouring) -> Vec<bool> {
    (0..c.len()).map(|e| c.is_red(e)).collect()
}

/// Random connected graph: a random spanning tree plus `extra` edges.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(extra));
    Graph::new(n, edges).unwrap()
}

/// Random connected graph with at least one cut vertex: two or three random
/// connected pieces sharing single vertices.
pub fn random_with_cut_vertex(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let pieces = rng.gen_range(2..=3);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = 0;
    for p in 0..pieces {
        let room = max_n - n + usize::from(p > 0);
        let size = rng.gen_range(2..=room.clamp(2, 5));
        let extra = rng.gen_range(0..=size);
        let piece = random_connected(rng, size, extra);
        let attach = if p == 0 { 0 } else { rng.gen_range(0..n) };
        let map = |v: usize| if p == 0 { v } else if v == 0 { attach } else { n + v - 1 };
        edges.extend(piece.edges().iter().map(|&(a, b)| (map(a), map(b))));
        n = if p == 0 { size } else { n + size - 1 };
        if n + 1 >= max_n {
            break;
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Plotted per-bucket counts `nnac/graphs` of the minimally rigid graphs,
/// by vertex count.
pub const PLOTTED_10: &str = "0/529, 1/4159, 2/2478, 3/11432, 4/4722, 5/4359, 6/6372, 7/12219, 8/5221, 9/4269, 10/3035,\
     11/3179, 12/4390, 13/4943, 14/2117, 15/7609, 16/1610, 17/2099, 18/1877, 19/1362, 20/1106,\
     21/1336, 22/752, 23/1461, 24/938, 25/1934, 26/533, 27/1793, 28/296, 29/436, 30/545,\
     31/2417, 32/410, 33/300, 34/433, 35/379, 36/205, 37/404, 38/173, 39/240, 40/182, 41/223,\
     42/84, 43/277, 44/149, 45/286, 46/157, 47/327, 48/66, 49/224, 50/127, 51/446, 52/48, 53/79,\
     54/114, 55/272, 56/93, 57/45, 58/61, 59/66, 60/48, 61/111, 62/39, 63/669, 64/27, 65/74,\
     66/47, 67/50, 68/22, 69/72, 70/25, 71/40, 72/31, 73/32, 74/12, 75/60, 76/19, 77/22, 78/24,\
     79/37, 80/13, 81/22, 82/20, 83/25, 84/12, 85/36, 86/30, 87/54, 88/8, 89/38, 90/15, 91/70,\
     93/29, 94/19, 95/58, 96/3, 97/16, 98/12, 99/47, 100/18, 101/5, 102/9, 103/85, 104/11,\
     105/9, 106/6, 107/9, 108/12, 109/22, 110/3, 111/20, 112/3, 113/13, 114/4, 115/4, 116/3,\
     117/3, 118/8, 119/3, 120/2, 121/3, 122/3, 123/8, 124/4, 125/5, 126/5, 127/138, 128/2,\
     129/4, 130/2, 131/4, 133/4, 134/4, 135/2, 136/4, 137/1, 138/2, 139/1, 140/1, 141/1, 142/3,\
     144/1, 145/6, 146/2, 147/1, 148/1, 149/1, 150/5, 151/1, 152/3, 153/1, 154/6, 155/1, 156/1,\
     157/5, 158/1, 159/2, 160/4, 161/2, 162/4, 163/2, 164/3, 165/6, 166/1, 167/1, 168/1, 170/1,\
     171/3, 172/1, 173/9, 174/2, 175/2, 176/1, 179/1, 180/2, 181/5, 182/1, 183/1, 184/1, 185/1,\
     186/3, 187/9, 188/2, 190/1, 191/1, 192/2, 194/2, 197/2, 198/2, 199/1, 201/5, 202/2, 203/1,\
     204/1, 205/2, 208/1, 209/4, 213/3, 217/2, 219/8, 221/1, 222/2, 225/3, 227/6, 231/1, 234/1,\
     235/1, 237/1, 240/1, 241/1, 247/4, 255/120, 257/1, 301/1, 302/1, 307/1";
pub const PLOTTED_9: &str = "0/136, 1/742, 2/332, 3/1410, 4/450, 5/304, 6/547, 7/976, 8/302, 9/169, 10/143, 11/106,\
     12/245, 13/209, 14/61, 15/379, 16/37, 17/36, 18/74, 19/19, 20/21, 21/19, 22/25, 23/36,\
     24/23, 25/65, 26/6, 27/42, 28/3, 29/4, 30/19, 31/105, 32/10, 33/5, 34/10, 35/5, 36/2, 37/9,\
     38/1, 39/4, 40/1, 41/4, 42/1, 43/6, 44/3, 45/9, 46/4, 47/9, 48/1, 49/7, 50/1, 51/14, 52/1,\
     53/1, 54/6, 55/2, 58/1, 62/1, 63/21, 66/1, 72/2, 78/1, 82/1, 85/1, 86/2, 87/1, 90/1, 93/2,\
     98/1, 100/1, 104/1, 109/2, 113/1, 123/1, 127/19";
pub const PLOTTED_8: &str = "0/39, 1/132, 2/39, 3/167, 4/34, 5/14, 6/37, 7/67, 8/8, 9/4, 10/3, 11/1, 12/13, 13/6, 14/1,\
     15/22, 16/2, 18/3, 22/1, 23/1, 24/1, 25/3, 31/3, 46/1, 54/1, 63/5";
pub const PLOTTED_7: &str = "0/12, 1/25, 2/4, 3/18, 4/1, 6/2, 7/5, 12/1, 15/1, 31/1";

pub fn plotted(data: &str) -> std::collections::BTreeMap<u64, usize> {
    data.split(',')
        .map(|p| {
            let (k, v) = p.trim().split_once('/').unwrap();
            (k.parse().unwrap(), v.parse().unwrap())
        })
        .collect()
}

/// Laman graphs on `n` vertices minus one edge, connected, one per
/// isomorphism class.
pub fn laman_minus_edge(n: usize) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in minimally_rigid_classes(n, &CatalogOptions::default()).unwrap() {
        for e in 0..g.m() {
            let h = g.without_edge(e);
            if connected_without(&h, &[]) && seen.insert(canonical_form(&h).unwrap()) {
                out.push(h);
            }
        }
    }
    out
}

/// Whether `g` splits at a single vertex into two parts without NAC-colourings.
pub fn splits_into_two_rigid_halves(g: &Graph) -> bool {
    let n = g.n();
    for v in 0..n {
        let rest: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(a, b)| a != v && b != v).collect();
        let h = Graph::new(n, rest).unwrap();
        let comps: Vec<VertexSet> = connected_components(&h).into_iter().filter(|c| !c.contains(v)).collect();
        let k = comps.len();
        if k < 2 {
            continue;
        }
        for mask in 1u32..(1 << k) - 1 {
            let side = |bit: bool| {
                let keep = VertexSet::from_vertices(
                    n,
                    (0..k).filter(|i| (mask >> i & 1 == 1) == bit).flat_map(|i| comps[i].to_vec()).chain([v]),
                );
                g.induced_subgraph(&keep).0
            };
            let (g1, g2) = (side(true), side(false));
            if g1.m() > 0 && g2.m() > 0 && brute_nnac(&g1) == 0 && brute_nnac(&g2) == 0 {
                return true;
            }
        }
    }
    false
}

/// Twenty glued scripts, each with a known number of prism pieces. Every
/// prism after the first is glued onto the far triangle of the previous one.
pub fn gsc_scripts() -> Vec<(String, usize)> {
    let mut out = Vec::new();
    for p in 1..=4 {
        let mut s = String::from("prism@0-1 ");
        let (mut n, mut t) = (6, [3, 4, 5]);
        for i in 1..p {
            match i % 3 {
                1 => {
                    s.push_str(&format!("prism@{}-{}-{} ", t[0], t[1], t[2]));
                    t = [n, n + 1, n + 2];
                    n += 3;
                }
                2 => {
                    s.push_str(&format!("prism@{}-{}/m ", t[1], t[2]));
                    t = [t[2], n + 2, n + 3];
                    n += 4;
                }
                _ => {
                    s.push_str(&format!("prism@{}-{} ", t[1], t[2]));
                    t = [n + 1, n + 2, n + 3];
                    n += 4;
                }
            }
        }
        for extra in 0..5 {
            let mut with = s.clone();
            for j in 0..extra {
                with.push_str(if j % 2 == 0 { "tri@0-1 " } else { "tri@1-2 " });
            }
            out.push((with, p));
        }
    }
    out
}

