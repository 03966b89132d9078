//! Frozen edge lists. The checksum test in `tests/constructions.rs` guards
//! them against accidental edits.

use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub minimally_rigid: bool,
    /// `nnac`, confirmed by brute force over all colourings except for h18.
    pub nnac: Option<u64>,
}

const PRISM: &[(usize, usize)] = &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];

const K33: &[(usize, usize)] = &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];

// Maximisers of nnac among minimally rigid graphs on 8..12 vertices.
const MAX8: &[(usize, usize)] = &[
    (0, 4), (0, 5), (0, 7), (1, 3), (1, 5), (1, 7), (2, 3), (2, 4), (2, 7), (3, 6), (4, 6), (5, 6), (6, 7),
];

const MAX9A: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3), (1, 7), (1, 8), (2, 6), (2, 8), (3, 6), (3, 7), (4, 6), (4, 7), (4, 8), (5, 6), (5, 7),
    (5, 8),
];

const MAX9B: &[(usize, usize)] = &[
    (0, 2), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (2, 8), (3, 7), (3, 8), (4, 7), (4, 8), (5, 7), (5, 8), (6, 7),
    (6, 8),
];

// Drawn with labels 8, 9, 12, 13 for the last four vertices. This graph has
// nnac 301; the 10-vertex maximum is 307.
const MAX10: &[(usize, usize)] = &[
    (0, 2), (0, 3), (0, 8), (1, 2), (1, 3), (1, 8), (2, 4), (2, 5), (3, 4), (3, 5), (6, 4), (6, 5), (7, 4), (7, 5),
    (6, 9), (7, 9), (8, 9),
];

const MAX11: &[(usize, usize)] = &[
    (0, 5), (0, 6), (1, 2), (1, 9), (1, 10), (2, 7), (2, 8), (3, 5), (3, 9), (3, 10), (4, 5), (4, 9), (4, 10),
    (6, 7), (6, 8), (7, 9), (7, 10), (8, 9), (8, 10),
];

const TWELVE_MAX: &[(usize, usize)] = &[
    (0, 7), (0, 8), (0, 9), (1, 7), (1, 10), (1, 11), (2, 8), (2, 10), (2, 11), (3, 8), (3, 10), (3, 11), (4, 9),
    (4, 10), (4, 11), (5, 9), (5, 10), (5, 11), (6, 9), (6, 10), (6, 11),
];

const H18: &[(usize, usize)] = &[
    (0, 1), (0, 5), (0, 9), (1, 2), (1, 4), (1, 6), (1, 10), (1, 11), (1, 12), (1, 14), (1, 16), (2, 3), (2, 5),
    (3, 4), (3, 8), (3, 11), (4, 5), (5, 6), (5, 10), (5, 11), (5, 12), (5, 14), (5, 16), (6, 7), (7, 8), (8, 9),
    (8, 13), (8, 15), (8, 17), (9, 10), (12, 13), (14, 15), (16, 17),
];

const TABLE: &[(&str, usize, &[(usize, usize)], Option<u64>)] = &[
    ("prism", 6, PRISM, Some(1)),
    ("k33", 6, K33, Some(15)),
    ("max8", 8, MAX8, Some(63)),
    ("max9a", 9, MAX9A, Some(127)),
    ("max9b", 9, MAX9B, Some(127)),
    ("max10", 10, MAX10, Some(301)),
    ("max11", 11, MAX11, Some(639)),
    ("twelve_max", 12, TWELVE_MAX, Some(1461)),
    ("h18", 18, H18, Some(180607)),
];

/// All fixtures; every one is minimally rigid.
pub fn fixtures() -> Vec<Fixture> {
    TABLE
        .iter()
        .map(|&(name, n, edges, nnac)| Fixture {
            name,
            graph: Graph::new(n, edges.iter().copied()).expect("fixture edge lists are valid"),
            minimally_rigid: true,
            nnac,
        })
        .collect()
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}
