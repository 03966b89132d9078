use num_bigint::BigUint;
use num_traits::One;

use super::enumerate::{enumerate_nac, NacOptions};
use crate::error::{Error, Result};
use crate::graph::{blocks, Graph};

/// `nnac(G)`, enumerating each block separately and combining them as
/// `2^(k-1) * prod(nnac(B_i) + 1) - 1`. Bridges contribute 0.
pub fn count_nac(g: &Graph) -> Result<BigUint> {
    count_nac_with(g, &NacOptions::default())
}

pub fn count_nac_with(g: &Graph, opts: &NacOptions) -> Result<BigUint> {
    if g.m() == 0 {
        return Err(Error::NoEdges { op: "count_nac" });
    }
    let all: Vec<usize> = (0..g.m()).collect();
    let (h, _) = g.edge_subgraph(&all);
    let opts = NacOptions {
        first_only: false,
        ..*opts
    };
    let mut product = BigUint::one();
    let bs = blocks(&h)?;
    for b in &bs {
        if b.len() > 1 {
            let (block, _) = h.edge_subgraph(b);
            product *= enumerate_nac(&block, &opts)?.count + 1u8;
        }
    }
    Ok((product << (bs.len() - 1)) - 1u8)
}

/// `binom(2n-4, n-2) / 2`, the general upper bound on `nnac` over graphs
/// on `n` vertices.
pub fn nnac_upper_bound(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::TooFewVertices {
            op: "nnac_upper_bound",
            need: 2,
            n,
        });
    }
    let (top, k) = (2 * n - 4, n - 2);
    let mut binom = BigUint::one();
    for i in 0..k {
        binom = binom * (top - i) / (i + 1);
    }
    Ok(binom >> 1)
}

/// `nnac(K_{n1,n2}) = 2^(n1+n2-2) - 1`.
pub fn count_nac_complete_bipartite(n1: usize, n2: usize) -> Result<BigUint> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidArgument("both sides need at least one vertex".into()));
    }
    Ok((BigUint::one() << (n1 + n2 - 2)) - 1u8)
}
