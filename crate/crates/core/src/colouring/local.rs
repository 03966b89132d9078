use super::{no_almost_monochromatic_cycle, EdgeColouring};
use crate::constructions::make_ladder;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Whether `c` has no almost-monochromatic cycle inside any window of
/// three consecutive rungs of the ladder `G'_k` (`a_i = 2i`, `b_i = 2i+1`).
/// Monochromatic colourings qualify.
pub fn locally_nac_check(ladder: &Graph, c: &EdgeColouring, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if *ladder != make_ladder(k) {
        return Err(Error::WrongShape(format!("not the ladder on {} vertices", 2 * k)));
    }
    if c.len() != ladder.m() {
        return Err(Error::ColouringLength {
            expected: ladder.m(),
            got: c.len(),
        });
    }
    for i in 0..k.saturating_sub(2) {
        let window = 2 * i..2 * i + 6;
        let edges: Vec<usize> = (0..ladder.m())
            .filter(|&e| {
                let (a, b) = ladder.edge(e);
                window.contains(&a) && window.contains(&b)
            })
            .collect();
        if !no_almost_monochromatic_cycle(ladder, c, &edges) {
            return Ok(false);
        }
    }
    Ok(true)
}
