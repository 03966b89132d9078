//! Stable cuts: independent vertex sets whose removal disconnects a graph.

mod algorithm1;
mod exhaustive;

pub use algorithm1::{algorithm1_stable_cut, algorithm1_with_stats, stable_cut_avoiding, Algorithm1Stats};
pub use exhaustive::{exhaustive_stable_cut, CutConstraints, EXHAUSTIVE_MAX_N};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{components_avoiding, is_stable_set, Graph, VertexSet};
use crate::rigidity::RigidityReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableCutResult {
    pub cut: VertexSet,
    pub separates: Option<(usize, usize)>,
    pub avoids: Option<usize>,
}

impl StableCutResult {
    pub fn components_after_removal(&self, g: &Graph) -> usize {
        components_avoiding(g, &self.cut).len()
    }

    /// Re-checks every promise of the result from scratch.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::Internal(format!("invalid stable cut {:?}: {msg}", self.cut)));
        if !is_stable_set(g, &self.cut) {
            return fail("not stable".into());
        }
        let comps = components_avoiding(g, &self.cut);
        if comps.len() < 2 {
            return fail("removal leaves the graph connected".into());
        }
        if let Some((u, v)) = self.separates {
            let cu = comps.iter().position(|c| c.contains(u));
            let cv = comps.iter().position(|c| c.contains(v));
            if cu.is_none() || cv.is_none() || cu == cv {
                return fail(format!("does not separate {u} and {v}"));
            }
        }
        if let Some(v) = self.avoids {
            if self.cut.contains(v) {
                return fail(format!("contains the avoided vertex {v}"));
            }
        }
        Ok(())
    }

    /// True iff no rigid component holds two cut vertices.
    pub fn at_most_one_per_component(&self, report: &RigidityReport) -> bool {
        report.components.iter().all(|c| c.intersection(&self.cut).len() <= 1)
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        json!({
            "cut": self.cut.to_vec(),
            "separates": self.separates.map(|(u, v)| vec![u, v]),
            "avoids": self.avoids,
            "components_after_removal": self.components_after_removal(g),
        })
    }
}
