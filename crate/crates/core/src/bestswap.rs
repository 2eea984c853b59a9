//! All best swap edges: for every tree edge, the swap edges minimizing the
//! stretch of the swap tree with respect to `G - e`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::critical::compute_pairs;
use crate::graph::{CutContext, EdgeId, Graph, OrientedSwapEdge, SpanningTree};
use crate::stretch::{side_stretch, swap_stretch_oracle, RationalStretch};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Rebuilds `G - e` and every swap tree from scratch.
    Oracle,
    /// Two detour evaluations per swap edge against the optimal pair of its
    /// X endpoint, plus the swap-independent stretch of the cut sides.
    Pairs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestSwapRow {
    pub e: EdgeId,
    /// Minimum swap-tree stretch.
    pub value: RationalStretch,
    /// Every swap edge attaining `value`, sorted by endpoint pair.
    pub argmin: Vec<OrientedSwapEdge>,
    pub engine: Engine,
}

/// Best swap edges of tree edge `e`.
pub fn best_swaps_for_edge(
    g: &Graph,
    t: &SpanningTree,
    e: EdgeId,
    engine: Engine,
) -> Result<BestSwapRow> {
    let cut = CutContext::new(g, t, e)?;
    let s = cut.swap_edges();
    if s.is_empty() {
        return Err(Error::EmptySwapSet);
    }
    let values: Vec<RationalStretch> = match engine {
        Engine::Oracle => s
            .iter()
            .map(|f| swap_stretch_oracle(g, t, e, f.edge))
            .collect::<Result<_>>()?,
        Engine::Pairs => {
            let pairs = compute_pairs(&cut, t)?;
            let base = side_stretch(g, t, &cut);
            s.iter()
                .map(|f| {
                    let (p, q) = pairs.canonical_edges(&cut, f.a);
                    let detour = [p, q]
                        .iter()
                        .map(|c| t.dist(f.a, c.a) + 1 + t.dist(c.b, f.b))
                        .max()
                        .unwrap_or(1);
                    RationalStretch::integer(detour.max(base) as u64)
                })
                .collect()
        }
    };
    let value = *values.iter().min().expect("nonempty swap set");
    let argmin = s
        .iter()
        .zip(&values)
        .filter(|&(_, v)| *v == value)
        .map(|(f, _)| *f)
        .collect();
    Ok(BestSwapRow {
        e,
        value,
        argmin,
        engine,
    })
}

/// One row per tree edge, in ascending edge-id order.
pub fn all_best_swap_edges(
    g: &Graph,
    t: &SpanningTree,
    engine: Engine,
) -> Result<Vec<BestSwapRow>> {
    t.edge_ids()
        .par_iter()
        .map(|&e| best_swaps_for_edge(g, t, e, engine))
        .collect()
}
