use std::sync::Arc;

use super::Instance;
use crate::graph::{EdgeId, Graph, SpanningTree};
use crate::{Error, Result};

pub const MAX_ENUMERATION_N: usize = 6;

/// Every labeled 2-edge-connected graph on `n <= 6` vertices, in ascending
/// order of the edge-subset bitmask over the pairs of `K_n` listed
/// lexicographically. Edge ids follow that lexicographic order.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u32 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        if n > 1 && (mask.count_ones() as usize) < n {
            return None;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::new(n, edges)
            .ok()
            .filter(|g| g.is_two_edge_connected())
    }))
}

/// Spanning trees of `g` as edge-id combinations in lexicographic order,
/// stopping after `cap` trees (`cap == 0` means all).
pub fn spanning_trees(g: &Graph, cap: usize) -> Vec<SpanningTree> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 1 {
        out.push(SpanningTree::new(g, []).expect("trivial tree"));
        return out;
    }
    let mut chosen = Vec::with_capacity(n - 1);
    let mut comp: Vec<usize> = (0..n).collect();
    collect_trees(g, 0, &mut chosen, &mut comp, cap, &mut out);
    out
}

fn collect_trees(
    g: &Graph,
    start: usize,
    chosen: &mut Vec<EdgeId>,
    comp: &mut Vec<usize>,
    cap: usize,
    out: &mut Vec<SpanningTree>,
) {
    let need = g.n() - 1 - chosen.len();
    if need == 0 {
        out.push(SpanningTree::new(g, chosen.iter().copied()).expect("acyclic with n-1 edges"));
        return;
    }
    for i in start..=g.edge_count() - need {
        if cap != 0 && out.len() >= cap {
            return;
        }
        let (u, v) = g.endpoints(EdgeId(i));
        let (cu, cv) = (comp[u], comp[v]);
        if cu == cv {
            continue;
        }
        let saved = comp.clone();
        for c in comp.iter_mut() {
            if *c == cv {
                *c = cu;
            }
        }
        chosen.push(EdgeId(i));
        collect_trees(g, i + 1, chosen, comp, cap, out);
        chosen.pop();
        *comp = saved;
    }
}

/// Stream of `(graph, tree)` pairs for exhaustive checks.
pub struct Enumeration {
    graphs: Box<dyn Iterator<Item = Graph> + Send>,
    tree_cap: usize,
    current: Option<(Arc<Graph>, std::vec::IntoIter<SpanningTree>)>,
}

/// All labeled 2-edge-connected graphs on `n` vertices, each with its
/// spanning trees up to `tree_cap` (0 = unlimited).
pub fn enumerate_instances(n: usize, tree_cap: usize) -> Result<Enumeration> {
    Ok(Enumeration {
        graphs: Box::new(enumerate_graphs(n)?),
        tree_cap,
        current: None,
    })
}

impl Iterator for Enumeration {
    type Item = Instance;

    fn next(&mut self) -> Option<Instance> {
        loop {
            if let Some((g, trees)) = &mut self.current {
                if let Some(t) = trees.next() {
                    return Some(Instance {
                        graph: Arc::clone(g),
                        tree: t,
                    });
                }
            }
            let g = self.graphs.next()?;
            let trees = spanning_trees(&g, self.tree_cap);
            self.current = Some((Arc::new(g), trees.into_iter()));
        }
    }
}
