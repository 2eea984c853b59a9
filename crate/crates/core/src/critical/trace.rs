//! Step-by-step replay of the constructive size-6 argument on a concrete
//! cut. Every finding is data; nothing here fails hard.

use serde::{Deserialize, Serialize};

use super::{lemma_conditions, phi_idx, LemmaCondition, PairAssignment, PairIdx};
use crate::graph::{CutContext, SpanningTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TraceCase {
    /// No mismatch edge: one pair covers X.
    Size2,
    /// One mismatch edge splits X into two constant regions.
    Size4,
    /// A second mismatch edge inside the first region; three regions.
    Size6,
    /// A third mismatch edge was found, contradicting the argument.
    ThirdMismatch,
}

/// One located mismatch edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// Endpoint whose pair stays optimal on its own side.
    pub keep: usize,
    /// Endpoint across the mismatch; its pair is expected to be optimal on
    /// its whole side.
    pub other: usize,
    /// Conclusion that held under the pairs used at this step.
    pub condition: Option<LemmaCondition>,
    /// Vertices on `other`'s side where the pair of `other` is not optimal.
    pub constancy_failures: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    pub case: TraceCase,
    /// `e'`, oriented so that the first conclusion holds.
    pub first: Option<TraceStep>,
    /// `e''`, located inside the region of `first.keep`.
    pub second: Option<TraceStep>,
    /// `e'''` if one exists (it should not).
    pub third: Option<(usize, usize)>,
    /// Deviations from what the argument predicts.
    pub anomalies: Vec<String>,
}

/// Replays the argument: locate a mismatch edge `e'`, check the far region
/// is constant, locate `e''` closest to the near endpoint, check its far
/// region, and search for a third mismatch in what remains.
pub fn proof_trace(cut: &CutContext, t: &SpanningTree, pairs: &PairAssignment) -> ProofTrace {
    let x0 = cut.x_root();
    let optimal_at = |v: usize, p: PairIdx| phi_idx(cut, t, v, p) == pairs.value(v);
    let mut anomalies = Vec::new();

    // e': mismatch edge nearest to x0.
    let mut mismatches = Vec::new();
    for &x in cut.x_vertices() {
        for &(z, _) in t.neighbors(x) {
            if cut.in_x(z) && !optimal_at(z, pairs.canonical(x)) {
                let near = t.dist(x0, x).min(t.dist(x0, z));
                mismatches.push((near, x.min(z), x.max(z), x, z));
            }
        }
    }
    mismatches.sort_unstable();
    let Some(&(_, _, _, x, z)) = mismatches.first() else {
        return ProofTrace {
            case: TraceCase::Size2,
            first: None,
            second: None,
            third: None,
            anomalies,
        };
    };

    let near_x = cut.subtree_mask(t, x, z).expect("tree edge inside X");
    let condition = lemma_conditions(cut, &near_x, pairs.canonical(x), pairs.canonical(z));
    let (p, q) = match condition {
        Some(LemmaCondition::Second) => (z, x),
        Some(_) => (x, z),
        None => {
            anomalies.push(format!("mismatch edge {x}-{z}: neither conclusion holds"));
            (x, z)
        }
    };
    let near_p = if p == x {
        near_x
    } else {
        cut.subtree_mask(t, p, q).expect("tree edge inside X")
    };
    let pair_p = pairs.canonical(p);
    let pair_q = pairs.canonical(q);
    let first = TraceStep {
        keep: p,
        other: q,
        condition,
        constancy_failures: cut
            .x_vertices()
            .iter()
            .copied()
            .filter(|&v| !near_p[v] && !optimal_at(v, pair_q))
            .collect(),
    };
    if !first.constancy_failures.is_empty() {
        anomalies.push(format!("pair of {q} not optimal on its whole side"));
    }

    // Region of p: vertices where pair(p) is no longer optimal.
    let region: Vec<usize> = cut
        .x_vertices()
        .iter()
        .copied()
        .filter(|&v| near_p[v])
        .collect();
    if region.iter().all(|&v| optimal_at(v, pair_p)) {
        return ProofTrace {
            case: TraceCase::Size4,
            first: Some(first),
            second: None,
            third: None,
            anomalies,
        };
    }

    // e'' = (x', y): x' closest to p keeping pair(p), y a neighbor losing it.
    let boundary = |allowed: &dyn Fn(usize) -> bool, key: &dyn Fn(usize) -> u32| {
        region
            .iter()
            .copied()
            .filter(|&v| allowed(v) && optimal_at(v, pair_p))
            .filter_map(|v| {
                t.neighbors(v)
                    .iter()
                    .map(|&(w, _)| w)
                    .filter(|&w| allowed(w) && !optimal_at(w, pair_p))
                    .min()
                    .map(|w| (key(v), v, w))
            })
            .min()
    };
    let Some((_, xp, y)) = boundary(&|v| near_p[v], &|v| t.dist(p, v)) else {
        anomalies.push(format!("no boundary edge inside the region of {p}"));
        return ProofTrace {
            case: TraceCase::Size4,
            first: Some(first),
            second: None,
            third: None,
            anomalies,
        };
    };
    let near_xp = cut.subtree_mask(t, xp, y).expect("tree edge inside X");
    let pair_y = pairs.canonical(y);
    let condition = lemma_conditions(cut, &near_xp, pair_p, pair_y);
    if !matches!(
        condition,
        Some(LemmaCondition::First | LemmaCondition::Both)
    ) {
        anomalies.push(format!(
            "second mismatch edge {xp}-{y}: first conclusion fails ({condition:?})"
        ));
    }
    let second = TraceStep {
        keep: xp,
        other: y,
        condition,
        constancy_failures: region
            .iter()
            .copied()
            .filter(|&v| !near_xp[v] && !optimal_at(v, pair_y))
            .collect(),
    };
    if !second.constancy_failures.is_empty() {
        anomalies.push(format!("pair of {y} not optimal on its whole side"));
    }

    // e''': a further mismatch inside U(e',p) ∩ U(e'',x').
    let third = boundary(&|v| near_p[v] && near_xp[v], &|v| {
        t.dist(p, v) + t.dist(xp, v)
    })
    .map(|(_, a, b)| (a, b));
    let case = if third.is_some() {
        anomalies.push("third mismatch edge found".to_string());
        TraceCase::ThirdMismatch
    } else {
        TraceCase::Size6
    };
    ProofTrace {
        case,
        first: Some(first),
        second: Some(second),
        third,
        anomalies,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::compute_pairs;
    use crate::graph::Graph;

    #[test]
    fn uniform_pairs_give_size2() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = SpanningTree::from_endpoints(&g, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let cut = CutContext::new(&g, &t, g.edge_id(1, 2).unwrap()).unwrap();
        let pairs = compute_pairs(&cut, &t).unwrap();
        let tr = proof_trace(&cut, &t, &pairs);
        assert_eq!(tr.case, TraceCase::Size2);
        assert!(tr.first.is_none() && tr.anomalies.is_empty());
    }

    #[test]
    fn hexagon_has_no_third_mismatch() {
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let g = Graph::new(6, edges).unwrap();
        let t =
            SpanningTree::from_endpoints(&g, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        for &e in t.edge_ids() {
            let cut = CutContext::new(&g, &t, e).unwrap();
            let pairs = compute_pairs(&cut, &t).unwrap();
            let tr = proof_trace(&cut, &t, &pairs);
            assert!(tr.third.is_none());
            assert_ne!(tr.case, TraceCase::ThirdMismatch);
        }
    }
}
