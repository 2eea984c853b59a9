//! Stretch factors of trees and swap trees.
//!
//! Two routes evaluate a swap tree `T_{e/f}`:
//! - [`swap_stretch_oracle`] rebuilds `G - e` and `T_{e/f}` and maximizes the
//!   distance ratio over every vertex pair;
//! - [`swap_stretch_fast`] maximizes the detour `d_T(x,a) + 1 + d_T(b,y)`
//!   over the swap edges `g = (a,b)` of `e`, which is the tree distance in
//!   `T_{e/f}` between the endpoints of `g`.
//!
//! Edges of `G - e` that do not cross the cut keep their tree path in every
//! swap tree, so the oracle value is `max(side_stretch, fast)`; see
//! [`side_stretch`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{CutContext, DistanceTable, EdgeId, Graph, OrientedSwapEdge, SpanningTree};
use crate::{Error, Result};

/// An exact, reduced, nonnegative fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalStretch {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RationalStretch {
    pub const ONE: RationalStretch = RationalStretch { num: 1, den: 1 };

    /// Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let d = gcd(num, den);
        RationalStretch {
            num: num / d,
            den: den / d,
        }
    }

    pub fn integer(value: u64) -> Self {
        RationalStretch { num: value, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// The value if it is a whole number.
    pub fn as_integer(&self) -> Option<u64> {
        (self.den == 1).then_some(self.num)
    }
}

impl Ord for RationalStretch {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for RationalStretch {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RationalStretch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Maximum over distinct vertex pairs of `tree / graph` distance.
/// Graphs with fewer than two vertices have stretch 1.
fn max_ratio(tree: &DistanceTable, graph: &DistanceTable) -> RationalStretch {
    let n = tree.n();
    let mut best = RationalStretch::ONE;
    for u in 0..n {
        for v in u + 1..n {
            let r = RationalStretch::new(tree.get(u, v) as u64, graph.get(u, v) as u64);
            if r > best {
                best = r;
            }
        }
    }
    best
}

/// Stretch factor of `t` with respect to `g`.
pub fn stretch_factor(g: &Graph, t: &SpanningTree) -> RationalStretch {
    max_ratio(t.distances(), g.distances())
}

/// The tree obtained by replacing tree edge `e` with swap edge `f`.
pub fn swap_tree(g: &Graph, t: &SpanningTree, e: EdgeId, f: EdgeId) -> Result<SpanningTree> {
    let cut = CutContext::new(g, t, e)?;
    if cut.swap_index(f).is_none() {
        return Err(not_a_swap_edge(g, f));
    }
    let ids = t
        .edge_ids()
        .iter()
        .copied()
        .filter(|&id| id != e)
        .chain([f]);
    SpanningTree::new(g, ids)
}

fn not_a_swap_edge(g: &Graph, f: EdgeId) -> Error {
    let label = if f.0 < g.edge_count() {
        g.edge_label(f)
    } else {
        format!("#{}", f.0)
    };
    Error::NotASwapEdge(label)
}

/// `sigma_{G-e}(T_{e/f})` from scratch: fresh distance tables for `G - e`
/// and the swap tree, maximized over all distinct vertex pairs.
pub fn swap_stretch_oracle(
    g: &Graph,
    t: &SpanningTree,
    e: EdgeId,
    f: EdgeId,
) -> Result<RationalStretch> {
    let swapped = swap_tree(g, t, e, f)?;
    let reduced = DistanceTable::from_adjacency(&g.adjacency_without(Some(e)));
    Ok(max_ratio(swapped.distances(), &reduced))
}

/// Stretch of the rebuilt swap tree measured only on the swap edges of `e`:
/// the largest `d_{T_{e/f}}(a, b)` over swap edges `(a, b)`.
pub fn swap_stretch_over_cut(g: &Graph, t: &SpanningTree, e: EdgeId, f: EdgeId) -> Result<u64> {
    let swapped = swap_tree(g, t, e, f)?;
    let cut = CutContext::new(g, t, e)?;
    Ok(cut
        .swap_edges()
        .iter()
        .map(|s| swapped.dist(s.a, s.b) as u64)
        .max()
        .unwrap_or(1))
}

/// Largest tree distance between the endpoints of an edge of `G - e` that
/// does not cross the cut. Independent of the chosen swap edge.
pub fn side_stretch(g: &Graph, t: &SpanningTree, cut: &CutContext) -> u32 {
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(i, &(u, v))| EdgeId(i) != cut.failed_edge() && cut.side(u) == cut.side(v))
        .map(|(_, &(u, v))| t.dist(u, v))
        .max()
        .unwrap_or(1)
        .max(1)
}

/// `d_T(x, a) + 1 + d_T(b, y)` for `f = (x, y)` and `g = (a, b)`.
pub fn detour_value(
    cut: &CutContext,
    t: &SpanningTree,
    f: &OrientedSwapEdge,
    g: &OrientedSwapEdge,
) -> Result<u32> {
    for s in [f, g] {
        if !cut.in_x(s.a) || cut.in_x(s.b) {
            return Err(Error::OrientationMismatch);
        }
    }
    Ok(t.dist(f.a, g.a) + 1 + t.dist(g.b, f.b))
}

/// Maximum detour of a swap edge and every swap edge attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapEvaluation {
    pub value: u32,
    pub critical_edges: Vec<OrientedSwapEdge>,
}

/// Evaluates swap edge `f` (a member of `cut.swap_edges()`) by maximizing
/// the detour over all swap edges.
pub fn swap_stretch_fast(
    cut: &CutContext,
    t: &SpanningTree,
    f: &OrientedSwapEdge,
) -> SwapEvaluation {
    debug_assert!(cut.is_oriented_swap(f));
    let mut value = 0;
    let mut critical_edges = Vec::new();
    for g in cut.swap_edges() {
        let d = t.dist(f.a, g.a) + 1 + t.dist(g.b, f.b);
        match d.cmp(&value) {
            Ordering::Greater => {
                value = d;
                critical_edges.clear();
                critical_edges.push(*g);
            }
            Ordering::Equal => critical_edges.push(*g),
            Ordering::Less => {}
        }
    }
    SwapEvaluation {
        value,
        critical_edges,
    }
}
