//! Graphs, spanning trees, hop-distance tables, and the cut of a tree edge.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Marker for a vertex pair with no connecting path.
pub const UNREACHABLE: u32 = u32::MAX;

/// Index of an edge in its parent [`Graph`], assigned in input order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

/// Full `n x n` table of hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    /// Runs a BFS from every vertex of `adj`.
    pub fn from_adjacency(adj: &[Vec<usize>]) -> Self {
        let n = adj.len();
        let mut dist = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for source in 0..n {
            let row = &mut dist[source * n..(source + 1) * n];
            row[source] = 0;
            queue.clear();
            queue.push_back(source);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in &adj[u] {
                    if row[v] == UNREACHABLE {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceTable { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }
}

/// A simple, connected, undirected, unweighted graph on vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, EdgeId)>>,
    index: HashMap<(usize, usize), EdgeId>,
    dist: OnceLock<DistanceTable>,
}

impl Graph {
    /// Validates the edge list and builds the graph. Edge ids follow input
    /// order; endpoints are stored as `(min, max)`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        let mut index = HashMap::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            let id = EdgeId(list.len());
            if index.insert(key, id).is_some() {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            list.push(key);
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        let g = Graph {
            n,
            edges: list,
            adj,
            index,
            dist: OnceLock::new(),
        };
        if !g.is_connected_without(None) {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id.0]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Neighbors of `u` with the connecting edge, sorted by neighbor.
    pub fn neighbors(&self, u: usize) -> &[(usize, EdgeId)] {
        &self.adj[u]
    }

    /// `"u-v"` label used in reports.
    pub fn edge_label(&self, id: EdgeId) -> String {
        let (u, v) = self.endpoints(id);
        format!("{u}-{v}")
    }

    /// All-pairs hop distances, built on first use.
    pub fn distances(&self) -> &DistanceTable {
        self.dist
            .get_or_init(|| DistanceTable::from_adjacency(&self.adjacency_without(None)))
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.distances().get(u, v)
    }

    /// Plain adjacency lists, optionally with one edge removed.
    pub fn adjacency_without(&self, skip: Option<EdgeId>) -> Vec<Vec<usize>> {
        self.adj
            .iter()
            .map(|nbrs| {
                nbrs.iter()
                    .filter(|&&(_, id)| Some(id) != skip)
                    .map(|&(v, _)| v)
                    .collect()
            })
            .collect()
    }

    fn is_connected_without(&self, skip: Option<EdgeId>) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(v, id) in &self.adj[u] {
                if Some(id) != skip && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Bridges via iterative depth-first low-link, in ascending id order.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let n = self.n;
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut bridges = Vec::new();
        let mut timer = 0;
        // (vertex, edge used to enter it, next neighbor position)
        let mut stack: Vec<(usize, Option<EdgeId>, usize)> = Vec::new();
        for root in 0..n {
            if order[root] != usize::MAX {
                continue;
            }
            order[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, None, 0));
            while let Some(frame) = stack.last_mut() {
                let (u, via, pos) = *frame;
                if pos < self.adj[u].len() {
                    frame.2 += 1;
                    let (v, id) = self.adj[u][pos];
                    if Some(id) == via {
                        continue;
                    }
                    if order[v] == usize::MAX {
                        order[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        stack.push((v, Some(id), 0));
                    } else {
                        low[u] = low[u].min(order[v]);
                    }
                } else {
                    stack.pop();
                    if let (Some(id), Some(parent)) = (via, stack.last()) {
                        let p = parent.0;
                        low[p] = low[p].min(low[u]);
                        if low[u] > order[p] {
                            bridges.push(id);
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// Connected and bridgeless.
    pub fn is_two_edge_connected(&self) -> bool {
        self.is_connected_without(None) && self.bridges().is_empty()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A spanning tree of a [`Graph`], given as a subset of its edge ids.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    edge_ids: Vec<EdgeId>,
    in_tree: Vec<bool>,
    adj: Vec<Vec<(usize, EdgeId)>>,
    dist: DistanceTable,
}

impl SpanningTree {
    pub fn new(g: &Graph, ids: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let n = g.n();
        let mut edge_ids: Vec<EdgeId> = ids.into_iter().collect();
        if let Some(bad) = edge_ids.iter().find(|id| id.0 >= g.edge_count()) {
            return Err(Error::NotATree(format!("unknown edge id {}", bad.0)));
        }
        edge_ids.sort_unstable();
        edge_ids.dedup();
        if edge_ids.len() + 1 != n.max(1) {
            return Err(Error::NotATree(format!(
                "expected {} edges, got {}",
                n.saturating_sub(1),
                edge_ids.len()
            )));
        }
        let mut dsu = Dsu::new(n);
        let mut in_tree = vec![false; g.edge_count()];
        let mut adj = vec![Vec::new(); n];
        for &id in &edge_ids {
            let (u, v) = g.endpoints(id);
            if !dsu.union(u, v) {
                return Err(Error::NotATree(format!("edge {u}-{v} closes a cycle")));
            }
            in_tree[id.0] = true;
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        let plain: Vec<Vec<usize>> = adj
            .iter()
            .map(|nbrs| nbrs.iter().map(|&(v, _)| v).collect())
            .collect();
        let dist = DistanceTable::from_adjacency(&plain);
        Ok(SpanningTree {
            edge_ids,
            in_tree,
            adj,
            dist,
        })
    }

    /// Builds a tree from endpoint pairs of edges of `g`.
    pub fn from_endpoints(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self> {
        let ids = pairs
            .iter()
            .map(|&(u, v)| {
                g.edge_id(u, v)
                    .ok_or_else(|| Error::NotATree(format!("{u}-{v} is not an edge of the graph")))
            })
            .collect::<Result<Vec<_>>>()?;
        SpanningTree::new(g, ids)
    }

    /// Tree edge ids in ascending order.
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.in_tree.get(id.0).copied().unwrap_or(false)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, u: usize) -> &[(usize, EdgeId)] {
        &self.adj[u]
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist.get(u, v)
    }

    pub fn distances(&self) -> &DistanceTable {
        &self.dist
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut u: usize) -> usize {
        while self.parent[u] != u {
            self.parent[u] = self.parent[self.parent[u]];
            u = self.parent[u];
        }
        u
    }

    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

/// A swap edge oriented across the cut: `a` lies in X, `b` in Y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedSwapEdge {
    pub edge: EdgeId,
    pub a: usize,
    pub b: usize,
}

impl OrientedSwapEdge {
    /// Endpoints as `(min, max)`; the canonical sort key.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.a.min(self.b), self.a.max(self.b))
    }
}

impl Ord for OrientedSwapEdge {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.endpoints().cmp(&other.endpoints())
    }
}

impl PartialOrd for OrientedSwapEdge {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrientedSwapEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// The cut induced by removing tree edge `e`.
///
/// X is the component of `T - e` holding the lower-numbered endpoint of `e`.
/// Swap edges are sorted by endpoint pair; their position in
/// [`CutContext::swap_edges`] is used as a compact index elsewhere.
#[derive(Clone, Debug)]
pub struct CutContext {
    e: EdgeId,
    x_root: usize,
    y_root: usize,
    side: Vec<Side>,
    x_vertices: Vec<usize>,
    swap_edges: Vec<OrientedSwapEdge>,
}

impl CutContext {
    pub fn new(g: &Graph, t: &SpanningTree, e: EdgeId) -> Result<Self> {
        if e.0 >= g.edge_count() || !t.contains(e) {
            let label = if e.0 < g.edge_count() {
                g.edge_label(e)
            } else {
                format!("#{}", e.0)
            };
            return Err(Error::NotATreeEdge(label));
        }
        let (x_root, y_root) = g.endpoints(e);
        let mut side = vec![Side::Y; g.n()];
        side[x_root] = Side::X;
        let mut stack = vec![x_root];
        while let Some(u) = stack.pop() {
            for &(v, id) in t.neighbors(u) {
                if id != e && side[v] == Side::Y {
                    side[v] = Side::X;
                    stack.push(v);
                }
            }
        }
        let x_vertices = (0..g.n()).filter(|&v| side[v] == Side::X).collect();
        let mut swap_edges: Vec<OrientedSwapEdge> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, &(u, v))| EdgeId(i) != e && side[u] != side[v])
            .map(|(i, &(u, v))| {
                let (a, b) = if side[u] == Side::X { (u, v) } else { (v, u) };
                OrientedSwapEdge {
                    edge: EdgeId(i),
                    a,
                    b,
                }
            })
            .collect();
        swap_edges.sort();
        Ok(CutContext {
            e,
            x_root,
            y_root,
            side,
            x_vertices,
            swap_edges,
        })
    }

    pub fn failed_edge(&self) -> EdgeId {
        self.e
    }

    /// Endpoint of the failed edge on the X side.
    pub fn x_root(&self) -> usize {
        self.x_root
    }

    pub fn y_root(&self) -> usize {
        self.y_root
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn in_x(&self, v: usize) -> bool {
        self.side[v] == Side::X
    }

    /// X vertices in ascending order.
    pub fn x_vertices(&self) -> &[usize] {
        &self.x_vertices
    }

    pub fn y_count(&self) -> usize {
        self.side.len() - self.x_vertices.len()
    }

    pub fn swap_edges(&self) -> &[OrientedSwapEdge] {
        &self.swap_edges
    }

    pub fn swap_index(&self, edge: EdgeId) -> Option<usize> {
        self.swap_edges.iter().position(|s| s.edge == edge)
    }

    /// Orients `edge` across the cut, or `None` if it does not cross.
    pub fn orient(&self, edge: EdgeId) -> Option<OrientedSwapEdge> {
        self.swap_index(edge).map(|i| self.swap_edges[i])
    }

    /// True if `g` is a member of the swap set with a valid orientation.
    pub fn is_oriented_swap(&self, g: &OrientedSwapEdge) -> bool {
        self.in_x(g.a)
            && !self.in_x(g.b)
            && self
                .swap_edges
                .binary_search(g)
                .is_ok_and(|i| self.swap_edges[i] == *g)
    }

    /// Tree edges with both endpoints in X, as `(u, v)` with `u < v`.
    pub fn tx_edges(&self, g: &Graph, t: &SpanningTree) -> Vec<(usize, usize)> {
        t.edge_ids()
            .iter()
            .map(|&id| g.endpoints(id))
            .filter(|&(u, v)| self.in_x(u) && self.in_x(v))
            .collect()
    }

    /// Membership mask of `U(e', x)` for the tree edge `e' = (x, z)` inside
    /// X: the X vertices reachable from `x` without crossing `e'`.
    pub fn subtree_mask(&self, t: &SpanningTree, x: usize, z: usize) -> Result<Vec<bool>> {
        let adjacent = t.neighbors(x).iter().any(|&(v, _)| v == z);
        if !adjacent || !self.in_x(x) || !self.in_x(z) {
            return Err(Error::NotInTX(format!("{}-{}", x.min(z), x.max(z))));
        }
        let mut mask = vec![false; self.side.len()];
        mask[x] = true;
        let mut stack = vec![x];
        while let Some(u) = stack.pop() {
            for &(v, _) in t.neighbors(u) {
                if !mask[v] && self.in_x(v) && !(u == x && v == z) {
                    mask[v] = true;
                    stack.push(v);
                }
            }
        }
        Ok(mask)
    }

    /// `(U(e', x), U(e', z))` for the tree edge `e' = (x, z)` of `T_X`, each
    /// sorted ascending.
    pub fn subtree_split(
        &self,
        t: &SpanningTree,
        x: usize,
        z: usize,
    ) -> Result<(Vec<usize>, Vec<usize>)> {
        let mask = self.subtree_mask(t, x, z)?;
        Ok(self.x_vertices.iter().partition(|&&v| mask[v]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// 6-cycle plus chord (0,3), tree = path 0..5.
    fn hexagon_chord() -> (Graph, SpanningTree) {
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let g = Graph::new(6, edges).unwrap();
        let t =
            SpanningTree::from_endpoints(&g, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        (g, t)
    }

    #[test]
    fn build_cycle_and_k4() {
        let g = cycle(4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edge_id(3, 0), Some(EdgeId(3)));
        assert_eq!(g.endpoints(EdgeId(3)), (0, 3));
        assert_eq!(k4().edge_count(), 6);
    }

    #[test]
    fn rejects_bad_edge_lists() {
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 2), (0, 1)]).unwrap_err(),
            Error::DuplicateEdge(0, 1)
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 1)]).unwrap_err(),
            Error::SelfLoop(1)
        );
        assert_eq!(
            Graph::new(3, [(0, 3)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 3, n: 3 }
        );
        assert_eq!(
            Graph::new(4, [(0, 1), (2, 3)]).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn two_edge_connectivity() {
        assert!(cycle(4).is_two_edge_connected());
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!path.is_two_edge_connected());
        assert_eq!(path.bridges(), vec![EdgeId(0), EdgeId(1)]);
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(bowtie.is_two_edge_connected());
        let dumbbell =
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(dumbbell.bridges(), vec![EdgeId(3)]);
    }

    #[test]
    fn spanning_tree_validation() {
        let g = cycle(4);
        let t = SpanningTree::from_endpoints(&g, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(t.dist(0, 3), 3);
        assert!(matches!(
            SpanningTree::from_endpoints(&g, &[(0, 1), (2, 3)]),
            Err(Error::NotATree(_))
        ));
        let g = k4();
        let star = SpanningTree::from_endpoints(&g, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.dist(1, 2), 2);
        assert!(matches!(
            SpanningTree::from_endpoints(&g, &[(0, 1), (1, 2), (0, 2)]),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn split_cut_examples() {
        let g = cycle(4);
        let t = SpanningTree::from_endpoints(&g, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let cut = CutContext::new(&g, &t, g.edge_id(1, 2).unwrap()).unwrap();
        assert_eq!(cut.x_vertices(), &[0, 1]);
        assert_eq!(cut.swap_edges().len(), 1);
        assert_eq!((cut.swap_edges()[0].a, cut.swap_edges()[0].b), (0, 3));
        assert!(matches!(
            CutContext::new(&g, &t, g.edge_id(0, 3).unwrap()),
            Err(Error::NotATreeEdge(_))
        ));

        let g = k4();
        let star = SpanningTree::from_endpoints(&g, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let cut = CutContext::new(&g, &star, g.edge_id(0, 1).unwrap()).unwrap();
        assert_eq!(cut.x_vertices(), &[0, 2, 3]);
        let s: Vec<_> = cut.swap_edges().iter().map(|s| (s.a, s.b)).collect();
        assert_eq!(s, vec![(2, 1), (3, 1)]);

        let (g, t) = hexagon_chord();
        let cut = CutContext::new(&g, &t, g.edge_id(2, 3).unwrap()).unwrap();
        assert_eq!(cut.x_vertices(), &[0, 1, 2]);
        let s: Vec<_> = cut.swap_edges().iter().map(|s| (s.a, s.b)).collect();
        assert_eq!(s, vec![(0, 3), (0, 5)]);
    }

    #[test]
    fn subtree_split_examples() {
        let g = k4();
        let star = SpanningTree::from_endpoints(&g, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let cut = CutContext::new(&g, &star, g.edge_id(0, 1).unwrap()).unwrap();
        assert_eq!(
            cut.subtree_split(&star, 0, 2).unwrap(),
            (vec![0, 3], vec![2])
        );
        assert!(matches!(
            cut.subtree_split(&star, 0, 1),
            Err(Error::NotInTX(_))
        ));
        assert!(matches!(
            cut.subtree_split(&star, 2, 3),
            Err(Error::NotInTX(_))
        ));

        let (g, t) = hexagon_chord();
        let cut = CutContext::new(&g, &t, g.edge_id(2, 3).unwrap()).unwrap();
        assert_eq!(cut.subtree_split(&t, 1, 2).unwrap(), (vec![0, 1], vec![2]));
        assert_eq!(cut.subtree_split(&t, 0, 1).unwrap(), (vec![0], vec![1, 2]));
    }
}
