use std::collections::VecDeque;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Instance;
use crate::graph::{EdgeId, Graph, SpanningTree};
use crate::{Error, Result};

/// All randomness in the crate comes from ChaCha8 seeded with
/// `seed_from_u64`, so a seed reproduces the same output on every platform
/// for a given build.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    /// Hamiltonian cycle `0..n` plus uniformly sampled chords.
    CycleChords,
    /// `G(n, p)` made connected, then every bridge covered by an extra edge.
    Augment,
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cycle-chords" => Ok(Model::CycleChords),
            "augment" => Ok(Model::Augment),
            _ => Err(format!(
                "unknown model `{s}` (expected cycle-chords or augment)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeMethod {
    UniformRandom,
    Bfs,
    Dfs,
}

impl FromStr for TreeMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "uniform" | "uniform-random" => Ok(TreeMethod::UniformRandom),
            "bfs" => Ok(TreeMethod::Bfs),
            "dfs" => Ok(TreeMethod::Dfs),
            _ => Err(format!(
                "unknown tree method `{s}` (expected uniform, bfs or dfs)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    /// Chord count for [`Model::CycleChords`].
    pub chords: usize,
    /// Edge probability for [`Model::Augment`].
    pub density: f64,
    pub tree: TreeMethod,
    pub seed: u64,
}

impl GenSpec {
    pub fn cycle_chords(n: usize, chords: usize, tree: TreeMethod, seed: u64) -> Self {
        GenSpec {
            model: Model::CycleChords,
            n,
            chords,
            density: 0.0,
            tree,
            seed,
        }
    }

    pub fn augment(n: usize, density: f64, tree: TreeMethod, seed: u64) -> Self {
        GenSpec {
            model: Model::Augment,
            n,
            chords: 0,
            density,
            tree,
            seed,
        }
    }
}

/// Graph and tree from one seeded stream: the graph draws first.
pub fn gen_instance(spec: &GenSpec) -> Result<Instance> {
    let mut rng = rng_from_seed(spec.seed);
    let g = graph_with(spec, &mut rng)?;
    let t = gen_tree(&g, spec.tree, &mut rng);
    Ok(Instance::new(g, t))
}

pub fn gen_graph(spec: &GenSpec) -> Result<Graph> {
    graph_with(spec, &mut rng_from_seed(spec.seed))
}

fn graph_with(spec: &GenSpec, rng: &mut impl Rng) -> Result<Graph> {
    let n = spec.n;
    if n < 3 {
        return Err(Error::InfeasibleSpec(format!(
            "n must be at least 3, got {n}"
        )));
    }
    match spec.model {
        Model::CycleChords => {
            let chords: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 2..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !(u == 0 && v == n - 1))
                .collect();
            if spec.chords > chords.len() {
                return Err(Error::InfeasibleSpec(format!(
                    "{} chords requested but only {} exist for n = {n}",
                    spec.chords,
                    chords.len()
                )));
            }
            let mut picked = index::sample(rng, chords.len(), spec.chords).into_vec();
            picked.sort_unstable();
            let edges = (0..n)
                .map(|i| (i, (i + 1) % n))
                .chain(picked.into_iter().map(|i| chords[i]));
            Graph::new(n, edges)
        }
        Model::Augment => {
            if !(spec.density > 0.0 && spec.density <= 1.0) {
                return Err(Error::InfeasibleSpec(format!(
                    "density must lie in (0, 1], got {}",
                    spec.density
                )));
            }
            augment(n, spec.density, rng)
        }
    }
}

fn augment(n: usize, density: f64, rng: &mut impl Rng) -> Result<Graph> {
    let mut present = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    let mut add = |u: usize, v: usize, edges: &mut Vec<(usize, usize)>| {
        if !present[u][v] {
            present[u][v] = true;
            present[v][u] = true;
            edges.push((u.min(v), u.max(v)));
        }
    };
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                add(u, v, &mut edges);
            }
        }
    }
    // Join components in order of their smallest vertex.
    let comps = components(n, &edges);
    for w in comps.windows(2) {
        let u = w[0][rng.gen_range(0..w[0].len())];
        let v = w[1][rng.gen_range(0..w[1].len())];
        add(u, v, &mut edges);
    }
    loop {
        let g = Graph::new(n, edges.iter().copied())?;
        let Some(&bridge) = g.bridges().first() else {
            return Ok(g);
        };
        let (u, v) = g.endpoints(bridge);
        let without: Vec<_> = edges.iter().copied().filter(|&e| e != (u, v)).collect();
        let side_u = reach(n, &without, u);
        let a_side: Vec<usize> = (0..n).filter(|&w| side_u[w]).collect();
        let b_side: Vec<usize> = (0..n).filter(|&w| !side_u[w]).collect();
        loop {
            let a = a_side[rng.gen_range(0..a_side.len())];
            let b = b_side[rng.gen_range(0..b_side.len())];
            if (a.min(b), a.max(b)) != (u, v) {
                add(a, b, &mut edges);
                break;
            }
        }
    }
}

fn reach(n: usize, edges: &[(usize, usize)], from: usize) -> Vec<bool> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

fn components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if assigned[s] {
            continue;
        }
        let seen = reach(n, edges, s);
        let comp: Vec<usize> = (0..n).filter(|&v| seen[v]).collect();
        for &v in &comp {
            assigned[v] = true;
        }
        out.push(comp);
    }
    out
}

/// Spanning tree by `method`; bfs and dfs start from a random root.
pub fn gen_tree(g: &Graph, method: TreeMethod, rng: &mut impl Rng) -> SpanningTree {
    match method {
        TreeMethod::UniformRandom => uniform_spanning_tree(g, rng),
        TreeMethod::Bfs => bfs_tree(g, rng.gen_range(0..g.n())),
        TreeMethod::Dfs => dfs_tree(g, rng.gen_range(0..g.n())),
    }
}

/// Breadth-first tree, neighbors visited in ascending order.
pub fn bfs_tree(g: &Graph, root: usize) -> SpanningTree {
    let mut seen = vec![false; g.n()];
    let mut ids = Vec::with_capacity(g.n().saturating_sub(1));
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        for &(v, id) in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                ids.push(id);
                queue.push_back(v);
            }
        }
    }
    SpanningTree::new(g, ids).expect("graphs are connected")
}

/// Depth-first tree, neighbors visited in ascending order.
pub fn dfs_tree(g: &Graph, root: usize) -> SpanningTree {
    let mut seen = vec![false; g.n()];
    let mut ids = Vec::with_capacity(g.n().saturating_sub(1));
    let mut stack = vec![(root, 0usize)];
    seen[root] = true;
    while let Some((u, pos)) = stack.last_mut() {
        let u = *u;
        match g.neighbors(u).get(*pos) {
            Some(&(v, id)) => {
                *pos += 1;
                if !seen[v] {
                    seen[v] = true;
                    ids.push(id);
                    stack.push((v, 0));
                }
            }
            None => {
                stack.pop();
            }
        }
    }
    SpanningTree::new(g, ids).expect("graphs are connected")
}

/// Uniformly random spanning tree by Wilson's loop-erased random walks.
pub fn uniform_spanning_tree(g: &Graph, rng: &mut impl Rng) -> SpanningTree {
    let n = g.n();
    let mut in_tree = vec![false; n];
    let mut next: Vec<Option<(usize, EdgeId)>> = vec![None; n];
    let root = rng.gen_range(0..n);
    in_tree[root] = true;
    for start in 0..n {
        let mut u = start;
        while !in_tree[u] {
            let nbrs = g.neighbors(u);
            let step = nbrs[rng.gen_range(0..nbrs.len())];
            next[u] = Some(step);
            u = step.0;
        }
        // Retrace the walk; overwritten pointers have erased the loops.
        let mut u = start;
        while !in_tree[u] {
            in_tree[u] = true;
            u = next[u].expect("walk pointer").0;
        }
    }
    let ids = (0..n)
        .filter(|&v| v != root)
        .map(|v| next[v].expect("non-root vertex").1);
    SpanningTree::new(g, ids).expect("walk pointers form a tree")
}
