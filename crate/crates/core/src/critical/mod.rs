//! Critical edges, optimal pairs, and small critical sets.
//!
//! For a failed tree edge `e` with cut `(X, Y)`, every vertex `x` of X gets
//! the pair of swap edges `(g, g')` maximizing
//!
//! ```text
//! phi_x(g, g') = d_T(x, a) + d_T(b, b') + d_T(a', x)
//! ```
//!
//! where `g = (a, b)`, `g' = (a', b')` are oriented with `a, a'` in X. The
//! pairs drive the critical-set constructor; [`min_critical_set_size`] is
//! the exact ground truth it is checked against.
//!
//! Pairs are unordered with repetition and stored as index pairs `(i, j)`,
//! `i <= j`, into [`CutContext::swap_edges`]. Since swap edges are sorted by
//! endpoint pair, the lexicographically smallest `(i, j)` is also the pair
//! with the smallest `(min endpoint-pair, max endpoint-pair)` key.

pub mod hitting;
mod trace;

use serde::{Deserialize, Serialize};

use crate::graph::{CutContext, OrientedSwapEdge, SpanningTree};
use crate::stretch::swap_stretch_fast;
use crate::{Error, Result};

pub use trace::{proof_trace, ProofTrace, TraceCase, TraceStep};

/// An unordered pair of swap-edge indices with `0 <= i <= j`.
pub type PairIdx = (usize, usize);

/// `phi_x(g, g')` for oriented swap edges of `cut`.
pub fn phi(
    cut: &CutContext,
    t: &SpanningTree,
    x: usize,
    g: &OrientedSwapEdge,
    g2: &OrientedSwapEdge,
) -> Result<u32> {
    if !cut.in_x(x) {
        return Err(Error::SideViolation(x));
    }
    for s in [g, g2] {
        if !cut.in_x(s.a) {
            return Err(Error::SideViolation(s.a));
        }
        if cut.in_x(s.b) {
            return Err(Error::OrientationMismatch);
        }
    }
    Ok(t.dist(x, g.a) + t.dist(g.b, g2.b) + t.dist(g2.a, x))
}

#[inline]
pub(crate) fn phi_idx(cut: &CutContext, t: &SpanningTree, x: usize, (i, j): PairIdx) -> u32 {
    let s = cut.swap_edges();
    t.dist(x, s[i].a) + t.dist(s[i].b, s[j].b) + t.dist(s[j].a, x)
}

/// Per-vertex maximum `Phi(x)` and the canonical optimal pair for every
/// vertex of X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairAssignment {
    value: Vec<u32>,
    canonical: Vec<Option<PairIdx>>,
}

impl PairAssignment {
    /// `Phi(x)`. Panics if `x` is not in X.
    pub fn value(&self, x: usize) -> u32 {
        assert!(self.canonical[x].is_some(), "vertex {x} is not in X");
        self.value[x]
    }

    /// Canonical optimal pair at `x`. Panics if `x` is not in X.
    pub fn canonical(&self, x: usize) -> PairIdx {
        self.canonical[x].unwrap_or_else(|| panic!("vertex {x} is not in X"))
    }

    pub fn canonical_edges(
        &self,
        cut: &CutContext,
        x: usize,
    ) -> (OrientedSwapEdge, OrientedSwapEdge) {
        let (i, j) = self.canonical(x);
        (cut.swap_edges()[i], cut.swap_edges()[j])
    }
}

/// Exhaustive `O(|S_e|^2)` search per vertex of X.
pub fn compute_pairs(cut: &CutContext, t: &SpanningTree) -> Result<PairAssignment> {
    let s = cut.swap_edges();
    if s.is_empty() {
        return Err(Error::EmptySwapSet);
    }
    let n = t.n();
    let mut value = vec![0; n];
    let mut canonical = vec![None; n];
    let mut to_a = vec![0u32; s.len()];
    for &x in cut.x_vertices() {
        for (d, g) in to_a.iter_mut().zip(s) {
            *d = t.dist(x, g.a);
        }
        let mut best = (0, (0, 0));
        let mut found = false;
        for i in 0..s.len() {
            for j in i..s.len() {
                let v = to_a[i] + t.dist(s[i].b, s[j].b) + to_a[j];
                if !found || v > best.0 {
                    best = (v, (i, j));
                    found = true;
                }
            }
        }
        value[x] = best.0;
        canonical[x] = Some(best.1);
    }
    Ok(PairAssignment { value, canonical })
}

/// Every optimal pair at `x`, in canonical order.
pub fn optimal_pairs(
    cut: &CutContext,
    t: &SpanningTree,
    pairs: &PairAssignment,
    x: usize,
) -> Vec<PairIdx> {
    let target = pairs.value(x);
    let k = cut.swap_edges().len();
    (0..k)
        .flat_map(|i| (i..k).map(move |j| (i, j)))
        .filter(|&p| phi_idx(cut, t, x, p) == target)
        .collect()
}

/// Critical edges of swap edge `f`: the swap edges realizing its maximum
/// detour.
pub fn critical_edges_of(
    cut: &CutContext,
    t: &SpanningTree,
    f: &OrientedSwapEdge,
) -> Vec<OrientedSwapEdge> {
    swap_stretch_fast(cut, t, f).critical_edges
}

/// Critical edges of every swap edge, as sorted index lists, in swap-edge
/// order.
pub fn critical_family(cut: &CutContext, t: &SpanningTree) -> Vec<Vec<usize>> {
    let s = cut.swap_edges();
    s.iter()
        .map(|f| {
            let detours: Vec<u32> = s
                .iter()
                .map(|g| t.dist(f.a, g.a) + 1 + t.dist(g.b, f.b))
                .collect();
            let max = detours.iter().copied().max().unwrap_or(0);
            (0..s.len()).filter(|&i| detours[i] == max).collect()
        })
        .collect()
}

fn pair_hits((i, j): PairIdx, set: &[usize]) -> bool {
    set.contains(&i) || set.contains(&j)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum ClaimOutcome {
    PassCanonical,
    PassAlternative,
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimEntry {
    pub f: OrientedSwapEdge,
    pub outcome: ClaimOutcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub entries: Vec<ClaimEntry>,
}

impl ClaimReport {
    pub fn count(&self, outcome: ClaimOutcome) -> usize {
        self.entries.iter().filter(|e| e.outcome == outcome).count()
    }

    pub fn violations(&self) -> impl Iterator<Item = &ClaimEntry> {
        self.entries
            .iter()
            .filter(|e| e.outcome == ClaimOutcome::Violation)
    }
}

/// Checks, for every swap edge `f = (x, y)`, that an optimal pair at `x`
/// contains a critical edge of `f`; canonical pair first, then any other
/// optimal pair.
pub fn check_claim15(cut: &CutContext, t: &SpanningTree, pairs: &PairAssignment) -> ClaimReport {
    let family = critical_family(cut, t);
    let entries = cut
        .swap_edges()
        .iter()
        .zip(&family)
        .map(|(f, crit)| {
            let outcome = if pair_hits(pairs.canonical(f.a), crit) {
                ClaimOutcome::PassCanonical
            } else if optimal_pairs(cut, t, pairs, f.a)
                .into_iter()
                .any(|p| pair_hits(p, crit))
            {
                ClaimOutcome::PassAlternative
            } else {
                ClaimOutcome::Violation
            };
            ClaimEntry { f: *f, outcome }
        })
        .collect();
    ClaimReport { entries }
}

/// Which of the two alternative conclusions held for a mismatch edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaCondition {
    /// `a_z, a'_z` in `U(e',x)` and `{a_x, a'_x}` meets `U(e',z)`.
    First,
    /// `a_x, a'_x` in `U(e',z)` and `{a_z, a'_z}` meets `U(e',x)`.
    Second,
    Both,
    /// Only satisfied by an alternative choice of optimal pairs under which
    /// the edge is no longer a mismatch.
    Vacuous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairChoice {
    Canonical,
    Alternative,
}

/// Evaluates both conclusions for the tree edge `(x, z)` of `T_X`, given
/// `U(e',x)` as a mask and the pairs chosen at `x` and `z`.
pub(crate) fn lemma_conditions(
    cut: &CutContext,
    near_x: &[bool],
    px: PairIdx,
    pz: PairIdx,
) -> Option<LemmaCondition> {
    let s = cut.swap_edges();
    let (ax, ax2) = (s[px.0].a, s[px.1].a);
    let (az, az2) = (s[pz.0].a, s[pz.1].a);
    let first = near_x[az] && near_x[az2] && (!near_x[ax] || !near_x[ax2]);
    let second = !near_x[ax] && !near_x[ax2] && (near_x[az] || near_x[az2]);
    match (first, second) {
        (true, true) => Some(LemmaCondition::Both),
        (true, false) => Some(LemmaCondition::First),
        (false, true) => Some(LemmaCondition::Second),
        (false, false) => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaEntry {
    pub x: usize,
    pub z: usize,
    pub condition: LemmaCondition,
    pub choice: PairChoice,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    /// One entry per oriented mismatch edge `(x, z)` that passed.
    pub entries: Vec<LemmaEntry>,
    /// Oriented mismatch edges failing under every optimal-pair choice.
    pub violations: Vec<(usize, usize)>,
}

/// Tests every oriented tree edge `(x, z)` of `T_X` with
/// `phi_z(pair(x)) < Phi(z)` against the two alternative conclusions.
pub fn lemma_check(cut: &CutContext, t: &SpanningTree, pairs: &PairAssignment) -> LemmaReport {
    let mut report = LemmaReport::default();
    for &x in cut.x_vertices() {
        for &(z, _) in t.neighbors(x) {
            if !cut.in_x(z) {
                continue;
            }
            let (px, pz) = (pairs.canonical(x), pairs.canonical(z));
            let target = pairs.value(z);
            if phi_idx(cut, t, z, px) >= target {
                continue;
            }
            let near_x = cut.subtree_mask(t, x, z).expect("tree edge inside X");
            if let Some(condition) = lemma_conditions(cut, &near_x, px, pz) {
                report.entries.push(LemmaEntry {
                    x,
                    z,
                    condition,
                    choice: PairChoice::Canonical,
                });
                continue;
            }
            let alt_x = optimal_pairs(cut, t, pairs, x);
            let alt_z = optimal_pairs(cut, t, pairs, z);
            let mut vacuous = false;
            let mut found = None;
            'search: for &ax in &alt_x {
                let mismatch = phi_idx(cut, t, z, ax) < target;
                if !mismatch {
                    vacuous = true;
                    continue;
                }
                for &az in &alt_z {
                    if let Some(c) = lemma_conditions(cut, &near_x, ax, az) {
                        found = Some(c);
                        break 'search;
                    }
                }
            }
            match (found, vacuous) {
                (Some(condition), _) => report.entries.push(LemmaEntry {
                    x,
                    z,
                    condition,
                    choice: PairChoice::Alternative,
                }),
                (None, true) => report.entries.push(LemmaEntry {
                    x,
                    z,
                    condition: LemmaCondition::Vacuous,
                    choice: PairChoice::Alternative,
                }),
                (None, false) => report.violations.push((x, z)),
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseTag {
    Size2,
    Size4,
    Size6,
    Fallback,
}

impl CaseTag {
    pub fn from_rounds(rounds: usize) -> Self {
        match rounds {
            0 | 1 => CaseTag::Size2,
            2 => CaseTag::Size4,
            3 => CaseTag::Size6,
            _ => CaseTag::Fallback,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalSetResult {
    /// Sorted by endpoint pair.
    pub edges: Vec<OrientedSwapEdge>,
    pub case: CaseTag,
    /// Greedy rounds; each adds at most two edges.
    pub iterations: usize,
    /// Rounds whose canonical pair missed the selected swap edge and an
    /// alternative pair (or a bare critical edge) was used instead.
    pub non_canonical_rounds: usize,
    pub verified: bool,
    /// Exact minimum, attached on fallback.
    pub min_hitting_set_size: Option<usize>,
}

/// Greedy critical-set construction following the proof order: start from
/// the pair of the X endpoint `x0` of `e`, then repeatedly add the pair of
/// the uncovered swap edge whose X endpoint is closest to `x0`.
pub fn construct_critical_set(
    cut: &CutContext,
    t: &SpanningTree,
    pairs: &PairAssignment,
) -> Result<CriticalSetResult> {
    let s = cut.swap_edges();
    if s.is_empty() {
        return Err(Error::EmptySwapSet);
    }
    let family = critical_family(cut, t);
    let x0 = cut.x_root();
    let mut chosen = vec![false; s.len()];
    let (i, j) = pairs.canonical(x0);
    chosen[i] = true;
    chosen[j] = true;
    let mut iterations = 1;
    let mut non_canonical_rounds = 0;
    loop {
        let next = (0..s.len())
            .filter(|&f| !family[f].iter().any(|&g| chosen[g]))
            .min_by_key(|&f| (t.dist(x0, s[f].a), f));
        let Some(f) = next else { break };
        let x = s[f].a;
        let crit = &family[f];
        let canonical = pairs.canonical(x);
        let (i, j) = if pair_hits(canonical, crit) {
            canonical
        } else {
            non_canonical_rounds += 1;
            optimal_pairs(cut, t, pairs, x)
                .into_iter()
                .find(|&p| pair_hits(p, crit))
                .unwrap_or((crit[0], crit[0]))
        };
        chosen[i] = true;
        chosen[j] = true;
        iterations += 1;
    }
    let edges: Vec<OrientedSwapEdge> = (0..s.len()).filter(|&i| chosen[i]).map(|i| s[i]).collect();
    let verified = is_critical_set(cut, t, &edges);
    let case = CaseTag::from_rounds(iterations);
    let min_hitting_set_size = (case == CaseTag::Fallback).then(|| {
        let incumbent: Vec<usize> = (0..s.len()).filter(|&i| chosen[i]).collect();
        hitting::min_hitting_set(&family, Some(&incumbent)).map_or(0, |h| h.len())
    });
    Ok(CriticalSetResult {
        edges,
        case,
        iterations,
        non_canonical_rounds,
        verified,
        min_hitting_set_size,
    })
}

/// True iff `set` contains a critical edge of every swap edge.
pub fn is_critical_set(cut: &CutContext, t: &SpanningTree, set: &[OrientedSwapEdge]) -> bool {
    let family = critical_family(cut, t);
    let s = cut.swap_edges();
    family
        .iter()
        .all(|crit| crit.iter().any(|&g| set.contains(&s[g])))
}

/// A minimum critical set, found exactly by branch and bound.
pub fn min_critical_set(cut: &CutContext, t: &SpanningTree) -> Result<Vec<OrientedSwapEdge>> {
    let pairs = compute_pairs(cut, t)?;
    let greedy = construct_critical_set(cut, t, &pairs)?;
    let s = cut.swap_edges();
    let incumbent: Vec<usize> = greedy
        .edges
        .iter()
        .filter_map(|g| s.iter().position(|h| h == g))
        .collect();
    let family = critical_family(cut, t);
    let best = hitting::min_hitting_set(&family, greedy.verified.then_some(&incumbent[..]))
        .expect("critical sets are never empty");
    Ok(best.into_iter().map(|i| s[i]).collect())
}

pub fn min_critical_set_size(cut: &CutContext, t: &SpanningTree) -> Result<usize> {
    min_critical_set(cut, t).map(|c| c.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeId, Graph};

    fn k4_star() -> (Graph, SpanningTree) {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = SpanningTree::from_endpoints(&g, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        (g, t)
    }

    fn c4_path() -> (Graph, SpanningTree) {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = SpanningTree::from_endpoints(&g, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        (g, t)
    }

    fn hexagon_chord() -> (Graph, SpanningTree) {
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let g = Graph::new(6, edges).unwrap();
        let t =
            SpanningTree::from_endpoints(&g, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        (g, t)
    }

    fn cut_of(g: &Graph, t: &SpanningTree, u: usize, v: usize) -> CutContext {
        CutContext::new(g, t, g.edge_id(u, v).unwrap()).unwrap()
    }

    fn sw(cut: &CutContext, g: &Graph, u: usize, v: usize) -> OrientedSwapEdge {
        cut.orient(g.edge_id(u, v).unwrap()).unwrap()
    }

    #[test]
    fn phi_examples() {
        let (g, t) = k4_star();
        let cut = cut_of(&g, &t, 0, 1);
        let g31 = sw(&cut, &g, 3, 1);
        assert_eq!(phi(&cut, &t, 2, &g31, &g31).unwrap(), 4);
        let g21 = sw(&cut, &g, 2, 1);
        assert_eq!(phi(&cut, &t, 2, &g21, &g21).unwrap(), 0);
        assert_eq!(phi(&cut, &t, 1, &g21, &g21), Err(Error::SideViolation(1)));

        let (g, t) = hexagon_chord();
        let cut = cut_of(&g, &t, 2, 3);
        let (g05, g03) = (sw(&cut, &g, 0, 5), sw(&cut, &g, 0, 3));
        assert_eq!(phi(&cut, &t, 2, &g05, &g03).unwrap(), 6);
        assert_eq!(phi(&cut, &t, 2, &g03, &g05).unwrap(), 6);
    }

    #[test]
    fn compute_pairs_examples() {
        let (g, t) = c4_path();
        let cut = cut_of(&g, &t, 1, 2);
        let pairs = compute_pairs(&cut, &t).unwrap();
        let a = cut.swap_edges()[0].a;
        for &x in cut.x_vertices() {
            assert_eq!(pairs.canonical(x), (0, 0));
            assert_eq!(pairs.value(x), 2 * t.dist(x, a));
        }

        let (g, t) = k4_star();
        let cut = cut_of(&g, &t, 0, 1);
        let pairs = compute_pairs(&cut, &t).unwrap();
        let g31 = sw(&cut, &g, 3, 1);
        assert_eq!(pairs.canonical_edges(&cut, 2), (g31, g31));
        assert_eq!(pairs.value(2), 4);

        let (g, t) = hexagon_chord();
        let cut = cut_of(&g, &t, 2, 3);
        let pairs = compute_pairs(&cut, &t).unwrap();
        assert_eq!(pairs.value(2), 6);
        let (p, q) = pairs.canonical_edges(&cut, 2);
        assert_eq!((p, q), (sw(&cut, &g, 0, 3), sw(&cut, &g, 0, 5)));
    }

    #[test]
    fn critical_edges_examples() {
        let (g, t) = c4_path();
        let cut = cut_of(&g, &t, 1, 2);
        let f = cut.swap_edges()[0];
        assert_eq!(critical_edges_of(&cut, &t, &f), vec![f]);

        let (g, t) = k4_star();
        let cut = cut_of(&g, &t, 0, 1);
        assert_eq!(
            critical_edges_of(&cut, &t, &sw(&cut, &g, 2, 1)),
            vec![sw(&cut, &g, 3, 1)]
        );

        let (g, t) = hexagon_chord();
        let cut = cut_of(&g, &t, 2, 3);
        assert_eq!(
            critical_edges_of(&cut, &t, &sw(&cut, &g, 0, 5)),
            vec![sw(&cut, &g, 0, 3)]
        );
    }

    #[test]
    fn claim15_examples() {
        for (g, t, (u, v)) in [
            {
                let (g, t) = k4_star();
                (g, t, (0, 1))
            },
            {
                let (g, t) = c4_path();
                (g, t, (1, 2))
            },
            {
                let (g, t) = hexagon_chord();
                (g, t, (2, 3))
            },
        ] {
            let cut = cut_of(&g, &t, u, v);
            let pairs = compute_pairs(&cut, &t).unwrap();
            let report = check_claim15(&cut, &t, &pairs);
            assert_eq!(report.entries.len(), cut.swap_edges().len());
            assert_eq!(report.count(ClaimOutcome::Violation), 0);
        }
        let (g, t) = k4_star();
        let cut = cut_of(&g, &t, 0, 1);
        let pairs = compute_pairs(&cut, &t).unwrap();
        let report = check_claim15(&cut, &t, &pairs);
        let e21 = report
            .entries
            .iter()
            .find(|e| e.f == sw(&cut, &g, 2, 1))
            .unwrap();
        assert_eq!(e21.outcome, ClaimOutcome::PassCanonical);
    }

    #[test]
    fn lemma_on_hexagon_has_no_violations() {
        let (g, t) = hexagon_chord();
        let cut = cut_of(&g, &t, 2, 3);
        let pairs = compute_pairs(&cut, &t).unwrap();
        let report = lemma_check(&cut, &t, &pairs);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn lemma_on_uniform_star_is_empty() {
        // Star T_X where every vertex of X shares the pair (f, f).
        let (g, t) = c4_path();
        let cut = cut_of(&g, &t, 2, 3);
        let pairs = compute_pairs(&cut, &t).unwrap();
        let report = lemma_check(&cut, &t, &pairs);
        assert!(report.entries.is_empty() && report.violations.is_empty());
    }

    #[test]
    fn constructor_examples() {
        let (g, t) = c4_path();
        let cut = cut_of(&g, &t, 1, 2);
        let pairs = compute_pairs(&cut, &t).unwrap();
        let r = construct_critical_set(&cut, &t, &pairs).unwrap();
        assert_eq!(r.edges, cut.swap_edges().to_vec());
        assert_eq!((r.case, r.verified), (CaseTag::Size2, true));

        let (g, t) = k4_star();
        let cut = cut_of(&g, &t, 0, 1);
        let pairs = compute_pairs(&cut, &t).unwrap();
        let r = construct_critical_set(&cut, &t, &pairs).unwrap();
        assert!(r.verified && r.edges.len() <= 4);
        assert!(matches!(r.case, CaseTag::Size2 | CaseTag::Size4));

        let (g, t) = hexagon_chord();
        let cut = cut_of(&g, &t, 2, 3);
        let pairs = compute_pairs(&cut, &t).unwrap();
        let r = construct_critical_set(&cut, &t, &pairs).unwrap();
        assert_eq!(r.edges, vec![sw(&cut, &g, 0, 3), sw(&cut, &g, 0, 5)]);
        assert_eq!((r.case, r.verified), (CaseTag::Size2, true));
    }

    #[test]
    fn is_critical_set_examples() {
        let (g, t) = k4_star();
        let cut = cut_of(&g, &t, 0, 1);
        assert!(is_critical_set(&cut, &t, cut.swap_edges()));
        assert!(!is_critical_set(&cut, &t, &[]));
        assert!(!is_critical_set(&cut, &t, &[sw(&cut, &g, 3, 1)]));
    }

    #[test]
    fn min_critical_set_examples() {
        let (g, t) = c4_path();
        assert_eq!(min_critical_set_size(&cut_of(&g, &t, 1, 2), &t).unwrap(), 1);
        let (g, t) = k4_star();
        assert_eq!(min_critical_set_size(&cut_of(&g, &t, 0, 1), &t).unwrap(), 2);
        // (0,3) and (0,5) are each other's only critical edge.
        let (g, t) = hexagon_chord();
        assert_eq!(min_critical_set_size(&cut_of(&g, &t, 2, 3), &t).unwrap(), 2);
    }

    #[test]
    fn empty_swap_set_is_an_error() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let t = SpanningTree::new(&g, [EdgeId(0), EdgeId(1)]).unwrap();
        let cut = CutContext::new(&g, &t, EdgeId(0)).unwrap();
        assert_eq!(compute_pairs(&cut, &t), Err(Error::EmptySwapSet));
    }
}
