//! Verification campaigns: run a selection of checks over every tree edge of
//! every instance in a corpus and fold the outcomes into one deterministic
//! [`VerificationReport`].
//!
//! Instances are processed in parallel in fixed-size chunks; results are
//! merged in corpus order, so the report does not depend on the thread
//! count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bestswap::{best_swaps_for_edge, Engine};
use crate::critical::hitting::min_hitting_set;
use crate::critical::{
    check_claim15, compute_pairs, construct_critical_set, critical_family, lemma_check, phi,
    phi_idx, proof_trace, CaseTag, ClaimOutcome, LemmaCondition, PairAssignment, PairChoice,
    TraceCase,
};
use crate::graph::{CutContext, EdgeId, Graph, SpanningTree};
use crate::instances::{
    gen_instance, rng_from_seed, write_instance, GenSpec, Instance, Model, TreeMethod,
};
use crate::stretch::{
    side_stretch, swap_stretch_fast, swap_stretch_oracle, swap_stretch_over_cut, RationalStretch,
};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Brute-force swap stretch equals the maximum detour.
    Oracle,
    /// An optimal pair at `x` holds a critical edge of every `f = (x, y)`.
    Claim15,
    /// Every mismatch edge satisfies one of the two conclusions.
    Lemma,
    /// Greedy set verified within three rounds; exact minimum at most 6.
    Theorem,
    /// Oracle and pairs engines give identical best swaps.
    Bestswap,
    /// The replayed argument never finds a third mismatch edge.
    ProofTrace,
    /// Sampled symmetry, optimality, and Lipschitz bounds of the pair
    /// potential.
    Phi,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Oracle,
        Check::Claim15,
        Check::Lemma,
        Check::Theorem,
        Check::Bestswap,
        Check::ProofTrace,
        Check::Phi,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::Oracle => "oracle",
            Check::Claim15 => "claim15",
            Check::Lemma => "lemma",
            Check::Theorem => "theorem",
            Check::Bestswap => "bestswap",
            Check::ProofTrace => "proof-trace",
            Check::Phi => "phi",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

/// Parses a comma-separated check list; `all` selects every check.
pub fn parse_checks(list: &str) -> std::result::Result<Vec<Check>, String> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            out.extend(Check::ALL);
        } else {
            out.push(item.parse()?);
        }
    }
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err("at least one check must be selected".into());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub checks: Vec<Check>,
    /// Seeds the sampling of the `phi` check.
    pub seed: u64,
    pub phi_samples_per_edge: usize,
}

impl CampaignConfig {
    pub fn new(checks: Vec<Check>, seed: u64) -> Self {
        CampaignConfig {
            checks,
            seed,
            phi_samples_per_edge: 64,
        }
    }

    fn has(&self, c: Check) -> bool {
        self.checks.contains(&c)
    }
}

/// A corpus entry with a stable, human-readable name.
#[derive(Clone, Debug)]
pub struct LabeledInstance {
    pub label: String,
    pub instance: Instance,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleStats {
    /// Swap pairs `(e, f)` compared.
    pub pairs: u64,
    pub agree: u64,
    pub disagree: u64,
    /// Pairs where the oracle differs from `max(side stretch, detour)`.
    pub decomposition_failures: u64,
    /// Pairs where the stretch measured on the swap edges alone differs
    /// from the detour.
    pub cut_restricted_disagree: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimStats {
    pub pass_canonical: u64,
    pub pass_alternative: u64,
    pub violation: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaStats {
    pub mismatch_edges: u64,
    pub first: u64,
    pub second: u64,
    pub both: u64,
    pub vacuous: u64,
    pub canonical: u64,
    pub alternative: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremStats {
    /// SIZE2 / SIZE4 / SIZE6 / FALLBACK counts of the greedy constructor.
    pub case_histogram: BTreeMap<String, u64>,
    /// Exact minimum critical-set size -> tree edges.
    pub min_size_histogram: BTreeMap<usize, u64>,
    pub max_min_size: usize,
    pub max_constructed_size: usize,
    pub unverified: u64,
    pub non_canonical_rounds: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestSwapStats {
    pub rows: u64,
    pub agree: u64,
    pub disagree: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStats {
    pub case_histogram: BTreeMap<String, u64>,
    pub third_mismatch: u64,
    /// Traces with any deviation from the predicted steps.
    pub with_anomalies: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiStats {
    pub samples: u64,
    pub symmetry_violations: u64,
    pub optimality_violations: u64,
    pub lipschitz_violations: u64,
}

impl PhiStats {
    pub fn violations(&self) -> u64 {
        self.symmetry_violations + self.optimality_violations + self.lipschitz_violations
    }
}

/// A failing `(instance, check)` with the instance text that reproduces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: String,
    pub check: Check,
    pub edge: String,
    pub detail: String,
    /// Canonical `.gts` text.
    pub gts: String,
    /// Set by the caller once the reproduction file is written.
    pub file: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub instances: u64,
    pub tree_edges: u64,
    pub swap_pairs: u64,
    /// Per check, tree edges that passed or failed.
    pub tally: BTreeMap<String, Tally>,
    pub oracle: OracleStats,
    pub claim15: ClaimStats,
    pub lemma: LemmaStats,
    pub theorem: TheoremStats,
    pub bestswap: BestSwapStats,
    pub proof_trace: TraceStats,
    pub phi: PhiStats,
    /// At most one per `(instance, check)`.
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn new(checks: &[Check]) -> Self {
        VerificationReport {
            checks: checks.to_vec(),
            tally: checks
                .iter()
                .map(|c| (c.name().to_string(), Tally::default()))
                .collect(),
            ..Default::default()
        }
    }

    pub fn failed(&self, check: Check) -> u64 {
        self.tally.get(check.name()).map_or(0, |t| t.failed)
    }

    pub fn all_passed(&self) -> bool {
        self.tally.values().all(|t| t.failed == 0)
    }

    fn merge(&mut self, other: VerificationReport) {
        self.instances += other.instances;
        self.tree_edges += other.tree_edges;
        self.swap_pairs += other.swap_pairs;
        for (k, t) in other.tally {
            let mine = self.tally.entry(k).or_default();
            mine.passed += t.passed;
            mine.failed += t.failed;
        }
        let o = other.oracle;
        self.oracle.pairs += o.pairs;
        self.oracle.agree += o.agree;
        self.oracle.disagree += o.disagree;
        self.oracle.decomposition_failures += o.decomposition_failures;
        self.oracle.cut_restricted_disagree += o.cut_restricted_disagree;
        let c = other.claim15;
        self.claim15.pass_canonical += c.pass_canonical;
        self.claim15.pass_alternative += c.pass_alternative;
        self.claim15.violation += c.violation;
        let l = other.lemma;
        self.lemma.mismatch_edges += l.mismatch_edges;
        self.lemma.first += l.first;
        self.lemma.second += l.second;
        self.lemma.both += l.both;
        self.lemma.vacuous += l.vacuous;
        self.lemma.canonical += l.canonical;
        self.lemma.alternative += l.alternative;
        self.lemma.violations += l.violations;
        let th = other.theorem;
        merge_hist(&mut self.theorem.case_histogram, th.case_histogram);
        merge_hist(&mut self.theorem.min_size_histogram, th.min_size_histogram);
        self.theorem.max_min_size = self.theorem.max_min_size.max(th.max_min_size);
        self.theorem.max_constructed_size = self
            .theorem
            .max_constructed_size
            .max(th.max_constructed_size);
        self.theorem.unverified += th.unverified;
        self.theorem.non_canonical_rounds += th.non_canonical_rounds;
        let b = other.bestswap;
        self.bestswap.rows += b.rows;
        self.bestswap.agree += b.agree;
        self.bestswap.disagree += b.disagree;
        let tr = other.proof_trace;
        merge_hist(&mut self.proof_trace.case_histogram, tr.case_histogram);
        self.proof_trace.third_mismatch += tr.third_mismatch;
        self.proof_trace.with_anomalies += tr.with_anomalies;
        let p = other.phi;
        self.phi.samples += p.samples;
        self.phi.symmetry_violations += p.symmetry_violations;
        self.phi.optimality_violations += p.optimality_violations;
        self.phi.lipschitz_violations += p.lipschitz_violations;
        self.counterexamples.extend(other.counterexamples);
    }
}

fn merge_hist<K: Ord>(into: &mut BTreeMap<K, u64>, from: BTreeMap<K, u64>) {
    for (k, v) in from {
        *into.entry(k).or_default() += v;
    }
}

fn case_name(c: CaseTag) -> &'static str {
    match c {
        CaseTag::Size2 => "SIZE2",
        CaseTag::Size4 => "SIZE4",
        CaseTag::Size6 => "SIZE6",
        CaseTag::Fallback => "FALLBACK",
    }
}

fn trace_name(c: TraceCase) -> &'static str {
    match c {
        TraceCase::Size2 => "SIZE2",
        TraceCase::Size4 => "SIZE4",
        TraceCase::Size6 => "SIZE6",
        TraceCase::ThirdMismatch => "THIRD_MISMATCH",
    }
}

/// Runs the campaign over `corpus` in chunks of 2048 instances.
pub fn run_campaign(
    corpus: impl IntoIterator<Item = LabeledInstance>,
    config: &CampaignConfig,
) -> VerificationReport {
    const CHUNK: usize = 2048;
    let mut report = VerificationReport::new(&config.checks);
    let mut iter = corpus.into_iter().enumerate();
    loop {
        let chunk: Vec<(usize, LabeledInstance)> = iter.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let parts: Vec<VerificationReport> = chunk
            .par_iter()
            .map(|(idx, li)| verify_instance(*idx as u64, li, config))
            .collect();
        for part in parts {
            report.merge(part);
        }
    }
    report
}

/// All checks of `config` on one instance.
pub fn verify_instance(
    index: u64,
    li: &LabeledInstance,
    config: &CampaignConfig,
) -> VerificationReport {
    let g: &Graph = &li.instance.graph;
    let t = &li.instance.tree;
    let mut report = VerificationReport::new(&config.checks);
    report.instances = 1;
    let mut first_failure: BTreeMap<Check, (EdgeId, String)> = BTreeMap::new();
    let mut fail = |report: &mut VerificationReport, check: Check, e: EdgeId, detail: String| {
        report
            .tally
            .get_mut(check.name())
            .expect("selected check")
            .failed += 1;
        first_failure.entry(check).or_insert((e, detail));
    };
    for &e in t.edge_ids() {
        report.tree_edges += 1;
        let cut = CutContext::new(g, t, e).expect("tree edge");
        report.swap_pairs += cut.swap_edges().len() as u64;
        let pairs = match compute_pairs(&cut, t) {
            Ok(p) => p,
            Err(err) => {
                for &c in &config.checks {
                    fail(&mut report, c, e, err.to_string());
                }
                continue;
            }
        };
        let pass = |report: &mut VerificationReport, check: Check| {
            report
                .tally
                .get_mut(check.name())
                .expect("selected check")
                .passed += 1;
        };

        if config.has(Check::Oracle) {
            match oracle_edge(g, t, &cut, &mut report.oracle) {
                None => pass(&mut report, Check::Oracle),
                Some(detail) => fail(&mut report, Check::Oracle, e, detail),
            }
        }
        if config.has(Check::Claim15) {
            let claim = check_claim15(&cut, t, &pairs);
            report.claim15.pass_canonical += claim.count(ClaimOutcome::PassCanonical) as u64;
            report.claim15.pass_alternative += claim.count(ClaimOutcome::PassAlternative) as u64;
            let bad: Vec<String> = claim.violations().map(|v| v.f.to_string()).collect();
            report.claim15.violation += bad.len() as u64;
            if bad.is_empty() {
                pass(&mut report, Check::Claim15);
            } else {
                fail(
                    &mut report,
                    Check::Claim15,
                    e,
                    format!(
                        "swap edges without a critical edge in any optimal pair: {}",
                        bad.join(" ")
                    ),
                );
            }
        }
        if config.has(Check::Lemma) {
            let lemma = lemma_check(&cut, t, &pairs);
            let stats = &mut report.lemma;
            stats.mismatch_edges += (lemma.entries.len() + lemma.violations.len()) as u64;
            stats.violations += lemma.violations.len() as u64;
            for entry in &lemma.entries {
                match entry.condition {
                    LemmaCondition::First => stats.first += 1,
                    LemmaCondition::Second => stats.second += 1,
                    LemmaCondition::Both => stats.both += 1,
                    LemmaCondition::Vacuous => stats.vacuous += 1,
                }
                match entry.choice {
                    PairChoice::Canonical => stats.canonical += 1,
                    PairChoice::Alternative => stats.alternative += 1,
                }
            }
            if lemma.violations.is_empty() {
                pass(&mut report, Check::Lemma);
            } else {
                let edges: Vec<String> = lemma
                    .violations
                    .iter()
                    .map(|(x, z)| format!("({x},{z})"))
                    .collect();
                fail(
                    &mut report,
                    Check::Lemma,
                    e,
                    format!(
                        "mismatch edges meeting neither conclusion: {}",
                        edges.join(" ")
                    ),
                );
            }
        }
        if config.has(Check::Theorem) {
            match theorem_edge(t, &cut, &pairs, &mut report.theorem) {
                None => pass(&mut report, Check::Theorem),
                Some(detail) => fail(&mut report, Check::Theorem, e, detail),
            }
        }
        if config.has(Check::Bestswap) {
            report.bestswap.rows += 1;
            let oracle = best_swaps_for_edge(g, t, e, Engine::Oracle);
            let fast = best_swaps_for_edge(g, t, e, Engine::Pairs);
            match (oracle, fast) {
                (Ok(a), Ok(b)) if a.value == b.value && a.argmin == b.argmin => {
                    report.bestswap.agree += 1;
                    pass(&mut report, Check::Bestswap);
                }
                (a, b) => {
                    report.bestswap.disagree += 1;
                    let show = |r: Result<crate::bestswap::BestSwapRow>| match r {
                        Ok(r) => format!(
                            "{} {{{}}}",
                            r.value,
                            r.argmin
                                .iter()
                                .map(|f| f.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        ),
                        Err(err) => err.to_string(),
                    };
                    fail(
                        &mut report,
                        Check::Bestswap,
                        e,
                        format!("oracle {} vs pairs {}", show(a), show(b)),
                    );
                }
            }
        }
        if config.has(Check::ProofTrace) {
            let trace = proof_trace(&cut, t, &pairs);
            *report
                .proof_trace
                .case_histogram
                .entry(trace_name(trace.case).to_string())
                .or_default() += 1;
            if !trace.anomalies.is_empty() {
                report.proof_trace.with_anomalies += 1;
            }
            if let Some((a, b)) = trace.third {
                report.proof_trace.third_mismatch += 1;
                fail(
                    &mut report,
                    Check::ProofTrace,
                    e,
                    format!("third mismatch edge ({a},{b})"),
                );
            } else {
                pass(&mut report, Check::ProofTrace);
            }
        }
        if config.has(Check::Phi) {
            let mut rng = rng_from_seed(
                config.seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (e.0 as u64) << 48,
            );
            match phi_edge(
                t,
                &cut,
                &pairs,
                config.phi_samples_per_edge,
                &mut rng,
                &mut report.phi,
            ) {
                None => pass(&mut report, Check::Phi),
                Some(detail) => fail(&mut report, Check::Phi, e, detail),
            }
        }
    }
    let gts = write_instance(g, t);
    report.counterexamples = first_failure
        .into_iter()
        .map(|(check, (e, detail))| Counterexample {
            instance: li.label.clone(),
            check,
            edge: g.edge_label(e),
            detail,
            gts: gts.clone(),
            file: None,
        })
        .collect();
    report
}

fn oracle_edge(
    g: &Graph,
    t: &SpanningTree,
    cut: &CutContext,
    stats: &mut OracleStats,
) -> Option<String> {
    let e = cut.failed_edge();
    let side = side_stretch(g, t, cut);
    let mut first_bad = None;
    for f in cut.swap_edges() {
        stats.pairs += 1;
        let fast = swap_stretch_fast(cut, t, f).value;
        let oracle = swap_stretch_oracle(g, t, e, f.edge).expect("swap edge");
        if oracle == RationalStretch::integer(fast as u64) {
            stats.agree += 1;
        } else {
            stats.disagree += 1;
            first_bad.get_or_insert_with(|| {
                format!("f={f}: oracle {oracle} vs detour {fast}/1 (side stretch {side})")
            });
        }
        if oracle != RationalStretch::integer(fast.max(side) as u64) {
            stats.decomposition_failures += 1;
        }
        if swap_stretch_over_cut(g, t, e, f.edge).expect("swap edge") != fast as u64 {
            stats.cut_restricted_disagree += 1;
        }
    }
    first_bad
}

fn theorem_edge(
    t: &SpanningTree,
    cut: &CutContext,
    pairs: &PairAssignment,
    stats: &mut TheoremStats,
) -> Option<String> {
    let built = construct_critical_set(cut, t, pairs).expect("nonempty swap set");
    *stats
        .case_histogram
        .entry(case_name(built.case).to_string())
        .or_default() += 1;
    stats.max_constructed_size = stats.max_constructed_size.max(built.edges.len());
    stats.non_canonical_rounds += built.non_canonical_rounds as u64;
    if !built.verified {
        stats.unverified += 1;
    }
    let s = cut.swap_edges();
    let incumbent: Vec<usize> = built
        .edges
        .iter()
        .filter_map(|g| s.iter().position(|h| h == g))
        .collect();
    let family = critical_family(cut, t);
    let min = min_hitting_set(&family, built.verified.then_some(&incumbent[..]))
        .expect("critical sets are never empty")
        .len();
    *stats.min_size_histogram.entry(min).or_default() += 1;
    stats.max_min_size = stats.max_min_size.max(min);
    let mut problems = Vec::new();
    if !built.verified {
        problems.push("constructed set is not critical".to_string());
    }
    if built.case == CaseTag::Fallback {
        problems.push(format!("constructor needed {} rounds", built.iterations));
    }
    if min > 6 {
        problems.push(format!("minimum critical set has size {min}"));
    }
    if built.verified && min > built.edges.len() {
        problems.push("exact minimum exceeds a verified set".to_string());
    }
    (!problems.is_empty()).then(|| {
        let set: Vec<String> = built.edges.iter().map(|g| g.to_string()).collect();
        format!("{}; set {{{}}}", problems.join("; "), set.join(" "))
    })
}

fn phi_edge(
    t: &SpanningTree,
    cut: &CutContext,
    pairs: &PairAssignment,
    samples: usize,
    rng: &mut impl Rng,
    stats: &mut PhiStats,
) -> Option<String> {
    let xs = cut.x_vertices();
    let s = cut.swap_edges();
    let mut first_bad = None;
    for _ in 0..samples {
        let x = xs[rng.gen_range(0..xs.len())];
        let tx_nbrs: Vec<usize> = t
            .neighbors(x)
            .iter()
            .map(|&(v, _)| v)
            .filter(|&v| cut.in_x(v))
            .collect();
        let z = if tx_nbrs.is_empty() {
            x
        } else {
            tx_nbrs[rng.gen_range(0..tx_nbrs.len())]
        };
        let u = xs[rng.gen_range(0..xs.len())];
        let (i, j) = (rng.gen_range(0..s.len()), rng.gen_range(0..s.len()));
        stats.samples += 1;

        let forward = phi(cut, t, x, &s[i], &s[j]).expect("x in X");
        let backward = phi(cut, t, x, &s[j], &s[i]).expect("x in X");
        if forward != backward {
            stats.symmetry_violations += 1;
            first_bad.get_or_insert_with(|| format!("phi_{x} not symmetric on {} {}", s[i], s[j]));
        }
        let p = (i.min(j), i.max(j));
        let (at_x, at_z, at_u) = (
            phi_idx(cut, t, x, p),
            phi_idx(cut, t, z, p),
            phi_idx(cut, t, u, p),
        );
        if at_x > pairs.value(x) || phi_idx(cut, t, x, pairs.canonical(x)) != pairs.value(x) {
            stats.optimality_violations += 1;
            first_bad.get_or_insert_with(|| format!("Phi({x}) not the maximum"));
        }
        let lipschitz = at_x.abs_diff(at_z) <= 2 * t.dist(x, z)
            && at_x.abs_diff(at_u) <= 2 * t.dist(x, u)
            && pairs.value(x).abs_diff(pairs.value(z)) <= 2 * t.dist(x, z);
        if !lipschitz {
            stats.lipschitz_violations += 1;
            first_bad
                .get_or_insert_with(|| format!("Lipschitz bound broken at x={x}, z={z}, u={u}"));
        }
    }
    first_bad
}

/// Parameters of a random corpus; ranges are inclusive.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomCorpusSpec {
    pub model: Model,
    pub n: (usize, usize),
    /// Chord range for cycle-chords; the upper end is clamped to `n` and to
    /// the available chords.
    pub chords: (usize, usize),
    pub density: f64,
    /// `None` draws a tree method per instance.
    pub tree: Option<TreeMethod>,
    pub count: usize,
    pub seed: u64,
}

impl RandomCorpusSpec {
    /// GenSpecs drawn in order from one seeded stream.
    pub fn specs(&self) -> Vec<GenSpec> {
        let mut rng = rng_from_seed(self.seed);
        (0..self.count)
            .map(|_| {
                let n = rng.gen_range(self.n.0..=self.n.1);
                let available = n * (n - 1) / 2 - n;
                let hi = self.chords.1.min(n).min(available);
                let lo = self.chords.0.min(hi);
                let chords = rng.gen_range(lo..=hi);
                let tree = self.tree.unwrap_or_else(|| {
                    [TreeMethod::UniformRandom, TreeMethod::Bfs, TreeMethod::Dfs]
                        [rng.gen_range(0..3)]
                });
                let seed = rng.gen::<u64>();
                GenSpec {
                    model: self.model,
                    n,
                    chords,
                    density: self.density,
                    tree,
                    seed,
                }
            })
            .collect()
    }

    pub fn build(&self) -> Result<Vec<LabeledInstance>> {
        self.specs()
            .into_iter()
            .enumerate()
            .map(|(i, spec)| {
                Ok(LabeledInstance {
                    label: format!("random-{i}-n{}-seed{}", spec.n, spec.seed),
                    instance: gen_instance(&spec)?,
                })
            })
            .collect()
    }
}

/// Exhaustive corpus with labels `exhaustive-n{n}-{index}`.
pub fn exhaustive_corpus(
    n: usize,
    tree_cap: usize,
) -> Result<impl Iterator<Item = LabeledInstance>> {
    Ok(crate::instances::enumerate_instances(n, tree_cap)?
        .enumerate()
        .map(move |(i, instance)| LabeledInstance {
            label: format!("exhaustive-n{n}-{i}"),
            instance,
        }))
}
