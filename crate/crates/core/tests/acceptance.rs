//! Acceptance gate. One campaign runs every check over the full corpus:
//!
//! - all labeled 2-edge-connected graphs on 4 vertices with all spanning trees,
//! - all labeled 2-edge-connected graphs on 5 vertices with at most 50 trees each,
//! - 300 random cycle-plus-chords instances, n in [8, 40], chords in [2, n].
//!
//! Every criterion prints one `[PASS]`/`[FAIL]` line. All comparisons are
//! exact; there are no tolerances.

use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use swapcrit::campaign::{
    exhaustive_corpus, run_campaign, CampaignConfig, Check, LabeledInstance, RandomCorpusSpec,
    VerificationReport,
};
use swapcrit::instances::{
    enumerate_graphs, enumerate_instances, read_instance, write_instance, Model,
};

const CORPUS_SEED: u64 = 0x5EED_2026;
const RANDOM_COUNT: usize = 300;
const RUNTIME_LIMIT: Duration = Duration::from_secs(600);
const MIN_PHI_SAMPLES: u64 = 100_000;

struct Gate {
    report: VerificationReport,
    elapsed: Duration,
    random: Vec<LabeledInstance>,
}

fn random_spec(count: usize, seed: u64) -> RandomCorpusSpec {
    RandomCorpusSpec {
        model: Model::CycleChords,
        n: (8, 40),
        chords: (2, 40),
        density: 0.0,
        tree: None,
        count,
        seed,
    }
}

fn gate() -> &'static Gate {
    static GATE: OnceLock<Gate> = OnceLock::new();
    GATE.get_or_init(|| {
        let start = Instant::now();
        let random = random_spec(RANDOM_COUNT, CORPUS_SEED)
            .build()
            .expect("random corpus");
        let corpus = exhaustive_corpus(4, 0)
            .unwrap()
            .chain(exhaustive_corpus(5, 50).unwrap())
            .chain(random.iter().cloned());
        let report = run_campaign(
            corpus,
            &CampaignConfig::new(Check::ALL.to_vec(), CORPUS_SEED),
        );
        let elapsed = start.elapsed();
        write_counterexamples(&report);
        Gate {
            report,
            elapsed,
            random,
        }
    })
}

fn write_counterexamples(report: &VerificationReport) {
    if report.counterexamples.is_empty() {
        return;
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-counterexamples");
    std::fs::create_dir_all(&dir).unwrap();
    for cx in &report.counterexamples {
        let name = format!("{}-{}.gts", cx.instance, cx.check);
        let body = format!(
            "# {} on edge {}: {}\n{}",
            cx.check, cx.edge, cx.detail, cx.gts
        );
        std::fs::write(dir.join(name), body).unwrap();
    }
    eprintln!("counterexamples written to {}", dir.display());
}

fn verdict(name: &str, ok: bool, detail: String) {
    println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance criterion `{name}` failed: {detail}");
}

#[test]
fn oracle_equivalence() {
    let g = gate();
    let o = &g.report.oracle;
    println!(
        "  info: oracle = max(side stretch, detour) failed on {} pairs; stretch over swap edges vs detour disagreed on {} pairs",
        o.decomposition_failures, o.cut_restricted_disagree
    );
    let ok = o.disagree == 0 && o.pairs > 0 && g.elapsed < RUNTIME_LIMIT;
    verdict(
        "oracle-equivalence",
        ok,
        format!(
            "{}/{} swap pairs agree ({} disagree), campaign {:.1?} (limit {:?})",
            o.agree, o.pairs, o.disagree, g.elapsed, RUNTIME_LIMIT
        ),
    );
}

#[test]
fn theorem_bound() {
    let r = &gate().report;
    let th = &r.theorem;
    let fallback = th.case_histogram.get("FALLBACK").copied().unwrap_or(0);
    let ok = r.failed(Check::Theorem) == 0
        && fallback == 0
        && th.max_min_size <= 6
        && th.unverified == 0;
    verdict(
        "theorem-bound",
        ok,
        format!(
            "{} tree edges, cases {:?}, min sizes {:?}, max min size {}, max constructed {}, unverified {}, non-canonical rounds {}",
            r.tree_edges,
            th.case_histogram,
            th.min_size_histogram,
            th.max_min_size,
            th.max_constructed_size,
            th.unverified,
            th.non_canonical_rounds
        ),
    );
}

#[test]
fn lemma_conditions() {
    let r = &gate().report;
    let l = &r.lemma;
    verdict(
        "lemma",
        l.violations == 0 && r.failed(Check::Lemma) == 0,
        format!(
            "{} mismatch edges: first {}, second {}, both {}, vacuous {}; canonical {}, alternative {}; violations {}",
            l.mismatch_edges, l.first, l.second, l.both, l.vacuous, l.canonical, l.alternative, l.violations
        ),
    );
}

#[test]
fn prior_work_claim() {
    let r = &gate().report;
    let c = &r.claim15;
    verdict(
        "claim15",
        c.violation == 0 && r.failed(Check::Claim15) == 0,
        format!(
            "PASS-CANONICAL {}, PASS-ALTERNATIVE {}, VIOLATION {}",
            c.pass_canonical, c.pass_alternative, c.violation
        ),
    );
}

#[test]
fn engine_equivalence() {
    let r = &gate().report;
    let b = &r.bestswap;
    verdict(
        "engine-equivalence",
        b.disagree == 0 && b.rows == r.tree_edges,
        format!("{}/{} rows identical", b.agree, b.rows),
    );
}

#[test]
fn phi_properties() {
    let p = &gate().report.phi;
    verdict(
        "phi-properties",
        p.samples >= MIN_PHI_SAMPLES && p.violations() == 0,
        format!(
            "{} samples (minimum {}): symmetry {}, optimality {}, Lipschitz {}",
            p.samples,
            MIN_PHI_SAMPLES,
            p.symmetry_violations,
            p.optimality_violations,
            p.lipschitz_violations
        ),
    );
}

#[test]
fn proof_trace_has_no_third_mismatch() {
    let t = &gate().report.proof_trace;
    verdict(
        "proof-trace",
        t.third_mismatch == 0,
        format!(
            "cases {:?}, third mismatch {}, traces with anomalies {}",
            t.case_histogram, t.third_mismatch, t.with_anomalies
        ),
    );
}

#[test]
fn infrastructure() {
    // Totals from an independent brute force over all edge subsets of K_n.
    let graphs3 = enumerate_graphs(3).unwrap().count();
    let trees3 = enumerate_instances(3, 0).unwrap().count();
    let graphs4 = enumerate_graphs(4).unwrap().count();
    let trees4 = enumerate_instances(4, 0).unwrap().count();
    let trees5_capped = enumerate_instances(5, 50).unwrap().count();
    let totals_ok = (graphs3, trees3, graphs4, trees4, trees5_capped) == (1, 3, 10, 76, 5580);

    let random = &gate().random;
    let round_trip_ok = random.iter().all(|li| {
        let text = write_instance(&li.instance.graph, &li.instance.tree);
        let back = read_instance(&text).expect("generated instances validate");
        write_instance(&back.graph, &back.tree) == text
    });

    let config = CampaignConfig::new(Check::ALL.to_vec(), 11);
    let run = || {
        let corpus = random_spec(40, 77).build().unwrap();
        serde_json::to_string(&run_campaign(corpus, &config)).unwrap()
    };
    let deterministic = run() == run();

    verdict(
        "infrastructure",
        totals_ok && round_trip_ok && deterministic,
        format!(
            "n=3: {graphs3} graphs / {trees3} trees; n=4: {graphs4} / {trees4}; n=5 capped trees {trees5_capped}; \
             round-trip {round_trip_ok}; reproducible reports {deterministic}"
        ),
    );
}
