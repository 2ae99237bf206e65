//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `--nocapture`). The exhaustive n ≤ 8 sweep is shared by the
//! criteria that consume it.

use std::sync::OnceLock;
use std::time::Instant;

use taut::chordal::random_chordal;
use taut::complex::independence_complex;
use taut::dismantle::{self, DismantleCertificate, Policy};
use taut::explorer::{self, OracleSweep};
use taut::graph::{are_isomorphic, Graph};
use taut::homology::{reduced_betti, CoefField, HomotopySignature};

fn oracle_sweep_n8() -> &'static OracleSweep {
    static SWEEP: OnceLock<OracleSweep> = OnceLock::new();
    SWEEP.get_or_init(|| explorer::oracle_sweep(8).expect("sweep within limits"))
}

fn report(criterion: &str, pass: bool) {
    println!(
        "criterion {criterion}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed");
}

/// Contractibility by dismantling agrees with the vanishing of all reduced
/// Betti numbers on every labeled chordal graph with at most 8 vertices.
#[test]
fn criterion_01_contractibility_equivalence_exhaustive() {
    let sweep = oracle_sweep_n8();
    println!(
        "  chordal graphs per n: {:?} (total {})",
        sweep.chordal_per_n,
        sweep.chordal_per_n.iter().sum::<u64>()
    );
    report(
        "1 (contractible iff dismantlable, n <= 8)",
        sweep.contractibility_mismatches == 0,
    );
}

/// Sphere classification agrees with a single-unit Betti vector, and every
/// taut chordal graph with a single-sphere signature is literally a matching.
#[test]
fn criterion_02_sphere_classification_exhaustive() {
    let sweep = oracle_sweep_n8();
    let pass = sweep.sphere_mismatches == 0 && sweep.taut_sphere_nonmatching == 0;
    for (g, sig) in &sweep.taut {
        if let Some(d) = sig.single_sphere_dim() {
            assert_eq!(
                g.is_matching(),
                Some((d + 1) as usize),
                "taut single-sphere graph is not a matching: {:?}",
                g.edges()
            );
        }
    }
    report("2 (sphere iff matching core, n <= 8)", pass);
}

/// Among taut chordal graphs with at most 8 vertices, only the one-vertex
/// graph has contractible independence complex.
#[test]
fn criterion_03_taut_contractible_is_k1() {
    let sweep = oracle_sweep_n8();
    let contractible: Vec<&Graph> = sweep
        .taut
        .iter()
        .filter(|(_, sig)| sig.is_contractible())
        .map(|(g, _)| g)
        .collect();
    let pass = contractible.len() == 1 && contractible[0].n() == 1;
    println!(
        "  taut graphs: {}; with contractible signature: {}",
        sweep.taut.len(),
        contractible.len()
    );
    report("3 (only K_1 is taut and contractible, n <= 8)", pass);
}

/// The constructive rooted-model search succeeds, verified, for every
/// connected chordal graph with contractible complex and every clique-tree
/// root.
#[test]
fn criterion_04_tree_model_search_exhaustive() {
    let sweep = explorer::tree_search_sweep(8).expect("sweep within limits");
    println!(
        "  graphs {} roots {} failures {}",
        sweep.graphs, sweep.roots, sweep.failures
    );
    report(
        "4 (rooted good pair found for every root, n <= 8)",
        sweep.failures == 0 && sweep.graphs > 0 && sweep.roots > sweep.graphs,
    );
}

/// Cores of 500 random chordal graphs are pairwise isomorphic across the
/// lexicographic policy and ten seeded ones.
#[test]
fn criterion_05_core_confluence() {
    let report_data = explorer::core_confluence_check(500, 40, 10, 0xC0FFEE);
    println!(
        "  graphs {} runs/graph {} exact {} fingerprint {} flagged {}",
        report_data.graphs,
        report_data.runs_per_graph,
        report_data.exact_comparisons,
        report_data.fingerprint_comparisons,
        report_data.flagged
    );
    report(
        "5 (core confluence across policies)",
        report_data.graphs == 500 && report_data.flagged == 0,
    );
}

/// Link/deletion identities structurally on 200 random graphs; both wedge
/// recursions agree with the rank oracle on every chordal graph with at most
/// 7 vertices.
#[test]
fn criterion_06_structural_identities() {
    let eq1 = explorer::link_deletion_identity_check(200, 0xABCD);
    let wedge = explorer::wedge_agreement_sweep(7).expect("sweep within limits");
    println!(
        "  link/deletion trials {} failures {}; wedge graphs {} mismatches {}/{} over {} simplicial checks",
        eq1.trials,
        eq1.failures,
        wedge.chordal_graphs,
        wedge.oracle_mismatches,
        wedge.simplicial_mismatches,
        wedge.simplicial_checked
    );
    report(
        "6 (link/deletion and wedge identities)",
        eq1.failures == 0
            && wedge.oracle_mismatches == 0
            && wedge.simplicial_mismatches == 0
            && wedge.simplicial_checked > 0,
    );
}

/// Chordality is equivalent to every connected induced subgraph being
/// dismantlable, over all labeled graphs with at most 7 vertices.
#[test]
fn criterion_07_chordal_iff_hereditary_copwin() {
    let sweep = explorer::copwin_equivalence_sweep(7).expect("sweep within limits");
    println!("  graphs {} mismatches {}", sweep.graphs, sweep.mismatches);
    report(
        "7 (chordal iff hereditarily cop-win, n <= 7)",
        sweep.mismatches == 0,
    );
}

/// The two taut two-circle fixtures behave as documented, and 1000 random
/// forests all dismantle to a point or a matching.
#[test]
fn criterion_08_fixtures_and_forest_cores() {
    let mut pass = true;
    for g in [explorer::k3_k2(), explorer::triangle_chain_7()] {
        let chordal = taut::chordal::is_chordal(&g);
        let taut_flag = dismantle::is_taut(&g);
        let sig = reduced_betti(&independence_complex(&g), CoefField::Gf2).unwrap();
        let expected =
            HomotopySignature::sphere(1).wedge(&HomotopySignature::sphere(1));
        pass &= chordal && taut_flag && sig == expected;
    }
    let forest = explorer::forest_core_check(1000, 50, 0xF0123);
    println!(
        "  forests: {} trials, {} point cores, matchings {:?}, {} violations",
        forest.trials,
        forest.single_vertex_cores,
        forest.matching_cores,
        forest.violations.len()
    );
    report(
        "8 (fixtures and forest cores)",
        pass && forest.trials == 1000 && forest.violations.is_empty(),
    );
}

/// Decision timing stays within twice a cubic extrapolation from n = 250 and
/// finishes n = 1000 in under thirty seconds.
#[test]
fn criterion_09_decision_time_cubic() {
    let measure = |n: usize| {
        let (g, _) = random_chordal(n, 0.9, 0x5EED);
        let mut best = f64::INFINITY;
        for _ in 0..3 {
            let start = Instant::now();
            let report = dismantle::decide(&g);
            assert!(report.chordal);
            best = best.min(start.elapsed().as_secs_f64());
        }
        best
    };
    let t250 = measure(250);
    let t500 = measure(500);
    let t1000 = measure(1000);
    let cubic_fit = (t250 / 250f64.powi(3) + t500 / 500f64.powi(3)) / 2.0;
    let bound = 2.0 * cubic_fit * 1000f64.powi(3);
    println!(
        "  decide: n=250 {:.1} ms, n=500 {:.1} ms, n=1000 {:.1} ms (cubic bound {:.1} ms)",
        t250 * 1e3,
        t500 * 1e3,
        t1000 * 1e3,
        bound * 1e3
    );
    report(
        "9 (cubic-compatible decision time)",
        t1000 <= bound && t1000 < 30.0,
    );
}

/// Produced certificates replay; twenty mutated certificates (wrong witness,
/// wrong order, truncation) are all rejected.
#[test]
fn criterion_10_certificate_soundness() {
    let mut graphs: Vec<Graph> = vec![
        explorer::path_graph(4),
        explorer::path_graph(7),
        explorer::k3_k2(),
    ];
    for i in 0..5u64 {
        graphs.push(random_chordal(12, 0.5, 0xCE57 ^ i).0);
    }
    let mut produced_ok = 0usize;
    let mut mutants: Vec<(Graph, DismantleCertificate)> = Vec::new();
    for g in &graphs {
        let cert = dismantle::core(g, Policy::Lexicographic);
        if dismantle::verify_certificate(g, &cert) {
            produced_ok += 1;
        }
        for mutant in mutate(&cert) {
            if mutants.len() < 20 {
                mutants.push((g.clone(), mutant));
            }
        }
    }
    let rejected = mutants
        .iter()
        .filter(|(g, m)| !dismantle::verify_certificate(g, m))
        .count();
    println!(
        "  produced accepted {}/{}; mutants rejected {}/{}",
        produced_ok,
        graphs.len(),
        rejected,
        mutants.len()
    );
    report(
        "10 (certificate accept/reject)",
        produced_ok == graphs.len() && mutants.len() == 20 && rejected == 20,
    );
}

/// Guaranteed-invalid certificate mutations: wrong witness (self or already
/// removed), wrong order (vertex removed twice), truncation.
fn mutate(cert: &DismantleCertificate) -> Vec<DismantleCertificate> {
    let mut out = Vec::new();
    if cert.steps.is_empty() {
        return out;
    }
    let mut self_witness = cert.clone();
    self_witness.steps[0].witness = self_witness.steps[0].removed;
    out.push(self_witness);
    if cert.steps.len() >= 2 {
        let mut dead_witness = cert.clone();
        dead_witness.steps[1].witness = cert.steps[0].removed;
        out.push(dead_witness);
        let mut twice = cert.clone();
        twice.steps[1].removed = cert.steps[0].removed;
        out.push(twice);
    }
    let mut truncated = cert.clone();
    truncated.steps.pop();
    out.push(truncated);
    out
}

/// The homology oracle is invariant under dismantling: Ind(core) and Ind(G)
/// carry the same signature throughout the exhaustive sweep.
#[test]
fn dismantling_preserves_the_oracle_signature() {
    let sweep = oracle_sweep_n8();
    assert_eq!(sweep.core_signature_mismatches, 0);
}

/// The labeled chordal counts of the enumeration backbone.
#[test]
fn chordal_counts_match_known_sequence() {
    let sweep = oracle_sweep_n8();
    assert_eq!(
        sweep.chordal_per_n,
        vec![1, 1, 2, 8, 61, 822, 18154, 617675, 30888596]
    );
}

/// Cores never grow past the isomorphism cap silently: the confluence suite
/// must have exercised the exact comparison path.
#[test]
fn confluence_exercises_exact_comparisons() {
    let report_data = explorer::core_confluence_check(60, 14, 5, 0xBEEF);
    assert!(report_data.exact_comparisons > 0);
    assert_eq!(report_data.flagged, 0);
}

/// The catalog's two-circle group contains both taut fixtures at n_max = 7.
#[test]
fn taut_catalog_two_circle_group() {
    let catalog = explorer::taut_catalog(7).expect("catalog within limits");
    let two = HomotopySignature::sphere(1).wedge(&HomotopySignature::sphere(1));
    let group = catalog.group(&two).expect("two-circle group");
    assert!(group
        .class_representatives
        .iter()
        .any(|g| are_isomorphic(g, &explorer::k3_k2())));
    assert!(group
        .class_representatives
        .iter()
        .any(|g| are_isomorphic(g, &explorer::triangle_chain_7())));
}
