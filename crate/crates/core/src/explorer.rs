//! Empirical exploration: built-in fixtures, the catalog of taut chordal
//! graphs grouped by homotopy signature, forest-core spot checks, and the
//! exhaustive verification sweeps the acceptance suite and the CLI `sweep`
//! subcommand run.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use rayon::prelude::*;

use crate::chordal;
use crate::complex::independence_complex;
use crate::dismantle::{self, Policy};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, random_graph, Graph};
use crate::homology::{reduced_betti, wedge_decomposition, wedge_via_simplicial, CoefField};
use crate::homology::HomotopySignature;
use crate::smallgraph::{pair_count, MaskGraph};
use crate::treemodel::{self, RootedTreeModel};

// ---------------------------------------------------------------------------
// Generators and fixtures

/// The matching `M_k`: `2k` vertices, edges `(2i, 2i+1)`.
pub fn matching(k: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::from_edges(2 * k, &edges).expect("matching edges are simple")
}

/// The path `P_n` on vertices `0..n`.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edges are simple")
}

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete edges are simple")
}

/// Disjoint union of a triangle on `{0,1,2}` and an edge `{3,4}`: taut with
/// independence complex homotopy equivalent to two circles.
pub fn k3_k2() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]).expect("fixture")
}

/// Three triangles `{0,1,2}`, `{2,3,4}`, `{4,5,6}` glued at vertices 2 and 4:
/// the second taut chordal graph with homotopy type two circles.
pub fn triangle_chain_7() -> Graph {
    Graph::from_edges(
        7,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
    )
    .expect("fixture")
}

/// All named fixtures, in a stable order.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    let mut out: Vec<(&'static str, Graph)> = vec![
        ("k3_k2", k3_k2()),
        ("triangle_chain_7", triangle_chain_7()),
    ];
    const M_NAMES: [&str; 4] = ["m1", "m2", "m3", "m4"];
    for (i, name) in M_NAMES.iter().enumerate() {
        out.push((name, matching(i + 1)));
    }
    const P_NAMES: [&str; 6] = ["p2", "p3", "p4", "p5", "p6", "p7"];
    for (i, name) in P_NAMES.iter().enumerate() {
        out.push((name, path_graph(i + 2)));
    }
    out
}

pub fn fixture(name: &str) -> Option<Graph> {
    fixtures()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, g)| g)
}

// ---------------------------------------------------------------------------
// Parallel enumeration plumbing

/// Upper bound for the exhaustive sweeps.
pub const SWEEP_LIMIT: usize = 8;

fn check_sweep_limit(n_max: usize, what: &'static str) -> Result<()> {
    if n_max > SWEEP_LIMIT {
        return Err(Error::TooLarge {
            what,
            got: n_max,
            limit: SWEEP_LIMIT,
        });
    }
    Ok(())
}

/// Folds `visit` over every labeled graph on exactly `n` vertices, in
/// parallel over mask chunks, merging the per-chunk accumulators.
fn par_scan_masks<T, V, M>(n: usize, identity: T, visit: V, merge: M) -> T
where
    T: Clone + Send + Sync,
    V: Fn(&mut T, MaskGraph) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    let total: u64 = 1 << pair_count(n);
    let chunk: u64 = 1 << 16;
    let chunks = total.div_ceil(chunk);
    (0..chunks)
        .into_par_iter()
        .fold(
            || identity.clone(),
            |mut acc, c| {
                let lo = c * chunk;
                let hi = (lo + chunk).min(total);
                for mask in lo..hi {
                    visit(&mut acc, MaskGraph::from_edge_mask(n, mask));
                }
                acc
            },
        )
        .reduce(|| identity.clone(), merge)
}

// ---------------------------------------------------------------------------
// Oracle sweep (dismantling decisions against the homology oracle)

/// Outcome of the exhaustive comparison of the dismantling engine with the
/// homology oracle over every labeled chordal graph on at most `n_max`
/// vertices.
#[derive(Clone, Debug, Default)]
pub struct OracleSweep {
    pub n_max: usize,
    pub graphs_total: u64,
    pub chordal_per_n: Vec<u64>,
    /// Criterion: contractible by dismantling iff all reduced Betti numbers
    /// vanish.
    pub contractibility_mismatches: u64,
    /// Criterion: classified as sphere(k) iff the Betti vector is a single 1
    /// in dimension k−1.
    pub sphere_mismatches: u64,
    /// Taut graphs with a single-sphere signature that are not literally a
    /// matching.
    pub taut_sphere_nonmatching: u64,
    /// Signature of Ind(core) differing from signature of Ind(G).
    pub core_signature_mismatches: u64,
    /// Every taut chordal graph found, with its oracle signature, sorted by
    /// (n, edge mask).
    pub taut: Vec<(Graph, HomotopySignature)>,
}

#[derive(Clone, Default)]
struct OracleAcc {
    chordal: u64,
    mismatch_contractible: u64,
    mismatch_sphere: u64,
    taut_sphere_nonmatching: u64,
    core_signature_mismatches: u64,
    taut: Vec<(usize, u64, Graph, HomotopySignature)>,
}

pub fn oracle_sweep(n_max: usize) -> Result<OracleSweep> {
    check_sweep_limit(n_max, "oracle sweep")?;
    let mut out = OracleSweep {
        n_max,
        ..Default::default()
    };
    for n in 0..=n_max {
        let acc = par_scan_masks(
            n,
            OracleAcc::default(),
            |acc, mg| {
                if !mg.is_chordal() {
                    return;
                }
                acc.chordal += 1;
                let g = mg.to_graph();
                let engine_contractible =
                    dismantle::is_contractible_chordal(&g).expect("chordal input");
                let sig = reduced_betti(&independence_complex(&g), CoefField::Gf2)
                    .expect("small complex");
                if engine_contractible != sig.is_contractible() {
                    acc.mismatch_contractible += 1;
                }
                let class = dismantle::classify_sphere_chordal(&g).expect("chordal input");
                let engine_sphere = match class.kind {
                    dismantle::SphereKind::Sphere(k) => Some(k),
                    _ => None,
                };
                let oracle_sphere = sig.single_sphere_dim().map(|d| (d + 1) as usize);
                if engine_sphere != oracle_sphere {
                    acc.mismatch_sphere += 1;
                }
                let cert = dismantle::core(&g, Policy::Lexicographic);
                let (core_graph, _) = cert.core.to_graph();
                let core_sig = reduced_betti(&independence_complex(&core_graph), CoefField::Gf2)
                    .expect("small complex");
                if core_sig != sig {
                    acc.core_signature_mismatches += 1;
                }
                if cert.steps.is_empty() {
                    debug_assert!(dismantle::is_taut(&g));
                    if let Some(d) = sig.single_sphere_dim() {
                        if g.is_matching() != Some((d + 1) as usize) {
                            acc.taut_sphere_nonmatching += 1;
                        }
                    }
                    acc.taut.push((n, mg.edge_mask(), g, sig));
                }
            },
            |mut a, b| {
                a.chordal += b.chordal;
                a.mismatch_contractible += b.mismatch_contractible;
                a.mismatch_sphere += b.mismatch_sphere;
                a.taut_sphere_nonmatching += b.taut_sphere_nonmatching;
                a.core_signature_mismatches += b.core_signature_mismatches;
                a.taut.extend(b.taut);
                a
            },
        );
        out.graphs_total += 1 << pair_count(n);
        out.chordal_per_n.push(acc.chordal);
        out.contractibility_mismatches += acc.mismatch_contractible;
        out.sphere_mismatches += acc.mismatch_sphere;
        out.taut_sphere_nonmatching += acc.taut_sphere_nonmatching;
        out.core_signature_mismatches += acc.core_signature_mismatches;
        let mut taut = acc.taut;
        taut.sort_by_key(|(tn, mask, _, _)| (*tn, *mask));
        out.taut
            .extend(taut.into_iter().map(|(_, _, g, sig)| (g, sig)));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Taut catalog

#[derive(Clone, Debug)]
pub struct TautGroup {
    pub signature: HomotopySignature,
    /// All labeled graphs with this signature, sorted by (n, edge mask).
    pub labeled: Vec<Graph>,
    /// One representative per isomorphism class: the labeled-smallest member.
    pub class_representatives: Vec<Graph>,
}

#[derive(Clone, Debug)]
pub struct TautCatalog {
    pub n_max: usize,
    pub groups: Vec<TautGroup>,
}

impl TautCatalog {
    pub fn group(&self, sig: &HomotopySignature) -> Option<&TautGroup> {
        self.groups.iter().find(|g| &g.signature == sig)
    }
}

/// Every labeled chordal graph on at most `n_max` vertices without a good
/// pair, grouped by its oracle homotopy signature.
pub fn taut_catalog(n_max: usize) -> Result<TautCatalog> {
    check_sweep_limit(n_max, "taut catalog")?;
    let mut by_sig: BTreeMap<HomotopySignature, Vec<(usize, u64, Graph)>> = BTreeMap::new();
    for n in 0..=n_max {
        let taut = par_scan_masks(
            n,
            Vec::new(),
            |acc: &mut Vec<(u64, Graph, HomotopySignature)>, mg| {
                if !mg.is_chordal() || mg.has_good_pair() {
                    return;
                }
                let g = mg.to_graph();
                let sig = reduced_betti(&independence_complex(&g), CoefField::Gf2)
                    .expect("small complex");
                acc.push((mg.edge_mask(), g, sig));
            },
            |mut a, mut b| {
                a.append(&mut b);
                a
            },
        );
        for (mask, g, sig) in taut {
            by_sig.entry(sig).or_default().push((n, mask, g));
        }
    }
    let groups = by_sig
        .into_iter()
        .map(|(signature, mut members)| {
            members.sort_by_key(|(n, mask, _)| (*n, *mask));
            let labeled: Vec<Graph> = members.iter().map(|(_, _, g)| g.clone()).collect();
            let class_representatives = isomorphism_classes(&labeled);
            TautGroup {
                signature,
                labeled,
                class_representatives,
            }
        })
        .collect();
    Ok(TautCatalog { n_max, groups })
}

/// First member of each isomorphism class, in input order. Members are
/// bucketed by cheap invariants before the backtracking test.
fn isomorphism_classes(graphs: &[Graph]) -> Vec<Graph> {
    let fingerprint = |g: &Graph| {
        let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        (g.n(), g.edge_count(), degrees)
    };
    let mut reps: Vec<(usize, usize, Vec<usize>, Graph)> = Vec::new();
    for g in graphs {
        let fp = fingerprint(g);
        let known = reps.iter().any(|(n, m, deg, rep)| {
            (*n, *m, deg.clone()) == fp && are_isomorphic(rep, g)
        });
        if !known {
            reps.push((fp.0, fp.1, fp.2, g.clone()));
        }
    }
    reps.into_iter().map(|(_, _, _, g)| g).collect()
}

// ---------------------------------------------------------------------------
// Tree-search sweep

/// Outcome of replaying the constructive rooted-model search over every
/// connected chordal graph with contractible independence complex and every
/// root of its clique tree.
#[derive(Clone, Debug, Default)]
pub struct TreeSearchSweep {
    pub n_max: usize,
    pub graphs: u64,
    pub roots: u64,
    pub failures: u64,
}

pub fn tree_search_sweep(n_max: usize) -> Result<TreeSearchSweep> {
    check_sweep_limit(n_max, "tree search sweep")?;
    let mut out = TreeSearchSweep {
        n_max,
        ..Default::default()
    };
    for n in 2..=n_max {
        let (graphs, roots, failures) = par_scan_masks(
            n,
            (0u64, 0u64, 0u64),
            |acc, mg| {
                if !mg.is_chordal() || !mg.is_connected() {
                    return;
                }
                let g = mg.to_graph();
                if !dismantle::is_contractible_chordal(&g).expect("chordal input") {
                    return;
                }
                acc.0 += 1;
                let tree = treemodel::clique_tree(&g).expect("chordal input");
                if !treemodel::validate_tree_model(&tree, &g) {
                    acc.2 += 1;
                    return;
                }
                for root in 0..tree.node_count() {
                    let rooted = RootedTreeModel {
                        model: tree.clone(),
                        root,
                    };
                    let pair = treemodel::find_tr_good_pair_unchecked(&g, &rooted);
                    acc.1 += 1;
                    if !treemodel::is_tr_good(&rooted, &g, pair.x, pair.y) {
                        acc.2 += 1;
                    }
                }
            },
            |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2),
        );
        out.graphs += graphs;
        out.roots += roots;
        out.failures += failures;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Chordality vs hereditary cop-win sweep

#[derive(Clone, Debug, Default)]
pub struct CopwinSweep {
    pub n_max: usize,
    pub graphs: u64,
    pub mismatches: u64,
}

/// Chordality coincides with every connected induced subgraph being
/// dismantlable; checked over every labeled graph on at most `n_max`
/// vertices.
pub fn copwin_equivalence_sweep(n_max: usize) -> Result<CopwinSweep> {
    check_sweep_limit(n_max, "cop-win sweep")?;
    let mut out = CopwinSweep {
        n_max,
        ..Default::default()
    };
    for n in 0..=n_max {
        let (graphs, mismatches) = par_scan_masks(
            n,
            (0u64, 0u64),
            |acc, mg| {
                acc.0 += 1;
                let chordal = mg.is_chordal();
                let full: u32 = 1u32 << n;
                let mut hereditary_copwin = true;
                for sub in 1..full {
                    let sub = sub as u16;
                    if mg.is_connected_within(sub) && !mg.is_copwin_within(sub) {
                        hereditary_copwin = false;
                        break;
                    }
                }
                if chordal != hereditary_copwin {
                    acc.1 += 1;
                }
            },
            |a, b| (a.0 + b.0, a.1 + b.1),
        );
        out.graphs += graphs;
        out.mismatches += mismatches;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Wedge identity sweeps

#[derive(Clone, Debug, Default)]
pub struct WedgeSweep {
    pub n_max: usize,
    pub chordal_graphs: u64,
    /// wedge_decomposition vs reduced Betti numbers.
    pub oracle_mismatches: u64,
    /// wedge_via_simplicial vs wedge_decomposition, over every simplicial
    /// vertex of positive degree.
    pub simplicial_mismatches: u64,
    pub simplicial_checked: u64,
}

pub fn wedge_agreement_sweep(n_max: usize) -> Result<WedgeSweep> {
    check_sweep_limit(n_max, "wedge sweep")?;
    let mut out = WedgeSweep {
        n_max,
        ..Default::default()
    };
    for n in 0..=n_max {
        let acc = par_scan_masks(
            n,
            WedgeSweep::default(),
            |acc, mg| {
                if !mg.is_chordal() {
                    return;
                }
                acc.chordal_graphs += 1;
                let g = mg.to_graph();
                let by_wedge = wedge_decomposition(&g).expect("chordal input");
                let by_rank = reduced_betti(&independence_complex(&g), CoefField::Gf2)
                    .expect("small complex");
                if by_wedge != by_rank {
                    acc.oracle_mismatches += 1;
                }
                for v in chordal::simplicial_vertices(&g) {
                    if g.degree(v) == 0 {
                        continue;
                    }
                    acc.simplicial_checked += 1;
                    if wedge_via_simplicial(&g, v).expect("simplicial vertex") != by_wedge {
                        acc.simplicial_mismatches += 1;
                    }
                }
            },
            |mut a, b| {
                a.chordal_graphs += b.chordal_graphs;
                a.oracle_mismatches += b.oracle_mismatches;
                a.simplicial_mismatches += b.simplicial_mismatches;
                a.simplicial_checked += b.simplicial_checked;
                a
            },
        );
        out.chordal_graphs += acc.chordal_graphs;
        out.oracle_mismatches += acc.oracle_mismatches;
        out.simplicial_mismatches += acc.simplicial_mismatches;
        out.simplicial_checked += acc.simplicial_checked;
    }
    Ok(out)
}

/// Structural link/deletion identities on random graphs: the link of `u` in
/// Ind(G) is Ind(G ∖ N[u]) and the deletion is Ind(G ∖ u), up to the dense
/// relabeling of the subgraph.
#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub trials: u64,
    pub failures: u64,
}

pub fn link_deletion_identity_check(trials: u64, seed: u64) -> IdentityReport {
    let mut rng = Pcg64::seed_from_u64(seed);
    let mut out = IdentityReport::default();
    for _ in 0..trials {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(n, p, rng.gen());
        let u = rng.gen_range(0..n);
        out.trials += 1;

        let ind = independence_complex(&g);

        let keep_link: std::collections::BTreeSet<usize> = g
            .vertices()
            .filter(|&v| v != u && !g.has_edge(u, v))
            .collect();
        let (h, labels) = g.induced_subgraph(&keep_link);
        let relabel: BTreeMap<usize, usize> = labels
            .iter()
            .enumerate()
            .map(|(new, &old)| (new, old))
            .collect();
        let link_ok = ind.link(u) == independence_complex(&h).relabel(&relabel);

        let keep_del: std::collections::BTreeSet<usize> =
            g.vertices().filter(|&v| v != u).collect();
        let (h, labels) = g.induced_subgraph(&keep_del);
        let relabel: BTreeMap<usize, usize> = labels
            .iter()
            .enumerate()
            .map(|(new, &old)| (new, old))
            .collect();
        let delete_ok = ind.delete(u) == independence_complex(&h).relabel(&relabel);

        if !(link_ok && delete_ok) {
            out.failures += 1;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Core confluence

#[derive(Clone, Debug, Default)]
pub struct ConfluenceReport {
    pub graphs: u64,
    pub runs_per_graph: u64,
    /// Cores small enough for the exact isomorphism test.
    pub exact_comparisons: u64,
    /// Larger cores compared by (n, m, degree multiset) fingerprints only.
    pub fingerprint_comparisons: u64,
    pub flagged: u64,
}

/// Dismantles random chordal graphs under the lexicographic policy plus
/// `policies` seeded ones and checks that all cores of a graph agree up to
/// isomorphism (or by fingerprint when larger than the isomorphism cap).
pub fn core_confluence_check(
    graphs: u64,
    max_n: usize,
    policies: u64,
    seed: u64,
) -> ConfluenceReport {
    let mut rng = Pcg64::seed_from_u64(seed);
    let cases: Vec<(usize, f64, u64, u64)> = (0..graphs)
        .map(|_| {
            (
                rng.gen_range(1..=max_n),
                rng.gen_range(0.15..0.9),
                rng.gen(),
                rng.gen(),
            )
        })
        .collect();
    let merged = cases
        .par_iter()
        .map(|&(n, fill, graph_seed, policy_seed)| {
            let mut local = ConfluenceReport {
                graphs: 1,
                runs_per_graph: policies + 1,
                ..Default::default()
            };
            let (g, _) = chordal::random_chordal(n, fill, graph_seed);
            let mut certs = vec![dismantle::core(&g, Policy::Lexicographic)];
            for i in 0..policies {
                certs.push(dismantle::core(&g, Policy::Seeded(policy_seed ^ i)));
            }
            for cert in &certs {
                if !dismantle::verify_certificate(&g, cert) {
                    local.flagged += 1;
                }
            }
            let (reference, _) = certs[0].core.to_graph();
            for cert in &certs[1..] {
                let (other, _) = cert.core.to_graph();
                if reference.n() <= 12 && other.n() <= 12 {
                    local.exact_comparisons += 1;
                    if !are_isomorphic(&reference, &other) {
                        local.flagged += 1;
                    }
                } else {
                    local.fingerprint_comparisons += 1;
                    let fp = |g: &Graph| {
                        let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
                        deg.sort_unstable();
                        (g.n(), g.edge_count(), deg)
                    };
                    if fp(&reference) != fp(&other) {
                        local.flagged += 1;
                    }
                }
            }
            local
        })
        .reduce(ConfluenceReport::default, |mut a, b| {
            a.graphs += b.graphs;
            a.runs_per_graph = b.runs_per_graph.max(a.runs_per_graph);
            a.exact_comparisons += b.exact_comparisons;
            a.fingerprint_comparisons += b.fingerprint_comparisons;
            a.flagged += b.flagged;
            a
        });
    merged
}

// ---------------------------------------------------------------------------
// Forest cores

#[derive(Clone, Debug, Default)]
pub struct ForestCoreReport {
    pub trials: u64,
    pub single_vertex_cores: u64,
    /// Matching cores by k.
    pub matching_cores: BTreeMap<usize, u64>,
    /// Forests whose core was neither; must stay empty.
    pub violations: Vec<Graph>,
}

/// Random forests must dismantle to a single vertex or a matching.
pub fn forest_core_check(trials: u64, max_n: usize, seed: u64) -> ForestCoreReport {
    let mut rng = Pcg64::seed_from_u64(seed);
    let mut out = ForestCoreReport::default();
    for _ in 0..trials {
        let n = rng.gen_range(1..=max_n.max(1));
        let g = chordal::random_forest(n, rng.gen());
        let cert = dismantle::core(&g, Policy::Lexicographic);
        let (core_graph, _) = cert.core.to_graph();
        out.trials += 1;
        if core_graph.n() == 1 {
            out.single_vertex_cores += 1;
        } else if let Some(k) = core_graph.is_matching() {
            if k >= 1 {
                *out.matching_cores.entry(k).or_insert(0) += 1;
            } else {
                out.violations.push(g);
            }
        } else {
            out.violations.push(g);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Wedges of S^0

#[derive(Clone, Debug)]
pub struct S0WedgeRow {
    /// Number of S^0 summands; 0 is the contractible row.
    pub m: u64,
    pub labeled: u64,
    pub class_representatives: Vec<Graph>,
}

#[derive(Clone, Debug)]
pub struct S0WedgeReport {
    pub n_max: usize,
    pub rows: Vec<S0WedgeRow>,
}

impl S0WedgeReport {
    /// Stable text rendering, used for the pinned listing.
    pub fn render(&self) -> String {
        let mut out = format!(
            "# taut chordal graphs on at most {} vertices whose independence\n\
             # complex is a wedge of m copies of S^0 (m = 0 is contractible)\n",
            self.n_max
        );
        for row in &self.rows {
            out.push_str(&format!(
                "m={} labeled={} classes={}\n",
                row.m,
                row.labeled,
                row.class_representatives.len()
            ));
            for rep in &row.class_representatives {
                let edges: Vec<String> = rep
                    .edges()
                    .iter()
                    .map(|(u, v)| format!("{u}-{v}"))
                    .collect();
                out.push_str(&format!("  n={} edges={}\n", rep.n(), edges.join(",")));
            }
        }
        out
    }
}

/// Taut chordal graphs whose signature is concentrated in dimension 0,
/// reported per summand count. The catalog is a report, not an assertion:
/// whether only finitely many exist per homotopy type is open.
pub fn s0_wedge_check(n_max: usize) -> Result<S0WedgeReport> {
    let catalog = taut_catalog(n_max)?;
    let mut rows = Vec::new();
    for group in &catalog.groups {
        let sig = &group.signature;
        let m = sig.betti_at(0);
        let concentrated = sig.is_contractible()
            || (sig.betti_neg1() == 0 && sig.total() == m && m >= 1);
        if !concentrated {
            continue;
        }
        rows.push(S0WedgeRow {
            m,
            labeled: group.labeled.len() as u64,
            class_representatives: group.class_representatives.clone(),
        });
    }
    rows.sort_by_key(|r| r.m);
    Ok(S0WedgeReport { n_max, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::HomotopySignature;

    #[test]
    fn fixtures_are_stable() {
        let chain = triangle_chain_7();
        assert_eq!(chain.n(), 7);
        assert_eq!(chain.edge_count(), 9);
        assert!(chordal::is_chordal(&chain));
        assert!(dismantle::is_taut(&chain));

        let both = k3_k2();
        assert!(chordal::is_chordal(&both));
        assert!(dismantle::is_taut(&both));
        let sig = reduced_betti(&independence_complex(&both), CoefField::Gf2).unwrap();
        assert_eq!(sig.betti_at(0), 0);
        assert_eq!(sig.betti_at(1), 2);

        let m2 = fixture("m2").unwrap();
        assert!(dismantle::is_taut(&m2));
        let sig = reduced_betti(&independence_complex(&m2), CoefField::Gf2).unwrap();
        assert_eq!(sig, HomotopySignature::sphere(1));

        assert_eq!(fixtures().len(), 12);
        assert!(fixture("p5").is_some());
        assert!(fixture("unknown").is_none());
    }

    #[test]
    fn taut_catalog_small() {
        let catalog = taut_catalog(6).unwrap();
        // Contractible group: exactly the one-vertex graph.
        let contractible = catalog
            .group(&HomotopySignature::contractible())
            .expect("contractible group");
        assert_eq!(contractible.labeled.len(), 1);
        assert_eq!(contractible.labeled[0].n(), 1);

        // Single-sphere groups are exactly the matchings M_k, 2k ≤ 6.
        for k in 0..=3usize {
            let sig = HomotopySignature::sphere(k as isize - 1);
            let group = catalog.group(&sig).expect("matching group");
            assert_eq!(group.class_representatives.len(), 1, "k={k}");
            for g in &group.labeled {
                assert_eq!(g.is_matching(), Some(k));
            }
        }
        for group in &catalog.groups {
            for g in &group.labeled {
                assert!(chordal::is_chordal(g));
                assert!(dismantle::is_taut(g));
            }
        }
    }

    #[test]
    fn taut_catalog_finds_both_two_circle_graphs() {
        let catalog = taut_catalog(7).unwrap();
        let two_circles = HomotopySignature::sphere(1).wedge(&HomotopySignature::sphere(1));
        let group = catalog.group(&two_circles).expect("S^1 v S^1 group");
        let has_iso_copy = |target: &Graph| {
            group
                .class_representatives
                .iter()
                .any(|rep| are_isomorphic(rep, target))
        };
        assert!(has_iso_copy(&k3_k2()));
        assert!(has_iso_copy(&triangle_chain_7()));
        assert!(group.class_representatives.len() >= 2);
    }

    #[test]
    fn oracle_sweep_small() {
        let sweep = oracle_sweep(5).unwrap();
        assert_eq!(sweep.chordal_per_n, vec![1, 1, 2, 8, 61, 822]);
        assert_eq!(sweep.contractibility_mismatches, 0);
        assert_eq!(sweep.sphere_mismatches, 0);
        assert_eq!(sweep.taut_sphere_nonmatching, 0);
        assert_eq!(sweep.core_signature_mismatches, 0);
        assert!(!sweep.taut.is_empty());
    }

    #[test]
    fn tree_search_sweep_small() {
        let sweep = tree_search_sweep(5).unwrap();
        assert_eq!(sweep.failures, 0);
        assert!(sweep.graphs > 0);
        assert!(sweep.roots >= sweep.graphs);
    }

    #[test]
    fn copwin_sweep_small() {
        let sweep = copwin_equivalence_sweep(5).unwrap();
        assert_eq!(sweep.mismatches, 0);
        assert_eq!(sweep.graphs, 1 + 1 + 2 + 8 + 64 + 1024);
    }

    #[test]
    fn wedge_sweep_small() {
        let sweep = wedge_agreement_sweep(5).unwrap();
        assert_eq!(sweep.oracle_mismatches, 0);
        assert_eq!(sweep.simplicial_mismatches, 0);
        assert_eq!(sweep.chordal_graphs, 1 + 1 + 2 + 8 + 61 + 822);
        assert!(sweep.simplicial_checked > 0);
    }

    #[test]
    fn identity_check_small() {
        let report = link_deletion_identity_check(60, 11);
        assert_eq!(report.trials, 60);
        assert_eq!(report.failures, 0);
    }

    #[test]
    fn confluence_small() {
        let report = core_confluence_check(40, 18, 4, 99);
        assert_eq!(report.graphs, 40);
        assert_eq!(report.flagged, 0);
    }

    #[test]
    fn forest_cores_small() {
        let report = forest_core_check(150, 30, 7);
        assert_eq!(report.trials, 150);
        assert!(report.violations.is_empty());
        // P_6 dismantles to M_2.
        let cert = dismantle::core(&path_graph(6), Policy::Lexicographic);
        let (core_graph, _) = cert.core.to_graph();
        assert_eq!(core_graph.is_matching(), Some(2));
        // A single edge is already its own core.
        let cert = dismantle::core(&matching(1), Policy::Lexicographic);
        assert!(cert.steps.is_empty());
    }

    #[test]
    fn s0_rows_are_complete_graphs_up_to_iso() {
        let report = s0_wedge_check(6).unwrap();
        // m = 0 is the contractible row: only K_1.
        let zero = report.rows.iter().find(|r| r.m == 0).unwrap();
        assert_eq!(zero.labeled, 1);
        // K_{m+1} appears in every row with 1 ≤ m ≤ 5.
        for m in 1..=5u64 {
            let row = report.rows.iter().find(|r| r.m == m).unwrap_or_else(|| {
                panic!("missing row m={m}");
            });
            assert!(row
                .class_representatives
                .iter()
                .any(|g| are_isomorphic(g, &complete_graph(m as usize + 1))));
        }
    }
}
