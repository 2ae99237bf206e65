//! Good-pair dismantling of independence complexes of chordal graphs: cores,
//! certificates, contractibility decisions and the sphere classification.
//!
//! For a chordal graph the independence complex is contractible exactly when
//! good-pair dismantling reduces the graph to one vertex, and homotopy
//! equivalent to a single sphere exactly when the core is a matching; the
//! homology module provides the independent cross-check.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use serde::{Deserialize, Serialize};

use crate::chordal;
use crate::complex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{self, CoefField};
use crate::smallgraph::MaskGraph;

/// One elementary dismantling: `removed` had a witness with
/// `N(witness) ⊆ N(removed)` in the graph as it stood at that step.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DismantleStep {
    pub removed: usize,
    pub witness: usize,
}

/// The surviving graph in original labels.
#[derive(Clone, PartialEq, Eq, Debug, Deserialize)]
pub struct CoreGraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Serialize for CoreGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut out = s.serialize_struct("CoreGraph", 3)?;
        out.serialize_field("n", &self.vertices.len())?;
        out.serialize_field("vertices", &self.vertices)?;
        out.serialize_field("edges", &self.edges)?;
        out.end()
    }
}

impl CoreGraph {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Densely renumbered copy plus the label map (new id to original).
    pub fn to_graph(&self) -> (Graph, Vec<usize>) {
        let pos = |v: usize| self.vertices.binary_search(&v).expect("core edge endpoint");
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (pos(u), pos(v))).collect();
        (
            Graph::from_edges(self.vertices.len(), &edges).expect("core edges are simple"),
            self.vertices.clone(),
        )
    }
}

/// A full dismantling run: the ordered steps and the resulting core, which
/// has no good pair. Replaying the steps from the input graph is valid at
/// every step.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DismantleCertificate {
    pub steps: Vec<DismantleStep>,
    pub core: CoreGraph,
}

/// Choice of good pair when several are available.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Policy {
    /// Smallest `(removed, witness)` pair; the default, giving reproducible
    /// certificates.
    Lexicographic,
    /// Uniform among all current good pairs; exists for confluence testing.
    Seeded(u64),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SphereKind {
    Contractible,
    /// Ind(G) ≃ S^(k−1); the core is the matching `M_k`.
    Sphere(usize),
    /// Wedge with total reduced Betti number at least two.
    Other,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SphereClassification {
    pub kind: SphereKind,
    pub core_size: usize,
}

/// Dismantles until no good pair remains and returns the certificate.
pub fn core(g: &Graph, policy: Policy) -> DismantleCertificate {
    if policy == Policy::Lexicographic {
        if let Some(mask) = MaskGraph::from_graph(g) {
            let (steps, alive) = mask.goodpair_core_lex();
            let steps = steps
                .into_iter()
                .map(|(removed, witness)| DismantleStep { removed, witness })
                .collect();
            let vertices: BTreeSet<usize> = (0..g.n()).filter(|&v| alive >> v & 1 == 1).collect();
            return DismantleCertificate {
                steps,
                core: core_graph_of(g, &vertices),
            };
        }
    }
    core_counted(g, policy)
}

/// Count-matrix engine: maintains `c(x, y) = |N(x) ∖ N(y)|` over the alive
/// vertices, so a pair is good exactly when its count is zero. Removing a
/// vertex only ever decreases counts, so the candidate set grows
/// monotonically and each removal updates `O(deg · n)` entries, keeping a
/// full run cubic.
fn core_counted(g: &Graph, policy: Policy) -> DismantleCertificate {
    let n = g.n();
    let mut rng = match policy {
        Policy::Lexicographic => None,
        Policy::Seeded(seed) => Some(Pcg64::seed_from_u64(seed)),
    };
    let words = n.div_ceil(64);
    let mut rows = vec![0u64; n * words];
    for v in 0..n {
        for &w in g.neighbors(v) {
            rows[v * words + w / 64] |= 1 << (w % 64);
        }
    }
    let mut counts = vec![0u32; n * n];
    // Good pairs keyed (removed, witness) = (y, x) so the set order is the
    // lexicographic policy order.
    let mut good: BTreeSet<(usize, usize)> = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let mut c = 0u32;
            for w in 0..words {
                c += (rows[x * words + w] & !rows[y * words + w]).count_ones();
            }
            counts[x * n + y] = c;
            if c == 0 {
                good.insert((y, x));
            }
        }
    }
    let mut alive = vec![true; n];
    let mut alive_count = n;
    let mut steps = Vec::new();
    loop {
        let picked = match rng.as_mut() {
            None => {
                // Lazy deletion: counts never increase, so stale entries are
                // exactly those with a dead endpoint.
                let mut pick = None;
                while let Some(&(y, x)) = good.iter().next() {
                    if alive[y] && alive[x] {
                        pick = Some((y, x));
                        break;
                    }
                    good.remove(&(y, x));
                }
                pick
            }
            Some(rng) => {
                if good.is_empty() {
                    None
                } else {
                    let idx = rng.gen_range(0..good.len());
                    good.iter().nth(idx).copied()
                }
            }
        };
        let Some((y, x)) = picked else { break };
        steps.push(DismantleStep {
            removed: y,
            witness: x,
        });
        alive[y] = false;
        alive_count -= 1;
        // Counts lose the element y for pairs (a, b) with a adjacent to y
        // and b not.
        for &a in g.neighbors(y) {
            if !alive[a] {
                continue;
            }
            for b in 0..n {
                if b == a || b == y || !alive[b] || g.has_edge(y, b) {
                    continue;
                }
                let slot = &mut counts[a * n + b];
                debug_assert!(*slot > 0);
                *slot -= 1;
                if *slot == 0 {
                    good.insert((b, a));
                }
            }
        }
        if rng.is_some() {
            // Keep the candidate set exact so the uniform pick stays uniform.
            good.retain(|&(b, a)| alive[b] && alive[a]);
        }
        if alive_count == 0 {
            break;
        }
    }
    let vertices: BTreeSet<usize> = (0..n).filter(|&v| alive[v]).collect();
    DismantleCertificate {
        steps,
        core: core_graph_of(g, &vertices),
    }
}

fn core_graph_of(g: &Graph, vertices: &BTreeSet<usize>) -> CoreGraph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|(u, v)| vertices.contains(u) && vertices.contains(v))
        .collect();
    CoreGraph {
        vertices: vertices.iter().copied().collect(),
        edges,
    }
}

/// Where and why a certificate replay failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateFailure {
    /// Index of the offending step; `steps.len()` marks a failure of the
    /// terminal core comparison.
    pub index: usize,
    pub reason: String,
}

/// Replays a certificate: every step must be a good pair at its moment and
/// the terminal graph must equal the stated core and have no good pair.
pub fn verify_certificate(g: &Graph, cert: &DismantleCertificate) -> bool {
    verify_certificate_detailed(g, cert).is_ok()
}

pub fn verify_certificate_detailed(
    g: &Graph,
    cert: &DismantleCertificate,
) -> std::result::Result<(), CertificateFailure> {
    let n = g.n();
    let mut alive = vec![true; n];
    let fail = |index: usize, reason: String| Err(CertificateFailure { index, reason });
    for (i, step) in cert.steps.iter().enumerate() {
        let (y, x) = (step.removed, step.witness);
        if y >= n || x >= n {
            return fail(i, format!("vertex out of range in step {y}/{x}"));
        }
        if !alive[y] {
            return fail(i, format!("vertex {y} already removed"));
        }
        if !alive[x] {
            return fail(i, format!("witness {x} already removed"));
        }
        if x == y {
            return fail(i, "witness equals removed vertex".into());
        }
        let subset_ok = g
            .neighbors(x)
            .iter()
            .filter(|&&w| alive[w])
            .all(|&w| w != y && g.has_edge(w, y));
        if !subset_ok {
            return fail(i, format!("({x}, {y}) is not a good pair at step {i}"));
        }
        alive[y] = false;
    }
    let terminal: BTreeSet<usize> = (0..n).filter(|&v| alive[v]).collect();
    let expected = core_graph_of(g, &terminal);
    if expected != cert.core {
        return fail(cert.steps.len(), "terminal graph differs from stated core".into());
    }
    let (core_dense, _) = expected.to_graph();
    if !core_dense.enumerate_good_pairs().is_empty() {
        return fail(cert.steps.len(), "stated core still has a good pair".into());
    }
    Ok(())
}

/// True iff the graph has no good pair, i.e. Ind(G) equals its own core.
pub fn is_taut(g: &Graph) -> bool {
    if let Some(mask) = MaskGraph::from_graph(g) {
        return !mask.has_good_pair();
    }
    g.enumerate_good_pairs().is_empty()
}

/// Contractibility of Ind(G) for chordal G, decided by dismantling: the
/// complex is contractible iff the core is a single vertex. Refuses
/// non-chordal inputs, where dismantlability no longer characterizes
/// contractibility.
pub fn is_contractible_chordal(g: &Graph) -> Result<bool> {
    if !chordal::is_chordal(g) {
        return Err(Error::NotChordal);
    }
    Ok(core(g, Policy::Lexicographic).core.n() == 1)
}

/// Per-component shortcut: Ind(G) is contractible iff some component's
/// complex is. Must agree with the monolithic decision.
pub fn is_contractible_chordal_by_components(g: &Graph) -> Result<bool> {
    if !chordal::is_chordal(g) {
        return Err(Error::NotChordal);
    }
    for comp in g.connected_components() {
        let (h, _) = g.induced_subgraph(&comp.iter().copied().collect());
        if core(&h, Policy::Lexicographic).core.n() == 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Homotopy classification of Ind(G) for chordal G from the dismantling
/// core: one vertex means contractible, a matching `M_k` means the sphere
/// S^(k−1), anything else is a wedge with total reduced Betti number ≥ 2.
pub fn classify_sphere_chordal(g: &Graph) -> Result<SphereClassification> {
    if !chordal::is_chordal(g) {
        return Err(Error::NotChordal);
    }
    let cert = core(g, Policy::Lexicographic);
    Ok(classification_of_core(&cert))
}

fn classification_of_core(cert: &DismantleCertificate) -> SphereClassification {
    let core_size = cert.core.n();
    let (core_dense, _) = cert.core.to_graph();
    let kind = if core_size == 1 {
        SphereKind::Contractible
    } else if let Some(k) = core_dense.is_matching() {
        SphereKind::Sphere(k)
    } else {
        SphereKind::Other
    };
    SphereClassification { kind, core_size }
}

/// JSON-facing classification labels.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Classification {
    Contractible,
    Sphere,
    Other,
    UnknownNonChordal,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Contractible => "contractible",
            Classification::Sphere => "sphere",
            Classification::Other => "other",
            Classification::UnknownNonChordal => "unknown(non-chordal)",
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Full decision report; see `decide`.
#[derive(Clone, Debug, Serialize)]
pub struct DecideReport {
    pub chordal: bool,
    pub classification: Classification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub core: CoreGraph,
    pub certificate: Vec<DismantleStep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dismantlable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub taut: Option<bool>,
    pub elapsed_ms: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct DecideOptions {
    pub policy: Policy,
    /// Also run the homology oracle and report reduced Betti numbers from
    /// dimension 0.
    pub oracle: bool,
    /// Dismantle non-chordal inputs too; the report then speaks of
    /// dismantlability and tautness, never of contractibility or spheres.
    pub allow_non_chordal: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            policy: Policy::Lexicographic,
            oracle: false,
            allow_non_chordal: false,
        }
    }
}

/// Bundles the chordality check, classification, certificate and timing.
/// Total: non-chordal inputs are reported as such with the classification
/// left unknown (unless dismantling is explicitly allowed).
pub fn decide(g: &Graph) -> DecideReport {
    decide_with(g, DecideOptions::default())
}

pub fn decide_with(g: &Graph, opts: DecideOptions) -> DecideReport {
    let start = Instant::now();
    let chordal = chordal::is_chordal(g);
    let (cert, classification, k, dismantlable, taut) = if chordal {
        let cert = core(g, opts.policy);
        let class = classification_of_core(&cert);
        let (label, k) = match class.kind {
            SphereKind::Contractible => (Classification::Contractible, None),
            SphereKind::Sphere(k) => (Classification::Sphere, Some(k)),
            SphereKind::Other => (Classification::Other, None),
        };
        (cert, label, k, None, None)
    } else if opts.allow_non_chordal {
        let cert = core(g, opts.policy);
        let dismantlable = cert.core.n() == 1;
        let taut = cert.steps.is_empty();
        (
            cert,
            Classification::UnknownNonChordal,
            None,
            Some(dismantlable),
            Some(taut),
        )
    } else {
        // Dismantling did not run; the core field carries the input graph.
        let all: BTreeSet<usize> = g.vertices().collect();
        let cert = DismantleCertificate {
            steps: vec![],
            core: core_graph_of(g, &all),
        };
        (cert, Classification::UnknownNonChordal, None, None, None)
    };
    let betti = if opts.oracle {
        homology::reduced_betti(&complex::independence_complex(g), CoefField::Gf2)
            .ok()
            .map(|sig| sig.betti_from_dim0())
    } else {
        None
    };
    DecideReport {
        chordal,
        classification,
        k,
        core: cert.core.clone(),
        certificate: cert.steps,
        betti,
        dismantlable,
        taut,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}
