//! Simple undirected graphs on dense vertex ids `0..n`, together with the
//! neighbourhood and domination predicates the rest of the crate is built on.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

use crate::error::{Error, Result};

/// A simple undirected graph. Adjacency lists are sorted, symmetric and
/// loop-free; vertex ids are `0..n`. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// A pair of distinct vertices `(x, y)` with `N(x) ⊆ N(y)` (open
/// neighbourhoods). Removing `y` is then an elementary dismantling of the
/// independence complex; it follows that `xy` is a non-edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct GoodPair {
    pub x: usize,
    pub y: usize,
}

/// Result of iterated removal of closed-neighbourhood dominated vertices.
/// `core_vertices[i]` is the original label of core vertex `i`.
#[derive(Clone, Debug)]
pub struct CopwinCore {
    pub core: Graph,
    pub core_vertices: Vec<usize>,
    pub removed: Vec<usize>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Rejects out-of-range endpoints,
    /// self-loops and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Open neighbourhood `N(v)` as a sorted slice. Panics if `v` is out of
    /// range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Closed neighbourhood `N[v] = N(v) ∪ {v}`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.partition_point(|&w| w < v);
        out.insert(pos, v);
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edge-complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for (u, row) in adj.iter_mut().enumerate() {
            let mut nbrs = self.adj[u].iter().copied().peekable();
            for v in 0..n {
                if Some(&v) == nbrs.peek() {
                    nbrs.next();
                } else if v != u {
                    row.push(v);
                }
            }
        }
        Graph { adj }
    }

    /// Subgraph induced by `keep`, densely renumbered. Returns the graph and
    /// the map from new ids to original labels. Panics on out-of-range ids.
    pub fn induced_subgraph(&self, keep: &BTreeSet<usize>) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = keep.iter().copied().collect();
        if let Some(&worst) = labels.last() {
            assert!(worst < self.n(), "vertex {worst} out of range");
        }
        let mut new_id = vec![usize::MAX; self.n()];
        for (new, &old) in labels.iter().enumerate() {
            new_id[old] = new;
        }
        let mut adj = vec![Vec::new(); labels.len()];
        for (new, &old) in labels.iter().enumerate() {
            adj[new] = self.adj[old]
                .iter()
                .filter(|&&w| new_id[w] != usize::MAX)
                .map(|&w| new_id[w])
                .collect();
        }
        (Graph { adj }, labels)
    }

    /// Connected components as sorted vertex sets, ordered by smallest
    /// contained vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// `Some(k)` iff every connected component is a single edge, so the graph
    /// is the matching `M_k`. The empty graph counts as `M_0`.
    pub fn is_matching(&self) -> Option<usize> {
        if self.vertices().all(|v| self.degree(v) == 1) {
            Some(self.n() / 2)
        } else {
            None
        }
    }

    /// True iff `x ≠ y` and `N(x) ⊆ N(y)`. Panics on out-of-range vertices.
    pub fn is_good_pair(&self, x: usize, y: usize) -> bool {
        assert!(x < self.n() && y < self.n(), "vertex out of range");
        x != y && is_subset_sorted(&self.adj[x], &self.adj[y])
    }

    /// All good pairs, sorted by `(y, x)`.
    pub fn enumerate_good_pairs(&self) -> Vec<GoodPair> {
        let mut out = Vec::new();
        for y in self.vertices() {
            for x in self.vertices() {
                if x != y && self.is_good_pair(x, y) {
                    out.push(GoodPair { x, y });
                }
            }
        }
        out
    }

    /// Closed-neighbourhood domination `N[u] ⊆ N[u2]`: the clique-complex /
    /// cop-win notion, not the good-pair one. Panics if `u == u2`.
    pub fn is_dominated_by(&self, u: usize, u2: usize) -> bool {
        assert!(u != u2, "domination requires distinct vertices");
        // N[u] ⊆ N[u2]  ⟺  u2 ∈ N[u] and N(u) ⊆ N[u2]
        self.has_edge(u, u2)
            && self.adj[u]
                .iter()
                .all(|&w| w == u2 || self.has_edge(w, u2))
    }

    /// Repeatedly removes the lowest-id closed-neighbourhood dominated vertex
    /// until none remains. The graph is cop-win iff the core is one vertex.
    pub fn copwin_core(&self) -> CopwinCore {
        self.copwin_core_impl(None)
    }

    /// Same dismantling with a seeded random choice among the currently
    /// dominated vertices; exists solely for confluence testing.
    pub fn copwin_core_seeded(&self, seed: u64) -> CopwinCore {
        self.copwin_core_impl(Some(Pcg64::seed_from_u64(seed)))
    }

    fn copwin_core_impl(&self, mut rng: Option<Pcg64>) -> CopwinCore {
        let mut alive: BTreeSet<usize> = self.vertices().collect();
        let mut removed = Vec::new();
        loop {
            let mut dominated = Vec::new();
            for &u in &alive {
                let found = alive.iter().any(|&u2| {
                    u2 != u
                        && self.has_edge(u, u2)
                        && self.adj[u]
                            .iter()
                            .filter(|w| alive.contains(w))
                            .all(|&w| w == u2 || self.has_edge(w, u2))
                });
                if found {
                    dominated.push(u);
                    if rng.is_none() {
                        break;
                    }
                }
            }
            if dominated.is_empty() {
                break;
            }
            let pick = match rng.as_mut() {
                Some(r) => dominated[r.gen_range(0..dominated.len())],
                None => dominated[0],
            };
            alive.remove(&pick);
            removed.push(pick);
        }
        let (core, core_vertices) = self.induced_subgraph(&alive);
        CopwinCore {
            core,
            core_vertices,
            removed,
        }
    }

    pub fn is_cop_win(&self) -> bool {
        self.copwin_core().core.n() == 1
    }
}

fn is_subset_sorted(a: &[usize], b: &[usize]) -> bool {
    let mut ib = b.iter();
    'outer: for x in a {
        for y in ib.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// Isomorphism test by backtracking with degree-sequence and
/// neighbour-degree-multiset pruning. Hard-capped at 12 vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    const LIMIT: usize = 12;
    assert!(
        g.n() <= LIMIT && h.n() <= LIMIT,
        "isomorphism testing is capped at {LIMIT} vertices"
    );
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    let profile = |graph: &Graph, v: usize| {
        let mut nd: Vec<usize> = graph
            .neighbors(v)
            .iter()
            .map(|&w| graph.degree(w))
            .collect();
        nd.sort_unstable();
        (graph.degree(v), nd)
    };
    let gp: Vec<_> = (0..n).map(|v| profile(g, v)).collect();
    let hp: Vec<_> = (0..n).map(|v| profile(h, v)).collect();
    let mut gs = gp.clone();
    let mut hs = hp.clone();
    gs.sort();
    hs.sort();
    if gs != hs {
        return false;
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &Graph,
        h: &Graph,
        gp: &[(usize, Vec<usize>)],
        hp: &[(usize, Vec<usize>)],
        order: &[usize],
        pos: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        'cand: for w in 0..h.n() {
            if used[w] || gp[v] != hp[w] {
                continue;
            }
            for &prev in &order[..pos] {
                if g.has_edge(v, prev) != h.has_edge(w, image[prev]) {
                    continue 'cand;
                }
            }
            image[v] = w;
            used[w] = true;
            if extend(g, h, gp, hp, order, pos + 1, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[w] = false;
        }
        false
    }

    // Map vertices of g in decreasing degree order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &gp, &hp, &order, 0, &mut image, &mut used)
}

/// Erdős–Rényi graph with edge probability `p`, deterministic per seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = Pcg64::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are valid")
}
