//! Chordality recognition via maximum cardinality search, simplicial and
//! peeling vertex detection, and chordal graph generation/enumeration.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::smallgraph::{pair_count, MaskGraph};
use crate::treemodel::TreeModel;

/// Maximum cardinality search ordering `v_n, …, v_1`: if the graph is chordal
/// the reverse is a perfect elimination ordering. Ties go to the lowest id.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut weight = vec![0usize; n];
    let mut selected = vec![false; n];
    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if !selected[v] && (best == usize::MAX || weight[v] > weight[best]) {
                best = v;
            }
        }
        order.push(best);
        selected[best] = true;
        for &w in g.neighbors(best) {
            if !selected[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Verifies that `peo` (elimination order, first eliminated first) is a
/// perfect elimination ordering: for each vertex, its later neighbours minus
/// the earliest of them must be adjacent to that earliest one. Single pass,
/// O(n + m).
pub(crate) fn is_peo(g: &Graph, peo: &[usize]) -> bool {
    let n = g.n();
    debug_assert_eq!(peo.len(), n);
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    // deferred[p] collects vertices that must turn out adjacent to p.
    let mut deferred: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut mark = vec![false; n];
    for &v in peo {
        for &w in g.neighbors(v) {
            mark[w] = true;
        }
        let ok = deferred[v].iter().all(|&w| mark[w]);
        for &w in g.neighbors(v) {
            mark[w] = false;
        }
        if !ok {
            return false;
        }
        let mut parent = usize::MAX;
        for &w in g.neighbors(v) {
            if pos[w] > pos[v] && (parent == usize::MAX || pos[w] < pos[parent]) {
                parent = w;
            }
        }
        if parent == usize::MAX {
            continue;
        }
        for &w in g.neighbors(v) {
            if pos[w] > pos[v] && w != parent {
                deferred[parent].push(w);
            }
        }
    }
    true
}

/// True iff the graph has no induced cycle of length four or more.
pub fn is_chordal(g: &Graph) -> bool {
    if let Some(mask) = MaskGraph::from_graph(g) {
        return mask.is_chordal();
    }
    let mut peo = mcs_order(g);
    peo.reverse();
    is_peo(g, &peo)
}

/// Vertices whose open neighbourhood induces a clique. Isolated vertices are
/// simplicial vacuously.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    if let Some(mask) = MaskGraph::from_graph(g) {
        return (0..g.n())
            .filter(|&v| {
                let m = mask.adj[v];
                let mut rest = m;
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if (m & !(1u16 << w)) & !mask.adj[w] != 0 {
                        return false;
                    }
                }
                true
            })
            .collect();
    }
    g.vertices()
        .filter(|&v| {
            let nbrs = g.neighbors(v);
            nbrs.iter().enumerate().all(|(i, &a)| {
                nbrs[i + 1..].iter().all(|&b| g.has_edge(a, b))
            })
        })
        .collect()
}

/// Vertices with at least one simplicial neighbour.
pub fn peeling_vertices(g: &Graph) -> Vec<usize> {
    let simplicial = simplicial_vertices(g);
    let mut is_peeling = vec![false; g.n()];
    for &s in &simplicial {
        for &u in g.neighbors(s) {
            is_peeling[u] = true;
        }
    }
    (0..g.n()).filter(|&v| is_peeling[v]).collect()
}

/// Random chordal graph built directly from a random tree model: a random
/// tree of bags, one random connected subtree per vertex grown with
/// probability `fill` per step, edges read off shared bags. Returns the graph
/// together with the witness model. Deterministic per seed.
pub fn random_chordal(n: usize, fill: f64, seed: u64) -> (Graph, TreeModel) {
    let mut rng = Pcg64::seed_from_u64(seed);
    if n == 0 {
        let model = TreeModel::new(vec![BTreeSet::new()], vec![]).expect("single node is a tree");
        return (Graph::edgeless(0), model);
    }
    let fill = fill.clamp(0.0, 0.999);
    let k = n;
    let mut tree_edges = Vec::with_capacity(k - 1);
    let mut tree_adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for node in 1..k {
        let parent = rng.gen_range(0..node);
        tree_edges.push((parent, node));
        tree_adj[parent].push(node);
        tree_adj[node].push(parent);
    }
    let mut bags: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
    let mut in_subtree = vec![false; k];
    for v in 0..n {
        let start = rng.gen_range(0..k);
        let mut members = vec![start];
        in_subtree[start] = true;
        let mut frontier: Vec<usize> = tree_adj[start].clone();
        while !frontier.is_empty() && rng.gen::<f64>() < fill {
            let idx = rng.gen_range(0..frontier.len());
            let node = frontier.swap_remove(idx);
            if in_subtree[node] {
                continue;
            }
            in_subtree[node] = true;
            members.push(node);
            frontier.extend(tree_adj[node].iter().filter(|&&w| !in_subtree[w]));
        }
        for &node in &members {
            in_subtree[node] = false;
            bags[node].insert(v);
        }
    }
    let mut edges = BTreeSet::new();
    for bag in &bags {
        let members: Vec<usize> = bag.iter().copied().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                edges.insert((a, b));
            }
        }
    }
    let edge_list: Vec<(usize, usize)> = edges.into_iter().collect();
    let g = Graph::from_edges(n, &edge_list).expect("bag edges are simple");
    let model = TreeModel::new(bags, tree_edges).expect("generated tree is a tree");
    (g, model)
}

/// Random forest: each vertex either starts a new tree or attaches to a
/// random earlier vertex. Deterministic per seed.
pub fn random_forest(n: usize, seed: u64) -> Graph {
    let mut rng = Pcg64::seed_from_u64(seed);
    let attach_prob = rng.gen_range(0.3..0.95);
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen::<f64>() < attach_prob {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    Graph::from_edges(n, &edges).expect("forest edges are simple")
}

/// Upper bound for exhaustive labeled enumeration: edge masks must fit in 64
/// bits and the sweep must stay tractable.
pub const ENUMERATION_LIMIT: usize = 9;

/// Every chordal graph on at most `n_max` labeled vertices, exactly once:
/// all labeled graphs are generated as edge bitmasks and filtered by
/// chordality.
pub fn enumerate_chordal(n_max: usize) -> Result<impl Iterator<Item = Graph>> {
    if n_max > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "chordal enumeration",
            got: n_max,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok((0..=n_max).flat_map(|n| {
        (0u64..(1u64 << pair_count(n))).filter_map(move |mask| {
            let g = MaskGraph::from_edge_mask(n, mask);
            if g.is_chordal() {
                Some(g.to_graph())
            } else {
                None
            }
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_graph;
    use crate::testutil::{complete, path};
    use crate::treemodel::validate_tree_model;

    #[test]
    fn mcs_order_examples() {
        // Deterministic tie-break on K_3: all weights tie, ids decide.
        assert_eq!(mcs_order(&complete(3)), vec![0, 1, 2]);
        assert_eq!(mcs_order(&Graph::edgeless(4)), vec![0, 1, 2, 3]);
        let mut peo = mcs_order(&path(4));
        peo.reverse();
        assert!(is_peo(&path(4), &peo));
    }

    #[test]
    fn chordality_examples() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!is_chordal(&c4));
        let tree =
            Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        assert!(is_chordal(&tree));
        assert!(is_chordal(&crate::explorer::triangle_chain_7()));
    }

    #[test]
    fn chordality_general_path_agrees_with_mask_path() {
        // Force the non-mask code path by checking is_peo directly against
        // the mask verdict over all graphs on up to 6 vertices.
        for n in 0..=6usize {
            for mask in 0u64..(1 << pair_count(n)) {
                let mg = MaskGraph::from_edge_mask(n, mask);
                let g = mg.to_graph();
                let mut peo = mcs_order(&g);
                peo.reverse();
                assert_eq!(is_peo(&g, &peo), mg.is_chordal(), "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn simplicial_and_peeling_examples() {
        assert_eq!(simplicial_vertices(&path(4)), vec![0, 3]);
        assert_eq!(simplicial_vertices(&complete(4)), vec![0, 1, 2, 3]);
        assert_eq!(peeling_vertices(&path(4)), vec![1, 2]);
        assert_eq!(peeling_vertices(&complete(2)), vec![0, 1]);
    }

    #[test]
    fn chordal_graphs_have_simplicial_and_peeling_vertices() {
        for seed in 0..300 {
            let (g, _) = random_chordal(1 + (seed as usize % 12), 0.6, seed);
            assert!(!simplicial_vertices(&g).is_empty());
            if g.edge_count() > 0 {
                assert!(!peeling_vertices(&g).is_empty());
            }
        }
    }

    #[test]
    fn random_chordal_is_chordal_with_valid_model() {
        for seed in 0..1000 {
            let n = (seed as usize * 7 + 3) % 15;
            let (g, model) = random_chordal(n, 0.5, seed);
            assert!(is_chordal(&g), "seed={seed}");
            assert!(validate_tree_model(&model, &g), "seed={seed}");
        }
        let (g, model) = random_chordal(0, 0.5, 1);
        assert_eq!(g.n(), 0);
        assert_eq!(model.node_count(), 1);
        assert!(validate_tree_model(&model, &g));
    }

    #[test]
    fn chordality_is_hereditary() {
        let mut rng = Pcg64::seed_from_u64(42);
        for seed in 0..100u64 {
            let (g, _) = random_chordal(10, 0.5, seed);
            let keep: BTreeSet<usize> = g.vertices().filter(|_| rng.gen::<f64>() < 0.7).collect();
            let (h, _) = g.induced_subgraph(&keep);
            assert!(is_chordal(&h));
        }
    }

    #[test]
    fn enumeration_counts() {
        // Counts verified against the brute-force induced-cycle filter
        // exercised in the mask tests.
        let count_for = |n: usize| {
            enumerate_chordal(n)
                .unwrap()
                .filter(|g| g.n() == n)
                .count()
        };
        assert_eq!(count_for(0), 1);
        assert_eq!(count_for(1), 1);
        assert_eq!(count_for(2), 2);
        assert_eq!(count_for(3), 8);
        assert_eq!(count_for(4), 61);
        assert_eq!(count_for(5), 822);
        assert!(enumerate_chordal(10).is_err());
    }

    #[test]
    fn forests_are_chordal() {
        for seed in 0..200 {
            let g = random_forest(1 + (seed as usize % 30), seed);
            assert!(is_chordal(&g));
            assert!(g.edge_count() < g.n().max(1));
        }
    }

    #[test]
    fn random_graphs_chordality_cross_check() {
        for seed in 0..300u64 {
            let g = random_graph(7, 0.4, seed);
            let mg = MaskGraph::from_graph(&g).unwrap();
            assert_eq!(is_chordal(&g), mg.is_chordal());
        }
    }

    /// In a chordal graph the first coordinate of every good pair is
    /// simplicial; exhaustive for n ≤ 6.
    #[test]
    fn good_pair_witnesses_are_simplicial_in_chordal_graphs() {
        for n in 1..=6usize {
            for mask in 0u64..(1 << pair_count(n)) {
                let mg = MaskGraph::from_edge_mask(n, mask);
                if !mg.is_chordal() {
                    continue;
                }
                let g = mg.to_graph();
                let simplicial = simplicial_vertices(&g);
                for pair in g.enumerate_good_pairs() {
                    assert!(simplicial.contains(&pair.x), "n={n} mask={mask} {pair:?}");
                }
            }
        }
    }
}
