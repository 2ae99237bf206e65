//! Tree models of chordal graphs: validation, clique trees, restriction,
//! contraction, rooted-model good pairs and the constructive search that
//! replays the inductive existence proof for them.

use std::collections::BTreeSet;

use crate::chordal;
use crate::dismantle;
use crate::error::{Error, Result};
use crate::graph::{Graph, GoodPair};

/// A tree of nodes, each carrying a bag of graph vertices (possibly empty).
/// Constructors enforce that the node adjacency is a tree; whether the bags
/// model a particular graph is checked by [`validate_tree_model`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeModel {
    bags: Vec<BTreeSet<usize>>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootedTreeModel {
    pub model: TreeModel,
    pub root: usize,
}

impl TreeModel {
    /// Builds a model after checking that the given node adjacency is a tree
    /// (nonempty, connected, exactly `nodes − 1` edges, no loops or
    /// duplicates).
    pub fn new(bags: Vec<BTreeSet<usize>>, edges: Vec<(usize, usize)>) -> Result<TreeModel> {
        let k = bags.len();
        if k == 0 {
            return Err(Error::Model("a tree needs at least one node".into()));
        }
        if edges.len() != k - 1 {
            return Err(Error::Model(format!(
                "{k} nodes need {} tree edges, got {}",
                k - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); k];
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            if a >= k || b >= k {
                return Err(Error::Model(format!("tree edge {a}-{b} out of range")));
            }
            if a == b {
                return Err(Error::Model(format!("tree edge loop at {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::Model(format!("duplicate tree edge {a}-{b}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let model = TreeModel { bags, edges, adj };
        if !model.tree_connected() {
            return Err(Error::Model("tree edges do not connect all nodes".into()));
        }
        Ok(model)
    }

    fn tree_connected(&self) -> bool {
        let k = self.node_count();
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == k
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, node: usize) -> &BTreeSet<usize> {
        &self.bags[node]
    }

    pub fn bags(&self) -> &[BTreeSet<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn node_neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    /// Nodes whose bag contains `v`.
    pub fn nodes_containing(&self, v: usize) -> Vec<usize> {
        (0..self.node_count())
            .filter(|&i| self.bags[i].contains(&v))
            .collect()
    }

    /// BFS parents and depths from `root`.
    fn bfs(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let k = self.node_count();
        let mut parent = vec![usize::MAX; k];
        let mut depth = vec![usize::MAX; k];
        let mut queue = std::collections::VecDeque::from([root]);
        depth[root] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (parent, depth)
    }
}

/// Why a tree model fails to model a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    BagOutOfRange { node: usize, vertex: usize },
    NotASubtree { vertex: usize },
    EdgeNotCovered { u: usize, v: usize },
    NonEdgeCovered { node: usize, u: usize, v: usize },
}

impl std::fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelViolation::BagOutOfRange { node, vertex } => {
                write!(f, "bag {node} contains out-of-range vertex {vertex}")
            }
            ModelViolation::NotASubtree { vertex } => {
                write!(f, "the nodes containing vertex {vertex} do not form a subtree")
            }
            ModelViolation::EdgeNotCovered { u, v } => {
                write!(f, "edge {u}-{v} is in no bag")
            }
            ModelViolation::NonEdgeCovered { node, u, v } => {
                write!(f, "bag {node} contains the non-edge {u}-{v}")
            }
        }
    }
}

/// Checks the subtree and edge-coverage conditions, reporting the first
/// violation. Tree-ness of the node adjacency is a constructor invariant.
pub fn check_tree_model(t: &TreeModel, g: &Graph) -> std::result::Result<(), ModelViolation> {
    for (node, bag) in t.bags().iter().enumerate() {
        for &v in bag {
            if v >= g.n() {
                return Err(ModelViolation::BagOutOfRange { node, vertex: v });
            }
        }
    }
    // Condition: for every vertex, its nodes induce a connected subtree.
    for v in g.vertices() {
        let nodes = t.nodes_containing(v);
        if nodes.len() <= 1 {
            continue;
        }
        let inside: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut seen = BTreeSet::from([nodes[0]]);
        let mut stack = vec![nodes[0]];
        while let Some(u) = stack.pop() {
            for &w in t.node_neighbors(u) {
                if inside.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != nodes.len() {
            return Err(ModelViolation::NotASubtree { vertex: v });
        }
    }
    // Condition: edges are exactly the pairs sharing a bag.
    let mut covered = BTreeSet::new();
    for (node, bag) in t.bags().iter().enumerate() {
        let members: Vec<usize> = bag.iter().copied().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(ModelViolation::NonEdgeCovered { node, u, v });
                }
                covered.insert((u, v));
            }
        }
    }
    for (u, v) in g.edges() {
        if !covered.contains(&(u, v)) {
            return Err(ModelViolation::EdgeNotCovered { u, v });
        }
    }
    Ok(())
}

pub fn validate_tree_model(t: &TreeModel, g: &Graph) -> bool {
    check_tree_model(t, g).is_ok()
}

/// Clique tree of a chordal graph: bags are the maximal cliques, joined by a
/// maximum-weight spanning tree on bag-intersection sizes (ties to the lower
/// node pair). Components of a disconnected graph are chained through empty
/// connector bags.
pub fn clique_tree(g: &Graph) -> Result<TreeModel> {
    if !chordal::is_chordal(g) {
        return Err(Error::NotChordal);
    }
    if g.n() == 0 {
        return TreeModel::new(vec![BTreeSet::new()], vec![]);
    }
    // Maximal cliques from the elimination ordering: each vertex with its
    // later neighbours, keeping the inclusion-maximal sets.
    let mut peo = chordal::mcs_order(g);
    peo.reverse();
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<BTreeSet<usize>> = peo
        .iter()
        .map(|&v| {
            let mut clique: BTreeSet<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .collect();
            clique.insert(v);
            clique
        })
        .collect();
    candidates.sort();
    let bags: Vec<BTreeSet<usize>> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|other| other.len() > c.len() && c.is_subset(other))
        })
        .cloned()
        .collect();
    let k = bags.len();

    // Maximum-weight spanning forest over positive intersections.
    let mut weighted: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let w = bags[i].intersection(&bags[j]).count();
            if w > 0 {
                weighted.push((w, i, j));
            }
        }
    }
    weighted.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut dsu: Vec<usize> = (0..k).collect();
    fn find(dsu: &mut [usize], mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    let mut edges = Vec::new();
    for (_, i, j) in weighted {
        let (ri, rj) = (find(&mut dsu, i), find(&mut dsu, j));
        if ri != rj {
            dsu[ri] = rj;
            edges.push((i, j));
        }
    }
    // Chain the remaining forest components through empty connector nodes.
    let mut reps: Vec<usize> = Vec::new();
    let mut seen_roots = BTreeSet::new();
    for i in 0..k {
        let r = find(&mut dsu, i);
        if seen_roots.insert(r) {
            reps.push(i);
        }
    }
    let mut bags = bags;
    for pair in 0..reps.len().saturating_sub(1) {
        let connector = bags.len();
        bags.push(BTreeSet::new());
        edges.push((reps[pair], connector));
        edges.push((connector, reps[pair + 1]));
    }
    TreeModel::new(bags, edges)
}

/// Same tree shape with every bag intersected with `keep`: a model of the
/// induced subgraph, still in the original vertex labels.
pub fn restrict(t: &TreeModel, keep: &BTreeSet<usize>) -> TreeModel {
    TreeModel::new(
        t.bags()
            .iter()
            .map(|b| b.intersection(keep).copied().collect())
            .collect(),
        t.tree_edges().to_vec(),
    )
    .expect("restriction preserves the tree shape")
}

/// Contracts all nodes containing `u` into a single empty node, erases every
/// label from the closed neighbourhood of `u`, and roots the result at the
/// contracted node: a rooted tree model of `G ∖ N[u]`.
pub fn contract(t: &TreeModel, u: usize, g: &Graph) -> Result<RootedTreeModel> {
    let u_nodes: BTreeSet<usize> = t.nodes_containing(u).into_iter().collect();
    if u_nodes.is_empty() {
        return Err(Error::VertexNotInModel(u));
    }
    let erase: BTreeSet<usize> = g.closed_neighborhood(u).into_iter().collect();
    let k = t.node_count();
    let mut new_id = vec![usize::MAX; k];
    let mut bags = Vec::new();
    for (node, slot) in new_id.iter_mut().enumerate().take(k) {
        if !u_nodes.contains(&node) {
            *slot = bags.len();
            bags.push(t.bag(node).difference(&erase).copied().collect());
        }
    }
    let contracted = bags.len();
    bags.push(BTreeSet::new());
    for &node in &u_nodes {
        new_id[node] = contracted;
    }
    let mut edges = Vec::new();
    for &(a, b) in t.tree_edges() {
        let (na, nb) = (new_id[a], new_id[b]);
        if na != nb {
            edges.push((na, nb));
        }
    }
    let model = TreeModel::new(bags, edges)?;
    Ok(RootedTreeModel {
        model,
        root: contracted,
    })
}

/// Minimal tree distance from any node containing `v` to the root.
pub fn min_depth(t: &RootedTreeModel, v: usize) -> Result<usize> {
    let (_, depth) = t.model.bfs(t.root);
    t.model
        .nodes_containing(v)
        .iter()
        .map(|&node| depth[node])
        .min()
        .ok_or(Error::VertexNotInModel(v))
}

/// `(x, y)` is (T,R)-good: a good pair such that the path in the tree from
/// every x-node to the root passes through some y-node.
pub fn is_tr_good(t: &RootedTreeModel, g: &Graph, x: usize, y: usize) -> bool {
    g.is_good_pair(x, y) && paths_hit_y(t, x, y)
}

fn paths_hit_y(t: &RootedTreeModel, x: usize, y: usize) -> bool {
    let (parent, _) = t.model.bfs(t.root);
    for x_node in t.model.nodes_containing(x) {
        let mut node = x_node;
        let mut hit = false;
        loop {
            if t.model.bag(node).contains(&y) {
                hit = true;
                break;
            }
            if node == t.root {
                break;
            }
            node = parent[node];
        }
        if !hit {
            return false;
        }
    }
    true
}

/// Constructive search for a (T,R)-good pair in a connected chordal graph
/// with contractible independence complex, replaying the inductive proof:
/// take a peeling vertex of minimal root distance, pass to a contractible
/// component of the graph minus its closed neighbourhood, and recurse with
/// the contracted-and-restricted rooted model. The recursion bottoms out
/// when that component is a single vertex.
pub fn find_tr_good_pair(g: &Graph, t: &RootedTreeModel) -> Result<GoodPair> {
    if g.n() < 2 {
        return Err(Error::Precondition(
            "the search needs at least two vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("the graph must be connected".into()));
    }
    if !chordal::is_chordal(g) {
        return Err(Error::NotChordal);
    }
    if let Err(v) = check_tree_model(&t.model, g) {
        return Err(Error::Model(v.to_string()));
    }
    if t.root >= t.model.node_count() {
        return Err(Error::Model(format!("root {} out of range", t.root)));
    }
    if !dismantle::is_contractible_chordal(g)? {
        return Err(Error::Precondition(
            "the independence complex is not contractible".into(),
        ));
    }
    let all: BTreeSet<usize> = g.vertices().collect();
    Ok(search(g, &all, t.clone()))
}

/// The recursion behind [`find_tr_good_pair`], callable once the
/// preconditions are known to hold. `vertices` and the model carry original
/// labels throughout.
pub(crate) fn find_tr_good_pair_unchecked(g: &Graph, t: &RootedTreeModel) -> GoodPair {
    let all: BTreeSet<usize> = g.vertices().collect();
    search(g, &all, t.clone())
}

fn search(g: &Graph, vertices: &BTreeSet<usize>, model: RootedTreeModel) -> GoodPair {
    debug_assert!(vertices.len() >= 2);
    let (h, labels) = g.induced_subgraph(vertices);
    let peeling: Vec<usize> = chordal::peeling_vertices(&h)
        .into_iter()
        .map(|p| labels[p])
        .collect();
    debug_assert!(!peeling.is_empty(), "connected chordal graphs peel");
    let (_, depth) = model.model.bfs(model.root);
    let root_distance = |v: usize| {
        model
            .model
            .nodes_containing(v)
            .iter()
            .map(|&node| depth[node])
            .min()
            .expect("model covers the subgraph vertices")
    };
    let u = peeling
        .iter()
        .copied()
        .min_by_key(|&v| (root_distance(v), v))
        .unwrap();

    let mut rest = vertices.clone();
    rest.remove(&u);
    for &w in g.neighbors(u) {
        rest.remove(&w);
    }
    let (hr, rest_labels) = g.induced_subgraph(&rest);
    for comp in hr.connected_components() {
        let comp_orig: BTreeSet<usize> = comp.iter().map(|&v| rest_labels[v]).collect();
        let (cg, _) = g.induced_subgraph(&comp_orig);
        let contractible =
            dismantle::core(&cg, dismantle::Policy::Lexicographic).core.n() == 1;
        if !contractible {
            continue;
        }
        if comp_orig.len() == 1 {
            let x = *comp_orig.iter().next().unwrap();
            return GoodPair { x, y: u };
        }
        let contracted =
            contract(&model.model, u, g).expect("peeling vertex appears in some bag");
        let restricted = restrict(&contracted.model, &comp_orig);
        let rooted = RootedTreeModel {
            model: restricted,
            root: contracted.root,
        };
        return search(g, &comp_orig, rooted);
    }
    panic!(
        "no component of the peeled graph has contractible independence \
         complex; the dismantling engine and the tree machinery disagree"
    );
}

/// (T,R)-good pairs of the subgraph induced by `within`, for tests that
/// enumerate them directly against a contracted model.
#[cfg(test)]
pub(crate) fn tr_good_pairs_within(
    t: &RootedTreeModel,
    g: &Graph,
    within: &BTreeSet<usize>,
) -> Vec<GoodPair> {
    let mut out = Vec::new();
    for &y in within {
        for &x in within {
            if x == y {
                continue;
            }
            let good_within = g
                .neighbors(x)
                .iter()
                .filter(|w| within.contains(w))
                .all(|&w| w != y && g.has_edge(w, y));
            if good_within && paths_hit_y(t, x, y) {
                out.push(GoodPair { x, y });
            }
        }
    }
    out
}
