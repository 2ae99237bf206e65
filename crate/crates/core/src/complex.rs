//! Simplicial complexes in facet representation, independence and clique
//! complexes of graphs, links, deletions and complex-level domination.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::Graph;
use crate::smallgraph::MaskGraph;

/// A simplicial complex given by its inclusion-maximal faces. The facet list
/// is canonical: each facet sorted, facets sorted lexicographically, and no
/// facet contains another.
///
/// The empty complex `{∅}` (one empty facet, no vertices) is representable
/// and distinct from the void complex (no facets at all); the former is the
/// (−1)-sphere.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds a complex from generating faces, keeping the inclusion-maximal
    /// ones. No faces at all yields the void complex.
    pub fn from_facets(faces: Vec<Vec<usize>>) -> SimplicialComplex {
        let mut faces: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for face in faces {
            if !facets.iter().any(|kept| is_subset(&face, kept)) {
                facets.push(face);
            }
        }
        facets.sort();
        SimplicialComplex { facets }
    }

    /// The complex `{∅}` whose only face is the empty simplex.
    pub fn empty_complex() -> SimplicialComplex {
        SimplicialComplex {
            facets: vec![vec![]],
        }
    }

    /// The void complex with no faces at all.
    pub fn void() -> SimplicialComplex {
        SimplicialComplex { facets: vec![] }
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.facets.iter().flatten().copied().collect()
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.facets.iter().any(|f| f.binary_search(&v).is_ok())
    }

    pub fn dimension(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let mut sorted = face.to_vec();
        sorted.sort_unstable();
        self.facets.iter().any(|f| is_subset(&sorted, f))
    }

    /// Faces `F` with `v ∉ F` and `F ∪ {v}` in the complex, in maximal form.
    /// Panics if `v` is not a vertex.
    pub fn link(&self, v: usize) -> SimplicialComplex {
        assert!(self.has_vertex(v), "link: {v} is not a vertex");
        let generators: Vec<Vec<usize>> = self
            .facets
            .iter()
            .filter(|f| f.binary_search(&v).is_ok())
            .map(|f| f.iter().copied().filter(|&w| w != v).collect())
            .collect();
        SimplicialComplex::from_facets(generators)
    }

    /// All faces avoiding `v`, in maximal form. Panics if `v` is not a
    /// vertex.
    pub fn delete(&self, v: usize) -> SimplicialComplex {
        assert!(self.has_vertex(v), "delete: {v} is not a vertex");
        let generators: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|f| f.iter().copied().filter(|&w| w != v).collect())
            .collect();
        SimplicialComplex::from_facets(generators)
    }

    /// True iff every facet containing `u` also contains `u2`, which is
    /// equivalent to the link of `u` being a cone with apex `u2`. Panics on
    /// identical or unknown vertices.
    pub fn is_dominated_by(&self, u: usize, u2: usize) -> bool {
        assert!(u != u2, "domination requires distinct vertices");
        assert!(
            self.has_vertex(u) && self.has_vertex(u2),
            "domination requires complex vertices"
        );
        self.facets
            .iter()
            .filter(|f| f.binary_search(&u).is_ok())
            .all(|f| f.binary_search(&u2).is_ok())
    }

    /// Renames vertices through `map`; ids absent from the map are kept.
    pub fn relabel(&self, map: &BTreeMap<usize, usize>) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            self.facets
                .iter()
                .map(|f| f.iter().map(|v| *map.get(v).unwrap_or(v)).collect())
                .collect(),
        )
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
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

/// Independence complex: facets are the maximal independent sets.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    if let Some(mask) = MaskGraph::from_graph(g) {
        return independence_complex_mask(&mask);
    }
    // Maximal independent sets of g = maximal cliques of the complement.
    SimplicialComplex {
        facets: maximal_cliques(&g.complement()),
    }
}

fn independence_complex_mask(g: &MaskGraph) -> SimplicialComplex {
    let n = g.n;
    let full: u32 = if n == 16 { 1 << 16 } else { 1 << n };
    let mut facets = Vec::new();
    'subset: for s in 0..full {
        let s16 = s as u16;
        let mut m = s16;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if g.adj[v] & s16 != 0 {
                continue 'subset;
            }
            m &= m - 1;
        }
        // Independent; maximal iff no outside vertex is addable.
        for v in 0..n {
            if s16 >> v & 1 == 0 && g.adj[v] & s16 == 0 {
                continue 'subset;
            }
        }
        facets.push((0..n).filter(|&v| s16 >> v & 1 == 1).collect());
    }
    SimplicialComplex::from_facets(facets)
}

/// Clique complex: facets are the maximal cliques.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex {
        facets: maximal_cliques(g),
    }
}

/// Bron–Kerbosch with pivoting; results sorted canonically.
pub(crate) fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let p: BTreeSet<usize> = g.vertices().collect();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, p, BTreeSet::new(), &mut out);
    if out.is_empty() {
        // No vertices: the unique maximal clique is the empty set.
        out.push(Vec::new());
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| g.neighbors(u).iter().filter(|w| p.contains(w)).count())
        .expect("p ∪ x nonempty");
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    let mut p = p;
    for v in candidates {
        let nbrs: BTreeSet<usize> = g.neighbors(v).iter().copied().collect();
        r.push(v);
        bron_kerbosch(
            g,
            r,
            p.intersection(&nbrs).copied().collect(),
            x.intersection(&nbrs).copied().collect(),
            out,
        );
        r.pop();
        p.remove(&v);
        x.insert(v);
    }
}

/// Boundary complex of the `k`-dimensional cross-polytope, realized as the
/// independence complex of the matching `M_k`. For `k = 0` this is `{∅}`.
pub fn cross_polytope_boundary(k: usize) -> SimplicialComplex {
    independence_complex(&crate::explorer::matching(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_graph;
    use crate::testutil::complete;

    fn facet_set(c: &SimplicialComplex) -> Vec<Vec<usize>> {
        c.facets().to_vec()
    }

    #[test]
    fn independence_complex_examples() {
        let k3 = complete(3);
        assert_eq!(
            facet_set(&independence_complex(&k3)),
            vec![vec![0], vec![1], vec![2]]
        );
        let m2 = crate::explorer::matching(2);
        assert_eq!(
            facet_set(&independence_complex(&m2)),
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]
        );
        let edgeless = Graph::edgeless(3);
        assert_eq!(
            facet_set(&independence_complex(&edgeless)),
            vec![vec![0, 1, 2]]
        );
    }

    #[test]
    fn clique_complex_examples() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(
            facet_set(&clique_complex(&c4)),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        assert_eq!(facet_set(&clique_complex(&complete(3))), vec![vec![0, 1, 2]]);
        for seed in 0..200 {
            let g = random_graph(7, 0.45, 500 + seed);
            assert_eq!(independence_complex(&g), clique_complex(&g.complement()));
        }
    }

    #[test]
    fn mask_and_general_independence_paths_agree() {
        for seed in 0..100 {
            let g = random_graph(8, 0.4, 900 + seed);
            let via_mask = independence_complex(&g);
            let via_cliques = SimplicialComplex {
                facets: maximal_cliques(&g.complement()),
            };
            assert_eq!(via_mask, via_cliques);
        }
    }

    #[test]
    fn link_examples() {
        let triangle = SimplicialComplex::from_facets(vec![vec![0, 1, 2]]);
        assert_eq!(facet_set(&triangle.link(0)), vec![vec![1, 2]]);

        let point_plus = SimplicialComplex::from_facets(vec![vec![0, 1], vec![2]]);
        assert_eq!(point_plus.link(2), SimplicialComplex::empty_complex());

        for seed in 0..200 {
            let (g, _) = crate::chordal::random_chordal(2 + (seed as usize % 7), 0.5, seed);
            if g.n() == 0 {
                continue;
            }
            let u = (seed as usize) % g.n();
            let keep: std::collections::BTreeSet<usize> = g
                .vertices()
                .filter(|&v| v != u && !g.has_edge(u, v))
                .collect();
            let (h, labels) = g.induced_subgraph(&keep);
            let relabel: BTreeMap<usize, usize> =
                labels.iter().enumerate().map(|(new, &old)| (new, old)).collect();
            assert_eq!(
                independence_complex(&g).link(u),
                independence_complex(&h).relabel(&relabel),
                "seed={seed}"
            );
        }
    }

    #[test]
    fn delete_examples() {
        let triangle = SimplicialComplex::from_facets(vec![vec![0, 1, 2]]);
        assert_eq!(facet_set(&triangle.delete(0)), vec![vec![1, 2]]);

        let point = SimplicialComplex::from_facets(vec![vec![5]]);
        assert_eq!(point.delete(5), SimplicialComplex::empty_complex());

        for seed in 0..200 {
            let g = random_graph(1 + (seed as usize % 8), 0.4, 1300 + seed);
            let u = (seed as usize) % g.n();
            let keep: std::collections::BTreeSet<usize> =
                g.vertices().filter(|&v| v != u).collect();
            let (h, labels) = g.induced_subgraph(&keep);
            let relabel: BTreeMap<usize, usize> =
                labels.iter().enumerate().map(|(new, &old)| (new, old)).collect();
            assert_eq!(
                independence_complex(&g).delete(u),
                independence_complex(&h).relabel(&relabel),
                "seed={seed}"
            );
        }
    }

    #[test]
    fn domination_examples() {
        let simplex = SimplicialComplex::from_facets(vec![vec![0, 1, 2]]);
        assert!(simplex.is_dominated_by(0, 1));
        let square = SimplicialComplex::from_facets(vec![
            vec![0, 1],
            vec![1, 2],
            vec![2, 3],
            vec![0, 3],
        ]);
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert!(!square.is_dominated_by(u, v));
                }
            }
        }
    }

    #[test]
    fn complex_domination_equals_good_pairs_exhaustively() {
        use crate::smallgraph::{pair_count, MaskGraph};
        for n in 1..=6usize {
            for mask in 0u64..(1 << pair_count(n)) {
                let g = MaskGraph::from_edge_mask(n, mask).to_graph();
                let ind = independence_complex(&g);
                for x in 0..n {
                    for y in 0..n {
                        if x == y {
                            continue;
                        }
                        assert_eq!(
                            ind.is_dominated_by(y, x),
                            g.is_good_pair(x, y),
                            "n={n} mask={mask} ({x},{y})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cross_polytope_examples() {
        assert_eq!(
            facet_set(&cross_polytope_boundary(1)),
            vec![vec![0], vec![1]]
        );
        let square = cross_polytope_boundary(2);
        assert_eq!(square.facets().len(), 4);
        assert!(square.facets().iter().all(|f| f.len() == 2));
        let octahedron = cross_polytope_boundary(3);
        assert_eq!(octahedron.facets().len(), 8);
        assert!(octahedron.facets().iter().all(|f| f.len() == 3));
        assert_eq!(cross_polytope_boundary(0), SimplicialComplex::empty_complex());
    }

    #[test]
    fn empty_vs_void() {
        assert_ne!(SimplicialComplex::empty_complex(), SimplicialComplex::void());
        assert_eq!(
            independence_complex(&Graph::edgeless(0)),
            SimplicialComplex::empty_complex()
        );
    }

    #[test]
    fn facets_stay_an_antichain() {
        for seed in 0..100 {
            let g = random_graph(7, 0.5, 2100 + seed);
            let ind = independence_complex(&g);
            for ops in 0..2 {
                let k = if ops == 0 {
                    let v = *ind.vertices().iter().next().unwrap();
                    ind.link(v)
                } else {
                    let v = *ind.vertices().iter().next().unwrap();
                    ind.delete(v)
                };
                for (i, a) in k.facets().iter().enumerate() {
                    for (j, b) in k.facets().iter().enumerate() {
                        if i != j {
                            assert!(!is_subset(a, b));
                        }
                    }
                }
            }
        }
    }

    /// Complex-level dismantling of Ind(G) reaches a point iff good-pair
    /// dismantling of G reaches a single vertex, exhaustively for n ≤ 6.
    #[test]
    fn complex_dismantling_matches_graph_dismantling() {
        use crate::smallgraph::{pair_count, MaskGraph};
        for n in 1..=6usize {
            for mask in 0u64..(1 << pair_count(n)) {
                let g = MaskGraph::from_edge_mask(n, mask).to_graph();
                let mut k = independence_complex(&g);
                loop {
                    let verts: Vec<usize> = k.vertices().into_iter().collect();
                    let mut step = None;
                    'find: for &u in &verts {
                        for &u2 in &verts {
                            if u != u2 && k.is_dominated_by(u, u2) {
                                step = Some(u);
                                break 'find;
                            }
                        }
                    }
                    match step {
                        Some(u) => k = k.delete(u),
                        None => break,
                    }
                }
                let complex_point = k.vertices().len() == 1;
                let cert = crate::dismantle::core(&g, crate::dismantle::Policy::Lexicographic);
                assert_eq!(
                    complex_point,
                    cert.core.vertices.len() == 1,
                    "n={n} mask={mask}"
                );
            }
        }
    }
}
