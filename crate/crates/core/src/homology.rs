//! Independent homology oracle: reduced Betti numbers of small complexes by
//! boundary-matrix ranks over a finite field, plus the peeling-vertex wedge
//! recursion as a second, structurally different oracle.
//!
//! Deliberately shares no logic with the dismantling engine it cross-checks.

use std::collections::{BTreeSet, HashMap};

use crate::chordal;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Reduced homotopy signature: `betti[i]` is the reduced Betti number in
/// dimension `i - 1`, so the leading entry covers the (−1)-sphere `{∅}`.
/// Trailing zeros are trimmed; the all-zero signature means contractible.
///
/// For chordal graphs this determines the homotopy type of the independence
/// complex, which is a wedge of spheres or contractible.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HomotopySignature {
    betti: Vec<u64>,
}

impl HomotopySignature {
    pub fn contractible() -> HomotopySignature {
        HomotopySignature { betti: vec![] }
    }

    /// The sphere `S^dim`, `dim ≥ −1`.
    pub fn sphere(dim: isize) -> HomotopySignature {
        assert!(dim >= -1);
        let mut betti = vec![0; (dim + 1) as usize + 1];
        *betti.last_mut().unwrap() = 1;
        HomotopySignature { betti }
    }

    fn from_raw(mut betti: Vec<u64>) -> HomotopySignature {
        while betti.last() == Some(&0) {
            betti.pop();
        }
        HomotopySignature { betti }
    }

    pub fn is_contractible(&self) -> bool {
        self.betti.is_empty()
    }

    /// Reduced Betti number in dimension `dim ≥ −1`.
    pub fn betti_at(&self, dim: isize) -> u64 {
        assert!(dim >= -1);
        self.betti.get((dim + 1) as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.betti.iter().sum()
    }

    /// `Some(d)` iff the signature is a single sphere `S^d`.
    pub fn single_sphere_dim(&self) -> Option<isize> {
        if self.total() != 1 {
            return None;
        }
        let idx = self.betti.iter().position(|&b| b == 1).unwrap();
        Some(idx as isize - 1)
    }

    /// Suspension shifts every Betti number up one dimension; the suspension
    /// of a contractible signature is contractible.
    pub fn suspend(&self) -> HomotopySignature {
        if self.is_contractible() {
            return self.clone();
        }
        let mut betti = vec![0];
        betti.extend_from_slice(&self.betti);
        HomotopySignature::from_raw(betti)
    }

    /// Wedge sum: Betti numbers add; a contractible summand is the identity.
    pub fn wedge(&self, other: &HomotopySignature) -> HomotopySignature {
        let len = self.betti.len().max(other.betti.len());
        let betti = (0..len)
            .map(|i| {
                self.betti.get(i).copied().unwrap_or(0) + other.betti.get(i).copied().unwrap_or(0)
            })
            .collect();
        HomotopySignature::from_raw(betti)
    }

    /// Reduced Betti numbers from dimension 0 upward (the usual report
    /// vector; dimension −1 is nonzero only for `{∅}` and is reported
    /// separately).
    pub fn betti_from_dim0(&self) -> Vec<u64> {
        self.betti.iter().skip(1).copied().collect()
    }

    pub fn betti_neg1(&self) -> u64 {
        self.betti_at(-1)
    }
}

impl std::fmt::Display for HomotopySignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_contractible() {
            return write!(f, "contractible");
        }
        let mut first = true;
        for (i, &b) in self.betti.iter().enumerate() {
            for _ in 0..b {
                if !first {
                    write!(f, " v ")?;
                }
                write!(f, "S^{}", i as isize - 1)?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Coefficient field for the boundary-rank computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoefField {
    Gf2,
    /// GF(p) for an odd prime `p < 2^16`.
    Gf(u32),
}

pub const DEFAULT_FACE_BUDGET: usize = 1 << 20;

/// Reduced Betti numbers of a complex by straightforward elimination on the
/// boundary matrices over the chosen field, including the augmentation, with
/// the default face budget.
pub fn reduced_betti(k: &SimplicialComplex, field: CoefField) -> Result<HomotopySignature> {
    reduced_betti_bounded(k, field, DEFAULT_FACE_BUDGET)
}

pub fn reduced_betti_bounded(
    k: &SimplicialComplex,
    field: CoefField,
    max_faces: usize,
) -> Result<HomotopySignature> {
    let p = match field {
        CoefField::Gf2 => 2,
        CoefField::Gf(p) => {
            if !is_prime(p) || p >= 1 << 16 {
                return Err(Error::NotPrime(p));
            }
            p
        }
    };
    let small = k.vertices().iter().all(|&v| v < 64);
    let faces_by_size: Vec<Vec<FaceKey>> = if small {
        enumerate_faces_mask(k, max_faces)?
    } else {
        enumerate_faces_general(k, max_faces)?
    };
    // b̃_{s-1} = #faces(s) − rank ∂ from size s − rank ∂ from size s+1,
    // where the boundary out of the size-0 face is the zero map.
    let max_size = faces_by_size.len();
    let mut rank_from = vec![0usize; max_size + 1];
    for s in 1..max_size {
        rank_from[s] = boundary_rank(&faces_by_size[s], &faces_by_size[s - 1], p);
    }
    let betti: Vec<u64> = (0..max_size)
        .map(|s| (faces_by_size[s].len() - rank_from[s] - rank_from[s + 1]) as u64)
        .collect();
    Ok(HomotopySignature::from_raw(betti))
}

/// A face is either a vertex bitmask (all ids < 64) or a sorted id vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum FaceKey {
    Mask(u64),
    Verts(Vec<usize>),
}

impl FaceKey {
    /// Subfaces obtained by removing one vertex, paired with the sign index
    /// of the removed vertex within the sorted face.
    fn subfaces(&self) -> Vec<(FaceKey, usize)> {
        match self {
            FaceKey::Mask(m) => {
                let mut out = Vec::with_capacity(m.count_ones() as usize);
                let mut rest = *m;
                let mut idx = 0;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    out.push((FaceKey::Mask(m & !low), idx));
                    idx += 1;
                    rest &= rest - 1;
                }
                out
            }
            FaceKey::Verts(vs) => (0..vs.len())
                .map(|i| {
                    let mut sub = vs.clone();
                    sub.remove(i);
                    (FaceKey::Verts(sub), i)
                })
                .collect(),
        }
    }
}

fn enumerate_faces_mask(k: &SimplicialComplex, max_faces: usize) -> Result<Vec<Vec<FaceKey>>> {
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    for facet in k.facets() {
        let fm = facet.iter().fold(0u64, |m, &v| m | 1 << v);
        // Standard submask walk, including the empty face.
        let mut sub = fm;
        loop {
            seen.insert(sub);
            if seen.len() > max_faces {
                return Err(Error::FaceBudget(max_faces));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & fm;
        }
    }
    let max_size = seen.iter().map(|m| m.count_ones() as usize).max();
    let mut by_size = vec![Vec::new(); max_size.map_or(0, |s| s + 1)];
    for m in seen {
        by_size[m.count_ones() as usize].push(FaceKey::Mask(m));
    }
    Ok(by_size)
}

fn enumerate_faces_general(k: &SimplicialComplex, max_faces: usize) -> Result<Vec<Vec<FaceKey>>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for facet in k.facets() {
        let len = facet.len();
        // A single facet already has 2^len faces.
        if len >= 63 || (1u64 << len) > max_faces as u64 {
            return Err(Error::FaceBudget(max_faces));
        }
        for choose in 0u64..(1 << len) {
            let face: Vec<usize> = (0..len)
                .filter(|i| choose >> i & 1 == 1)
                .map(|i| facet[i])
                .collect();
            seen.insert(face);
            if seen.len() > max_faces {
                return Err(Error::FaceBudget(max_faces));
            }
        }
    }
    let max_size = seen.iter().map(Vec::len).max();
    let mut by_size = vec![Vec::new(); max_size.map_or(0, |s| s + 1)];
    for f in seen {
        by_size[f.len()].push(FaceKey::Verts(f));
    }
    Ok(by_size)
}

/// Rank of the boundary map from the `rows` faces to the `cols` faces over
/// GF(p). Signs alternate with the position of the removed vertex; over
/// GF(2) a bit-packed elimination is used instead.
fn boundary_rank(rows: &[FaceKey], cols: &[FaceKey], p: u32) -> usize {
    if rows.is_empty() || cols.is_empty() {
        return 0;
    }
    let col_index: HashMap<&FaceKey, usize> =
        cols.iter().enumerate().map(|(i, f)| (f, i)).collect();
    if p == 2 {
        let words = cols.len().div_ceil(64);
        let mut matrix: Vec<Vec<u64>> = rows
            .iter()
            .map(|face| {
                let mut row = vec![0u64; words];
                for (sub, _) in face.subfaces() {
                    let j = col_index[&sub];
                    row[j / 64] ^= 1 << (j % 64);
                }
                row
            })
            .collect();
        rank_gf2(&mut matrix)
    } else {
        let mut matrix: Vec<Vec<u32>> = rows
            .iter()
            .map(|face| {
                let mut row = vec![0u32; cols.len()];
                for (sub, sign_idx) in face.subfaces() {
                    let j = col_index[&sub];
                    row[j] = if sign_idx % 2 == 0 { 1 } else { p - 1 };
                }
                row
            })
            .collect();
        rank_gfp(&mut matrix, p)
    }
}

fn rank_gf2(matrix: &mut [Vec<u64>]) -> usize {
    let mut rank = 0;
    let words = matrix.first().map_or(0, Vec::len);
    let mut pivot_rows: Vec<(usize, Vec<u64>)> = Vec::new();
    for slot in matrix.iter_mut() {
        let mut row = std::mem::take(slot);
        for (pivot_bit, pivot) in &pivot_rows {
            if row[pivot_bit / 64] >> (pivot_bit % 64) & 1 == 1 {
                for w in 0..words {
                    row[w] ^= pivot[w];
                }
            }
        }
        if let Some(w) = row.iter().position(|&x| x != 0) {
            let bit = w * 64 + row[w].trailing_zeros() as usize;
            pivot_rows.push((bit, row));
            rank += 1;
        }
    }
    rank
}

fn rank_gfp(matrix: &mut [Vec<u32>], p: u32) -> usize {
    let p64 = p as u64;
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows).find(|&r| matrix[r][col] != 0) else {
            continue;
        };
        matrix.swap(row, pivot);
        let inv = mod_inverse(matrix[row][col], p) as u64;
        for entry in matrix[row][col..].iter_mut() {
            *entry = (*entry as u64 * inv % p64) as u32;
        }
        let pivot_row = matrix[row].clone();
        for (r, other) in matrix.iter_mut().enumerate() {
            if r == row || other[col] == 0 {
                continue;
            }
            let factor = other[col] as u64;
            for (entry, &pv) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                let sub = factor * pv as u64 % p64;
                *entry = ((*entry as u64 + p64 - sub) % p64) as u32;
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Vertex subset of a fixed graph as a word-packed bitmask; the memo key of
/// the wedge recursion.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct VertexMask(Vec<u64>);

impl VertexMask {
    fn full(n: usize) -> VertexMask {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        VertexMask(words)
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn without(&self, v: usize) -> VertexMask {
        let mut next = self.clone();
        next.0[v / 64] &= !(1u64 << (v % 64));
        next
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &word)| {
            std::iter::successors((word != 0).then_some(word), |&w| {
                let next = w & (w - 1);
                (next != 0).then_some(next)
            })
            .map(move |w| i * 64 + w.trailing_zeros() as usize)
        })
    }
}

/// Homotopy signature of Ind(G) for chordal G by the peeling-vertex wedge
/// recursion: no vertices gives the (−1)-sphere, an isolated vertex makes the
/// complex a cone, and otherwise the lowest peeling vertex `u` splits the
/// complex as the deletion wedged with the suspended link. Memoized on the
/// vertex subset of the induced subgraph.
pub fn wedge_decomposition(g: &Graph) -> Result<HomotopySignature> {
    if !chordal::is_chordal(g) {
        return Err(Error::NotChordal);
    }
    let mut memo = HashMap::new();
    Ok(wedge_rec(g, VertexMask::full(g.n()), &mut memo))
}

fn wedge_rec(
    g: &Graph,
    subset: VertexMask,
    memo: &mut HashMap<VertexMask, HomotopySignature>,
) -> HomotopySignature {
    if subset.count() == 0 {
        return HomotopySignature::sphere(-1);
    }
    if let Some(hit) = memo.get(&subset) {
        return hit.clone();
    }
    let isolated = subset
        .iter()
        .any(|v| !g.neighbors(v).iter().any(|&w| subset.contains(w)));
    let sig = if isolated {
        // An isolated vertex cones off the independence complex.
        HomotopySignature::contractible()
    } else {
        let u = lowest_peeling_within(g, &subset).expect("chordal graph with an edge peels");
        let without_u = subset.without(u);
        let mut without_nbhd = without_u.clone();
        for &w in g.neighbors(u) {
            without_nbhd = without_nbhd.without(w);
        }
        let deleted = wedge_rec(g, without_u, memo);
        let linked = wedge_rec(g, without_nbhd, memo);
        deleted.wedge(&linked.suspend())
    };
    memo.insert(subset, sig.clone());
    sig
}

fn lowest_peeling_within(g: &Graph, subset: &VertexMask) -> Option<usize> {
    let is_simplicial = |v: usize| {
        let nbrs: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| subset.contains(w))
            .collect();
        nbrs.iter()
            .enumerate()
            .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    };
    subset.iter().find(|&u| {
        g.neighbors(u)
            .iter()
            .any(|&s| subset.contains(s) && is_simplicial(s))
    })
}

/// Homotopy signature via the simplicial-vertex identity: the wedge over all
/// neighbours `u` of a simplicial vertex `v` of the suspended signature of
/// `G ∖ N[u]`. Must agree with `wedge_decomposition`.
pub fn wedge_via_simplicial(g: &Graph, v: usize) -> Result<HomotopySignature> {
    if !chordal::is_chordal(g) {
        return Err(Error::NotChordal);
    }
    if !chordal::simplicial_vertices(g).contains(&v) {
        return Err(Error::Precondition(format!("vertex {v} is not simplicial")));
    }
    if g.degree(v) == 0 {
        return Err(Error::Precondition(format!(
            "vertex {v} is isolated; the identity needs degree ≥ 1"
        )));
    }
    let mut memo = HashMap::new();
    let mut acc = HomotopySignature::contractible();
    for &u in g.neighbors(v) {
        let mut rest = VertexMask::full(g.n()).without(u);
        for &w in g.neighbors(u) {
            rest = rest.without(w);
        }
        let summand = wedge_rec(g, rest, &mut memo).suspend();
        acc = acc.wedge(&summand);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cross_polytope_boundary, independence_complex, SimplicialComplex};
    use crate::testutil::{complete, path};

    fn betti_of(g: &Graph) -> HomotopySignature {
        reduced_betti(&independence_complex(g), CoefField::Gf2).unwrap()
    }

    #[test]
    fn reduced_betti_examples() {
        let square = SimplicialComplex::from_facets(vec![
            vec![0, 1],
            vec![1, 2],
            vec![2, 3],
            vec![0, 3],
        ]);
        let sig = reduced_betti(&square, CoefField::Gf2).unwrap();
        assert_eq!(sig, HomotopySignature::sphere(1));

        let four_points = betti_of(&complete(4));
        assert_eq!(four_points.betti_at(0), 3);
        assert!(four_points.single_sphere_dim().is_none());

        let chain = betti_of(&crate::explorer::triangle_chain_7());
        assert_eq!(chain.betti_at(0), 0);
        assert_eq!(chain.betti_at(1), 2);
        assert_eq!(chain.total(), 2);
    }

    #[test]
    fn reduced_betti_degenerate_complexes() {
        let empty = SimplicialComplex::empty_complex();
        let sig = reduced_betti(&empty, CoefField::Gf2).unwrap();
        assert_eq!(sig, HomotopySignature::sphere(-1));
        assert_eq!(sig.betti_neg1(), 1);

        let simplex = SimplicialComplex::from_facets(vec![vec![0, 1, 2]]);
        assert!(reduced_betti(&simplex, CoefField::Gf2)
            .unwrap()
            .is_contractible());
    }

    #[test]
    fn face_budget_and_prime_validation() {
        let simplex = SimplicialComplex::from_facets(vec![(0..10).collect()]);
        assert!(matches!(
            reduced_betti_bounded(&simplex, CoefField::Gf2, 100),
            Err(Error::FaceBudget(100))
        ));
        assert!(matches!(
            reduced_betti(&simplex, CoefField::Gf(6)),
            Err(Error::NotPrime(6))
        ));
        assert!(reduced_betti(&simplex, CoefField::Gf(3)).is_ok());
    }

    #[test]
    fn general_face_path_agrees_with_mask_path() {
        // Shift ids above 64 to force the general representation.
        for seed in 0..50 {
            let g = crate::graph::random_graph(7, 0.5, 3100 + seed);
            let ind = independence_complex(&g);
            let shifted = ind.relabel(&(0..7).map(|v| (v, v + 100)).collect());
            for field in [CoefField::Gf2, CoefField::Gf(3)] {
                assert_eq!(
                    reduced_betti(&ind, field).unwrap(),
                    reduced_betti(&shifted, field).unwrap()
                );
            }
        }
    }

    #[test]
    fn gf2_and_gf3_agree_on_chordal_inputs() {
        use crate::smallgraph::{pair_count, MaskGraph};
        for n in 0..=6usize {
            for mask in 0u64..(1 << pair_count(n)) {
                let mg = MaskGraph::from_edge_mask(n, mask);
                if !mg.is_chordal() {
                    continue;
                }
                let ind = independence_complex(&mg.to_graph());
                assert_eq!(
                    reduced_betti(&ind, CoefField::Gf2).unwrap(),
                    reduced_betti(&ind, CoefField::Gf(3)).unwrap(),
                    "n={n} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn suspension_shift_on_cross_polytopes() {
        for k in 0..=4usize {
            let lower = reduced_betti(&cross_polytope_boundary(k), CoefField::Gf2).unwrap();
            let upper = reduced_betti(&cross_polytope_boundary(k + 1), CoefField::Gf2).unwrap();
            assert_eq!(lower.suspend(), upper);
            assert_eq!(lower.single_sphere_dim(), Some(k as isize - 1));
        }
    }

    #[test]
    fn wedge_decomposition_examples() {
        assert_eq!(
            wedge_decomposition(&complete(2)).unwrap(),
            HomotopySignature::sphere(0)
        );
        assert_eq!(
            wedge_decomposition(&path(3)).unwrap(),
            HomotopySignature::sphere(0)
        );
        assert_eq!(wedge_decomposition(&path(3)).unwrap(), betti_of(&path(3)));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(wedge_decomposition(&c4).is_err());
    }

    #[test]
    fn wedge_via_simplicial_examples() {
        let sig = wedge_via_simplicial(&path(3), 0).unwrap();
        assert_eq!(sig, HomotopySignature::sphere(0));

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let sig = wedge_via_simplicial(&star, 1).unwrap();
        assert_eq!(sig, HomotopySignature::sphere(0));
        assert_eq!(sig.betti_at(0), 1);

        // Errors: not simplicial / isolated.
        assert!(wedge_via_simplicial(&path(4), 1).is_err());
        let lonely = Graph::edgeless(2);
        assert!(wedge_via_simplicial(&lonely, 0).is_err());
    }

    #[test]
    fn wedge_oracles_agree_small_exhaustive() {
        use crate::smallgraph::{pair_count, MaskGraph};
        for n in 0..=5usize {
            for mask in 0u64..(1 << pair_count(n)) {
                let mg = MaskGraph::from_edge_mask(n, mask);
                if !mg.is_chordal() {
                    continue;
                }
                let g = mg.to_graph();
                let by_wedge = wedge_decomposition(&g).unwrap();
                assert_eq!(by_wedge, betti_of(&g), "n={n} mask={mask}");
                for v in crate::chordal::simplicial_vertices(&g) {
                    if g.degree(v) >= 1 {
                        assert_eq!(wedge_via_simplicial(&g, v).unwrap(), by_wedge);
                    }
                }
            }
        }
    }

    #[test]
    fn taut_single_sphere_forces_pendant_simplicial_vertices() {
        // Over the taut catalog: single-sphere signature means every
        // simplicial vertex has degree exactly one.
        let catalog = crate::explorer::taut_catalog(7).unwrap();
        for group in &catalog.groups {
            if group.signature.single_sphere_dim().is_none() {
                continue;
            }
            for g in &group.labeled {
                for v in crate::chordal::simplicial_vertices(g) {
                    assert_eq!(g.degree(v), 1, "graph {:?}", g.edges());
                }
            }
        }
    }

    #[test]
    fn signature_display() {
        assert_eq!(HomotopySignature::contractible().to_string(), "contractible");
        assert_eq!(HomotopySignature::sphere(-1).to_string(), "S^-1");
        let two_circles = HomotopySignature::sphere(1).wedge(&HomotopySignature::sphere(1));
        assert_eq!(two_circles.to_string(), "S^1 v S^1");
    }
}
