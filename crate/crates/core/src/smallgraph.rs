//! Compact bitmask representation of graphs on at most 16 vertices.
//!
//! The exhaustive sweeps visit hundreds of millions of labeled graphs, so the
//! hot predicates (chordality, cop-win dismantling, good-pair dismantling)
//! have mask implementations here. They must agree with the general-purpose
//! versions; the unit tests check that exhaustively on small vertex counts.

use crate::graph::Graph;

pub(crate) const MAX_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct MaskGraph {
    pub n: usize,
    pub adj: [u16; MAX_N],
}

impl MaskGraph {
    /// Decodes an edge bitmask, bit `k` covering the `k`-th pair `(i, j)`,
    /// `i < j`, in lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> MaskGraph {
        debug_assert!(n <= MAX_N);
        let mut adj = [0u16; MAX_N];
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if mask >> k & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        MaskGraph { n, adj }
    }

    pub fn edge_mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut k = 0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.adj[i] >> j & 1 == 1 {
                    mask |= 1 << k;
                }
                k += 1;
            }
        }
        mask
    }

    pub fn from_graph(g: &Graph) -> Option<MaskGraph> {
        if g.n() > MAX_N {
            return None;
        }
        let mut adj = [0u16; MAX_N];
        for v in g.vertices() {
            for &w in g.neighbors(v) {
                adj[v] |= 1 << w;
            }
        }
        Some(MaskGraph { n: g.n(), adj })
    }

    pub fn to_graph(self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.adj[i] >> j & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("mask edges are simple")
    }

    pub fn full_mask(&self) -> u16 {
        if self.n == 16 {
            u16::MAX
        } else {
            (1u16 << self.n) - 1
        }
    }

    /// Maximum cardinality search followed by a perfect elimination ordering
    /// check.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        if n <= 3 {
            return true;
        }
        let mut selected: u16 = 0;
        let mut order = [0usize; MAX_N];
        let mut weight = [0u32; MAX_N];
        for slot in order.iter_mut().take(n) {
            let mut best = usize::MAX;
            for v in 0..n {
                if selected >> v & 1 == 0 && (best == usize::MAX || weight[v] > weight[best]) {
                    best = v;
                }
            }
            *slot = best;
            selected |= 1 << best;
            let mut nb = self.adj[best] & !selected;
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                weight[v] += 1;
                nb &= nb - 1;
            }
        }
        // order is v_n..v_1; the reverse is the PEO candidate.
        let mut pos = [0usize; MAX_N];
        for (i, &v) in order.iter().take(n).enumerate() {
            pos[v] = n - 1 - i;
        }
        for v in 0..n {
            let mut later: u16 = 0;
            let mut a = self.adj[v];
            while a != 0 {
                let w = a.trailing_zeros() as usize;
                if pos[w] > pos[v] {
                    later |= 1 << w;
                }
                a &= a - 1;
            }
            if later == 0 {
                continue;
            }
            let mut parent = usize::MAX;
            let mut l = later;
            while l != 0 {
                let w = l.trailing_zeros() as usize;
                if parent == usize::MAX || pos[w] < pos[parent] {
                    parent = w;
                }
                l &= l - 1;
            }
            if (later & !(1u16 << parent)) & !self.adj[parent] != 0 {
                return false;
            }
        }
        true
    }

    pub fn is_connected_within(&self, sub: u16) -> bool {
        if sub == 0 {
            return true;
        }
        let start = sub.trailing_zeros() as usize;
        let mut reached: u16 = 1 << start;
        loop {
            let mut grown = reached;
            let mut m = reached;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                grown |= self.adj[v] & sub;
                m &= m - 1;
            }
            if grown == reached {
                break;
            }
            reached = grown;
        }
        reached == sub
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.full_mask())
    }

    /// Cop-win test for the subgraph induced by `sub`: iterated removal of
    /// closed-neighbourhood dominated vertices until none remains.
    pub fn is_copwin_within(&self, sub: u16) -> bool {
        let mut alive = sub;
        loop {
            let mut removed_any = false;
            let mut cand = alive;
            'scan: while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let nu = (self.adj[u] & alive) | (1 << u);
                let mut others = alive & !(1u16 << u);
                while others != 0 {
                    let u2 = others.trailing_zeros() as usize;
                    others &= others - 1;
                    let nu2 = (self.adj[u2] & alive) | (1 << u2);
                    if nu & !nu2 == 0 {
                        alive &= !(1u16 << u);
                        removed_any = true;
                        break 'scan;
                    }
                }
            }
            if !removed_any {
                break;
            }
        }
        alive.count_ones() == 1
    }

    /// Good-pair dismantling with the lexicographic policy: repeatedly remove
    /// the smallest `(y, x)` with `N(x) ⊆ N(y)`. Returns the steps as
    /// `(removed, witness)` plus the surviving vertex mask.
    pub fn goodpair_core_lex(&self) -> (Vec<(usize, usize)>, u16) {
        let mut alive = self.full_mask();
        let mut steps = Vec::new();
        loop {
            let mut found = None;
            'outer: for y in 0..self.n {
                if alive >> y & 1 == 0 {
                    continue;
                }
                let ny = self.adj[y] & alive;
                for x in 0..self.n {
                    if x == y || alive >> x & 1 == 0 {
                        continue;
                    }
                    if (self.adj[x] & alive) & !ny == 0 {
                        found = Some((y, x));
                        break 'outer;
                    }
                }
            }
            match found {
                Some((y, x)) => {
                    steps.push((y, x));
                    alive &= !(1u16 << y);
                }
                None => break,
            }
        }
        (steps, alive)
    }

    pub fn has_good_pair(&self) -> bool {
        let alive = self.full_mask();
        for y in 0..self.n {
            let ny = self.adj[y];
            for x in 0..self.n {
                if x != y && (self.adj[x] & alive) & !ny == 0 {
                    return true;
                }
            }
        }
        false
    }
}

/// Number of vertex pairs, i.e. the number of edge-mask bits, for `n`
/// labeled vertices.
pub(crate) fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}
