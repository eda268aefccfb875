use std::fmt;

use crate::error::{Error, Result};

/// Hard upper bound on graph order: one adjacency row per vertex fits in a
/// single u64, which the whole crate leans on.
pub const MAX_ORDER: usize = 64;

fn full_mask(n: usize) -> u64 {
    if n == MAX_ORDER {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices encoded as a bitmask. Vertex `v` is present when bit
/// `v` is set.
#[derive(Debug, Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> VertexSet {
        assert!(v < MAX_ORDER);
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_ORDER);
        self.0 |= 1u64 << v;
    }

    pub fn with(mut self, v: usize) -> VertexSet {
        self.insert(v);
        self
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// What is left after deleting a vertex set: the number of components, the
/// order of the largest one, and the components themselves (sorted by their
/// smallest vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    pub omega: usize,
    pub tau: usize,
    pub components: Vec<VertexSet>,
}

/// Simple undirected graph on vertices `0..n`, `1 <= n <= 64`, stored as one
/// adjacency bitmask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        debug_assert!((0..n).all(|v| adj[v] & !full_mask(n) == 0 && adj[v] >> v & 1 == 0));
        debug_assert!((0..n).all(|v| (0..n).all(|u| adj[v] >> u & 1 == adj[u] >> v & 1)));
        Graph { n, adj }
    }

    /// Path v0 - v1 - ... - v(n-1).
    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Cycle v0 - v1 - ... - v(n-1) - v0. Needs n >= 3.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::OrderBelowMinimum {
                op: "cycle",
                n,
                min: 3,
            });
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let full = full_mask(n);
        let adj = (0..n).map(|v| full & !(1u64 << v)).collect();
        Ok(Graph { n, adj })
    }

    /// Star K_{1,n-1} with the center at vertex 0.
    pub fn star(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet(full_mask(self.n))
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !full_mask(u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Degrees in nonincreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let (omega, _) = self.omega_tau(0);
        omega == 1
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() == self.n - 1 && self.is_connected()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.edge_count() == self.n && self.is_connected()
    }

    pub fn is_path_graph(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    pub fn is_cycle_graph(&self) -> bool {
        self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for u in self.neighbors(v).iter() {
                adj[perm[v]] |= 1u64 << perm[u];
            }
        }
        Graph::from_adjacency(self.n, adj)
    }

    /// Component count and largest component order of the graph minus the
    /// vertices in `removed`. The hot path for the exhaustive scans: a
    /// frontier BFS where each step is a handful of word operations.
    pub(crate) fn omega_tau(&self, removed: u64) -> (u32, u32) {
        let mut rest = full_mask(self.n) & !removed;
        let mut omega = 0u32;
        let mut tau = 0u32;
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            rest ^= start;
            while frontier != 0 {
                let mut reach = 0u64;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    reach |= self.adj[v];
                }
                frontier = reach & rest;
                comp |= frontier;
                rest &= !frontier;
            }
            omega += 1;
            tau = tau.max(comp.count_ones());
        }
        (omega, tau)
    }

    /// Full component decomposition of the graph minus `x`. Rejects removal
    /// of the whole vertex set: every parameter here is defined over proper
    /// subsets only.
    pub fn components_after_removal(&self, x: VertexSet) -> Result<ComponentSummary> {
        let full = full_mask(self.n);
        if x.bits() & !full != 0 {
            let vertex = (x.bits() & !full).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange {
                vertex,
                order: self.n,
            });
        }
        if x.bits() == full {
            return Err(Error::RemovalIsWholeGraph);
        }
        let mut rest = full & !x.bits();
        let mut components = Vec::new();
        let mut tau = 0usize;
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            rest ^= start;
            while frontier != 0 {
                let mut reach = 0u64;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    reach |= self.adj[v];
                }
                frontier = reach & rest;
                comp |= frontier;
                rest &= !frontier;
            }
            tau = tau.max(comp.count_ones() as usize);
            components.push(VertexSet(comp));
        }
        Ok(ComponentSummary {
            omega: components.len(),
            tau,
            components,
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
