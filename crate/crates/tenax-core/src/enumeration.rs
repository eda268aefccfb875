use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::canonical_graph;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6::to_graph6;

/// Order caps for the exhaustive family enumerators. Trees and unicyclic
/// graphs go through canonical dedup, so they inherit the canonicalization
/// cap; the labeled sweep walks all C(C(n,2), m) edge subsets.
pub const TREES_MAX_ORDER: usize = 12;
pub const UNICYCLIC_MAX_ORDER: usize = 11;
pub const CONNECTED_LABELED_MAX_ORDER: usize = 7;
pub const CONNECTED_ISO_MAX_ORDER: usize = 8;

fn choose2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Every unlabeled tree on n vertices, one canonically labeled
/// representative per isomorphism class, sorted by canonical graph6 form.
/// Grown level by level: each tree on k vertices is a tree on k-1 vertices
/// plus one leaf, so attaching a leaf everywhere and deduplicating by
/// canonical form covers each level completely.
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if n > TREES_MAX_ORDER {
        return Err(Error::EnumerationCapExceeded {
            family: "tree",
            n,
            cap: TREES_MAX_ORDER,
        });
    }
    let mut level = vec![Graph::from_edge_list(1, &[])?];
    for k in 2..=n {
        let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for tree in &level {
            let base = tree.edges();
            for v in 0..k - 1 {
                let mut edges = base.clone();
                edges.push((v, k - 1));
                let grown = canonical_graph(&Graph::from_edge_list(k, &edges)?)?;
                classes
                    .entry(to_graph6(&grown).into_bytes())
                    .or_insert(grown);
            }
        }
        level = classes.into_values().collect();
    }
    Ok(level)
}

/// Every connected unicyclic graph on n vertices up to isomorphism, sorted
/// by canonical graph6 form. Each one is a spanning tree plus one extra
/// edge, so closing every non-edge of every tree and deduplicating covers
/// the family.
pub fn all_unicyclic(n: usize) -> Result<Vec<Graph>> {
    if n < 3 {
        return Err(Error::OrderBelowMinimum {
            op: "all_unicyclic",
            n,
            min: 3,
        });
    }
    if n > UNICYCLIC_MAX_ORDER {
        return Err(Error::EnumerationCapExceeded {
            family: "unicyclic",
            n,
            cap: UNICYCLIC_MAX_ORDER,
        });
    }
    let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for tree in all_trees(n)? {
        let base = tree.edges();
        for u in 0..n {
            for v in u + 1..n {
                if tree.has_edge(u, v) {
                    continue;
                }
                let mut edges = base.clone();
                edges.push((u, v));
                let closed = canonical_graph(&Graph::from_edge_list(n, &edges)?)?;
                classes
                    .entry(to_graph6(&closed).into_bytes())
                    .or_insert(closed);
            }
        }
    }
    Ok(classes.into_values().collect())
}

/// Streaming enumeration of all connected labeled graphs with a fixed
/// vertex and edge count, in ascending order of the edge-subset bitmask
/// (graph6 pair order). Backed by Gosper's hack, so memory stays constant.
pub struct ConnectedGraphs {
    n: usize,
    slots: Vec<(usize, usize)>,
    mask: u64,
    limit: u64,
    exhausted: bool,
}

impl ConnectedGraphs {
    fn new(n: usize, m: usize) -> ConnectedGraphs {
        let mut slots = Vec::with_capacity(choose2(n));
        for v in 1..n {
            for u in 0..v {
                slots.push((u, v));
            }
        }
        let limit = 1u64 << slots.len();
        ConnectedGraphs {
            n,
            slots,
            mask: if m == 0 { 0 } else { (1u64 << m) - 1 },
            limit,
            exhausted: false,
        }
    }

    fn advance(&mut self) {
        if self.mask == 0 {
            self.exhausted = true;
            return;
        }
        let low = self.mask & self.mask.wrapping_neg();
        let ripple = self.mask + low;
        let next = (((ripple ^ self.mask) >> 2) / low) | ripple;
        if next >= self.limit {
            self.exhausted = true;
        } else {
            self.mask = next;
        }
    }

    fn realize(&self, mask: u64) -> Option<Graph> {
        let mut adj = [0u64; MAX_ORDER];
        let mut bits = mask;
        while bits != 0 {
            let p = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = self.slots[p];
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        let full = (1u64 << self.n) - 1;
        let mut visited = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut reach = 0u64;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                reach |= adj[v];
            }
            frontier = reach & !visited;
            visited |= frontier;
        }
        if visited == full {
            Some(Graph::from_adjacency(self.n, adj[..self.n].to_vec()))
        } else {
            None
        }
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while !self.exhausted {
            let mask = self.mask;
            self.advance();
            if let Some(g) = self.realize(mask) {
                return Some(g);
            }
        }
        None
    }
}

fn check_connected_args(n: usize, m: usize, cap: usize, family: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if n > cap {
        return Err(Error::EnumerationCapExceeded { family, n, cap });
    }
    let min = n - 1;
    let max = choose2(n);
    if m < min || m > max {
        return Err(Error::EdgeCountOutOfRange { n, m, min, max });
    }
    Ok(())
}

/// Streaming connected labeled enumeration; see `ConnectedGraphs`.
pub fn connected_graphs_iter(n: usize, m: usize) -> Result<ConnectedGraphs> {
    check_connected_args(n, m, CONNECTED_LABELED_MAX_ORDER, "connected labeled")?;
    Ok(ConnectedGraphs::new(n, m))
}

/// Connected graphs with n vertices and m edges, either all labeled ones or
/// one canonical representative per isomorphism class. The isomorphism
/// variant canonicalizes every labeled graph it sees; near n = 8 with
/// midrange m that is hundreds of millions of graphs, so expect the upper
/// end of the cap to take a long time.
pub fn all_connected_graphs(n: usize, m: usize, up_to_isomorphism: bool) -> Result<Vec<Graph>> {
    if !up_to_isomorphism {
        return Ok(connected_graphs_iter(n, m)?.collect());
    }
    check_connected_args(n, m, CONNECTED_ISO_MAX_ORDER, "connected isomorphism")?;
    let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for g in ConnectedGraphs::new(n, m) {
        let canon = canonical_graph(&g)?;
        classes
            .entry(to_graph6(&canon).into_bytes())
            .or_insert(canon);
    }
    Ok(classes.into_values().collect())
}

/// Which family an enumeration request targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Trees,
    Unicyclic,
    Connected,
}

/// A complete enumeration request. `m` is only meaningful for the connected
/// family (trees and unicyclic graphs fix their own edge counts), and
/// `labeled` is only available there as well.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub m: Option<usize>,
    pub labeled: bool,
}

pub fn enumerate_family(spec: FamilySpec) -> Result<Vec<Graph>> {
    match spec.family {
        Family::Connected => {
            let m = spec.m.ok_or(Error::MissingEdgeCount)?;
            all_connected_graphs(spec.n, m, !spec.labeled)
        }
        Family::Trees | Family::Unicyclic => {
            if spec.labeled {
                return Err(Error::LabeledEnumerationUnsupported);
            }
            let implied = match spec.family {
                Family::Trees => spec.n.saturating_sub(1),
                _ => spec.n,
            };
            if let Some(m) = spec.m {
                if m != implied {
                    return Err(Error::EdgeCountOutOfRange {
                        n: spec.n,
                        m,
                        min: implied,
                        max: implied,
                    });
                }
            }
            match spec.family {
                Family::Trees => all_trees(spec.n),
                _ => all_unicyclic(spec.n),
            }
        }
    }
}

/// Decodes a Pruefer sequence into the labeled tree it encodes. The
/// sequence must have length n-2 (empty for n <= 2) with entries below n.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    if seq.len() != n.saturating_sub(2) {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m: seq.len(),
            min: n.saturating_sub(2),
            max: n.saturating_sub(2),
        });
    }
    for &s in seq {
        if s >= n {
            return Err(Error::VertexOutOfRange {
                vertex: s,
                order: n,
            });
        }
    }
    if n == 1 {
        return Graph::from_edge_list(1, &[]);
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a positive-degree vertex remains");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    debug_assert_eq!(last.len(), 2);
    edges.push((last.remove(0), last[0]));
    Graph::from_edge_list(n, &edges)
}

/// A uniformly random spanning tree (via a random Pruefer sequence) plus a
/// uniform choice of the remaining edges. Same seed, same graph, on every
/// platform.
pub fn random_connected_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    let (min, max) = (n - 1, choose2(n));
    if m < min || m > max {
        return Err(Error::EdgeCountOutOfRange { n, m, min, max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.random_range(0..n))
        .collect();
    let tree = prufer_decode(n, &seq)?;
    let mut edges = tree.edges();
    let pool: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    let picks = rand::seq::index::sample(&mut rng, pool.len(), m - (n - 1));
    edges.extend(picks.iter().map(|i| pool[i]));
    Graph::from_edge_list(n, &edges)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, v: usize) -> usize {
        if self.0[v] != v {
            let root = self.find(self.0[v]);
            self.0[v] = root;
        }
        self.0[v]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

/// A random connected spanning subgraph of a connected graph: a spanning
/// tree picked by randomized Kruskal, plus each remaining edge kept with
/// probability 1/2. Deterministic per seed.
pub fn random_connected_spanning_subgraph(g: &Graph, seed: u64) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut shuffled = g.edges();
    shuffled.shuffle(&mut rng);
    let mut uf = UnionFind::new(g.n());
    let mut tree = Vec::with_capacity(g.n() - 1);
    for &(u, v) in &shuffled {
        if uf.union(u, v) {
            tree.push((u, v));
        }
    }
    let mut keep = tree.clone();
    keep.sort_unstable();
    for (u, v) in g.edges() {
        if !tree.contains(&(u, v)) && rng.random_bool(0.5) {
            keep.push((u, v));
        }
    }
    Graph::from_edge_list(g.n(), &keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::to_graph6;

    #[test]
    fn tree_counts_match_the_known_sequence() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (n, &count) in (1..=10).zip(&expected) {
            assert_eq!(all_trees(n).unwrap().len(), count, "n={n}");
        }
    }

    #[test]
    fn unicyclic_counts_match_the_known_sequence() {
        let expected = [1usize, 2, 5, 13, 33, 89, 240];
        for (n, &count) in (3..=9).zip(&expected) {
            assert_eq!(all_unicyclic(n).unwrap().len(), count, "n={n}");
        }
    }

    #[test]
    fn enumeration_caps() {
        assert_eq!(
            all_trees(13),
            Err(Error::EnumerationCapExceeded {
                family: "tree",
                n: 13,
                cap: 12
            })
        );
        assert_eq!(
            all_unicyclic(12),
            Err(Error::EnumerationCapExceeded {
                family: "unicyclic",
                n: 12,
                cap: 11
            })
        );
        assert!(all_unicyclic(2).is_err());
        assert!(all_connected_graphs(8, 10, false).is_err());
        assert!(all_connected_graphs(9, 10, true).is_err());
        assert!(connected_graphs_iter(4, 2).is_err());
        assert!(connected_graphs_iter(4, 7).is_err());
    }

    #[test]
    fn members_have_the_right_shape() {
        for tree in all_trees(8).unwrap() {
            assert!(tree.is_tree());
        }
        for g in all_unicyclic(7).unwrap() {
            assert!(g.is_unicyclic());
        }
        for g in all_connected_graphs(5, 6, false).unwrap() {
            assert!(g.is_connected());
            assert_eq!((g.n(), g.edge_count()), (5, 6));
        }
    }

    #[test]
    fn representatives_are_canonical_and_sorted() {
        let trees = all_trees(9).unwrap();
        let mut forms: Vec<String> = trees.iter().map(to_graph6).collect();
        for (tree, form) in trees.iter().zip(&forms) {
            let canon = canonical_graph(tree).unwrap();
            assert_eq!(&to_graph6(&canon), form);
        }
        let sorted = {
            let mut f = forms.clone();
            f.sort();
            f
        };
        assert_eq!(forms, sorted);
        forms.dedup();
        assert_eq!(forms.len(), trees.len());
    }

    #[test]
    fn labeled_connected_counts() {
        // Cayley: n^(n-2) labeled trees.
        assert_eq!(all_connected_graphs(4, 3, false).unwrap().len(), 16);
        assert_eq!(all_connected_graphs(5, 4, false).unwrap().len(), 125);
        // All labeled connected graphs on 4 vertices: 16 + 15 + 6 + 1 = 38.
        let total: usize = (3..=6)
            .map(|m| all_connected_graphs(4, m, false).unwrap().len())
            .sum();
        assert_eq!(total, 38);
        // Single vertex, no edges.
        assert_eq!(all_connected_graphs(1, 0, false).unwrap().len(), 1);
    }

    #[test]
    fn isomorphism_classes_of_connected_graphs() {
        // Classes per (n, m) line up with the tree and unicyclic families.
        assert_eq!(all_connected_graphs(5, 4, true).unwrap().len(), 3);
        assert_eq!(all_connected_graphs(5, 5, true).unwrap().len(), 5);
        // All connected graphs on 5 vertices up to isomorphism: 21.
        let total: usize = (4..=10)
            .map(|m| all_connected_graphs(5, m, true).unwrap().len())
            .sum();
        assert_eq!(total, 21);
    }

    #[test]
    fn family_spec_dispatch() {
        let spec = FamilySpec {
            family: Family::Trees,
            n: 6,
            m: None,
            labeled: false,
        };
        assert_eq!(enumerate_family(spec).unwrap().len(), 6);

        let spec = FamilySpec {
            family: Family::Trees,
            n: 6,
            m: Some(5),
            labeled: false,
        };
        assert_eq!(enumerate_family(spec).unwrap().len(), 6);

        let spec = FamilySpec {
            family: Family::Trees,
            n: 6,
            m: Some(6),
            labeled: false,
        };
        assert!(enumerate_family(spec).is_err());

        let spec = FamilySpec {
            family: Family::Unicyclic,
            n: 6,
            m: None,
            labeled: true,
        };
        assert_eq!(
            enumerate_family(spec),
            Err(Error::LabeledEnumerationUnsupported)
        );

        let spec = FamilySpec {
            family: Family::Connected,
            n: 4,
            m: Some(4),
            labeled: true,
        };
        assert_eq!(enumerate_family(spec).unwrap().len(), 15);
    }

    #[test]
    fn prufer_decoding() {
        // (3, 3, 4) on 5 vertices: leaves 0,1,2 hang off 3, then 3-4.
        let tree = prufer_decode(5, &[3, 3, 4]).unwrap();
        assert_eq!(tree.edges(), vec![(0, 3), (1, 3), (2, 4), (3, 4)]);
        assert!(tree.is_tree());

        assert_eq!(prufer_decode(2, &[]).unwrap().edges(), vec![(0, 1)]);
        assert_eq!(prufer_decode(1, &[]).unwrap().n(), 1);
        assert!(prufer_decode(5, &[1, 2]).is_err());
        assert!(prufer_decode(5, &[1, 2, 5]).is_err());

        // Every sequence decodes to a tree.
        for a in 0..4 {
            for b in 0..4 {
                assert!(prufer_decode(4, &[a, b]).unwrap().is_tree());
            }
        }
    }

    #[test]
    fn random_graphs_are_deterministic_and_valid() {
        let a = random_connected_graph(9, 14, 42).unwrap();
        let b = random_connected_graph(9, 14, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert_eq!((a.n(), a.edge_count()), (9, 14));

        let c = random_connected_graph(9, 14, 43).unwrap();
        assert_ne!(a, c, "different seeds should virtually always differ");

        // Degenerate sizes.
        assert_eq!(random_connected_graph(1, 0, 7).unwrap().n(), 1);
        assert_eq!(random_connected_graph(2, 1, 7).unwrap().edge_count(), 1);
        let full = random_connected_graph(5, 10, 7).unwrap();
        assert!(full.is_complete());
        assert!(random_connected_graph(5, 3, 7).is_err());
        assert!(random_connected_graph(5, 11, 7).is_err());
    }

    #[test]
    fn random_spanning_subgraphs_stay_connected() {
        let g = random_connected_graph(10, 25, 5).unwrap();
        for seed in 0..20 {
            let h = random_connected_spanning_subgraph(&g, seed).unwrap();
            assert_eq!(h.n(), g.n());
            assert!(h.is_connected());
            for (u, v) in h.edges() {
                assert!(g.has_edge(u, v), "subgraph edge ({u}, {v}) not in g");
            }
        }
        let h1 = random_connected_spanning_subgraph(&g, 9).unwrap();
        let h2 = random_connected_spanning_subgraph(&g, 9).unwrap();
        assert_eq!(h1, h2);

        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            random_connected_spanning_subgraph(&split, 0),
            Err(Error::Disconnected)
        );
    }
}
